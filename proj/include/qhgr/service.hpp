#pragma once

// Read-only HTTP/JSON front end.
//
//   GET /api/meta
//   GET /api/spectrum?cycle=1,1&t_re=0.5&t_im=1&q_re=1&q_im=0&alpha=2
//   GET /api/sweep?cycle=1,1&path=0.5,1;1,2;1.5,3&q_re=1&q_im=0&alpha=2
//
// Status codes: 400 malformed query, 404 unknown path, 422 well-formed but
// mathematically invalid input or a computation error (detail in the body).
// `handle` is a pure function of the request so it can be tested without a
// socket; `Service` binds it to cpp-httplib.

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qhgr/engine.hpp"
#include "qhgr/params.hpp"
#include "qhgr/serialization.hpp"

// After Eigen: <resolv.h> (pulled in by httplib) defines a macro named _res.
#include <httplib.h>

namespace qhgr {

struct HttpResponse {
  int status = 200;
  std::string body;
};

using QueryParams = std::multimap<std::string, std::string>;

inline Json meta_json(const Engine& engine) {
  Json cycles = Json::array();
  for (auto c : kBulkCycles) cycles.push_back(c.label());
  Json path = Json::array();
  for (auto z : figure_path()) path.push_back(complex_to_json(z));
  return {{"basis", basis_labels()},
          {"cycles", cycles},
          {"alpha_range", {0, engine.max_alpha()}},
          {"max_degree", engine.max_degree()},
          {"residual_bound", kResidualBound},
          {"defaults", {{"alpha", 2}, {"q", complex_to_json({1.0, 0.0})}, {"t", complex_to_json({0.0, 0.0})},
                        {"cycle", "1,1"}, {"path", path}}}};
}

inline Json sweep_json(YoungDiagram22 cycle, Complex q, std::uint32_t alpha, const std::vector<SpectrumSample>& samples) {
  Json frames = Json::array();
  Json gaps = Json::array();
  Json matching = Json::array();
  for (std::size_t f = 0; f < samples.size(); ++f) {
    frames.push_back(to_json(samples[f]));
    gaps.push_back(min_pairwise_gap(samples[f].eigenvalues));
    if (f > 0) matching.push_back(match_eigenvalues(samples[f - 1].eigenvalues, samples[f].eigenvalues));
  }
  return {{"cycle", cycle.label()}, {"q", complex_to_json(q)}, {"alpha", alpha},
          {"samples", frames}, {"min_gaps", gaps}, {"matching", matching}};
}

namespace detail {

inline Json error_json(const std::string& message, const std::string& parameter = {}) {
  Json j{{"error", message}};
  if (!parameter.empty()) j["parameter"] = parameter;
  return j;
}

/// Single-valued view of the query, rejecting unknown or repeated keys.
inline std::map<std::string, std::string> single_valued(const QueryParams& params,
                                                        const std::set<std::string>& allowed) {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : params) {
    if (!allowed.count(k)) throw ParameterError(k, "unknown parameter '" + k + "'");
    if (!out.emplace(k, v).second) throw ParameterError(k, "parameter '" + k + "' given more than once");
  }
  return out;
}

inline double real_param(const std::map<std::string, std::string>& p, const std::string& key, double fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : parse_real(it->second, key);
}

inline std::uint32_t alpha_param(const std::map<std::string, std::string>& p) {
  auto it = p.find("alpha");
  if (it == p.end()) return 2;
  std::int64_t a = parse_integer(it->second, "alpha");
  if (a < 0) throw InvalidValue("alpha", "alpha must be non-negative");
  if (a > 1000) throw InvalidValue("alpha", "alpha is far beyond any computable truncation");
  return static_cast<std::uint32_t>(a);
}

}  // namespace detail

inline HttpResponse handle(const Engine& engine, const std::string& path, const QueryParams& params) {
  try {
    if (path == "/api/meta") {
      detail::single_valued(params, {});
      return {200, render(meta_json(engine))};
    }
    if (path == "/api/spectrum") {
      auto p = detail::single_valued(params, {"cycle", "t_re", "t_im", "q_re", "q_im", "alpha"});
      std::optional<YoungDiagram22> cycle;
      if (auto it = p.find("cycle"); it != p.end() && !it->second.empty()) cycle = parse_cycle(it->second, "cycle");
      Complex t{detail::real_param(p, "t_re", 0.0), detail::real_param(p, "t_im", 0.0)};
      Complex q{detail::real_param(p, "q_re", 1.0), detail::real_param(p, "q_im", 0.0)};
      std::uint32_t alpha = detail::alpha_param(p);
      return {200, render(to_json(engine.spectrum(cycle, t, q, alpha)))};
    }
    if (path == "/api/sweep") {
      auto p = detail::single_valued(params, {"cycle", "path", "q_re", "q_im", "alpha"});
      auto it = p.find("cycle");
      if (it == p.end()) throw ParameterError("cycle", "missing parameter 'cycle'");
      YoungDiagram22 cycle = parse_cycle(it->second, "cycle");
      std::vector<Complex> points = figure_path();
      if (auto pt = p.find("path"); pt != p.end()) points = parse_path(pt->second, "path");
      Complex q{detail::real_param(p, "q_re", 1.0), detail::real_param(p, "q_im", 0.0)};
      std::uint32_t alpha = detail::alpha_param(p);
      return {200, render(sweep_json(cycle, q, alpha, engine.sweep(cycle, points, q, alpha)))};
    }
    return {404, render(detail::error_json("no such endpoint: " + path))};
  } catch (const InvalidValue& e) {
    return {422, render(detail::error_json(e.what(), e.parameter()))};
  } catch (const ParameterError& e) {
    return {400, render(detail::error_json(e.what(), e.parameter()))};
  } catch (const ComputationError& e) {
    return {422, render(detail::error_json(e.what()))};
  } catch (const std::exception& e) {
    return {500, render(detail::error_json(std::string("internal error: ") + e.what()))};
  }
}

/// Origins allowed to read responses cross-origin: http(s)://localhost or 127.0.0.1, any port.
inline bool is_local_origin(const std::string& origin) {
  static const std::regex local(R"(^https?://(localhost|127\.0\.0\.1|\[::1\])(:\d+)?$)");
  return std::regex_match(origin, local);
}

/// DUBROVIN_PORT wins over the command-line port.
inline int resolve_port(int cli_port) {
  if (const char* env = std::getenv("DUBROVIN_PORT"); env && *env) {
    std::int64_t p = parse_integer(env, "DUBROVIN_PORT");
    if (p < 0 || p > 65535) throw InvalidValue("DUBROVIN_PORT", "port out of range");
    return static_cast<int>(p);
  }
  return cli_port;
}

class Service {
 public:
  explicit Service(const Engine& engine) : engine_(engine) {
    auto api = [this](const httplib::Request& req, httplib::Response& res) {
      QueryParams params(req.params.begin(), req.params.end());
      HttpResponse r = handle(engine_, req.path, params);
      res.status = r.status;
      if (r.status == 200) res.set_header("Cache-Control", "public, max-age=3600");
      res.set_content(r.body, "application/json");
    };
    server_.Get(R"(/api/.*)", api);
    server_.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    server_.set_post_routing_handler([](const httplib::Request& req, httplib::Response& res) {
      std::string origin = req.get_header_value("Origin");
      if (!origin.empty() && is_local_origin(origin)) {
        res.set_header("Access-Control-Allow-Origin", origin);
        res.set_header("Access-Control-Allow-Methods", "GET, OPTIONS");
        res.set_header("Vary", "Origin");
      }
    });
  }

  /// Binds and returns the bound port (an ephemeral one when port is 0), or -1.
  int bind(const std::string& host, int port) {
    if (port == 0) return server_.bind_to_any_port(host);
    return server_.bind_to_port(host, port) ? port : -1;
  }

  /// Blocks until stop().
  bool run() { return server_.listen_after_bind(); }
  void stop() { server_.stop(); }
  void wait_until_ready() const { server_.wait_until_ready(); }

 private:
  const Engine& engine_;
  httplib::Server server_;
};

}  // namespace qhgr
