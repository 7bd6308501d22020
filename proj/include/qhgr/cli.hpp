#pragma once

// Command-line front end.
//
//   dubrovin gw-table     [--max-degree N] [--format json|text]
//   dubrovin matrix       [--cycle a,b] [--alpha A] [--format json|text]
//   dubrovin discriminant  --cycle a,b  [--alpha A] [--format json|text]
//   dubrovin classify      --cycle a,b  [--alpha A] [--format json|text]
//   dubrovin spectrum     [--cycle a,b] [--t T] [--q Q] [--alpha A] [--format json|text|csv]
//   dubrovin sweep         --cycle a,b  [--path P] [--q Q] [--alpha A] [--format json|text|csv]
//   dubrovin serve        [--port P] [--host H]
//
// Exit status: 0 success, 2 usage error, 3 computation error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qhgr/engine.hpp"
#include "qhgr/params.hpp"
#include "qhgr/serialization.hpp"
#include "qhgr/service.hpp"
#include "qhgr/text_format.hpp"

namespace qhgr {

enum class Command { GwTable, Matrix, Discriminant, Classify, Spectrum, Sweep, Serve };
enum class Format { Json, Text, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitComputation = 3;

struct RunConfig {
  Command command = Command::GwTable;
  std::optional<YoungDiagram22> cycle;
  std::uint32_t alpha = 2;
  Complex q{1.0, 0.0};
  Complex t{0.0, 0.0};
  std::vector<Complex> path = figure_path();
  Format format = Format::Text;
  std::optional<std::uint32_t> max_degree;  // default: 1 for gw-table, 2 otherwise
  int port = 8080;
  std::string host = "127.0.0.1";
};

/// Usage problem, reported as one line naming the flag.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

struct RawFlags {
  std::string cycle, alpha = "2", q = "1", t = "0", path = "figure", format = "text", max_degree, port = "8080";
  std::string host = "127.0.0.1";
};

inline std::uint32_t bounded(const std::string& text, const std::string& flag, std::int64_t min, std::int64_t max) {
  std::int64_t v = parse_integer(text, flag);
  if (v < min) throw InvalidValue(flag, "must be at least " + std::to_string(min));
  if (v > max) throw InvalidValue(flag, "must be at most " + std::to_string(max));
  return static_cast<std::uint32_t>(v);
}

}  // namespace detail

/// Parses argv into a RunConfig. Returns nullopt after printing --help.
inline std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Exact big quantum cohomology of Gr(2,4) and spectra of Dubrovin's operator", "dubrovin"};
  app.require_subcommand(1);
  detail::RawFlags raw;

  struct Spec {
    const char* name;
    Command command;
    const char* help;
    bool cycle, cycle_required, alpha, t, q, path, csv;
  };
  const Spec specs[] = {
      {"gw-table", Command::GwTable, "Gromov-Witten numbers solved from WDVV", false, false, false, false, false, false, false},
      {"matrix", Command::Matrix, "Truncated matrix of K (symbolic in t2..t5, or in one t_cycle)", true, false, true, false, false, false, false},
      {"discriminant", Command::Discriminant, "Characteristic polynomial and discriminant of a truncation", true, true, true, false, false, false, false},
      {"classify", Command::Classify, "Simplicity verdict from the discriminant", true, true, true, false, false, false, false},
      {"spectrum", Command::Spectrum, "Numeric eigenvalues at one complex parameter", true, false, true, true, true, false, true},
      {"sweep", Command::Sweep, "Numeric eigenvalues along a path of parameters", true, true, true, false, true, true, true},
      {"serve", Command::Serve, "Read-only HTTP/JSON service", false, false, false, false, false, false, false},
  };

  Command chosen = Command::GwTable;
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->callback([&chosen, c = s.command] { chosen = c; });
    sub->add_option("--max-degree", raw.max_degree, "Highest GW degree to solve for");
    if (s.cycle) {
      auto* opt = sub->add_option("--cycle", raw.cycle, "Schubert cycle a,b: one of 2,0 1,1 2,1 2,2");
      if (s.cycle_required) opt->required();
    }
    if (s.alpha) sub->add_option("--alpha", raw.alpha, "Finite-energy truncation: keep q^d with d < alpha")->capture_default_str();
    if (s.t) sub->add_option("--t", raw.t, "Complex parameter: a+bi or re,im")->capture_default_str();
    if (s.q) sub->add_option("--q", raw.q, "Complex value of q: a+bi or re,im")->capture_default_str();
    if (s.path) sub->add_option("--path", raw.path, "Points separated by ';' (a+bi or re,im), or 'figure'")->capture_default_str();
    if (s.command == Command::Serve) {
      sub->add_option("--port", raw.port, "TCP port (DUBROVIN_PORT overrides)")->capture_default_str();
      sub->add_option("--host", raw.host, "Address to bind")->capture_default_str();
    } else {
      std::vector<std::string> formats{"json", "text"};
      if (s.csv) formats.push_back("csv");
      sub->add_option("--format", raw.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (auto nl = msg.find('\n'); nl != std::string::npos) msg.resize(nl);
    throw UsageError(msg);
  }

  RunConfig c;
  c.command = chosen;
  try {
    if (!raw.cycle.empty()) c.cycle = parse_cycle(raw.cycle, "--cycle");
    c.alpha = detail::bounded(raw.alpha, "--alpha", 0, 1000);
    c.q = parse_complex(raw.q, "--q");
    c.t = parse_complex(raw.t, "--t");
    c.path = parse_path(raw.path, "--path");
    if (!raw.max_degree.empty()) c.max_degree = detail::bounded(raw.max_degree, "--max-degree", 1, 1000);
    c.port = static_cast<int>(detail::bounded(raw.port, "--port", 0, 65535));
    c.host = raw.host;
    c.format = raw.format == "json" ? Format::Json : raw.format == "csv" ? Format::Csv : Format::Text;
    if (c.cycle && !is_bulk_cycle(*c.cycle))
      throw InvalidValue("--cycle", "cycle must be one of 2,0 1,1 2,1 2,2");
    if (c.command == Command::Spectrum && !c.cycle && c.t != Complex(0.0))
      throw InvalidValue("--t", "a nonzero --t needs --cycle");
  } catch (const ParameterError& e) {
    throw UsageError(e.parameter() + ": " + e.what());
  }
  return c;
}

namespace detail {

inline Json discriminant_json(YoungDiagram22 cycle, std::uint32_t alpha, const CharPoly& p, const SimplicityVerdict& v) {
  return {{"cycle", cycle.label()}, {"alpha", alpha}, {"char_poly", to_json(p)}, {"discriminant", to_json(v.witness)},
          {"verdict", to_string(v.kind)}, {"exceptional_locus", to_string(v.exceptional_locus)}};
}

inline Json classify_json(YoungDiagram22 cycle, std::uint32_t alpha, const SimplicityVerdict& v) {
  Json out{{"cycle", cycle.label()}, {"alpha", alpha}, {"verdict", to_string(v.kind)},
           {"exceptional_locus", to_string(v.exceptional_locus)}};
  out["valuation"] = v.witness.valuation ? Json(*v.witness.valuation) : Json(nullptr);
  out["leading"] = v.witness.valuation ? Json(to_string(v.witness.value.coefficient(*v.witness.valuation))) : Json(nullptr);
  return out;
}

}  // namespace detail

/// Executes one command. Output goes to `out`, diagnostics to `err`.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == Command::GwTable) {
      GWTable table = solve_wdvv(config.max_degree.value_or(1));
      out << (config.format == Format::Json ? render(to_json(table)) : format_gw_table(table));
      return kExitOk;
    }

    const Engine engine(config.max_degree.value_or(2));
    switch (config.command) {
      case Command::Matrix: {
        const DubrovinMatrix& m = config.cycle ? engine.family(config.cycle, config.alpha) : engine.full_matrix(config.alpha);
        if (config.format == Format::Json) {
          Json j = to_json(m);
          j["cycle"] = config.cycle ? Json(config.cycle->label()) : Json(nullptr);
          out << render(j);
        } else {
          out << format_matrix(m);
        }
        break;
      }
      case Command::Discriminant:
      case Command::Classify: {
        const auto& v = engine.verdict(*config.cycle, config.alpha);
        if (config.format == Format::Json) {
          out << render(config.command == Command::Classify
                            ? detail::classify_json(*config.cycle, config.alpha, v)
                            : detail::discriminant_json(*config.cycle, config.alpha,
                                                        engine.char_poly(*config.cycle, config.alpha), v));
        } else {
          if (config.command == Command::Discriminant)
            out << "det(lambda I - M):\n" << format_char_poly(engine.char_poly(*config.cycle, config.alpha));
          out << format_verdict(config.cycle->label(), config.alpha, v);
        }
        break;
      }
      case Command::Spectrum: {
        SpectrumSample s = engine.spectrum(config.cycle, config.t, config.q, config.alpha);
        if (config.format == Format::Json) out << render(to_json(s));
        else if (config.format == Format::Csv) out << format_spectra_csv({s});
        else out << format_spectrum(s);
        break;
      }
      case Command::Sweep: {
        auto samples = engine.sweep(*config.cycle, config.path, config.q, config.alpha);
        if (config.format == Format::Json) {
          out << render(sweep_json(*config.cycle, config.q, config.alpha, samples));
        } else if (config.format == Format::Csv) {
          out << format_spectra_csv(samples);
        } else {
          for (const auto& s : samples) out << format_spectrum(s) << "min gap " << min_pairwise_gap(s.eigenvalues) << "\n\n";
        }
        break;
      }
      case Command::Serve: {
        Service service(engine);
        int port = service.bind(config.host, resolve_port(config.port));
        if (port < 0) {
          err << "dubrovin: error: cannot bind " << config.host << ":" << resolve_port(config.port) << "\n";
          return kExitUsage;
        }
        err << "listening on http://" << config.host << ":" << port << "\n";
        service.run();
        break;
      }
      case Command::GwTable: break;
    }
    return kExitOk;
  } catch (const ParameterError& e) {
    err << "dubrovin: error: " << e.parameter() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const ComputationError& e) {
    err << "dubrovin: computation error: " << e.what() << "\n";
    return kExitComputation;
  }
}

/// Parse + run; the whole program.
inline int main_entry(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::optional<RunConfig> config;
  try {
    config = parse_command_line(argc, argv, out);
  } catch (const UsageError& e) {
    err << "dubrovin: error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!config) return kExitOk;
  return run(*config, out, err);
}

}  // namespace qhgr
