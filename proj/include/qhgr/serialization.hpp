#pragma once

// JSON export. Exact quantities carry their rationals as decimal strings so
// that consumers never see a rounded big integer; every exact object
// round-trips bit-for-bit through from_json.

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhgr/dubrovin.hpp"
#include "qhgr/gw_potential.hpp"
#include "qhgr/qseries.hpp"
#include "qhgr/spectral.hpp"

namespace qhgr {

using Json = nlohmann::json;

// --- exact objects ----------------------------------------------------------

inline Json to_json(const TPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exps = Json::array();
    for (auto x : e) exps.push_back(x);
    terms.push_back({{"exponents", exps}, {"coefficient", to_string(c)}});
  }
  return terms;
}

inline TPoly tpoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial: expected an array of terms");
  TPoly out;
  for (const auto& term : j) {
    const Json& exps = term.at("exponents");
    if (!exps.is_array() || exps.size() != kNumCoordinates)
      throw std::invalid_argument("polynomial: exponent vector must have 6 entries");
    TPoly::Exponents e{};
    for (std::size_t k = 0; k < kNumCoordinates; ++k) e[k] = exps[k].get<TPoly::Exponents::value_type>();
    out += TPoly::monomial(e, rational_from_string(term.at("coefficient").get<std::string>()));
  }
  return out;
}

inline Json to_json(const QSeries& s) {
  Json terms = Json::array();
  for (const auto& [d, c] : s.coefficients())
    for (const auto& [e, coeff] : c.terms()) {
      Json exps = Json::array();
      for (auto x : e) exps.push_back(x);
      terms.push_back({{"q", d}, {"exponents", exps}, {"coefficient", to_string(coeff)}});
    }
  Json out{{"terms", terms}, {"text", s.to_string()}};
  out["order"] = s.truncation_order() ? Json(*s.truncation_order()) : Json(nullptr);
  return out;
}

inline QSeries qseries_from_json(const Json& j) {
  std::optional<QSeries::Degree> order;
  if (j.contains("order") && !j.at("order").is_null()) order = j.at("order").get<QSeries::Degree>();
  QSeries out;
  for (const auto& term : j.at("terms")) {
    Json poly = Json::array({{{"exponents", term.at("exponents")}, {"coefficient", term.at("coefficient")}}});
    out += QSeries::monomial(term.at("q").get<QSeries::Degree>(), tpoly_from_json(poly));
  }
  return order ? out.truncated(*order) : out;
}

inline Json basis_labels() {
  Json out = Json::array();
  for (auto d : all_diagrams()) out.push_back(d.label());
  return out;
}

inline Json to_json(const GWTable& t) {
  Json entries = Json::array();
  for (const auto& [key, value] : t.entries) {
    entries.push_back({{"key", key.label()},
                       {"n", {key.n_hat[0], key.n_hat[1], key.n_hat[2], key.n_hat[3]}},
                       {"degree", key.degree},
                       {"weighted_size", key.weighted_size()},
                       {"value", to_string(value)}});
  }
  Json reports = Json::array();
  for (const auto& r : t.reports) {
    reports.push_back({{"degree", r.degree},
                       {"unknowns", r.unknowns},
                       {"equations", r.equations},
                       {"distinct_equations", r.distinct_equations},
                       {"redundant", r.redundant_consistent},
                       {"inconsistent", r.inconsistent}});
  }
  return {{"max_degree", t.max_degree}, {"entries", entries}, {"reports", reports}};
}

inline GWTable gw_table_from_json(const Json& j) {
  GWTable t;
  t.max_degree = j.at("max_degree").get<std::uint32_t>();
  for (const auto& e : j.at("entries")) {
    GWKey k;
    const Json& n = e.at("n");
    for (std::size_t i = 0; i < 4; ++i) k.n_hat[i] = n.at(i).get<std::uint32_t>();
    k.degree = e.at("degree").get<std::uint32_t>();
    if (!k.valid()) throw std::invalid_argument("gw table: invalid key " + k.label());
    t.entries.emplace(k, rational_from_string(e.at("value").get<std::string>()));
  }
  return t;
}

inline Json to_json(const DubrovinMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.entries.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.entries.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return {{"alpha", m.alpha}, {"basis", basis_labels()}, {"convention", "column j holds K*sigma_j"}, {"entries", rows}};
}

inline DubrovinMatrix dubrovin_matrix_from_json(const Json& j) {
  DubrovinMatrix m;
  m.alpha = j.at("alpha").get<std::uint32_t>();
  const Json& rows = j.at("entries");
  if (rows.size() != kRank) throw std::invalid_argument("matrix: expected 6 rows");
  for (std::size_t r = 0; r < kRank; ++r) {
    if (rows[r].size() != kRank) throw std::invalid_argument("matrix: expected 6 columns");
    for (std::size_t c = 0; c < kRank; ++c) m.entries(r, c) = qseries_from_json(rows[r][c]);
  }
  return m;
}

inline Json to_json(const CharPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs) coeffs.push_back(to_json(c));
  return {{"convention", "det(lambda I - M), lowest degree first"}, {"coefficients", coeffs}};
}

inline CharPoly char_poly_from_json(const Json& j) {
  CharPoly p;
  for (const auto& c : j.at("coefficients")) p.coeffs.push_back(qseries_from_json(c));
  return p;
}

inline Json to_json(const DiscriminantResult& d) {
  Json out{{"value", to_json(d.value)}};
  out["valuation"] = d.valuation ? Json(*d.valuation) : Json(nullptr);
  if (d.valuation) {
    out["leading"] = to_json(d.value.coefficient(*d.valuation));
    out["leading_text"] = to_string(d.value.coefficient(*d.valuation));
  }
  return out;
}

inline DiscriminantResult discriminant_from_json(const Json& j) {
  DiscriminantResult d;
  d.value = qseries_from_json(j.at("value"));
  if (!j.at("valuation").is_null()) d.valuation = j.at("valuation").get<std::uint32_t>();
  return d;
}

inline Json to_json(const SimplicityVerdict& v) {
  return {{"verdict", to_string(v.kind)},
          {"discriminant", to_json(v.witness)},
          {"exceptional_locus", to_string(v.exceptional_locus)}};
}

// --- numeric objects --------------------------------------------------------

inline Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex: expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline Json to_json(const SpectrumSample& s) {
  Json eig = Json::array();
  for (auto z : s.eigenvalues) eig.push_back(complex_to_json(z));
  Json out{{"t", complex_to_json(s.t)},
           {"q", complex_to_json(s.q)},
           {"alpha", s.alpha},
           {"eigenvalues", eig},
           {"residual", s.residual}};
  out["cycle"] = s.cycle ? Json(s.cycle->label()) : Json(nullptr);
  return out;
}

inline SpectrumSample spectrum_sample_from_json(const Json& j) {
  SpectrumSample s;
  if (!j.at("cycle").is_null()) {
    auto d = YoungDiagram22::parse(j.at("cycle").get<std::string>());
    if (!d) throw std::invalid_argument("spectrum sample: bad cycle label");
    s.cycle = *d;
  }
  s.t = complex_from_json(j.at("t"));
  s.q = complex_from_json(j.at("q"));
  s.alpha = j.at("alpha").get<std::uint32_t>();
  for (const auto& z : j.at("eigenvalues")) s.eigenvalues.push_back(complex_from_json(z));
  s.residual = j.at("residual").get<double>();
  return s;
}

/// Canonical text of a JSON document as emitted by both the CLI and the service.
inline std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qhgr
