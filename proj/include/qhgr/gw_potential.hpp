#pragma once

// Genus-0 Gromov-Witten potential of Gr(2,4).
//
//   Phi = Phi_c + sum_{d>=1} ( sum_{|n|=4d+1} N(n) t^n / n! ) q^d,   q = e^{t1},
//
// with n = (n2,n3,n4,n5) and |n| = n2 + n3 + 2 n4 + 3 n5. The numbers N(n) are
// solved degree by degree from the WDVV associativity equations, starting from
// the single line count N(0,0,1,1) = 1.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qhgr/errors.hpp"
#include "qhgr/exact_linear_system.hpp"
#include "qhgr/qseries.hpp"
#include "qhgr/schubert_ring.hpp"

namespace qhgr {

/// Incidence multiplicities (n2, n3, n4, n5) at a curve degree d.
struct GWKey {
  std::array<std::uint32_t, 4> n_hat{};
  std::uint32_t degree = 1;

  /// n2 + n3 + 2 n4 + 3 n5.
  std::uint32_t weighted_size() const { return n_hat[0] + n_hat[1] + 2 * n_hat[2] + 3 * n_hat[3]; }
  bool valid() const { return degree >= 1 && weighted_size() == 4 * degree + 1; }

  std::string label() const {
    return "N(" + std::to_string(n_hat[0]) + "," + std::to_string(n_hat[1]) + "," + std::to_string(n_hat[2]) + "," +
           std::to_string(n_hat[3]) + ")";
  }

  /// t2^n2 t3^n3 t4^n4 t5^n5 / (n2! n3! n4! n5!).
  TPoly scaled_monomial() const {
    TPoly::Exponents e{};
    Rational denom = 1;
    for (std::size_t k = 0; k < 4; ++k) {
      e[k + 2] = n_hat[k];
      for (std::uint32_t f = 2; f <= n_hat[k]; ++f) denom *= f;
    }
    return TPoly::monomial(e, Rational(1) / denom);
  }

  friend auto operator<=>(const GWKey& a, const GWKey& b) {
    if (auto c = a.degree <=> b.degree; c != 0) return c;
    return a.n_hat <=> b.n_hat;
  }
  friend bool operator==(const GWKey&, const GWKey&) = default;
};

/// All valid keys of degree d, in lexicographic order of n_hat.
inline std::vector<GWKey> gw_keys(std::uint32_t degree) {
  std::vector<GWKey> keys;
  const std::uint32_t size = 4 * degree + 1;
  for (std::uint32_t n2 = 0; n2 <= size; ++n2)
    for (std::uint32_t n3 = 0; n2 + n3 <= size; ++n3)
      for (std::uint32_t n4 = 0; n2 + n3 + 2 * n4 <= size; ++n4) {
        std::uint32_t rest = size - n2 - n3 - 2 * n4;
        if (rest % 3 == 0) keys.push_back({{n2, n3, n4, rest / 3}, degree});
      }
  std::sort(keys.begin(), keys.end());
  return keys;
}

inline const GWKey kSeedKey{{0, 0, 1, 1}, 1};

/// Bookkeeping for one degree of the WDVV solve.
struct DegreeSolveReport {
  std::uint32_t degree = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;           // nonzero scalar equations assembled
  std::size_t distinct_equations = 0;  // after removing exact duplicates
  std::size_t redundant_consistent = 0;
  std::size_t inconsistent = 0;
};

struct GWTable {
  std::map<GWKey, Rational> entries;
  std::uint32_t max_degree = 0;
  std::vector<DegreeSolveReport> reports;

  const Rational& at(const GWKey& k) const { return entries.at(k); }
};

struct Potential {
  TPoly classical;
  std::map<std::uint32_t, TPoly> quantum;  // degree -> polynomial in t2..t5
  std::uint32_t max_degree = 0;

  /// Phi as a series mod q^order. Needs order <= max_degree + 1.
  QSeries as_series(std::uint32_t order) const {
    if (order > max_degree + 1) {
      throw TruncationExceedsPotential("order q^" + std::to_string(order) + " needs GW numbers beyond degree " +
                                       std::to_string(max_degree));
    }
    QSeries s = QSeries(classical).truncated(order);
    for (const auto& [d, poly] : quantum)
      if (d < order) s += QSeries::monomial(d, poly, order);
    return s;
  }
};

/// The classical part, written out.
inline TPoly classical_potential() {
  const Rational half = make_rational(1, 2);
  TPoly t0 = t_var(0), t1 = t_var(1), t2 = t_var(2), t3 = t_var(3), t4 = t_var(4), t5 = t_var(5);
  return half * t1 * t1 * t3 + half * t1 * t1 * t2 + half * t0 * t3 * t3 + half * t0 * t2 * t2 + t0 * t1 * t4 +
         half * t0 * t0 * t5;
}

/// sum_{|n|=3} <sigma^n, [X]> t^n / n!, assembled from triple intersections.
inline TPoly classical_potential_from_intersections() {
  TPoly out;
  for (std::size_t a = 0; a < kRank; ++a)
    for (std::size_t b = a; b < kRank; ++b)
      for (std::size_t c = b; c < kRank; ++c) {
        Rational n = triple_intersection(a, b, c);
        if (is_zero(n)) continue;
        TPoly::Exponents e{};
        ++e[a];
        ++e[b];
        ++e[c];
        Rational denom = 1;
        for (auto k : e)
          for (std::uint32_t f = 2; f <= k; ++f) denom *= f;
        out += TPoly::monomial(e, n / denom);
      }
  return out;
}

inline Potential build_potential(const GWTable& table) {
  Potential p;
  p.classical = classical_potential();
  p.max_degree = table.max_degree;
  for (const auto& [key, value] : table.entries) {
    if (is_zero(value)) continue;
    p.quantum[key.degree] += key.scaled_monomial() * value;
  }
  return p;
}

/// Phi_{ije} mod q^alpha.
inline QSeries third_derivative(const Potential& p, std::size_t i, std::size_t j, std::size_t e, std::uint32_t alpha) {
  return p.as_series(alpha).derivative(i).derivative(j).derivative(e);
}

/// All third derivatives of a potential at a fixed order, indexed symmetrically.
class StructureConstants {
 public:
  StructureConstants(const Potential& p, std::uint32_t alpha) : alpha_(alpha), max_degree_(p.max_degree) {
    QSeries phi = p.as_series(alpha);
    for (std::size_t a = 0; a < kRank; ++a) {
      QSeries da = phi.derivative(a);
      for (std::size_t b = a; b < kRank; ++b) {
        QSeries dab = da.derivative(b);
        for (std::size_t c = b; c < kRank; ++c) table_[slot(a, b, c)] = dab.derivative(c);
      }
    }
  }

  const QSeries& operator()(std::size_t i, std::size_t j, std::size_t e) const { return table_.at(slot(i, j, e)); }
  std::uint32_t alpha() const { return alpha_; }
  std::uint32_t max_degree() const { return max_degree_; }

 private:
  static std::size_t slot(std::size_t i, std::size_t j, std::size_t e) {
    std::array<std::size_t, 3> s{i, j, e};
    std::sort(s.begin(), s.end());
    return (s[0] * kRank + s[1]) * kRank + s[2];
  }

  std::uint32_t alpha_;
  std::uint32_t max_degree_;
  std::array<QSeries, kRank * kRank * kRank> table_;
};

/// sum_{e,f} Phi_{ije} g^{ef} Phi_{fkl} - sum_{e,f} Phi_{jke} g^{ef} Phi_{fil}, mod q^alpha.
inline QSeries wdvv_residual(const StructureConstants& sc, std::size_t i, std::size_t j, std::size_t k,
                             std::size_t l) {
  QSeries r = QSeries(0).truncated(sc.alpha());
  for (std::size_t e = 0; e < kRank; ++e) {
    std::size_t f = kIntersection.dual(e);
    r += sc(i, j, e) * sc(f, k, l);
    r -= sc(j, k, e) * sc(f, i, l);
  }
  return r;
}

/// One scalar WDVV equation: the coefficient of q^d t^monomial in the residual
/// of quadruple (i,j,k,l), affine in the degree-d unknowns.
struct WdvvEquation {
  std::array<std::size_t, 4> quadruple{};
  TPoly::Exponents monomial{};
  LinearEquation equation;  // unknown index = position in gw_keys(d)
};

namespace detail {

// Third derivative of a single q^d term c(t) q^d, as its q^d coefficient.
inline TPoly quantum_term_derivative(const TPoly& c, std::uint32_t d, const std::array<std::size_t, 3>& idx) {
  TPoly out = c;
  for (auto v : idx) out = (v == 1) ? out * Rational(d) : out.derivative(v);
  return out;
}

}  // namespace detail

/// Assembles every WDVV equation at q^d, given a potential complete below d.
inline std::vector<WdvvEquation> wdvv_equations(const Potential& lower, std::uint32_t d) {
  if (lower.max_degree + 1 < d) throw TruncationExceedsPotential("WDVV at degree d needs all lower degrees");
  Potential known = lower;
  known.quantum.erase(d);
  known.max_degree = d;  // degree d itself is the unknown part, contributing zero here
  const StructureConstants sc(known, d + 1);
  const std::vector<GWKey> keys = gw_keys(d);

  // Classical (q^0) third derivatives are constants because Phi_c is cubic.
  std::array<Rational, kRank * kRank * kRank> classical{};
  for (std::size_t a = 0; a < kRank; ++a)
    for (std::size_t b = 0; b < kRank; ++b)
      for (std::size_t c = 0; c < kRank; ++c) {
        TPoly c0 = sc(a, b, c).coefficient(0);
        if (!c0.is_constant()) throw ComputationError("classical third derivative is not constant");
        classical[(a * kRank + b) * kRank + c] = c0.constant_term();
      }
  auto C = [&](std::size_t a, std::size_t b, std::size_t c) -> const Rational& {
    return classical[(a * kRank + b) * kRank + c];
  };

  // D[key][abc]: third derivatives of the unit-coefficient term for each unknown.
  std::vector<std::array<TPoly, kRank * kRank * kRank>> D(keys.size());
  for (std::size_t u = 0; u < keys.size(); ++u) {
    TPoly m = keys[u].scaled_monomial();
    for (std::size_t a = 0; a < kRank; ++a)
      for (std::size_t b = 0; b < kRank; ++b)
        for (std::size_t c = 0; c < kRank; ++c)
          D[u][(a * kRank + b) * kRank + c] = detail::quantum_term_derivative(m, d, {a, b, c});
  }
  auto Du = [&](std::size_t u, std::size_t a, std::size_t b, std::size_t c) -> const TPoly& {
    return D[u][(a * kRank + b) * kRank + c];
  };

  std::vector<WdvvEquation> out;
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j)
      for (std::size_t k = 0; k < kRank; ++k)
        for (std::size_t l = 0; l < kRank; ++l) {
          TPoly constant = wdvv_residual(sc, i, j, k, l).coefficient(d);
          std::vector<TPoly> linear(keys.size());
          for (std::size_t u = 0; u < keys.size(); ++u) {
            TPoly acc;
            for (std::size_t e = 0; e < kRank; ++e) {
              std::size_t f = kIntersection.dual(e);
              if (!is_zero(C(i, j, e))) acc += Du(u, f, k, l) * C(i, j, e);
              if (!is_zero(C(f, k, l))) acc += Du(u, i, j, e) * C(f, k, l);
              if (!is_zero(C(j, k, e))) acc -= Du(u, f, i, l) * C(j, k, e);
              if (!is_zero(C(f, i, l))) acc -= Du(u, j, k, e) * C(f, i, l);
            }
            linear[u] = std::move(acc);
          }
          std::set<TPoly::Exponents> monomials;
          for (const auto& [e, c] : constant.terms()) monomials.insert(e);
          for (const auto& p : linear)
            for (const auto& [e, c] : p.terms()) monomials.insert(e);
          for (const auto& mono : monomials) {
            WdvvEquation eq;
            eq.quadruple = {i, j, k, l};
            eq.monomial = mono;
            for (std::size_t u = 0; u < keys.size(); ++u) {
              Rational c = linear[u].coefficient(mono);
              if (!is_zero(c)) eq.equation.coeffs.emplace(u, c);
            }
            eq.equation.rhs = -constant.coefficient(mono);
            out.push_back(std::move(eq));
          }
        }
  return out;
}

struct WdvvOptions {
  /// Impose N(n2,n3,n4,n5) = N(n3,n2,n4,n5). Gr(2,4) is isomorphic to its dual
  /// Grassmannian, and the isomorphism swaps sigma_(2,0) with sigma_(1,1) while
  /// fixing the other classes. Without it WDVV leaves a one-parameter family at
  /// degree 1 (N(5,0,0,0) is free).
  bool duality_symmetry = true;
};

/// Solves N(n) for all degrees 1..max_degree. Throws InconsistentSystem or
/// Underdetermined when the equations do not pin down a unique solution.
inline GWTable solve_wdvv(std::uint32_t max_degree, const WdvvOptions& options = {}) {
  if (max_degree < 1) throw std::invalid_argument("solve_wdvv: max_degree must be at least 1");
  GWTable table;
  for (std::uint32_t d = 1; d <= max_degree; ++d) {
    table.max_degree = d - 1;
    Potential lower = build_potential(table);
    const std::vector<GWKey> keys = gw_keys(d);

    std::vector<WdvvEquation> assembled = wdvv_equations(lower, d);
    std::set<LinearEquation> distinct;
    std::size_t nonzero = 0;
    for (const auto& eq : assembled) {
      if (eq.equation.coeffs.empty() && is_zero(eq.equation.rhs)) continue;
      ++nonzero;
      distinct.insert(eq.equation.normalized());
    }
    std::vector<LinearEquation> rows(distinct.begin(), distinct.end());
    if (d == 1) {
      auto seed = std::find(keys.begin(), keys.end(), kSeedKey) - keys.begin();
      LinearEquation s;
      s.coeffs.emplace(static_cast<std::size_t>(seed), 1);
      s.rhs = 1;
      rows.push_back(std::move(s));
    }
    if (options.duality_symmetry) {
      for (std::size_t u = 0; u < keys.size(); ++u) {
        GWKey swapped = keys[u];
        std::swap(swapped.n_hat[0], swapped.n_hat[1]);
        auto v = static_cast<std::size_t>(std::find(keys.begin(), keys.end(), swapped) - keys.begin());
        if (v <= u) continue;
        LinearEquation s;
        s.coeffs.emplace(u, 1);
        s.coeffs.emplace(v, -1);
        s.rhs = 0;
        rows.push_back(std::move(s));
      }
    }

    LinearSolveResult sol = solve_exact(rows, keys.size());
    DegreeSolveReport report{d, keys.size(), nonzero, rows.size(), sol.redundant_consistent, sol.inconsistent};
    table.reports.push_back(report);
    if (sol.inconsistent > 0) {
      throw InconsistentSystem("WDVV system at degree " + std::to_string(d) + " has " +
                                   std::to_string(sol.inconsistent) + " contradictory equations",
                               sol.inconsistent);
    }
    if (!sol.free_unknowns.empty()) {
      std::vector<std::string> free;
      for (auto u : sol.free_unknowns) free.push_back(keys[u].label() + "@d=" + std::to_string(d));
      throw Underdetermined(std::move(free));
    }
    for (std::size_t u = 0; u < keys.size(); ++u) table.entries.emplace(keys[u], *sol.values[u]);
  }
  table.max_degree = max_degree;
  return table;
}

}  // namespace qhgr
