#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhgr/rational.hpp"

namespace qhgr {

/// Thrown by exact division when the divisor does not divide the dividend.
class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Sparse multivariate polynomial in N variables with exact rational coefficients.
///
/// Terms live in a std::map keyed by exponent vectors, so the representation is
/// canonical: no zero coefficient is ever stored and equal polynomials compare
/// equal structurally. The map order is lexicographic on exponents; the last
/// entry is the leading term, which is what exact division relies on.
template <std::size_t N>
class Polynomial {
 public:
  using Exponents = std::array<std::uint32_t, N>;
  using Terms = std::map<Exponents, Rational>;
  static constexpr std::size_t kVariables = N;

  Polynomial() = default;
  Polynomial(const Rational& constant) {  // NOLINT(google-explicit-constructor)
    if (!qhgr::is_zero(constant)) terms_.emplace(Exponents{}, constant);
  }
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial variable(std::size_t v) {
    Exponents e{};
    e.at(v) = 1;
    return monomial(e, 1);
  }

  static Polynomial monomial(const Exponents& e, const Rational& c) {
    Polynomial p;
    if (!qhgr::is_zero(c)) p.terms_.emplace(e, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{}); }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coefficient(Exponents{}); }

  std::uint32_t degree_in(std::size_t v) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(v));
    return d;
  }

  bool involves(std::size_t v) const { return degree_in(v) > 0; }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  Polynomial& operator*=(const Rational& s) {
    if (qhgr::is_zero(s)) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    if (a.is_zero() || b.is_zero()) return out;
    Rational prod;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t v = 0; v < N; ++v) e[v] = ea[v] + eb[v];
        prod = ca * cb;
        auto [it, inserted] = out.terms_.try_emplace(e, prod);
        if (!inserted) it->second += prod;
      }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return qhgr::is_zero(kv.second); });
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial derivative(std::size_t v) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
      if (e.at(v) == 0) continue;
      Exponents d = e;
      --d[v];
      out.terms_.emplace(d, c * e[v]);
    }
    return out;
  }

  /// Replaces each variable v by values[v].
  Polynomial substitute(const std::array<Polynomial, N>& values) const {
    std::array<std::vector<Polynomial>, N> powers;
    for (std::size_t v = 0; v < N; ++v) {
      powers[v].push_back(Polynomial(1));
      for (std::uint32_t k = 1; k <= degree_in(v); ++k) powers[v].push_back(powers[v].back() * values[v]);
    }
    Polynomial out;
    for (const auto& [e, c] : terms_) {
      Polynomial term(c);
      for (std::size_t v = 0; v < N; ++v)
        if (e[v] > 0) term = term * powers[v][e[v]];
      out += term;
    }
    return out;
  }

  /// Sets every variable outside `keep` to zero.
  Polynomial restricted_to(const std::array<bool, N>& keep) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
      bool ok = true;
      for (std::size_t v = 0; v < N; ++v) ok = ok && (keep[v] || e[v] == 0);
      if (ok) out.terms_.emplace(e, c);
    }
    return out;
  }

  std::complex<double> evaluate(std::span<const std::complex<double>, N> point) const {
    std::array<std::vector<std::complex<double>>, N> powers;
    for (std::size_t v = 0; v < N; ++v) {
      powers[v].push_back(1.0);
      for (std::uint32_t k = 1; k <= degree_in(v); ++k) powers[v].push_back(powers[v].back() * point[v]);
    }
    std::complex<double> total = 0.0;
    for (const auto& [e, c] : terms_) {
      std::complex<double> m = to_double(c);
      for (std::size_t v = 0; v < N; ++v)
        if (e[v] > 0) m *= powers[v][e[v]];
      total += m;
    }
    return total;
  }

  /// this / divisor, which must divide exactly; throws NotDivisible otherwise.
  Polynomial exact_divide(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    if (divisor.size() == 1 && divisor.terms_.begin()->first == Exponents{}) {
      return *this * (Rational(1) / divisor.terms_.begin()->second);
    }
    const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
    Polynomial quotient;
    Polynomial rest = *this;
    while (!rest.is_zero()) {
      const auto& [re, rc] = *rest.terms_.rbegin();
      Exponents qe;
      for (std::size_t v = 0; v < N; ++v) {
        if (re[v] < lead_e[v]) throw NotDivisible("polynomial is not an exact multiple of the divisor");
        qe[v] = re[v] - lead_e[v];
      }
      Polynomial step = monomial(qe, rc / lead_c);
      quotient += step;
      rest -= step * divisor;
    }
    return quotient;
  }

  /// Human-readable form with the given variable names, e.g. "1/2t2^2t3+t5".
  std::string to_string(const std::array<std::string, N>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    // Highest total degree first, then reverse-lex, which reads naturally.
    std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
      std::uint32_t dx = 0, dy = 0;
      for (auto k : x.first) dx += k;
      for (auto k : y.first) dy += k;
      if (dx != dy) return dx > dy;
      return x.first > y.first;
    });
    bool first = true;
    for (const auto& [e, c] : ordered) {
      bool is_const = e == Exponents{};
      Rational mag = abs(c);
      if (sgn(c) < 0) {
        out += "-";
      } else if (!first) {
        out += "+";
      }
      if (is_const || mag != 1) out += qhgr::to_string(mag);
      for (std::size_t v = 0; v < N; ++v) {
        if (e[v] == 0) continue;
        out += names[v];
        if (e[v] > 1) out += "^" + std::to_string(e[v]);
      }
      first = false;
    }
    return out;
  }

 private:
  void add_term(const Exponents& e, const Rational& c) {
    if (qhgr::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (qhgr::is_zero(it->second)) terms_.erase(it);
    }
  }

  Terms terms_;
};

template <std::size_t N>
bool is_zero(const Polynomial<N>& p) {
  return p.is_zero();
}

template <std::size_t N>
Polynomial<N> exact_quotient(const Polynomial<N>& a, const Polynomial<N>& b) {
  return a.exact_divide(b);
}

}  // namespace qhgr
