#pragma once

// Dense univariate polynomials over a commutative ring, plus the resultant
// and subresultant machinery used for discriminants.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qhgr/dense_matrix.hpp"
#include "qhgr/determinant.hpp"

namespace qhgr {

template <CommutativeRing R>
class UPoly {
 public:
  UPoly() = default;
  /// Coefficients lowest degree first.
  explicit UPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(std::size_t degree, const R& c) {
    std::vector<R> v(degree + 1, R(0));
    v[degree] = c;
    return UPoly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<R>& coefficients() const { return c_; }
  R coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : R(0); }
  const R& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  UPoly derivative() const {
    std::vector<R> out;
    for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(c_[k] * R(static_cast<int>(k)));
    return UPoly(std::move(out));
  }

  R evaluate(const R& x) const {
    R acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<R> out(std::max(a.c_.size(), b.c_.size()), R(0));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) + b.coefficient(k);
    return UPoly(std::move(out));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<R> out(std::max(a.c_.size(), b.c_.size()), R(0));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) - b.coefficient(k);
    return UPoly(std::move(out));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    return UPoly(std::move(out));
  }
  friend UPoly operator*(const R& s, const UPoly& a) {
    std::vector<R> out;
    out.reserve(a.c_.size());
    for (const auto& c : a.c_) out.push_back(s * c);
    return UPoly(std::move(out));
  }
  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim() {
    using qhgr::is_zero;
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

/// Standard Sylvester layout: deg(q) rows of p's coefficients (highest first),
/// then deg(p) rows of q's.
template <CommutativeRing R>
DenseMatrix<R> sylvester_matrix(const UPoly<R>& p, const UPoly<R>& q) {
  if (p.degree() < 1 || q.degree() < 0) throw std::invalid_argument("sylvester matrix needs deg p >= 1, q != 0");
  const auto m = static_cast<std::size_t>(p.degree());
  const auto n = static_cast<std::size_t>(q.degree());
  DenseMatrix<R> s(m + n, m + n, R(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s(i, i + k) = p.coefficient(m - k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s(n + i, i + k) = q.coefficient(n - k);
  return s;
}

template <ExactDivisionRing R>
R resultant(const UPoly<R>& p, const UPoly<R>& q) {
  return bareiss_determinant(sylvester_matrix(p, q));
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without division.
template <CommutativeRing R>
UPoly<R> pseudo_remainder(const UPoly<R>& a, const UPoly<R>& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  long e = a.degree() - b.degree() + 1;
  UPoly<R> rest = a;
  const R& lb = b.leading();
  while (!rest.is_zero() && rest.degree() >= b.degree()) {
    UPoly<R> step = UPoly<R>::monomial(static_cast<std::size_t>(rest.degree() - b.degree()), rest.leading());
    rest = lb * rest - step * b;
    --e;
  }
  for (; e > 0; --e) rest = lb * rest;
  return rest;
}

namespace detail {

template <ExactDivisionRing R>
UPoly<R> divide_coefficients(const UPoly<R>& p, const R& d) {
  std::vector<R> out;
  for (const auto& c : p.coefficients()) out.push_back(exact_quotient(c, d));
  return UPoly<R>(std::move(out));
}

template <CommutativeRing R>
R power(const R& x, long e) {
  R acc(1);
  for (long k = 0; k < e; ++k) acc = acc * x;
  return acc;
}

}  // namespace detail

/// Degree of gcd(a, b) over the fraction field of R, via the subresultant
/// pseudo-remainder sequence (all divisions exact).
template <ExactDivisionRing R>
long gcd_degree(UPoly<R> a, UPoly<R> b) {
  if (a.is_zero()) return b.degree();
  if (b.is_zero()) return a.degree();
  if (a.degree() < b.degree()) std::swap(a, b);
  R g(1);
  R h(1);
  while (true) {
    long delta = a.degree() - b.degree();
    UPoly<R> r = pseudo_remainder(a, b);
    if (r.is_zero()) return b.degree();
    if (r.degree() == 0) return 0;
    a = b;
    b = detail::divide_coefficients(r, R(g * detail::power(h, delta)));
    g = a.leading();
    if (delta > 0) h = exact_quotient(R(detail::power(g, delta)), R(detail::power(h, delta - 1)));
  }
}

}  // namespace qhgr
