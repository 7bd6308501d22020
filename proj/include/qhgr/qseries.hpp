#pragma once

// Finitely supported q-series with polynomial coefficients in t0..t5.
//
// q stands for e^{t1}: quantum coefficients never carry an explicit t1, while
// the classical (q^0) part may. Exponents of q are non-negative integers.

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "qhgr/polynomial.hpp"

namespace qhgr {

inline constexpr std::size_t kNumCoordinates = 6;

using TPoly = Polynomial<kNumCoordinates>;
using Coordinates = std::array<TPoly, kNumCoordinates>;
using ComplexPoint = std::array<std::complex<double>, kNumCoordinates>;

inline const std::array<std::string, kNumCoordinates>& coordinate_names() {
  static const std::array<std::string, kNumCoordinates> names{"t0", "t1", "t2", "t3", "t4", "t5"};
  return names;
}

inline TPoly t_var(std::size_t i) { return TPoly::variable(i); }

inline std::string to_string(const TPoly& p) { return p.to_string(coordinate_names()); }

class QSeries {
 public:
  using Degree = std::uint32_t;
  using Coefficients = std::map<Degree, TPoly>;

  QSeries() = default;
  QSeries(const TPoly& constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) coeffs_.emplace(0, constant);
  }
  QSeries(const Rational& constant) : QSeries(TPoly(constant)) {}  // NOLINT(google-explicit-constructor)
  QSeries(int constant) : QSeries(TPoly(constant)) {}               // NOLINT(google-explicit-constructor)

  /// c * q^d, reduced mod q^order when an order is given.
  static QSeries monomial(Degree d, const TPoly& c, std::optional<Degree> order = std::nullopt) {
    QSeries s;
    s.order_ = order;
    if (!c.is_zero() && (!order || d < *order)) s.coeffs_.emplace(d, c);
    return s;
  }

  static QSeries q_power(Degree d) { return monomial(d, TPoly(1)); }

  const Coefficients& coefficients() const { return coeffs_; }

  TPoly coefficient(Degree d) const {
    auto it = coeffs_.find(d);
    return it == coeffs_.end() ? TPoly() : it->second;
  }

  std::optional<Degree> truncation_order() const { return order_; }

  bool is_zero() const { return coeffs_.empty(); }

  /// Smallest d with a nonzero coefficient; nullopt stands for +infinity.
  std::optional<Degree> q_valuation() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
  }

  std::optional<Degree> top_degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
  }

  /// Reduction mod q^alpha; the resulting series remembers the order.
  QSeries truncated(Degree alpha) const {
    QSeries s = *this;
    s.order_ = order_ ? std::min(*order_, alpha) : alpha;
    s.coeffs_.erase(s.coeffs_.lower_bound(*s.order_), s.coeffs_.end());
    return s;
  }

  /// Finite-energy truncation: keeps d < alpha as an honest polynomial in q.
  QSeries energy_truncation(Degree alpha) const {
    QSeries s;
    for (const auto& [d, c] : coeffs_)
      if (d < alpha) s.coeffs_.emplace(d, c);
    return s;
  }

  /// Same coefficients, no truncation order.
  QSeries as_polynomial() const {
    QSeries s = *this;
    s.order_.reset();
    return s;
  }

  QSeries& operator+=(const QSeries& o) {
    order_ = combine(order_, o.order_);
    for (const auto& [d, c] : o.coeffs_) {
      auto [it, inserted] = coeffs_.try_emplace(d, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
      }
    }
    drop_beyond_order();
    return *this;
  }

  QSeries& operator-=(const QSeries& o) { return *this += -o; }

  QSeries& operator*=(const Rational& s) {
    if (qhgr::is_zero(s)) {
      coeffs_.clear();
    } else {
      for (auto& [d, c] : coeffs_) c *= s;
    }
    return *this;
  }

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator-(QSeries a) {
    for (auto& [d, c] : a.coeffs_) c = -c;
    return a;
  }
  friend QSeries operator*(QSeries a, const Rational& s) { return a *= s; }
  friend QSeries operator*(const Rational& s, QSeries a) { return a *= s; }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries out;
    out.order_ = combine(a.order_, b.order_);
    for (const auto& [da, ca] : a.coeffs_) {
      for (const auto& [db, cb] : b.coeffs_) {
        Degree d = da + db;
        if (out.order_ && d >= *out.order_) break;
        TPoly prod = ca * cb;
        auto [it, inserted] = out.coeffs_.try_emplace(d, std::move(prod));
        if (!inserted) it->second += prod;
      }
    }
    std::erase_if(out.coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
  }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

  friend bool operator==(const QSeries&, const QSeries&) = default;

  /// Coefficientwise d/dt_var for var in {0,2,3,4,5}.
  QSeries partial_t(std::size_t var) const {
    if (var == 1) throw std::invalid_argument("partial_t: use derivative_t1 for t1 (q = e^{t1})");
    if (var >= kNumCoordinates) throw std::out_of_range("partial_t: coordinate index out of range");
    QSeries out;
    out.order_ = order_;
    for (const auto& [d, c] : coeffs_) {
      TPoly dc = c.derivative(var);
      if (!dc.is_zero()) out.coeffs_.emplace(d, std::move(dc));
    }
    return out;
  }

  /// d/dt1 with q = e^{t1}: q^d picks up a factor d, the classical part is
  /// differentiated in its explicit t1.
  QSeries derivative_t1() const {
    QSeries out;
    out.order_ = order_;
    for (const auto& [d, c] : coeffs_) {
      TPoly dc;
      if (d == 0) {
        dc = c.derivative(1);
      } else {
        if (c.involves(1)) throw std::invalid_argument("derivative_t1: explicit t1 inside a quantum coefficient");
        dc = c * Rational(d);
      }
      if (!dc.is_zero()) out.coeffs_.emplace(d, std::move(dc));
    }
    return out;
  }

  QSeries derivative(std::size_t var) const { return var == 1 ? derivative_t1() : partial_t(var); }

  std::complex<double> evaluate(std::span<const std::complex<double>, kNumCoordinates> t,
                                std::complex<double> q) const {
    std::complex<double> total = 0.0;
    // Horner over q-degrees, highest first.
    Degree prev = 0;
    bool started = false;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      if (started) total *= std::pow(q, static_cast<int>(prev - it->first));
      total += it->second.evaluate(t);
      prev = it->first;
      started = true;
    }
    if (started && prev > 0) total *= std::pow(q, static_cast<int>(prev));
    return total;
  }

  QSeries substitute(const Coordinates& values) const {
    QSeries out;
    out.order_ = order_;
    for (const auto& [d, c] : coeffs_) {
      TPoly s = c.substitute(values);
      if (!s.is_zero()) out.coeffs_.emplace(d, std::move(s));
    }
    return out;
  }

  QSeries restricted_to(const std::array<bool, kNumCoordinates>& keep) const {
    QSeries out;
    out.order_ = order_;
    for (const auto& [d, c] : coeffs_) {
      TPoly s = c.restricted_to(keep);
      if (!s.is_zero()) out.coeffs_.emplace(d, std::move(s));
    }
    return out;
  }

  /// Exact quotient of two q-polynomials (no truncation order on either side).
  QSeries exact_divide(const QSeries& divisor) const {
    if (order_ || divisor.order_) throw std::domain_error("exact division of truncated series is undefined");
    if (divisor.is_zero()) throw std::domain_error("series division by zero");
    const auto& [top_d, top_c] = *divisor.coeffs_.rbegin();
    QSeries quotient;
    QSeries rest = *this;
    while (!rest.is_zero()) {
      const auto& [rd, rc] = *rest.coeffs_.rbegin();
      if (rd < top_d) throw NotDivisible("series is not an exact multiple of the divisor");
      QSeries step = monomial(rd - top_d, rc.exact_divide(top_c));
      quotient += step;
      rest -= step * divisor;
    }
    return quotient;
  }

  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& [d, c] : coeffs_) n += c.size();
    return n;
  }

  /// Same layout as the printed matrices: "3t3q", "(2t2t3+2t4)q", "-t2+(...)q".
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [d, c] : coeffs_) {
      std::string poly = qhgr::to_string(c);
      std::string qpart = d == 0 ? "" : (d == 1 ? "q" : "q^" + std::to_string(d));
      std::string term;
      if (d == 0) {
        term = poly;
      } else if (c.size() > 1) {
        term = "(" + poly + ")" + qpart;
      } else if (poly == "1") {
        term = qpart;
      } else if (poly == "-1") {
        term = "-" + qpart;
      } else {
        term = poly + qpart;
      }
      if (!first && term.front() != '-') out += "+";
      out += term;
      first = false;
    }
    return out;
  }

 private:
  static std::optional<Degree> combine(std::optional<Degree> a, std::optional<Degree> b) {
    if (a && b) return std::min(*a, *b);
    return a ? a : b;
  }

  void drop_beyond_order() {
    if (order_) coeffs_.erase(coeffs_.lower_bound(*order_), coeffs_.end());
  }

  Coefficients coeffs_;
  std::optional<Degree> order_;
};

inline bool is_zero(const QSeries& s) { return s.is_zero(); }
inline QSeries exact_quotient(const QSeries& a, const QSeries& b) { return a.exact_divide(b); }

inline QSeries q_series_monomial(QSeries::Degree d, const TPoly& c) { return QSeries::monomial(d, c); }

}  // namespace qhgr
