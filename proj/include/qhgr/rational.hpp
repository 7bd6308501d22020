#pragma once

// Exact rationals backed by GMP.

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qhgr {

using Rational = mpq_class;
using Integer = mpz_class;

/// n/d in lowest terms.
inline Rational make_rational(long n, long d) {
  if (d == 0) throw std::domain_error("zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Decimal string, "p" or "p/q" in lowest terms.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

// Parses "p" or "p/q" (optionally signed). Throws std::invalid_argument on bad input.
inline Rational rational_from_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_run = false;
  for (std::size_t i = start; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      digit_run = true;
    } else if (c == '/' && !seen_slash && digit_run) {
      seen_slash = true;
      digit_run = false;
    } else {
      throw std::invalid_argument("malformed rational literal: " + std::string(text));
    }
  }
  if (!digit_run) throw std::invalid_argument("malformed rational literal: " + std::string(text));
  std::string s(text.front() == '+' ? text.substr(1) : text);
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline Rational exact_quotient(const Rational& a, const Rational& b) {
  if (is_zero(b)) throw std::domain_error("division by zero");
  return a / b;
}

}  // namespace qhgr
