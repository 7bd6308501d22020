#pragma once

// Exact determinants and characteristic polynomials over commutative rings.
//
// The ring type R needs +, -, *, construction from int, and the free functions
// is_zero(R) and (for Bareiss only) exact_quotient(R, R).

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qhgr/dense_matrix.hpp"
#include "qhgr/rational.hpp"  // is_zero / exact_quotient for Rational (not found by ADL)

namespace qhgr {

template <typename R>
concept CommutativeRing = requires(R a, R b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { is_zero(a) } -> std::convertible_to<bool>;
  R(0);
  R(1);
};

template <typename R>
concept ExactDivisionRing = CommutativeRing<R> && requires(R a, R b) {
  { exact_quotient(a, b) } -> std::convertible_to<R>;
};

/// Fraction-free Gaussian elimination. Every division is exact.
/// A zero pivot is replaced by the first nonzero entry below it (row swap).
template <ExactDivisionRing R>
R bareiss_determinant(DenseMatrix<R> m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return R(1);
  bool negate = false;
  R previous(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t swap_with = k;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (!is_zero(m(i, k))) {
          swap_with = i;
          break;
        }
      }
      if (swap_with == k) return R(0);
      m.swap_rows(k, swap_with);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R numerator = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = (k == 0) ? numerator : R(exact_quotient(numerator, previous));
      }
      m(i, k) = R(0);
    }
    previous = m(k, k);
  }
  R det = m(n - 1, n - 1);
  if (negate) return R(R(0) - det);
  return det;
}

/// Cofactor expansion along the first row. Exponential cost; oracle use only.
template <CommutativeRing R>
R laplace_determinant(const DenseMatrix<R>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return R(1);
  if (n == 1) return m(0, 0);
  R total(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (is_zero(m(0, c))) continue;
    DenseMatrix<R> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    R term = m(0, c) * laplace_determinant(minor);
    if (c % 2 == 0) {
      total = total + term;
    } else {
      total = total - term;
    }
  }
  return total;
}

/// Coefficients of det(lambda I - M), lowest degree first; the last entry is 1.
///
/// Berkowitz's division-free recurrence: bordering the leading k x k block A
/// by row r, column s and corner a multiplies the coefficient vector by the
/// lower-triangular Toeplitz matrix with first column (1, -a, -r s, -r A s, ...).
template <CommutativeRing R>
std::vector<R> berkowitz_char_poly(const DenseMatrix<R>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  // Highest-degree-first while building.
  std::vector<R> coeffs{R(1)};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<R> toeplitz(k + 2, R(0));
    toeplitz[0] = R(1);
    toeplitz[1] = R(0) - m(k, k);
    // v = A^j s, starting from s = column k above the diagonal.
    std::vector<R> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = m(i, k);
    for (std::size_t j = 0; j < k; ++j) {
      R rv(0);
      for (std::size_t i = 0; i < k; ++i) rv = rv + m(k, i) * v[i];
      toeplitz[j + 2] = R(0) - rv;
      if (j + 1 < k) {
        std::vector<R> next(k, R(0));
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c) next[r] = next[r] + m(r, c) * v[c];
        v = std::move(next);
      }
    }
    std::vector<R> updated(k + 2, R(0));
    for (std::size_t row = 0; row < k + 2; ++row)
      for (std::size_t i = 0; i <= row; ++i)
        if (row - i < coeffs.size()) updated[row] = updated[row] + toeplitz[i] * coeffs[row - i];
    coeffs = std::move(updated);
  }
  return {coeffs.rbegin(), coeffs.rend()};
}

}  // namespace qhgr
