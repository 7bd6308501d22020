#pragma once

// Big quantum product on QH^t(Gr(2,4)) and Dubrovin's operator
//
//   K^t = c1 - sum_j ((|sigma_j| - 2) / 2) t_j sigma_j
//       = 4 sigma_(1,0) + t0 sigma_0 - t2 sigma_(2,0) - t3 sigma_(1,1) - 2 t4 sigma_(2,1) - 3 t5 sigma_(2,2).
//
// Matrices use the column-action convention: column j holds K * sigma_j.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "qhgr/dense_matrix.hpp"
#include "qhgr/gw_potential.hpp"
#include "qhgr/qseries.hpp"
#include "qhgr/schubert_ring.hpp"

namespace qhgr {

/// An element of QH^t in the sigma basis.
struct QuantumClassVector {
  std::array<QSeries, kRank> coeffs{};

  static QuantumClassVector basis(std::size_t i) {
    QuantumClassVector v;
    v.coeffs.at(i) = QSeries(1);
    return v;
  }

  QSeries& operator[](std::size_t i) { return coeffs.at(i); }
  const QSeries& operator[](std::size_t i) const { return coeffs.at(i); }

  QuantumClassVector truncated(std::uint32_t alpha) const {
    QuantumClassVector out;
    for (std::size_t i = 0; i < kRank; ++i) out.coeffs[i] = coeffs[i].truncated(alpha);
    return out;
  }

  friend QuantumClassVector operator+(QuantumClassVector a, const QuantumClassVector& b) {
    for (std::size_t i = 0; i < kRank; ++i) a.coeffs[i] += b.coeffs[i];
    return a;
  }
  friend bool operator==(const QuantumClassVector&, const QuantumClassVector&) = default;
};

/// Symbolic coordinates t0..t5, each t_j mapped to itself.
inline Coordinates symbolic_coordinates() {
  Coordinates c;
  for (std::size_t i = 0; i < kNumCoordinates; ++i) c[i] = t_var(i);
  return c;
}

/// Only t_cycle is kept symbolic; every other coordinate is zero.
inline Coordinates single_parameter_coordinates(std::size_t cycle) {
  Coordinates c;
  c.at(cycle) = t_var(cycle);
  return c;
}

/// t0..t5 with t0 and t1 forced to zero.
inline Coordinates hat_coordinates() {
  Coordinates c = symbolic_coordinates();
  c[0] = TPoly();
  c[1] = TPoly();
  return c;
}

/// sigma_i *_t sigma_j = sum_{e,f} Phi_{ije} g^{ef} sigma_f, extended bilinearly, mod q^alpha.
inline QuantumClassVector quantum_product(const QuantumClassVector& u, const QuantumClassVector& v,
                                          const StructureConstants& sc, std::uint32_t alpha) {
  if (alpha > sc.max_degree() + 1 || alpha > sc.alpha()) {
    throw TruncationExceedsPotential("quantum product mod q^" + std::to_string(alpha) +
                                     " needs GW numbers beyond degree " + std::to_string(sc.max_degree()));
  }
  QuantumClassVector out;
  for (auto& c : out.coeffs) c = QSeries(0).truncated(alpha);
  for (std::size_t i = 0; i < kRank; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < kRank; ++j) {
      if (v[j].is_zero()) continue;
      QSeries uv = (u[i] * v[j]).truncated(alpha);
      for (std::size_t e = 0; e < kRank; ++e) {
        const QSeries& phi = sc(i, j, e);
        if (phi.is_zero()) continue;
        out.coeffs[kIntersection.dual(e)] += uv * phi.truncated(alpha);
      }
    }
  }
  return out;
}

inline QuantumClassVector quantum_product(const QuantumClassVector& u, const QuantumClassVector& v, const Potential& p,
                                          std::uint32_t alpha) {
  if (alpha > p.max_degree + 1) {
    throw TruncationExceedsPotential("quantum product mod q^" + std::to_string(alpha) +
                                     " needs GW numbers beyond degree " + std::to_string(p.max_degree));
  }
  return quantum_product(u, v, StructureConstants(p, alpha), alpha);
}

/// Coefficient of sigma_j in K^t.
inline TPoly dubrovin_coefficient(std::size_t j, const Coordinates& t) {
  TPoly k = t.at(j) * make_rational(-(codegree(j) - 2), 2);
  if (j == 1) k = TPoly(4);  // c1 = 4 sigma_(1,0); t1 drops out
  return k;
}

inline QuantumClassVector dubrovin_class(const Coordinates& t) {
  QuantumClassVector k;
  for (std::size_t j = 0; j < kRank; ++j) k.coeffs[j] = QSeries(dubrovin_coefficient(j, t));
  return k;
}

/// Matrix of multiplication by K^t in the sigma basis, finite-energy truncated.
///
/// Entries are polynomials in q with support below `alpha` and carry no series
/// truncation order, so characteristic polynomials and discriminants of the
/// truncation are exact.
struct DubrovinMatrix {
  DenseMatrix<QSeries> entries{kRank, kRank};
  std::uint32_t alpha = 0;

  const QSeries& operator()(std::size_t r, std::size_t c) const { return entries(r, c); }
  friend bool operator==(const DubrovinMatrix&, const DubrovinMatrix&) = default;
};

/// Entrywise finite-energy truncation: keeps q^d with d < alpha.
inline DenseMatrix<QSeries> truncate_matrix(const DenseMatrix<QSeries>& m, std::uint32_t alpha) {
  DenseMatrix<QSeries> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).energy_truncation(alpha);
  return out;
}

inline DubrovinMatrix truncate_matrix(const DubrovinMatrix& m, std::uint32_t alpha) {
  return {truncate_matrix(m.entries, alpha), std::min(m.alpha, alpha)};
}

/// Column j = K^t * sigma_j. `alpha` defaults to the order of the structure constants.
inline DubrovinMatrix dubrovin_matrix(const Coordinates& t, const StructureConstants& sc,
                                      std::optional<std::uint32_t> alpha = std::nullopt) {
  const std::uint32_t a = alpha.value_or(sc.alpha());
  if (a > sc.max_degree() + 1 || a > sc.alpha()) {
    throw TruncationExceedsPotential("truncation at q^" + std::to_string(a) + " needs GW numbers beyond degree " +
                                     std::to_string(sc.max_degree()));
  }
  std::array<TPoly, kRank> k;
  for (std::size_t i = 0; i < kRank; ++i) k[i] = dubrovin_coefficient(i, t);

  DubrovinMatrix m;
  m.alpha = a;
  for (std::size_t i = 0; i < kRank; ++i) {
    if (k[i].is_zero()) continue;
    for (std::size_t j = 0; j < kRank; ++j)
      for (std::size_t e = 0; e < kRank; ++e) {
        const QSeries& phi = sc(i, j, e);
        if (phi.is_zero()) continue;
        QSeries term = phi.energy_truncation(a).substitute(t) * QSeries(k[i]);
        m.entries(kIntersection.dual(e), j) += term;
      }
  }
  return m;
}

inline DubrovinMatrix dubrovin_matrix(const Coordinates& t, const Potential& p,
                                      std::optional<std::uint32_t> alpha = std::nullopt) {
  const std::uint32_t a = alpha.value_or(p.max_degree + 1);
  if (a > p.max_degree + 1) {
    throw TruncationExceedsPotential("truncation at q^" + std::to_string(a) + " needs GW numbers beyond degree " +
                                     std::to_string(p.max_degree));
  }
  return dubrovin_matrix(t, StructureConstants(p, std::max<std::uint32_t>(a, 1)), a);
}

}  // namespace qhgr
