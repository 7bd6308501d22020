#pragma once

// Spectral analysis of Dubrovin matrices.
//
// Exact side: characteristic polynomial det(lambda I - M) over the q-series
// ring, the discriminant Res(p, p') as an 11 x 11 Sylvester determinant (p rows
// first), and the simplicity verdict for finite-energy truncations.
// Numeric side: eigenvalues of the matrix specialized at complex (t, q).

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <future>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qhgr/determinant.hpp"
#include "qhgr/dubrovin.hpp"
#include "qhgr/errors.hpp"
#include "qhgr/root_finding.hpp"
#include "qhgr/univariate.hpp"

namespace qhgr {

using Complex = std::complex<double>;

/// Monic characteristic polynomial, coefficients lowest degree first.
struct CharPoly {
  std::vector<QSeries> coeffs;

  std::size_t degree() const { return coeffs.size() - 1; }
  UPoly<QSeries> as_upoly() const { return UPoly<QSeries>(coeffs); }
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

inline CharPoly char_poly(const DenseMatrix<QSeries>& m) {
  DenseMatrix<QSeries> exact(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) exact(r, c) = m(r, c).as_polynomial();
  return {berkowitz_char_poly(exact)};
}

inline CharPoly char_poly(const DubrovinMatrix& m) { return char_poly(m.entries); }

struct DiscriminantResult {
  QSeries value;
  std::optional<std::uint32_t> valuation;  // nullopt: +infinity (value is zero)
};

/// Res(p, p'), Sylvester layout with the p rows first.
inline DiscriminantResult discriminant(const CharPoly& p) {
  UPoly<QSeries> poly = p.as_upoly();
  if (poly.degree() < 1) throw std::invalid_argument("discriminant needs a polynomial of degree >= 1");
  if (poly.leading() != QSeries(1)) throw std::invalid_argument("discriminant expects a monic polynomial");
  QSeries value = resultant(poly, poly.derivative());
  return {value, value.q_valuation()};
}

/// Euclid over Q[t] for polynomials in the single coordinate `var`.
inline TPoly univariate_gcd(TPoly a, TPoly b, std::size_t var) {
  auto lead = [var](const TPoly& p) {
    std::uint32_t deg = p.degree_in(var);
    TPoly::Exponents e{};
    e[var] = deg;
    return std::pair{deg, p.coefficient(e)};
  };
  while (!b.is_zero()) {
    TPoly r = a;
    auto [db, cb] = lead(b);
    while (!r.is_zero() && r.degree_in(var) >= db) {
      auto [dr, cr] = lead(r);
      TPoly::Exponents e{};
      e[var] = dr - db;
      r -= TPoly::monomial(e, cr / cb) * b;
    }
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / lead(a).second);
}

enum class Simplicity { SimpleCertified, TruncationSimple, TruncationNonsimple };

inline std::string to_string(Simplicity s) {
  switch (s) {
    case Simplicity::SimpleCertified: return "SIMPLE_CERTIFIED";
    case Simplicity::TruncationSimple: return "TRUNCATION_SIMPLE";
    case Simplicity::TruncationNonsimple: return "TRUNCATION_NONSIMPLE";
  }
  return "?";
}

struct SimplicityVerdict {
  Simplicity kind = Simplicity::TruncationNonsimple;
  DiscriminantResult witness;
  /// Where the verdict can fail: the t-content of the discriminant (gcd of its
  /// q-coefficients) when it involves at most one coordinate, otherwise its
  /// lowest-order q-coefficient. Simplicity holds off the zero set.
  TPoly exceptional_locus;
};

/// Decides simplicity from the discriminant of the truncation M_{<alpha}:
/// nonzero mod q^alpha certifies the full operator.
inline SimplicityVerdict classify(const DubrovinMatrix& m, std::uint32_t alpha) {
  DubrovinMatrix truncated = truncate_matrix(m, alpha);
  SimplicityVerdict v;
  v.witness = discriminant(char_poly(truncated));
  if (!v.witness.valuation) {
    v.kind = Simplicity::TruncationNonsimple;
    return v;
  }
  v.kind = *v.witness.valuation < alpha ? Simplicity::SimpleCertified : Simplicity::TruncationSimple;

  std::vector<std::size_t> vars;
  for (const auto& [d, c] : v.witness.value.coefficients())
    for (std::size_t k = 0; k < kNumCoordinates; ++k)
      if (c.involves(k) && std::find(vars.begin(), vars.end(), k) == vars.end()) vars.push_back(k);
  if (vars.size() <= 1) {
    TPoly g;
    for (const auto& [d, c] : v.witness.value.coefficients()) g = univariate_gcd(g, c, vars.empty() ? 0 : vars[0]);
    v.exceptional_locus = g;
  } else {
    v.exceptional_locus = v.witness.value.coefficients().begin()->second;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Numeric side

struct SpectrumSample {
  std::optional<YoungDiagram22> cycle;  // nullopt: no bulk cycle (t = 0 reference)
  Complex t{0.0, 0.0};
  Complex q{1.0, 0.0};
  std::uint32_t alpha = 0;
  std::vector<Complex> eigenvalues;  // sorted by (real, imag)
  double residual = 0.0;
};

inline constexpr double kResidualBound = 1e-8;
inline constexpr int kIterationsPerEigenvalue = 500;

inline Eigen::MatrixXcd evaluate_matrix(const DenseMatrix<QSeries>& m, const ComplexPoint& t, Complex q) {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c).evaluate(t, q);
  return out;
}

inline void sort_spectrum(std::vector<Complex>& eigenvalues) {
  std::sort(eigenvalues.begin(), eigenvalues.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

/// Parlett-Reinsch balancing by powers of two; a similarity, so eigenvalues are unchanged.
inline Eigen::MatrixXcd balanced(Eigen::MatrixXcd a) {
  const Eigen::Index n = a.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double col = 0.0, row = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        col += std::abs(a(j, i).real()) + std::abs(a(j, i).imag());
        row += std::abs(a(i, j).real()) + std::abs(a(i, j).imag());
      }
      if (col == 0.0 || row == 0.0) continue;
      double f = 1.0;
      const double s = col + row;
      while (col < row / 2.0) {
        col *= 2.0;
        row /= 2.0;
        f *= 2.0;
      }
      while (col >= row * 2.0) {
        col /= 2.0;
        row *= 2.0;
        f /= 2.0;
      }
      if ((col + row) < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
  return a;
}

/// Eigenvalues by balancing + Hessenberg reduction + shifted QR (complex Schur form).
inline std::vector<Complex> matrix_eigenvalues(const Eigen::MatrixXcd& a) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver;
  solver.setMaxIterations(kIterationsPerEigenvalue * a.rows());
  solver.compute(balanced(a), /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw ConvergenceFailure("eigenvalue iteration budget exhausted", 0.0);
  std::vector<Complex> out(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  sort_spectrum(out);
  return out;
}

/// max_k |det(lambda_k I - A)| / max(1, |A|_F)^n.
inline double spectrum_residual(const Eigen::MatrixXcd& a, std::span<const Complex> eigenvalues) {
  const double scale = std::pow(std::max(1.0, a.norm()), static_cast<double>(a.rows()));
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  double worst = 0.0;
  for (Complex lambda : eigenvalues) worst = std::max(worst, std::abs((lambda * id - a).determinant()) / scale);
  return worst;
}

/// Eigenvalues of M at numeric (t, q). Throws ConvergenceFailure when the
/// residual exceeds `residual_bound`.
inline SpectrumSample numeric_spectrum(const DubrovinMatrix& m, const ComplexPoint& t, Complex q,
                                       double residual_bound = kResidualBound) {
  Eigen::MatrixXcd a = evaluate_matrix(m.entries, t, q);
  SpectrumSample s;
  s.q = q;
  s.alpha = m.alpha;
  s.eigenvalues = matrix_eigenvalues(a);
  s.residual = spectrum_residual(a, s.eigenvalues);
  if (!(s.residual <= residual_bound)) {
    throw ConvergenceFailure("eigenvalue residual " + std::to_string(s.residual) + " above bound", s.residual);
  }
  return s;
}

/// Roots of the exact characteristic polynomial specialized at (t, q).
inline std::vector<Complex> char_poly_roots(const CharPoly& p, const ComplexPoint& t, Complex q) {
  std::vector<Complex> c;
  for (const auto& s : p.coeffs) c.push_back(s.evaluate(t, q));
  std::vector<Complex> roots = polynomial_roots(std::move(c));
  sort_spectrum(roots);
  return roots;
}

inline double min_pairwise_gap(std::span<const Complex> eigenvalues) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < eigenvalues.size(); ++i)
    for (std::size_t j = i + 1; j < eigenvalues.size(); ++j) gap = std::min(gap, std::abs(eigenvalues[i] - eigenvalues[j]));
  return gap;
}

/// Greedy nearest-neighbour matching between consecutive frames, for drawing
/// continuous trails. Result[i] is the index in `next` paired with prev[i].
inline std::vector<std::size_t> match_eigenvalues(std::span<const Complex> prev, std::span<const Complex> next) {
  const std::size_t n = std::min(prev.size(), next.size());
  std::vector<std::size_t> out(prev.size(), next.size());
  std::vector<bool> used_prev(prev.size(), false), used_next(next.size(), false);
  for (std::size_t round = 0; round < n; ++round) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < prev.size(); ++i) {
      if (used_prev[i]) continue;
      for (std::size_t j = 0; j < next.size(); ++j) {
        if (used_next[j]) continue;
        double d = std::abs(prev[i] - next[j]);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    used_prev[bi] = used_next[bj] = true;
    out[bi] = bj;
  }
  return out;
}

/// Coordinates with only t_cycle = value.
inline ComplexPoint single_parameter_point(std::optional<YoungDiagram22> cycle, Complex value) {
  ComplexPoint p{};
  if (cycle) p.at(cycle->index()) = value;
  return p;
}

/// Bulk deformations supported on one Schubert cycle: (2,0), (1,1), (2,1), (2,2).
inline bool is_bulk_cycle(YoungDiagram22 d) { return d.index() >= 2; }

/// One sample per path point with only t_cycle nonzero, preceded by the t = 0
/// reference sample. `family` is the matrix symbolic in t_cycle (or any matrix
/// whose other coordinates are already specialized).
inline std::vector<SpectrumSample> spectrum_sweep(YoungDiagram22 cycle, const DubrovinMatrix& family,
                                                  std::span<const Complex> path, Complex q) {
  if (!is_bulk_cycle(cycle)) throw std::invalid_argument("sweep cycle must be one of (2,0), (1,1), (2,1), (2,2)");
  if (path.empty()) throw std::invalid_argument("sweep path is empty");
  auto sample_at = [&](Complex t) {
    SpectrumSample s = numeric_spectrum(family, single_parameter_point(cycle, t), q);
    s.cycle = cycle;
    s.t = t;
    return s;
  };
  std::vector<std::future<SpectrumSample>> pending;
  pending.push_back(std::async(std::launch::async, sample_at, Complex(0.0, 0.0)));
  for (Complex t : path) pending.push_back(std::async(std::launch::async, sample_at, t));
  std::vector<SpectrumSample> out;
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

inline std::vector<SpectrumSample> spectrum_sweep(YoungDiagram22 cycle, std::span<const Complex> path, Complex q,
                                                  std::uint32_t alpha, const Potential& potential) {
  DubrovinMatrix family = dubrovin_matrix(single_parameter_coordinates(cycle.index()), potential, alpha);
  return spectrum_sweep(cycle, family, path, q);
}

}  // namespace qhgr
