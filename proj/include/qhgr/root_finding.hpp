#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qhgr/errors.hpp"

namespace qhgr {

/// All complex roots (with multiplicity) of sum_k coeffs[k] z^k by Aberth-Ehrlich
/// simultaneous iteration. Exactly-zero trailing coefficients are split off as
/// exact zero roots first.
inline std::vector<std::complex<double>> polynomial_roots(std::vector<std::complex<double>> coeffs,
                                                          int max_iterations = 500, double tol = 1e-15) {
  using C = std::complex<double>;
  while (!coeffs.empty() && coeffs.back() == C(0.0)) coeffs.pop_back();
  if (coeffs.empty()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<C> roots;
  std::size_t zeros = 0;
  while (zeros + 1 < coeffs.size() && coeffs[zeros] == C(0.0)) ++zeros;
  roots.assign(zeros, C(0.0));
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(zeros));
  const std::size_t n = coeffs.size() - 1;
  if (n == 0) return roots;

  const C lead = coeffs.back();
  for (auto& c : coeffs) c /= lead;

  // Fujiwara-style radius for the initial circle.
  double radius = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    radius = std::max(radius, std::pow(std::abs(coeffs[k]), 1.0 / static_cast<double>(n - k)));
  radius = std::max(radius, 1e-3);

  std::vector<C> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = std::polar(radius, angle);
  }

  auto eval = [&](C x, C& p, C& dp) {
    p = coeffs[n];
    dp = 0.0;
    for (std::size_t k = n; k-- > 0;) {
      dp = dp * x + p;
      p = p * x + coeffs[k];
    }
  };

  bool converged = false;
  for (int it = 0; it < max_iterations && !converged; ++it) {
    converged = true;
    for (std::size_t k = 0; k < n; ++k) {
      C p, dp;
      eval(z[k], p, dp);
      if (p == C(0.0)) continue;
      C ratio = p / dp;
      C sum = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k && z[j] != z[k]) sum += 1.0 / (z[k] - z[j]);
      C step = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      if (std::abs(step) > tol * (1.0 + std::abs(z[k]))) converged = false;
    }
  }
  if (!converged) {
    double worst = 0.0;
    for (auto x : z) {
      C p, dp;
      eval(x, p, dp);
      worst = std::max(worst, std::abs(p));
    }
    // Multiple roots converge linearly; accept if the polynomial is already tiny there.
    if (worst > 1e-8) throw ConvergenceFailure("polynomial root iteration did not converge", worst);
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

}  // namespace qhgr
