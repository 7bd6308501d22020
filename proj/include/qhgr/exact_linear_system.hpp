#pragma once

// Sparse Gauss-Jordan elimination over the rationals for over-determined
// systems. Redundant equations are reduced to 0 = c and checked, not dropped.

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qhgr/rational.hpp"

namespace qhgr {

/// sum_k coeffs[k] * x_k = rhs
struct LinearEquation {
  std::map<std::size_t, Rational> coeffs;
  Rational rhs;

  /// Scaled so the lowest-index coefficient is 1. Zero rows are left alone.
  LinearEquation normalized() const {
    if (coeffs.empty()) return *this;
    Rational s = Rational(1) / coeffs.begin()->second;
    LinearEquation out;
    for (const auto& [k, c] : coeffs) out.coeffs.emplace(k, c * s);
    out.rhs = rhs * s;
    return out;
  }

  friend bool operator<(const LinearEquation& a, const LinearEquation& b) {
    if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
    return a.rhs < b.rhs;
  }
  friend bool operator==(const LinearEquation&, const LinearEquation&) = default;
};

struct LinearSolveResult {
  std::vector<std::optional<Rational>> values;  // nullopt for free unknowns
  std::vector<std::size_t> free_unknowns;
  std::size_t redundant_consistent = 0;  // rows reduced to 0 = 0
  std::size_t inconsistent = 0;          // rows reduced to 0 = c, c != 0
};

/// Pivot choice: the active row with the fewest nonzeros, ties broken by its
/// lowest unknown index (callers order unknowns so that this is the lowest key),
/// then by row position. The pivot column is that lowest unknown.
inline LinearSolveResult solve_exact(std::vector<LinearEquation> rows, std::size_t unknowns) {
  LinearSolveResult result;
  result.values.assign(unknowns, std::nullopt);
  std::vector<bool> active(rows.size(), true);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)

  auto retire_if_empty = [&](std::size_t r) {
    if (!rows[r].coeffs.empty()) return;
    active[r] = false;
    if (is_zero(rows[r].rhs)) {
      ++result.redundant_consistent;
    } else {
      ++result.inconsistent;
    }
  };
  for (std::size_t r = 0; r < rows.size(); ++r) retire_if_empty(r);

  while (true) {
    std::size_t best = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!active[r]) continue;
      if (best == rows.size()) {
        best = r;
        continue;
      }
      const auto& cand = rows[r].coeffs;
      const auto& cur = rows[best].coeffs;
      if (cand.size() < cur.size() || (cand.size() == cur.size() && cand.begin()->first < cur.begin()->first)) {
        best = r;
      }
    }
    if (best == rows.size()) break;
    active[best] = false;
    const std::size_t col = rows[best].coeffs.begin()->first;
    rows[best] = rows[best].normalized();
    pivots.emplace_back(best, col);
    const LinearEquation pivot = rows[best];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == best) continue;
      auto it = rows[r].coeffs.find(col);
      if (it == rows[r].coeffs.end()) continue;
      Rational factor = it->second;
      for (const auto& [k, c] : pivot.coeffs) {
        auto [slot, inserted] = rows[r].coeffs.try_emplace(k, 0);
        slot->second -= factor * c;
        if (is_zero(slot->second)) rows[r].coeffs.erase(slot);
      }
      rows[r].rhs -= factor * pivot.rhs;
      if (active[r]) retire_if_empty(r);
    }
  }

  // After full elimination a pivot row holds its pivot plus free unknowns only.
  std::vector<bool> pivotal(unknowns, false);
  for (const auto& [r, col] : pivots) pivotal[col] = true;
  for (std::size_t k = 0; k < unknowns; ++k)
    if (!pivotal[k]) result.free_unknowns.push_back(k);
  for (const auto& [r, col] : pivots) {
    if (rows[r].coeffs.size() == 1) result.values[col] = rows[r].rhs;
  }
  return result;
}

}  // namespace qhgr
