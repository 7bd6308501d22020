#include "qhgr/exact_linear_system.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace qhgr {
namespace {

LinearEquation eq(std::initializer_list<std::pair<std::size_t, long>> coeffs, long rhs) {
  LinearEquation e;
  for (auto [k, c] : coeffs) e.coeffs.emplace(k, c);
  e.rhs = rhs;
  return e;
}

TEST(LinearSystem, UniqueSolution) {
  auto r = solve_exact({eq({{0, 1}, {1, 1}}, 3), eq({{0, 1}, {1, -1}}, 1)}, 2);
  ASSERT_TRUE(r.free_unknowns.empty());
  EXPECT_EQ(*r.values[0], 2);
  EXPECT_EQ(*r.values[1], 1);
  EXPECT_EQ(r.inconsistent, 0u);
}

TEST(LinearSystem, CountsRedundantAndInconsistentRows) {
  auto r = solve_exact({eq({{0, 1}}, 1), eq({{0, 2}}, 2), eq({{0, 3}}, 4)}, 1);
  EXPECT_EQ(r.redundant_consistent, 1u);
  EXPECT_EQ(r.inconsistent, 1u);
}

TEST(LinearSystem, ReportsFreeUnknowns) {
  auto r = solve_exact({eq({{0, 1}, {1, 1}}, 0)}, 3);
  EXPECT_EQ(r.free_unknowns.size(), 2u);
  EXPECT_FALSE(r.values[2].has_value());
}

TEST(LinearSystem, RandomSquareSystemsRecoverTheSolution) {
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 6;
    std::vector<Rational> x(n);
    for (auto& v : x) v = testing::random_rational();
    std::vector<LinearEquation> rows;
    for (std::size_t r = 0; r < n + 3; ++r) {
      LinearEquation e;
      e.rhs = 0;
      for (std::size_t c = 0; c < n; ++c) {
        Rational a = testing::random_rational(3);
        if (is_zero(a)) continue;
        e.coeffs.emplace(c, a);
        e.rhs += a * x[c];
      }
      rows.push_back(e);
    }
    auto result = solve_exact(rows, n);
    EXPECT_EQ(result.inconsistent, 0u);
    if (!result.free_unknowns.empty()) continue;  // rank-deficient draw
    for (std::size_t c = 0; c < n; ++c) EXPECT_EQ(*result.values[c], x[c]);
  }
}

TEST(LinearEquation, NormalizedMakesLeadingCoefficientOne) {
  auto n = eq({{2, 4}, {5, -2}}, 6).normalized();
  EXPECT_EQ(n.coeffs.at(2), 1);
  EXPECT_EQ(n.coeffs.at(5), make_rational(-1, 2));
  EXPECT_EQ(n.rhs, make_rational(3, 2));
}

}  // namespace
}  // namespace qhgr
