#include "qhgr/schubert_ring.hpp"

#include <gtest/gtest.h>

#include "qhgr/polynomial.hpp"
#include "test_support.hpp"

namespace qhgr {
namespace {

using Sym2 = Polynomial<2>;

// Schur polynomial s_(a,b)(x1, x2) = (x1 x2)^b h_{a-b}(x1, x2).
Sym2 schur(int a, int b) {
  Sym2 out;
  for (int k = 0; k <= a - b; ++k)
    out += Sym2::monomial({static_cast<std::uint32_t>(b + k), static_cast<std::uint32_t>(a - k)}, Rational(1));
  return out;
}

// Littlewood-Richardson oracle: multiply Schur polynomials in two variables,
// expand back into Schur polynomials by peeling off lex-leading terms, and drop
// diagrams that do not fit in the 2x2 grid (their classes vanish in Gr(2,4)).
SchubertClassVector schur_oracle(YoungDiagram22 x, YoungDiagram22 y) {
  Sym2 rest = schur(x.first(), x.second()) * schur(y.first(), y.second());
  SchubertClassVector out;
  while (!rest.is_zero()) {
    auto [e, c] = *rest.terms().rbegin();
    int a = static_cast<int>(e[0]);
    int b = static_cast<int>(e[1]);
    EXPECT_GE(a, b);
    if (a <= 2) out[YoungDiagram22(a, b).index()] += c;
    rest -= schur(a, b) * c;
  }
  return out;
}

// Pieri rule for the special classes sigma_(k,0): add k boxes, no two in one column.
SchubertClassVector pieri_oracle(int k, YoungDiagram22 y) {
  SchubertClassVector out;
  for (int a = y.first(); a <= 2; ++a)
    for (int b = y.second(); b <= std::min(a, y.first()); ++b)
      if ((a - y.first()) + (b - y.second()) == k) out[YoungDiagram22(a, b).index()] += 1;
  return out;
}

TEST(YoungDiagram, SixDiagramsInBasisOrder) {
  auto all = all_diagrams();
  const char* labels[] = {"0,0", "1,0", "2,0", "1,1", "2,1", "2,2"};
  for (std::size_t i = 0; i < kRank; ++i) {
    EXPECT_EQ(all[i].index(), i);
    EXPECT_EQ(all[i].label(), labels[i]);
    EXPECT_EQ(YoungDiagram22::parse(labels[i]), all[i]);
    EXPECT_EQ(YoungDiagram22::from_index(i), all[i]);
  }
  EXPECT_LT(YoungDiagram22(2, 0), YoungDiagram22(1, 1));
}

TEST(YoungDiagram, RejectsDiagramsOutsideTheGrid) {
  for (const char* bad : {"", "1", "0,1", "3,0", "2,3", "a,b", "1,0,0", "1;0", "-1,0"})
    EXPECT_FALSE(YoungDiagram22::parse(bad).has_value()) << bad;
  EXPECT_THROW(YoungDiagram22(1, 2), std::invalid_argument);
  EXPECT_THROW(YoungDiagram22::from_index(6), std::out_of_range);
}

TEST(Codegree, TwiceTheBoxes) {
  EXPECT_EQ(codegree(YoungDiagram22(0, 0)), 0);
  EXPECT_EQ(codegree(YoungDiagram22(2, 1)), 6);
  EXPECT_EQ(codegree(YoungDiagram22(1, 1)), 4);
  EXPECT_EQ(codegree(YoungDiagram22(2, 0)), 4);
  EXPECT_EQ(codegree(std::size_t{5}), 8);
}

TEST(Cup, MatchesSchurPolynomialOracleOnAllPairs) {
  for (auto x : all_diagrams())
    for (auto y : all_diagrams()) EXPECT_EQ(cup(x, y), schur_oracle(x, y)) << x.label() << " * " << y.label();
}

TEST(Cup, MatchesPieriRuleForSpecialClasses) {
  for (int k = 0; k <= 2; ++k)
    for (auto y : all_diagrams()) EXPECT_EQ(cup(YoungDiagram22(k, 0), y), pieri_oracle(k, y)) << k << " " << y.label();
}

TEST(Cup, NamedProducts) {
  SchubertClassVector s2_plus_s3;
  s2_plus_s3[2] = 1;
  s2_plus_s3[3] = 1;
  EXPECT_EQ(cup(YoungDiagram22(1, 0), YoungDiagram22(1, 0)), s2_plus_s3);
  EXPECT_EQ(cup(YoungDiagram22(0, 0), YoungDiagram22(2, 1)), SchubertClassVector::basis(4));
  EXPECT_EQ(cup(YoungDiagram22(1, 0), YoungDiagram22(2, 1)), SchubertClassVector::basis(5));
  EXPECT_TRUE(cup(YoungDiagram22(2, 0), YoungDiagram22(1, 1)).is_zero());
}

TEST(Cup, CodegreeAdditivityAndVanishing) {
  for (auto x : all_diagrams())
    for (auto y : all_diagrams()) {
      auto p = cup(x, y);
      for (std::size_t f = 0; f < kRank; ++f) {
        if (is_zero(p[f])) continue;
        EXPECT_EQ(codegree(f), codegree(x) + codegree(y));
        EXPECT_GT(p[f], 0);
        EXPECT_TRUE(is_integer(p[f]));
      }
      if (codegree(x) + codegree(y) > 8) {
        EXPECT_TRUE(p.is_zero());
      }
    }
}

TEST(Cup, CommutativeAndAssociativeOnBasis) {
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j) {
      auto a = SchubertClassVector::basis(i), b = SchubertClassVector::basis(j);
      EXPECT_EQ(cup(a, b), cup(b, a));
      for (std::size_t k = 0; k < kRank; ++k) {
        auto c = SchubertClassVector::basis(k);
        EXPECT_EQ(cup(cup(a, b), c), cup(a, cup(b, c)));
      }
    }
}

TEST(Cup, RingAxiomsOnRandomVectors) {
  auto random_vector = [] {
    SchubertClassVector v;
    for (std::size_t i = 0; i < kRank; ++i) v[i] = testing::random_rational();
    return v;
  };
  for (int trial = 0; trial < 50; ++trial) {
    auto u = random_vector(), v = random_vector(), w = random_vector();
    EXPECT_EQ(cup(u, v), cup(v, u));
    EXPECT_EQ(cup(cup(u, v), w), cup(u, cup(v, w)));
    EXPECT_EQ(cup(u, v + w), cup(u, v) + cup(u, w));
    EXPECT_EQ(cup(SchubertClassVector::basis(0), u), u);
    Rational s = testing::random_rational();
    EXPECT_EQ(cup(s * u, v), s * cup(u, v));
  }
}

TEST(Pairing, AntiDiagonalBlockAndSelfInverse) {
  EXPECT_EQ(pairing(0, 5), 1);
  EXPECT_EQ(pairing(2, 2), 1);
  EXPECT_EQ(pairing(3, 3), 1);
  EXPECT_EQ(pairing(1, 4), 1);
  EXPECT_EQ(pairing(0, 0), 0);
  EXPECT_EQ(pairing(2, 3), 0);
  for (std::size_t i = 0; i < kRank; ++i) {
    EXPECT_EQ(kIntersection.dual(kIntersection.dual(i)), i);
    for (std::size_t j = 0; j < kRank; ++j) {
      int gg = 0;
      for (std::size_t k = 0; k < kRank; ++k) gg += kIntersection(i, k) * kIntersection(k, j);
      EXPECT_EQ(gg, i == j ? 1 : 0);
      EXPECT_EQ(pairing(i, j), pairing(j, i));
      EXPECT_EQ(Rational(pairing(i, j)), triple_intersection(0, i, j));
    }
  }
}

TEST(TripleIntersection, NamedValuesAndFullSymmetry) {
  EXPECT_EQ(triple_intersection(1, 1, 3), 1);
  EXPECT_EQ(triple_intersection(1, 1, 2), 1);
  EXPECT_EQ(triple_intersection(0, 0, 5), 1);
  EXPECT_EQ(triple_intersection(1, 1, 1), 0);
  for (std::size_t k = 0; k < kRank; ++k) EXPECT_EQ(triple_intersection(2, 3, k), 0);
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j)
      for (std::size_t k = 0; k < kRank; ++k) {
        Rational v = triple_intersection(i, j, k);
        EXPECT_EQ(v, triple_intersection(i, k, j));
        EXPECT_EQ(v, triple_intersection(j, i, k));
        EXPECT_EQ(v, triple_intersection(j, k, i));
        EXPECT_EQ(v, triple_intersection(k, i, j));
        EXPECT_EQ(v, triple_intersection(k, j, i));
      }
}

}  // namespace
}  // namespace qhgr
