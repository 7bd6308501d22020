#include "qhgr/spectral.hpp"

#include <gtest/gtest.h>

#include "qhgr/engine.hpp"
#include "test_support.hpp"

namespace qhgr {
namespace {

const Engine& engine() {
  static const Engine e(2);
  return e;
}

constexpr YoungDiagram22 kT2{2, 0}, kT3{1, 1}, kT4{2, 1}, kT5{2, 2};

TPoly pow_t(std::size_t v, std::uint32_t k, const Rational& c) {
  TPoly::Exponents e{};
  e[v] = k;
  return TPoly::monomial(e, c);
}

Rational big(const char* digits) { return Rational(mpz_class(digits)); }

TEST(CharPoly, MonicWithMinusTraceBelowTheTop) {
  const DubrovinMatrix& m = engine().full_matrix(3);
  CharPoly p = char_poly(m);
  ASSERT_EQ(p.degree(), 6u);
  EXPECT_EQ(p.coeffs[6], QSeries(1));
  QSeries trace;
  for (std::size_t i = 0; i < kRank; ++i) trace += m(i, i);
  EXPECT_EQ(p.coeffs[5], -trace);
}

TEST(CharPoly, ClassicalOperatorIsNilpotent) {
  CharPoly p = char_poly(engine().family(std::nullopt, 1));
  for (std::size_t k = 0; k < 6; ++k) EXPECT_TRUE(p.coeffs[k].is_zero()) << k;
}

TEST(Discriminant, SingleCycleFamiliesAtEnergyTwo) {
  const auto& d2 = engine().verdict(kT2, 2).witness;
  const auto& d3 = engine().verdict(kT3, 2).witness;
  const auto& d4 = engine().verdict(kT4, 2).witness;
  const auto& d5 = engine().verdict(kT5, 2).witness;
  EXPECT_EQ(d2.valuation, 8u);
  EXPECT_EQ(d2.value.coefficient(8), pow_t(2, 2, big("-1208925819614629174706176")));
  EXPECT_EQ(d3.valuation, 8u);
  EXPECT_EQ(d3.value.coefficient(8), pow_t(3, 2, big("-1208925819614629174706176")));
  EXPECT_FALSE(d4.valuation.has_value());
  EXPECT_TRUE(d4.value.is_zero());
  EXPECT_EQ(d5.valuation, 9u);
  EXPECT_EQ(d5.value.coefficient(9), pow_t(5, 2, big("1888946593147858085478400")));
}

TEST(Discriminant, VanishesExactlyWhenThereIsARepeatedFactor) {
  for (auto cycle : kBulkCycles)
    for (std::uint32_t a = 1; a <= 3; ++a) {
      auto p = engine().char_poly(cycle, a).as_upoly();
      bool repeated = gcd_degree(p, p.derivative()) > 0;
      EXPECT_EQ(repeated, engine().verdict(cycle, a).witness.value.is_zero()) << cycle.label() << " alpha=" << a;
    }
}

// Entries of M_{<2} and M_{<3} agree mod q^2, hence so do the discriminants.
TEST(Discriminant, CompatibleAcrossTruncations) {
  for (auto cycle : kBulkCycles) {
    QSeries lo = engine().verdict(cycle, 2).witness.value;
    QSeries hi = engine().verdict(cycle, 3).witness.value;
    EXPECT_EQ(lo.truncated(2), hi.truncated(2)) << cycle.label();
  }
}

TEST(Discriminant, RejectsNonMonicInput) {
  CharPoly p{{QSeries(1), QSeries(2)}};
  EXPECT_THROW(discriminant(p), std::invalid_argument);
  EXPECT_THROW(discriminant(CharPoly{{QSeries(1)}}), std::invalid_argument);
}

TEST(Classify, SingleCycleVerdictsAtEnergyTwo) {
  EXPECT_EQ(engine().verdict(kT2, 2).kind, Simplicity::TruncationSimple);
  EXPECT_EQ(engine().verdict(kT3, 2).kind, Simplicity::TruncationSimple);
  EXPECT_EQ(engine().verdict(kT4, 2).kind, Simplicity::TruncationNonsimple);
  EXPECT_EQ(engine().verdict(kT5, 2).kind, Simplicity::TruncationSimple);
  // The exceptional locus is the origin of each simple family.
  for (auto cycle : {kT2, kT3, kT5}) {
    const TPoly& locus = engine().verdict(cycle, 2).exceptional_locus;
    EXPECT_TRUE(locus.involves(cycle.index()));
    EXPECT_TRUE(locus.substitute(Coordinates{}).is_zero());
  }
}

TEST(Classify, ZeroTruncationIsNonsimple) {
  SimplicityVerdict v = classify(engine().full_matrix(3), 0);
  EXPECT_EQ(v.kind, Simplicity::TruncationNonsimple);
  EXPECT_FALSE(v.witness.valuation.has_value());
}

TEST(Classify, CertifiedWhenTheValuationIsBelowAlpha) {
  // diag(0, q) has discriminant q^2 up to sign: certified at alpha = 3.
  DubrovinMatrix m;
  m.entries = DenseMatrix<QSeries>(2, 2);
  m.entries(1, 1) = QSeries::q_power(1);
  m.alpha = 3;
  SimplicityVerdict v = classify(m, 3);
  EXPECT_EQ(v.witness.valuation, 2u);
  EXPECT_EQ(v.kind, Simplicity::SimpleCertified);
  // At alpha = 2 the same discriminant is only a truncation statement; at alpha = 1 the q is dropped.
  EXPECT_EQ(classify(m, 2).kind, Simplicity::TruncationSimple);
  EXPECT_EQ(classify(m, 1).kind, Simplicity::TruncationNonsimple);
  EXPECT_EQ(to_string(Simplicity::SimpleCertified), "SIMPLE_CERTIFIED");
}

TEST(NumericSpectrum, ClassicalPointAtUnitQ) {
  SpectrumSample s = engine().spectrum(std::nullopt, 0.0, 1.0, 2);
  const double r = 4.0 * std::sqrt(2.0);
  std::vector<Complex> expected{{-r, 0}, {0, -r}, {0, 0}, {0, 0}, {0, r}, {r, 0}};
  EXPECT_LT(testing::spectrum_distance(s.eigenvalues, expected), 1e-9);
  EXPECT_LE(s.residual, kResidualBound);
  // The double zero is exact: the t = 0 operator is singular with a rational kernel.
  EXPECT_EQ(std::count(s.eigenvalues.begin(), s.eigenvalues.end(), Complex(0.0, 0.0)), 2);
}

TEST(NumericSpectrum, TraceMatchesEigenvalueSum) {
  for (int trial = 0; trial < 10; ++trial) {
    ComplexPoint t{};
    for (std::size_t v = 2; v < kRank; ++v) t[v] = testing::random_complex(2.0);
    Complex q = testing::random_complex(1.5);
    const DubrovinMatrix& m = engine().full_matrix(3);
    SpectrumSample s = numeric_spectrum(m, t, q);
    Complex sum = 0.0, trace = 0.0;
    for (auto z : s.eigenvalues) sum += z;
    for (std::size_t i = 0; i < kRank; ++i) trace += m(i, i).evaluate(t, q);
    EXPECT_LT(std::abs(sum - trace), 1e-9 * (1.0 + std::abs(trace)));
  }
}

TEST(NumericSpectrum, MatrixAndCharPolyRootsAgree) {
  for (auto cycle : kBulkCycles)
    for (Complex t : {Complex(0.5, 1.0), Complex(1.0, 2.0), Complex(-0.7, 0.3)}) {
      SpectrumSample s = engine().spectrum(cycle, t, 1.0, 2);
      auto roots = char_poly_roots(engine().char_poly(cycle, 2), single_parameter_point(cycle, t), 1.0);
      // Double roots are only resolved to about sqrt(machine epsilon).
      EXPECT_LT(testing::spectrum_distance(s.eigenvalues, roots), 1e-6) << cycle.label();
    }
}

TEST(NumericSpectrum, T0ShiftsTheSpectrum) {
  const StructureConstants& sc = engine().structure_constants();
  DubrovinMatrix full = dubrovin_matrix(symbolic_coordinates(), sc, 2);
  for (int trial = 0; trial < 20; ++trial) {
    ComplexPoint t{};
    for (std::size_t v = 2; v < kRank; ++v) t[v] = testing::random_complex();
    Complex q = testing::random_complex();
    ComplexPoint shifted = t;
    shifted[0] = testing::random_complex(3.0);
    auto base = numeric_spectrum(full, t, q).eigenvalues;
    auto moved = numeric_spectrum(full, shifted, q).eigenvalues;
    for (auto& z : base) z += shifted[0];
    EXPECT_LT(testing::spectrum_distance(base, moved), 1e-9);
  }
}

TEST(NumericSpectrum, ResidualBoundIsEnforced) {
  try {
    numeric_spectrum(engine().full_matrix(2), ComplexPoint{}, 1.0, -1.0);
    FAIL() << "expected ConvergenceFailure";
  } catch (const ConvergenceFailure& e) {
    EXPECT_GE(e.residual(), 0.0);
  }
}

TEST(NumericSpectrum, MinPairwiseGap) {
  std::vector<Complex> z{{0, 0}, {3, 4}, {1, 0}};
  EXPECT_DOUBLE_EQ(min_pairwise_gap(z), 1.0);
  EXPECT_TRUE(std::isinf(min_pairwise_gap(std::vector<Complex>{{1, 1}})));
}

TEST(NumericSpectrum, MatchingPairsNearestNeighbours) {
  std::vector<Complex> prev{{0, 0}, {1, 0}, {5, 5}}, next{{5.1, 5}, {0.1, 0}, {1.05, 0}};
  auto m = match_eigenvalues(prev, next);
  EXPECT_EQ(m, (std::vector<std::size_t>{1, 2, 0}));
}

TEST(Sweep, ReferenceSampleFirst) {
  std::vector<Complex> path{{0.5, 1.0}, {1.0, 2.0}};
  auto samples = engine().sweep(kT3, path, 1.0, 2);
  ASSERT_EQ(samples.size(), 3u);
  EXPECT_EQ(samples[0].t, Complex(0.0));
  EXPECT_EQ(samples[1].t, path[0]);
  for (const auto& s : samples) {
    EXPECT_EQ(s.cycle, kT3);
    EXPECT_EQ(s.alpha, 2u);
    EXPECT_EQ(s.eigenvalues.size(), 6u);
  }
  EXPECT_LT(testing::spectrum_distance(samples[0].eigenvalues, engine().spectrum(std::nullopt, 0.0, 1.0, 2).eigenvalues),
            1e-12);
  EXPECT_THROW(engine().sweep(kT3, std::span<const Complex>{}, 1.0, 2), InvalidValue);
  EXPECT_THROW(spectrum_sweep(YoungDiagram22(1, 0), engine().family(std::nullopt, 2), path, 1.0), std::invalid_argument);
}

TEST(Sweep, SigmaTwoOneCollidesAlongTheFigurePath) {
  std::vector<Complex> path{{0.5, 1.0}, {1.0, 2.0}, {1.5, 3.0}};
  for (auto cycle : kBulkCycles) {
    auto samples = engine().sweep(cycle, path, 1.0, 2);
    for (std::size_t k = 1; k < samples.size(); ++k) {
      double gap = min_pairwise_gap(samples[k].eigenvalues);
      if (cycle == kT4)
        EXPECT_LT(gap, 1e-6);
      else
        EXPECT_GT(gap, 1.0) << cycle.label();
    }
  }
}

TEST(Engine, AccessorsValidateArguments) {
  EXPECT_THROW(engine().family(kT2, 4), TruncationExceedsPotential);
  EXPECT_THROW(engine().verdict(YoungDiagram22(1, 0), 2), InvalidValue);
  EXPECT_THROW(engine().spectrum(std::nullopt, 1.0, 1.0, 2), InvalidValue);
  EXPECT_EQ(engine().max_alpha(), 3u);
}

}  // namespace
}  // namespace qhgr
