#include "qhgr/rational.hpp"

#include <gtest/gtest.h>

namespace qhgr {
namespace {

TEST(Rational, MakeRationalIsCanonical) {
  Rational r = make_rational(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(to_string(r), "-3/2");
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(rational_from_string("17"), 17);
  EXPECT_EQ(rational_from_string("-4/6"), make_rational(-2, 3));
  EXPECT_EQ(rational_from_string("+1/2"), make_rational(1, 2));
  EXPECT_EQ(rational_from_string("1208925819614629174706176"), Rational(Integer(1) << 80));
}

TEST(Rational, RejectsMalformedLiterals) {
  for (const char* bad : {"", "-", "1/", "/2", "1//2", "1.5", "1e3", "abc", "1/0", " 1", "1/2/3"})
    EXPECT_THROW(rational_from_string(bad), std::invalid_argument) << bad;
}

TEST(Rational, StringRoundTrip) {
  for (long n = -30; n <= 30; n += 7)
    for (long d = 1; d <= 9; d += 2) {
      Rational r = make_rational(n, d);
      EXPECT_EQ(rational_from_string(to_string(r)), r);
    }
}

TEST(Rational, Helpers) {
  EXPECT_TRUE(is_zero(Rational(0)));
  EXPECT_TRUE(is_integer(make_rational(8, 4)));
  EXPECT_FALSE(is_integer(make_rational(1, 4)));
  EXPECT_DOUBLE_EQ(to_double(make_rational(1, 4)), 0.25);
  EXPECT_EQ(exact_quotient(Rational(3), Rational(6)), make_rational(1, 2));
  EXPECT_THROW(exact_quotient(Rational(3), Rational(0)), std::domain_error);
}

}  // namespace
}  // namespace qhgr
