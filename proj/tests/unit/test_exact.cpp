#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "csinv/error.hpp"
#include "csinv/exact.hpp"
#include "generators.hpp"

namespace csinv {
namespace {

const ExactReal kPi2(1, 2);

TEST(ExactReal, CanonicalRadicand) {
  const ExactReal v(Rational(-4), 1, 32);
  EXPECT_EQ(v, ExactReal(Rational(-16), 1, 2));
  EXPECT_EQ(v.to_string(), "-16π√2");
  EXPECT_EQ(ExactReal(Rational(-4), 1, 16), ExactReal(Rational(-16), 1));
}

TEST(ExactReal, ZeroIsCanonical) {
  const ExactReal z = ExactReal(Rational(0), 2, 7) + ExactReal();
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z, ExactReal());
  EXPECT_EQ(z.pi_power(), 0);
  EXPECT_EQ(z.radicand(), 1);
}

TEST(ExactReal, KobayashiEndpointsOrdered) {
  const ExactReal lo(Rational(12), 1, 2);
  const ExactReal hi(Rational(8), 1, 6);
  EXPECT_LT(lo, hi);
  EXPECT_EQ(lo.squared(), ExactReal(Rational(288), 2));
  EXPECT_EQ(hi.squared(), ExactReal(Rational(384), 2));
}

TEST(ExactReal, SquareOfMonopoleYamabe) {
  const ExactReal y(Rational(-4), 1, 2);
  EXPECT_EQ(y * y, ExactReal(Rational(32), 2));
  EXPECT_EQ(ExactReal(Rational(256), 2).sqrt(), ExactReal(Rational(16), 1));
}

TEST(ExactReal, MismatchedPiPowersIncomparable) {
  try {
    (void)(ExactReal(Rational(1), 1) < kPi2);
    FAIL() << "expected IncomparableValues";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IncomparableValues);
  }
  EXPECT_LT(ExactReal(), kPi2);
  EXPECT_GT(ExactReal(), -kPi2);
}

TEST(ExactReal, AsciiRendering) {
  EXPECT_EQ(ExactReal(Rational(-8), 1, 2).to_ascii(), "-8*pi*sqrt(2)");
  EXPECT_EQ(ExactReal(Rational(128), 2).to_string(), "128π²");
}

TEST(ExactInterval, RejectsReversedEndpoints) {
  EXPECT_THROW(ExactInterval(ExactReal::integer(2), ExactReal::integer(1)), Error);
  const ExactInterval i(ExactReal::integer(1), ExactReal::integer(3));
  EXPECT_TRUE(i.contains(ExactReal::integer(2)));
  EXPECT_FALSE(i.contains(ExactReal::integer(4)));
}

// Comparison agrees with a floating-point oracle whenever the gap is visible.
TEST(ExactRealProperty, OrderMatchesDoubleOracle) {
  testgen::Gen g(0x5eed01);
  for (int i = 0; i < 2000; ++i) {
    const int p = static_cast<int>(g.range(0, 2));
    const ExactReal a(testgen::small_rational(g, 20, 9), p, g.range(1, 30));
    const ExactReal b(testgen::small_rational(g, 20, 9), p, g.range(1, 30));
    const double da = a.coeff().convert_to<double>() * std::pow(std::numbers::pi, p) *
                      std::sqrt(a.radicand().convert_to<double>());
    const double db = b.coeff().convert_to<double>() * std::pow(std::numbers::pi, p) *
                      std::sqrt(b.radicand().convert_to<double>());
    EXPECT_NEAR(a.approx(), da, 1e-9 * (1 + std::abs(da)));
    if (std::abs(da - db) > 1e-9) EXPECT_EQ(a < b, da < db) << a.to_string() << " vs " << b.to_string();
  }
}

TEST(ExactRealProperty, ProductsAndRoots) {
  testgen::Gen g(0x5eed02);
  for (int i = 0; i < 500; ++i) {
    const ExactReal a(testgen::small_rational(g, 30, 7), static_cast<int>(g.range(0, 1)), g.range(1, 50));
    const ExactReal sq = a.squared();
    EXPECT_GE(sq.sign(), 0);
    const ExactReal root = sq.sqrt();
    EXPECT_EQ(root, a.sign() < 0 ? -a : a);
    EXPECT_EQ(a - a, ExactReal());
  }
}

TEST(Exact, FloorSqrtAndSquarePart) {
  EXPECT_EQ(floor_sqrt(Rational(17, 4)), 2);
  EXPECT_EQ(floor_sqrt(Rational(0)), 0);
  const auto [s, r] = split_square_part(Integer(72));
  EXPECT_EQ(s, 6);
  EXPECT_EQ(r, 2);
}

}  // namespace
}  // namespace csinv
