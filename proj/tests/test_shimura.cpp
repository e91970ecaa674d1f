#include <gtest/gtest.h>

#include "g2lift/modforms.hpp"
#include "g2lift/shimura.hpp"

using namespace g2lift;

TEST(Generators, ThetaAndF) {
  auto th = theta_half(10);
  const int want[] = {1, 2, 0, 0, 2, 0, 0, 0, 0, 2};
  for (int n = 0; n < 10; ++n) EXPECT_EQ(th[n], Rational(want[n]));
  EXPECT_EQ(th.weight(), Rational(1, 2));
  auto F = weight2_F(20);
  EXPECT_EQ(F[1], Rational(1));
  EXPECT_EQ(F[3], Rational(4));
  EXPECT_EQ(F[9], Rational(13));
  for (int n = 0; n < 20; n += 2) EXPECT_EQ(F[n], Rational(0));
}

TEST(PlusSpace, DimensionAndSupport) {
  for (long k : {6, 8, 10}) {
    auto basis = plus_cusp_basis(k, 400);
    ASSERT_EQ(basis.size(), 1u) << k;
    const auto& g = basis[0];
    EXPECT_TRUE(g.plus_flag);
    EXPECT_EQ(g.c(0), Rational(0));
    EXPECT_EQ(g.c(1), Rational(1));
    EXPECT_EQ(g.normalization, "c(1)=1");
    EXPECT_EQ(g.g.weight(), Rational(2 * k + 1, 2));
    for (std::size_t n = 0; n < g.precision(); ++n) {
      if (n % 4 == 2 || n % 4 == 3) {
        EXPECT_EQ(g.c(n), Rational(0));
      }
    }
  }
  EXPECT_THROW(plus_cusp_basis(6, 40), std::invalid_argument);
  EXPECT_THROW(plus_cusp_basis(7, 400), std::invalid_argument);
}

TEST(PlusSpace, WeightThirteenHalvesCoefficients) {
  auto g = plus_cusp_basis(6, 200)[0];
  // Known generator of the weight 13/2 plus space (Kohnen-Zagier's example).
  EXPECT_EQ(g.c(4), Rational(-56));
  EXPECT_EQ(g.c(5), Rational(120));
  EXPECT_EQ(g.c(8), Rational(-240));
  EXPECT_EQ(g.c(9), Rational(9));
  EXPECT_EQ(g.c(12), Rational(1440));
}

TEST(CCoeff, Lookup) {
  auto g = plus_cusp_basis(6, 200)[0];
  EXPECT_EQ(c_coeff(g, BigInt(-1)), g.c(1));
  EXPECT_EQ(c_coeff(g, BigInt(-2)), Rational(0));
  EXPECT_EQ(c_coeff(g, BigInt(-5)), Rational(120));
  EXPECT_THROW(c_coeff(g, BigInt(3)), std::invalid_argument);
  EXPECT_THROW(c_coeff(g, BigInt(-500)), std::out_of_range);
}

TEST(ShimuraLift, DeltaSmall) {
  auto g = plus_cusp_basis(6, 1200)[0];
  auto d = delta(50);
  EXPECT_TRUE(shimura_lift_check(g, d, 1, 20));
  EXPECT_TRUE(shimura_lift_check(g, d, 5, 10));
  EXPECT_TRUE(shimura_lift_check(g, d, 8, 10));
  EXPECT_THROW(shimura_lift_check(g, d, 6, 3), std::invalid_argument);
  EXPECT_THROW(shimura_lift_check(g, d, 13, 10), std::out_of_range);
  // A wrong eigenform is detected.
  auto e = eigenform(16, 50);
  EXPECT_FALSE(shimura_lift_check(g, e, 1, 10));
}

TEST(ShimuraLift, HigherWeights) {
  for (long k : {8, 10}) {
    auto g = plus_cusp_basis(k, 600)[0];
    auto f = eigenform(static_cast<int>(2 * k), 30);
    EXPECT_TRUE(shimura_lift_check(g, f, 1, 20)) << k;
    EXPECT_TRUE(shimura_lift_check(g, f, 5, 10)) << k;
  }
}
