#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <complex>
#include <random>

#include "g2lift/lfunctions.hpp"
#include "g2lift/shimura.hpp"

using namespace g2lift;

namespace {

const std::vector<long> kDiscs{5, 8, 12, 13, 17, 21, 24};

// Mellin integral of the twisted q-series along the imaginary axis, folded at y = 1
// with the functional equation, then integrated numerically.
double mellin_oracle(const QExpansion& f, long D) {
  const int k = static_cast<int>(f.weight().num().get_si()) / 2;
  const double eps = (k % 2 == 0) ? 1.0 : -1.0;
  const double A = D / (2.0 * M_PI);
  BigInt bD(D);
  std::vector<double> b(f.precision(), 0.0);
  for (std::size_t n = 1; n < f.precision(); ++n) b[n] = f[n].to_double() * kronecker_unchecked(bD, static_cast<long>(n));
  auto phi = [&](double y) {
    double s = 0;
    for (std::size_t n = 1; n < b.size(); ++n) {
      double e = std::exp(-static_cast<double>(n) * y / A);
      if (e < 1e-30) break;
      s += b[n] * e;
    }
    return s * std::pow(y, k - 1);
  };
  double upper = 80.0 * A;
  double I = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(phi, 1.0, upper, 15, 1e-14);
  return (1.0 + eps) * I / (std::pow(A, k) * std::tgamma(static_cast<double>(k)));
}

long euler_criterion(long D, long p) {
  long a = ((D % p) + p) % p, r = 1, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r == p - 1 ? -1 : r;
}

}  // namespace

TEST(Kronecker, BasicValues) {
  EXPECT_EQ(kronecker_chi(BigInt(5), BigInt(1)), 1);
  EXPECT_EQ(kronecker_chi(BigInt(5), BigInt(2)), -1);
  EXPECT_EQ(kronecker_chi(BigInt(13), BigInt(2)), -1);
  EXPECT_EQ(kronecker_chi(BigInt(17), BigInt(2)), 1);
  EXPECT_EQ(kronecker_chi(BigInt(1), BigInt(12)), 1);
  EXPECT_THROW(kronecker_chi(BigInt(20), BigInt(3)), std::invalid_argument);
  EXPECT_THROW(kronecker_chi(BigInt(5), BigInt(0)), std::invalid_argument);
}

TEST(Kronecker, OddPrimesMatchEulerCriterion) {
  for (long D : {5L, 8L, 12L, 13L, 17L, 21L, 24L, -3L, -4L, -7L, -8L}) {
    for (long p = 3; p < 200; p += 2) {
      if (!is_prime(p)) continue;
      int want = D % p == 0 ? 0 : static_cast<int>(euler_criterion(D, p));
      EXPECT_EQ(kronecker_chi(BigInt(D), BigInt(p)), want) << D << " " << p;
    }
  }
}

TEST(Kronecker, ZeroExactlyOnCommonFactor) {
  for (long D : kDiscs)
    for (long n = 1; n < 100; ++n)
      EXPECT_EQ(kronecker_chi(BigInt(D), BigInt(n)) == 0, std::gcd(D, n) > 1) << D << " " << n;
}

TEST(Kronecker, Multiplicative) {
  for (long D : kDiscs)
    for (long m = 1; m < 30; ++m)
      for (long n = 1; n < 30; ++n)
        EXPECT_EQ(kronecker_chi(BigInt(D), BigInt(m * n)), kronecker_chi(BigInt(D), BigInt(m)) * kronecker_chi(BigInt(D), BigInt(n)));
}

TEST(CentralValue, DeltaUntwisted) {
  auto d = cached_eigenform(12, 400);
  auto v = central_twisted_value(d, 1, 1e-10);
  EXPECT_LE(v.abs_error_bound, 1e-10);
  EXPECT_GT(std::abs(v.value), 1e-3);
  EXPECT_GT(v.terms_used, 2u);
  EXPECT_NEAR(v.value, mellin_oracle(d, 1), 1e-9);
}

TEST(CentralValue, TwistsAgreeWithMellinIntegral) {
  auto d = cached_eigenform(12, 600);
  for (long D : kDiscs) {
    auto v = central_twisted_value(d, D, 1e-10);
    EXPECT_NE(v.value, 0.0);
    EXPECT_NEAR(v.value, mellin_oracle(d, D), 1e-9) << D;
  }
}

TEST(CentralValue, OtherWeights) {
  for (int w : {16, 20}) {
    auto f = cached_eigenform(w, 600);
    for (long D : {1L, 5L, 8L}) {
      auto v = central_twisted_value(f, D, 1e-10);
      EXPECT_NEAR(v.value, mellin_oracle(f, D), 1e-9 * std::max(1.0, std::abs(v.value))) << w << " " << D;
    }
  }
}

TEST(CentralValue, OddHalfWeightVanishesUntwisted) {
  // weight 18: k = 9, root number -1 at D = 1.
  auto f = cached_eigenform(18, 400);
  auto v = central_twisted_value(f, 1, 1e-10);
  EXPECT_NEAR(v.value, 0.0, 1e-12);
}

TEST(CentralValue, Errors) {
  auto d = cached_eigenform(12, 400);
  EXPECT_THROW(central_twisted_value(d, 5, 1e-13), std::invalid_argument);
  EXPECT_THROW(central_twisted_value(d, 20, 1e-10), std::invalid_argument);
  EXPECT_THROW(central_twisted_value(d, 0, 1e-10), std::invalid_argument);
  EXPECT_THROW(central_twisted_value(cached_eigenform(12, 20), 24, 1e-10), SeriesInstability);
  auto e4 = eisenstein(4, 100);
  EXPECT_THROW(central_twisted_value(e4, 1, 1e-10), std::invalid_argument);
  auto notEigen = cached_eigenform(12, 100) * Rational(2);
  EXPECT_THROW(central_twisted_value(notEigen, 1, 1e-10), std::invalid_argument);
}

TEST(CentralValue, ExtendedPrecisionMatches) {
  using quad = boost::multiprecision::cpp_bin_float_quad;
  auto d = cached_eigenform(12, 600);
  for (long D : {1L, 5L, 24L}) {
    auto a = central_twisted_value<double>(d, D, 1e-10);
    auto b = central_twisted_value<quad>(d, D, 1e-12);
    EXPECT_NEAR(a.value, static_cast<double>(b.value), 1e-10) << D;
  }
}

TEST(CentralValue, RootNumberRecovered) {
  auto d = cached_eigenform(12, 600);
  for (long D : {1L, 5L, 8L, 13L}) EXPECT_NEAR(solve_root_number<double>(d, D), 1.0, 1e-6) << D;
  auto f18 = cached_eigenform(18, 600);
  EXPECT_NEAR(solve_root_number<double>(f18, 1), -1.0, 1e-6);
}

TEST(KohnenZagier, RatioConstantAcrossDiscriminants) {
  const long k = 6;
  auto g = plus_cusp_basis(k, 200)[0];
  auto d = cached_eigenform(12, 600);
  std::vector<double> ratios;
  for (long D : kDiscs) {
    if (g.c(D).is_zero()) continue;
    double c = g.c(D).to_double();
    auto v = central_twisted_value(d, D, 1e-12);
    ratios.push_back(c * c / (std::pow(static_cast<double>(D), k - 0.5) * v.value));
  }
  ASSERT_GE(ratios.size(), 5u);
  double lo = *std::min_element(ratios.begin(), ratios.end());
  double hi = *std::max_element(ratios.begin(), ratios.end());
  EXPECT_LT((hi - lo) / std::abs(hi), 1e-5);
}

TEST(KohnenZagier, FirstCoefficientTracksUntwistedValue) {
  auto g = plus_cusp_basis(6, 200)[0];
  auto v = central_twisted_value(cached_eigenform(12, 400), 1, 1e-10);
  EXPECT_EQ(!g.c(1).is_zero(), std::abs(v.value) > 1e-8);
}

// ---- Euler factors ----

TEST(EulerFactor, FormalIdentity) {
  EXPECT_TRUE(factorization_check());
  EXPECT_TRUE(factorization_check(1));
  EXPECT_TRUE(factorization_check(-1));
  EXPECT_EQ(std7_euler_factor().degree(), 7);
}

TEST(EulerFactor, AlphaOneSpecialization) {
  auto one_minus = [](int es) { return LaurentPoly::linear(AlphaS::monomial(0, es)); };
  auto m = one_minus(0);
  auto want = m * m * m * one_minus(1) * one_minus(1) * one_minus(-1) * one_minus(-1);
  EXPECT_EQ(std7_euler_factor().specialize_alpha(1), want);
}

TEST(EulerFactor, InversionInvariant) {
  auto f = std7_euler_factor();
  EXPECT_EQ(f.invert_alpha(), f);
  EXPECT_EQ(f.invert_alpha().invert_alpha(), f);
  auto l = standard_gl2_factor(1) * LaurentPoly::linear(AlphaS::monomial(3, 1));
  EXPECT_EQ(l.invert_alpha().invert_alpha(), l);
  EXPECT_FALSE(l.invert_alpha() == l);
}

TEST(EulerFactor, LinearCoefficient) {
  // -(1 + a^2 + a^-2 + (a + a^-1)(s + s^-1)), expanded by hand.
  AlphaS want = AlphaS(Rational(-1)) - AlphaS::monomial(2, 0) - AlphaS::monomial(-2, 0);
  for (int ea : {1, -1})
    for (int es : {1, -1}) want -= AlphaS::monomial(ea, es);
  EXPECT_EQ(std7_euler_factor().coeff(1), want);
  EXPECT_EQ(std7_euler_factor().coeff(0), AlphaS(Rational(1)));
  EXPECT_EQ(std7_euler_factor().coeff(7), AlphaS(Rational(-1)));
}

TEST(EulerFactor, PalindromicUpToSign) {
  // Roots closed under inversion with product 1: c_{7-j} = -c_j.
  auto f = std7_euler_factor();
  for (std::size_t j = 0; j <= 7; ++j) EXPECT_EQ(f.coeff(7 - j), AlphaS() - f.coeff(j)) << j;
}

TEST(EulerFactor, NumericSpotChecks) {
  EXPECT_LT(factorization_residual({0.0, 1.0}, 2.0, {1.0 / 3.0, 0.0}), 1e-14);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ang(0.0, 2 * M_PI), tt(-0.3, 0.3);
  const double primes[] = {2, 3, 5, 7};
  for (int i = 0; i < 20; ++i) {
    std::complex<double> a = std::polar(1.0, ang(rng));
    double p = primes[i % 4];
    std::complex<double> T(tt(rng), tt(rng));
    EXPECT_LT(factorization_residual(a, p, T), 1e-14) << i;
  }
}

TEST(EulerFactor, SatakeOfDeltaSatisfiesIdentity) {
  auto d = cached_eigenform(12, 30);
  for (long p : {2L, 3L, 5L, 7L}) {
    auto a = satake(d, p).alpha;
    EXPECT_LT(factorization_residual(a, static_cast<double>(p), {std::pow(p, -6.0), 0.0}), 1e-14);
  }
}
