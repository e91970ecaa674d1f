#include <gtest/gtest.h>

#include <sstream>

#include "g2lift/modforms.hpp"

using namespace g2lift;

namespace {

// Ramanujan tau by the product formula q prod (1 - q^n)^24, integer arithmetic only.
std::vector<BigInt> tau_product(std::size_t N) {
  std::vector<BigInt> c(N, 0);
  c[0] = 1;
  for (std::size_t n = 1; n < N; ++n)
    for (int r = 0; r < 24; ++r)
      for (std::size_t i = N - 1; i >= n; --i) c[i] -= c[i - n];
  std::vector<BigInt> tau(N, 0);
  for (std::size_t i = 1; i < N; ++i) tau[i] = c[i - 1];
  return tau;
}

}  // namespace

TEST(Eisenstein, Coefficients) {
  auto e4 = eisenstein(4, 10), e6 = eisenstein(6, 10);
  EXPECT_EQ(e4[1], Rational(240));
  EXPECT_EQ(e4[2], Rational(240 * 9));
  EXPECT_EQ(e6[2], Rational(-504 * 33));
  EXPECT_THROW(eisenstein(8, 10), std::invalid_argument);
  EXPECT_THROW(eisenstein(4, 1), std::invalid_argument);
}

TEST(Delta, MatchesProductFormula) {
  auto d = delta(200);
  EXPECT_EQ(d[0], Rational(0));
  EXPECT_EQ(d[1], Rational(1));
  EXPECT_EQ(d[2], Rational(-24));
  EXPECT_EQ(d[3], Rational(252));
  auto tau = tau_product(200);
  for (std::size_t n = 0; n < 200; ++n) EXPECT_EQ(d[n], Rational(tau[n])) << n;
  auto e4 = eisenstein(4, 200), e6 = eisenstein(6, 200);
  auto diff = e4.pow(3) - e6 * e6;
  for (std::size_t n = 0; n < 200; ++n) EXPECT_EQ(diff[n].num() % 1728, 0);
}

TEST(Hecke, DeltaEigenvalues) {
  auto d = delta(200);
  auto t2 = hecke_Tp(d, 2);
  auto t3 = hecke_Tp(d, 3);
  for (std::size_t n = 0; n < 50; ++n) {
    EXPECT_EQ(t2[n], Rational(-24) * d[n]);
    EXPECT_EQ(t3[n], Rational(252) * d[n]);
  }
  auto zero = QExpansion::zero(Rational(12), 1, 50);
  EXPECT_TRUE(hecke_Tp(zero, 5).is_zero());
  EXPECT_THROW(hecke_Tp(delta(5), 7), std::invalid_argument);
}

TEST(Hecke, Commute) {
  auto f = miller_basis(24, 400);  // two-dimensional space, a real test of commutativity
  ASSERT_EQ(f.size(), 2u);
  const long ps[] = {2, 3, 5};
  for (const auto& g : f)
    for (long p : ps)
      for (long q : ps) {
        auto a = hecke_Tp(hecke_Tp(g, p), q), b = hecke_Tp(hecke_Tp(g, q), p);
        std::size_t n = std::min(a.precision(), b.precision());
        EXPECT_EQ(a.truncate(n), b.truncate(n));
      }
}

TEST(Eigenform, Certified) {
  EXPECT_EQ(eigenform(12, 300), delta(300));
  auto d = delta(300), e4 = eisenstein(4, 300);
  EXPECT_EQ(eigenform(16, 300), d * e4);
  for (int w : rational_eigenform_weights()) {
    auto f = eigenform(w, 300);
    EXPECT_EQ(f[1], Rational(1));
    for (long p : {2, 3, 5, 7, 11, 13}) {
      auto tp = hecke_Tp(f, p);
      EXPECT_EQ(tp, f.truncate(tp.precision()) * f[p]) << w << " p=" << p;
    }
  }
  EXPECT_THROW(eigenform(14, 100), std::invalid_argument);
  EXPECT_THROW(eigenform(24, 100), std::invalid_argument);
}

TEST(Eigenform, MillerShape) {
  auto b = miller_basis(24, 50);
  EXPECT_EQ(b[0][1], Rational(1));
  EXPECT_EQ(b[0][2], Rational(0));
  EXPECT_EQ(b[1][1], Rational(0));
  EXPECT_EQ(b[1][2], Rational(1));
  EXPECT_EQ(cusp_dimension(14), 0);
  EXPECT_EQ(cusp_dimension(26), 1);
  EXPECT_EQ(cusp_dimension(36), 3);
}

TEST(Eigenform, CacheReturnsSameSeries) {
  auto a = cached_eigenform(12, 100), b = cached_eigenform(12, 100);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, delta(100));
}

TEST(Satake, Records) {
  auto d = delta(120);
  auto r2 = satake(d, 2);
  EXPECT_NEAR(std::abs(r2.alpha), 1.0, 1e-12);
  EXPECT_NEAR((r2.alpha + 1.0 / r2.alpha).real(), -3.0 / (4.0 * std::sqrt(2.0)), 1e-12);
  EXPECT_GE(r2.alpha.imag(), 0.0);
  for (long p = 2; p <= 97; ++p) {
    if (!is_prime(p)) continue;
    auto r = satake(d, p);
    EXPECT_NEAR(std::abs(r.alpha), 1.0, 1e-12);
    EXPECT_NEAR((r.alpha + 1.0 / r.alpha).real(), d[p].to_double() / std::pow(p, 5.5), 1e-10);
  }
  // a_p = 0 gives alpha = i.
  std::vector<Rational> c(10, Rational(0));
  c[1] = Rational(1);
  QExpansion fake(Rational(12), 1, c);
  EXPECT_NEAR(std::abs(satake(fake, 3).alpha - std::complex<double>(0, 1)), 0.0, 1e-15);
  // A Deligne violation is reported.
  c[2] = Rational(BigInt(100000));
  EXPECT_THROW(satake(QExpansion(Rational(12), 1, c), 2), std::domain_error);
}

TEST(Satake, MuUnitary) {
  auto d = delta(120);
  EXPECT_EQ(mu_f(d, 1), std::complex<double>(1.0, 0.0));
  const Rational rs[] = {Rational(6), Rational(-12, 35), Rational(97, 64), Rational(1, 3)};
  for (const auto& r : rs) EXPECT_NEAR(std::abs(mu_f(d, r)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(mu_f(d, 6) - mu_f(d, 2) * mu_f(d, 3)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(mu_f(d, Rational(1, 2)) * mu_f(d, 2) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(mu_f(d, -5) - mu_f(d, 5)), 0.0, 0.0);
  EXPECT_THROW(mu_f(d, 127), std::out_of_range);
}

TEST(CacheFile, RoundTrip) {
  auto d = delta(30);
  std::stringstream ss;
  d.write(ss);
  std::string first;
  std::getline(ss, first);
  EXPECT_EQ(first, "12 1 30");
  ss.seekg(0);
  EXPECT_EQ(QExpansion::read(ss), d);
  std::stringstream half;
  QExpansion(Rational(13, 2), 4, {Rational(0), Rational(1, 3)}).write(half);
  EXPECT_EQ(half.str(), "13/2 4 2\n0/1\n1/3\n");
  std::stringstream bad("12 1 3\n1/1\n");
  EXPECT_THROW(QExpansion::read(bad), std::runtime_error);
}
