// Kohnen plus space of weight k + 1/2 on Gamma_0(4) inside the theta/F monomial span.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "g2lift/arith.hpp"
#include "g2lift/linalg.hpp"
#include "g2lift/qseries.hpp"

namespace g2lift {

/// theta = 1 + 2 sum q^{n^2}.
inline QExpansion theta_half(std::size_t N) {
  if (N < 2) throw std::invalid_argument("theta_half: precision must be at least 2");
  std::vector<Rational> c(N, Rational(0));
  c[0] = Rational(1);
  for (std::size_t n = 1; n * n < N; ++n) c[n * n] = Rational(2);
  return QExpansion(Rational(1, 2), 4, std::move(c));
}

/// F = sum sigma_1(2n + 1) q^{2n+1}.
inline QExpansion weight2_F(std::size_t N) {
  if (N < 2) throw std::invalid_argument("weight2_F: precision must be at least 2");
  auto s = divisor_sums(N, 1);
  std::vector<Rational> c(N, Rational(0));
  for (std::size_t n = 1; n < N; n += 2) c[n] = Rational(s[n]);
  return QExpansion(Rational(2), 4, std::move(c));
}

struct HalfIntegralForm {
  long k = 0;  // weight k + 1/2
  QExpansion g;
  bool plus_flag = false;
  std::string normalization;  // "c(1)=1" or "first nonzero = 1"

  const Rational& c(std::size_t n) const { return g[n]; }
  std::size_t precision() const { return g.precision(); }
};

inline bool plus_support(const QExpansion& g) {
  for (std::size_t n = 0; n < g.precision(); ++n)
    if ((n % 4 == 2 || n % 4 == 3) && !g[n].is_zero()) return false;
  return true;
}

/// 2 * ceil((k + 1/2) * 6 / 12).
inline std::size_t plus_condition_bound(long k) { return 2 * static_cast<std::size_t>((2 * k + 1 + 3) / 4); }

inline std::vector<HalfIntegralForm> plus_cusp_basis(long k, std::size_t N) {
  if (k < 2 || k % 2) throw std::invalid_argument("plus_cusp_basis: k must be even");
  if (N < static_cast<std::size_t>(8 * k)) throw std::invalid_argument("plus_cusp_basis: under-determined system (N too small)");
  const long J = (2 * k + 1) / 4;
  QExpansion th = theta_half(N), F = weight2_F(N);
  // theta powers 2k+1-4j for j = J..0, built upward by sparse multiplication.
  std::vector<QExpansion> mons(J + 1);
  {
    long lowest = 2 * k + 1 - 4 * J;
    QExpansion tp = th.pow(static_cast<unsigned>(lowest));
    QExpansion th4 = th.pow(4);
    std::vector<QExpansion> thetas(J + 1);
    for (long j = J; j >= 0; --j) {
      thetas[j] = tp;
      if (j) tp = tp * th4;
    }
    QExpansion Fj = QExpansion::one(4, N);
    for (long j = 0; j <= J; ++j) {
      mons[j] = thetas[j] * Fj;
      if (j < J) Fj = Fj * F;
    }
  }
  RationalMatrix eqs;
  // Vanishing at infinity.
  {
    RationalRow row(J + 1);
    for (long j = 0; j <= J; ++j) row[j] = mons[j][0];
    eqs.push_back(row);
  }
  // Vanishing at the cusp 0: leading terms of theta^{2k+1-4j} F^j there scale as 16^{-j}.
  {
    RationalRow row(J + 1);
    for (long j = 0; j <= J; ++j) row[j] = Rational(1) / Rational(ipow(BigInt(16), static_cast<unsigned long>(j)));
    eqs.push_back(row);
  }
  const std::size_t bound = plus_condition_bound(k);
  for (std::size_t n = 0; n < bound && n < N; ++n) {
    if (n % 4 != 2 && n % 4 != 3) continue;
    RationalRow row(J + 1);
    for (long j = 0; j <= J; ++j) row[j] = mons[j][n];
    eqs.push_back(row);
  }
  auto kernel = nullspace(eqs, static_cast<std::size_t>(J + 1));
  std::vector<HalfIntegralForm> out;
  for (const auto& v : kernel) {
    QExpansion g = QExpansion::zero(Rational(2 * k + 1, 2), 4, N);
    for (long j = 0; j <= J; ++j)
      if (!v[j].is_zero()) g = g + mons[j] * v[j];
    HalfIntegralForm h{k, std::move(g), false, ""};
    std::size_t lead = h.g[1].is_zero() ? h.g.order() : 1;
    if (lead >= N) throw std::logic_error("plus_cusp_basis: zero kernel vector");
    h.g *= h.g[lead].inverse();
    h.normalization = lead == 1 ? "c(1)=1" : "c(" + std::to_string(lead) + ")=1";
    h.plus_flag = plus_support(h.g);
    if (!h.plus_flag) throw std::logic_error("plus_cusp_basis: plus condition fails beyond the imposed bound");
    out.push_back(std::move(h));
  }
  return out;
}

/// c(-t) for t < 0; zero off the plus-space support.
inline Rational c_coeff(const HalfIntegralForm& g, const BigInt& t) {
  if (t >= 0) throw std::invalid_argument("c_coeff: t must be negative");
  BigInt n = -t;
  if (!n.fits_ulong_p() || n.get_ui() >= g.precision()) throw std::out_of_range("c_coeff: index beyond precision");
  unsigned long r = n.get_ui() % 4;
  if (r == 2 || r == 3) return Rational(0);
  return g.c(n.get_ui());
}

/// sum_{d | n} chi_D(d) d^{k-1} c(D n^2 / d^2) == c(D) a_n(f) for all n <= n_max.
inline bool shimura_lift_check(const HalfIntegralForm& g, const QExpansion& f, long D, long n_max) {
  if (!(D == 1 || is_fundamental_discriminant(BigInt(D))) || D < 1)
    throw std::invalid_argument("shimura_lift_check: D must be 1 or a positive fundamental discriminant");
  if (static_cast<std::size_t>(D * n_max * n_max) >= g.precision() || static_cast<std::size_t>(n_max) >= f.precision())
    throw std::out_of_range("shimura_lift_check: precision shortfall");
  BigInt bD(D);
  for (long n = 1; n <= n_max; ++n) {
    Rational lhs(0);
    for (long d = 1; d <= n; ++d) {
      if (n % d) continue;
      int chi = kronecker_unchecked(bD, d);
      if (chi == 0) continue;
      long idx = D * (n / d) * (n / d);
      lhs += Rational(chi) * Rational(ipow(BigInt(d), static_cast<unsigned long>(g.k - 1))) * g.c(idx);
    }
    if (!(lhs == g.c(D) * f[n])) return false;
  }
  return true;
}

}  // namespace g2lift
