// Level-one modular forms: Eisenstein series, Miller basis, Hecke operators, Satake parameters.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "g2lift/linalg.hpp"
#include "g2lift/qseries.hpp"

namespace g2lift {

inline void require_precision(std::size_t N, const char* who) {
  if (N < 2) throw std::invalid_argument(std::string(who) + ": precision must be at least 2");
}

/// E_4 or E_6 normalized with constant term 1.
inline QExpansion eisenstein(int weight, std::size_t N) {
  require_precision(N, "eisenstein");
  long factor;
  unsigned k;
  if (weight == 4) {
    factor = 240;
    k = 3;
  } else if (weight == 6) {
    factor = -504;
    k = 5;
  } else {
    throw std::invalid_argument("eisenstein: weight must be 4 or 6");
  }
  auto s = divisor_sums(N, k);
  std::vector<Rational> c(N);
  c[0] = Rational(1);
  for (std::size_t n = 1; n < N; ++n) c[n] = Rational(BigInt(factor * s[n]));
  return QExpansion(Rational(weight), 1, std::move(c));
}

namespace detail {

inline QExpansion exact_div(const QExpansion& f, long d) {
  std::vector<Rational> c = f.coeffs();
  for (auto& x : c) {
    if (!x.is_integer() || x.num() % d != 0) throw std::logic_error("exact_div: not divisible");
    x = Rational(BigInt(x.num() / d));
  }
  return QExpansion(f.weight(), f.level(), std::move(c));
}

}  // namespace detail

/// Delta = (E4^3 - E6^2) / 1728.
inline QExpansion delta(std::size_t N) {
  require_precision(N, "delta");
  QExpansion e4 = eisenstein(4, N), e6 = eisenstein(6, N);
  return detail::exact_div(e4.pow(3) - e6 * e6, 1728);
}

/// E4^a E6^b of weight w (w even, w != 2), unit constant term; E_0 = 1.
inline QExpansion eisenstein_monomial(int w, std::size_t N) {
  if (w < 0 || w % 2 || w == 2) throw std::invalid_argument("eisenstein_monomial: bad weight");
  int b = 0;
  while ((w - 6 * b) % 4 != 0) ++b;
  int a = (w - 6 * b) / 4;
  QExpansion r = QExpansion::one(1, N);
  if (a) r = r * eisenstein(4, N).pow(static_cast<unsigned>(a));
  if (b) r = r * eisenstein(6, N).pow(static_cast<unsigned>(b));
  return r;
}

inline int cusp_dimension(int w) {
  if (w < 0 || w % 2) return 0;
  if (w == 2) return 0;
  int d = w / 12;
  if (w % 12 == 2) d -= 1;
  return w >= 12 ? d : 0;
}

/// Basis f_1..f_d of S_w with f_i = q^i + O(q^{d+1}).
inline std::vector<QExpansion> miller_basis(int w, std::size_t N) {
  int d = cusp_dimension(w);
  if (d == 0) return {};
  if (N < static_cast<std::size_t>(d) + 2) throw std::invalid_argument("miller_basis: precision too small");
  QExpansion D = delta(N);
  std::vector<QExpansion> gens;
  QExpansion dp = D;
  for (int j = 1; j <= d; ++j) {
    gens.push_back(dp * eisenstein_monomial(w - 12 * j, N));
    if (j < d) dp = dp * D;
  }
  // [G^T | I] reduces to [I | X] with X the change of basis; G[i][j] = a(gens_i, j + 1).
  RationalMatrix aug(d, RationalRow(2 * d, Rational(0)));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) aug[j][i] = gens[i][j + 1];
    aug[i][d + i] = Rational(1);
  }
  rref(aug);
  std::vector<QExpansion> out;
  for (int k = 0; k < d; ++k) {
    QExpansion f = QExpansion::zero(Rational(w), 1, N);
    for (int i = 0; i < d; ++i) f = f + gens[i] * aug[i][d + k];
    out.push_back(std::move(f));
  }
  return out;
}

/// a(T_p f, n) = a(pn) + p^{w-1} a(n/p); output precision floor((N-1)/p) + 1.
inline QExpansion hecke_Tp(const QExpansion& f, long p) {
  if (f.level() != 1 || !f.weight().is_integer()) throw std::invalid_argument("hecke_Tp: needs integral weight, level 1");
  if (p < 2) throw std::invalid_argument("hecke_Tp: p must be prime");
  const std::size_t N = f.precision();
  if (N < static_cast<std::size_t>(p) + 1) throw std::invalid_argument("hecke_Tp: insufficient precision");
  const std::size_t M = (N - 1) / p + 1;
  long w = f.weight().num().get_si();
  Rational pk(ipow(BigInt(p), static_cast<unsigned long>(w - 1)));
  std::vector<Rational> c(M);
  for (std::size_t n = 0; n < M; ++n) {
    c[n] = f[p * n];
    if (n % p == 0) c[n] += pk * f[n / p];
  }
  return QExpansion(f.weight(), 1, std::move(c));
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline const std::vector<int>& rational_eigenform_weights() {
  static const std::vector<int> w{12, 16, 18, 20, 22, 26};
  return w;
}

/// The normalized eigenform of a one-dimensional level-one cusp space.
inline QExpansion eigenform(int two_k, std::size_t N) {
  const auto& ok = rational_eigenform_weights();
  if (std::find(ok.begin(), ok.end(), two_k) == ok.end())
    throw std::invalid_argument("non-rational eigenspace unsupported");
  require_precision(N, "eigenform");
  return miller_basis(two_k, N).front();
}

/// Process-wide memo of eigenforms keyed by (weight, precision).
inline QExpansion cached_eigenform(int two_k, std::size_t N) {
  static std::mutex mu;
  static std::map<std::pair<int, std::size_t>, QExpansion> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({two_k, N});
    if (it != cache.end()) return it->second;
  }
  QExpansion f = eigenform(two_k, N);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(two_k, N), f).first->second;
}

struct SatakeRecord {
  long p = 0;
  Rational a_p;
  std::complex<double> alpha;
};

/// Root of X^2 - (a_p / p^{(w-1)/2}) X + 1 with Im >= 0 (real tie: Re >= 1 side).
inline SatakeRecord satake(const QExpansion& f, long p) {
  if (!is_prime(p)) throw std::invalid_argument("satake: p must be prime");
  if (!f.weight().is_integer()) throw std::invalid_argument("satake: integral weight only");
  long w = f.weight().num().get_si();
  const Rational& ap = f[static_cast<std::size_t>(p)];
  Rational bound = Rational(4) * Rational(ipow(BigInt(p), static_cast<unsigned long>(w - 1)));
  if (ap * ap > bound) throw std::domain_error("satake: Deligne bound violated for p = " + std::to_string(p));
  double x = ap.to_double() / std::pow(static_cast<double>(p), (w - 1) / 2.0);
  double im2 = 1.0 - x * x / 4.0;
  SatakeRecord r{p, ap, {}};
  if (im2 >= 0) {
    r.alpha = {x / 2.0, std::sqrt(im2)};
  } else {
    // Only reachable at the exact boundary through rounding.
    r.alpha = {x >= 0 ? 1.0 : -1.0, 0.0};
  }
  return r;
}

/// prod_p alpha_p^{v_p(r)}; the sign of r is ignored.
inline std::complex<double> mu_f(const QExpansion& f, const Rational& r) {
  if (r.is_zero()) throw std::domain_error("mu_f: zero argument");
  std::complex<double> out(1.0, 0.0);
  auto apply = [&](const BigInt& n, int sign) {
    if (n == 1) return;
    for (const auto& [p, e] : factor_integer(n)) {
      if (!p.fits_slong_p() || static_cast<std::size_t>(p.get_si()) >= f.precision())
        throw std::out_of_range("mu_f: prime beyond q-expansion precision");
      auto rec = satake(f, p.get_si());
      std::complex<double> a = sign > 0 ? rec.alpha : std::conj(rec.alpha);
      for (int i = 0; i < e; ++i) out *= a;
    }
  };
  apply(abs(r.num()), 1);
  apply(r.den(), -1);
  return out;
}

}  // namespace g2lift
