// Central values of twisted L-functions and local Euler-factor algebra.
#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <type_traits>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "g2lift/arith.hpp"
#include "g2lift/modforms.hpp"
#include "g2lift/qseries.hpp"

namespace g2lift {

// ---- numerical central values ----

template <class Real>
struct LValueT {
  Real value{};
  Real abs_error_bound{};
  std::size_t terms_used = 0;
};
using LValue = LValueT<double>;

/// Raised when the two cutoffs disagree beyond the tolerance or terms run out.
class SeriesInstability : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Real>
Real to_real(const Rational& r) {
  if constexpr (std::is_same_v<Real, double>) {
    return r.to_double();
  } else {
    return Real(r.num().get_str()) / Real(r.den().get_str());
  }
}

template <class Real>
Real real_pi() {
  return boost::math::constants::pi<Real>();
}

/// Regularized upper incomplete gamma for integer k: e^{-x} sum_{j<k} x^j / j!.
template <class Real>
Real gamma_q_int(int k, const Real& x) {
  using std::exp;
  Real term(1), sum(1);
  for (int j = 1; j < k; ++j) {
    term *= x / Real(j);
    sum += term;
  }
  return exp(-x) * sum;
}

/// The light check used before any analytic work: level 1, even weight, a_1 = 1, T_2/T_3 eigen.
inline void require_certified_eigenform(const QExpansion& f) {
  if (f.level() != 1 || !f.weight().is_integer() || f.weight().num() % 2 != 0)
    throw std::invalid_argument("expected a level-one form of even weight");
  if (f.precision() < 8 || !(f[1] == Rational(1))) throw std::invalid_argument("expected a normalized eigenform");
  for (long p : {2L, 3L}) {
    auto tp = hecke_Tp(f, p);
    for (std::size_t n = 0; n < tp.precision(); ++n)
      if (!(tp[n] == f[p] * f[n])) throw std::invalid_argument("form is not a Hecke eigenform");
  }
}

template <class Real>
struct TwistedSums {
  Real a, b;  // L(k) = a + eps * b
  std::size_t terms;
  Real tail;
  Real magnitude;
};

namespace detail {

/// Sums over n < M of a_n chi(n) n^{-k} Q(k, c n t) and Q(k, c n / t), c = 2 pi / D.
template <class Real>
TwistedSums<Real> twisted_sums(const QExpansion& f, long D, const Real& t, const Real& cutoff) {
  using std::abs;
  using std::sqrt;
  const int w = static_cast<int>(f.weight().num().get_si());
  const int k = w / 2;
  const Real c = Real(2) * real_pi<Real>() / Real(D);
  const Real cmin = c * (t < Real(1) ? t : Real(1) / t);
  // Tail beyond n >= M: |a_n| n^{-k} <= d(n)/sqrt(n) <= 2, and Q is decreasing, so
  // sum_{n>=M} <= (4/cmin) int_{cmin (M-1)}^inf Q(k, u) du = (4/cmin)(k Q(k+1, x) - x Q(k, x)).
  auto tail_from = [&](std::size_t M) {
    Real x = cmin * Real(static_cast<long>(M) - 1);
    Real v = (Real(4) / cmin) * (Real(k) * gamma_q_int<Real>(k + 1, x) - x * gamma_q_int<Real>(k, x));
    return v < Real(0) ? Real(0) : v;
  };
  std::size_t M = 2;
  while (M < f.precision() && tail_from(M) > cutoff) M += 1 + M / 8;
  if (M > f.precision()) M = f.precision();
  BigInt bD(D);
  TwistedSums<Real> s{Real(0), Real(0), M, tail_from(M), Real(0)};
  for (std::size_t n = 1; n < M; ++n) {
    const Rational& an = f[n];
    if (an.is_zero()) continue;
    int chi = kronecker_unchecked(bD, static_cast<long>(n));
    if (chi == 0) continue;
    Real nn(static_cast<long>(n));
    Real coef = to_real<Real>(an) * Real(chi);
    using std::pow;
    coef /= pow(nn, k);
    Real ta = coef * gamma_q_int<Real>(k, c * nn * t);
    Real tb = coef * gamma_q_int<Real>(k, c * nn / t);
    s.a += ta;
    s.b += tb;
    s.magnitude += abs(ta) + abs(tb);
  }
  return s;
}

}  // namespace detail

struct CentralValueOptions {
  double t1 = 1.0;
  double t2 = 2.0;
};

/// L(k, f x chi_D) for a level-one eigenform of weight 2k, D = 1 or a positive fundamental discriminant.
template <class Real = double>
LValueT<Real> central_twisted_value(const QExpansion& f, long D, double tol, const CentralValueOptions& opt = {}) {
  using std::abs;
  if (!(tol >= 1e-12)) throw std::invalid_argument("central_twisted_value: tol must be at least 1e-12");
  if (D < 1 || !(D == 1 || is_fundamental_discriminant(BigInt(D))))
    throw std::invalid_argument("central_twisted_value: D must be 1 or a positive fundamental discriminant");
  require_certified_eigenform(f);
  const int k = static_cast<int>(f.weight().num().get_si()) / 2;
  const Real eps = (k % 2 == 0) ? Real(1) : Real(-1);
  const Real cutoff = Real(tol) * Real(1e-3);
  auto s1 = detail::twisted_sums<Real>(f, D, Real(opt.t1), cutoff);
  auto s2 = detail::twisted_sums<Real>(f, D, Real(opt.t2), cutoff);
  Real v1 = s1.a + eps * s1.b, v2 = s2.a + eps * s2.b;
  Real round = Real(std::numeric_limits<Real>::epsilon()) * Real(8) * (s1.magnitude + s2.magnitude);
  LValueT<Real> out;
  out.value = v1;
  out.abs_error_bound = abs(v1 - v2) + s1.tail + s2.tail + round;
  out.terms_used = std::max(s1.terms, s2.terms);
  if (out.abs_error_bound > Real(tol))
    throw SeriesInstability("series instability: error bound exceeds tolerance (precision " +
                            std::to_string(f.precision()) + ")");
  return out;
}

/// Root number treated as unknown: the value making the two cutoffs agree.
template <class Real = double>
Real solve_root_number(const QExpansion& f, long D, double t1 = 1.0, double t2 = 2.0) {
  require_certified_eigenform(f);
  Real cutoff(1e-16);
  auto s1 = detail::twisted_sums<Real>(f, D, Real(t1), cutoff);
  auto s2 = detail::twisted_sums<Real>(f, D, Real(t2), cutoff);
  return (s1.a - s2.a) / (s2.b - s1.b);
}

// ---- Euler factors ----

/// Laurent polynomial in the formal unit alpha and the formal symbol s = p^{1/2}.
class AlphaS {
 public:
  using Key = std::pair<int, int>;  // exponents of alpha, s

  AlphaS() = default;
  AlphaS(const Rational& c) {
    if (!c.is_zero()) terms_[{0, 0}] = c;
  }
  static AlphaS monomial(int ea, int es, const Rational& c = Rational(1)) {
    AlphaS r;
    if (!c.is_zero()) r.terms_[{ea, es}] = c;
    return r;
  }

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  AlphaS& operator+=(const AlphaS& o) {
    for (const auto& [k, v] : o.terms_) add(k, v);
    return *this;
  }
  AlphaS& operator-=(const AlphaS& o) {
    for (const auto& [k, v] : o.terms_) add(k, -v);
    return *this;
  }
  friend AlphaS operator+(AlphaS a, const AlphaS& b) { return a += b; }
  friend AlphaS operator-(AlphaS a, const AlphaS& b) { return a -= b; }
  friend AlphaS operator*(const AlphaS& a, const AlphaS& b) {
    AlphaS r;
    for (const auto& [ka, va] : a.terms_)
      for (const auto& [kb, vb] : b.terms_) r.add({ka.first + kb.first, ka.second + kb.second}, va * vb);
    return r;
  }
  friend bool operator==(const AlphaS& a, const AlphaS& b) { return a.terms_ == b.terms_; }

  AlphaS invert_alpha() const {
    AlphaS r;
    for (const auto& [k, v] : terms_) r.add({-k.first, k.second}, v);
    return r;
  }
  AlphaS specialize_alpha(int value) const {  // alpha -> +-1
    AlphaS r;
    for (const auto& [k, v] : terms_) r.add({0, k.second}, (value == -1 && (k.first % 2)) ? -v : v);
    return r;
  }
  std::complex<double> eval(std::complex<double> alpha, double p) const {
    std::complex<double> out(0.0, 0.0);
    double s = std::sqrt(p);
    for (const auto& [k, v] : terms_) out += v.to_double() * std::pow(alpha, k.first) * std::pow(s, k.second);
    return out;
  }

 private:
  void add(const Key& k, const Rational& v) {
    if (v.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, v);
      return;
    }
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
  std::map<Key, Rational> terms_;
};

/// Polynomial in T = p^{-s} with AlphaS coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<AlphaS> c) : c_(std::move(c)) { trim(); }

  static LaurentPoly one() { return LaurentPoly({AlphaS(Rational(1))}); }
  /// 1 - x T.
  static LaurentPoly linear(const AlphaS& x) { return LaurentPoly({AlphaS(Rational(1)), AlphaS() - x}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const AlphaS& coeff(std::size_t i) const {
    static const AlphaS zero;
    return i < c_.size() ? c_[i] : zero;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return LaurentPoly();
    std::vector<AlphaS> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return LaurentPoly(std::move(r));
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }

  LaurentPoly invert_alpha() const {
    std::vector<AlphaS> r;
    for (const auto& x : c_) r.push_back(x.invert_alpha());
    return LaurentPoly(std::move(r));
  }
  LaurentPoly specialize_alpha(int value) const {
    std::vector<AlphaS> r;
    for (const auto& x : c_) r.push_back(x.specialize_alpha(value));
    return LaurentPoly(std::move(r));
  }
  std::complex<double> eval(std::complex<double> alpha, double p, std::complex<double> T) const {
    std::complex<double> out(0.0, 0.0), tp(1.0, 0.0);
    for (const auto& x : c_) {
      out += x.eval(alpha, p) * tp;
      tp *= T;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<AlphaS> c_;
};

namespace detail {

/// Exponent a s_p + b of p, stored as (a, 2b).
struct PExponent {
  int a, twice_b;
};

/// <lambda, gamma^vee> for lambda = c1 (2a+b) + c2 (a+b), c1 = -s_p - 1/2, c2 = -s_p + 1/2,
/// gamma = x a + y b, with (a,a) = 2, (a,b) = -3, (b,b) = 6.
inline PExponent pairing_with_coroot(int x, int y) {
  // lambda = (2 c1 + c2) a + (c1 + c2) b; coefficients as (coef of s_p, twice constant).
  const int la_s = -3, la_b2 = -1;  // 2c1 + c2 = -3 s_p - 1/2
  const int lb_s = -2, lb_b2 = 0;   // c1 + c2 = -2 s_p
  auto ip = [](int x1, int y1, int x2, int y2) { return 2 * x1 * x2 - 3 * (x1 * y2 + y1 * x2) + 6 * y1 * y2; };
  int gg = ip(x, y, x, y);
  int la_g = ip(1, 0, x, y), lb_g = ip(0, 1, x, y);
  // <lambda, g^vee> = 2 (lambda, g) / (g, g).
  int num_s = 2 * (la_s * la_g + lb_s * lb_g);
  int num_b2 = 2 * (la_b2 * la_g + lb_b2 * lb_g);
  if (num_s % gg || num_b2 % gg) throw std::logic_error("pairing_with_coroot: non-integral pairing");
  return {num_s / gg, num_b2 / gg};
}

}  // namespace detail

/// prod over the weights mu of the standard representation of (1 - p^{<lambda, mu>} T),
/// with alpha = p^{s_p}. The weights are 0 and the long roots of G2 (as coroots).
inline LaurentPoly std7_euler_factor() {
  LaurentPoly r = LaurentPoly::linear(AlphaS(Rational(1)));
  const std::pair<int, int> long_roots[] = {{0, 1}, {3, 1}, {3, 2}};
  for (const auto& [x, y] : long_roots) {
    auto e = detail::pairing_with_coroot(x, y);
    r = r * LaurentPoly::linear(AlphaS::monomial(e.a, e.twice_b));
    r = r * LaurentPoly::linear(AlphaS::monomial(-e.a, -e.twice_b));
  }
  return r;
}

inline LaurentPoly sym2_factor() {
  return LaurentPoly::linear(AlphaS(Rational(1))) * LaurentPoly::linear(AlphaS::monomial(2, 0)) *
         LaurentPoly::linear(AlphaS::monomial(-2, 0));
}

/// Local factor of L(s + shift/2, pi): (1 - alpha p^{-shift/2} T)(1 - alpha^{-1} p^{-shift/2} T).
inline LaurentPoly standard_gl2_factor(int shift) {
  return LaurentPoly::linear(AlphaS::monomial(1, -shift)) * LaurentPoly::linear(AlphaS::monomial(-1, -shift));
}

/// The right-hand side Sym^2 * L(s + 1/2) * L(s - 1/2).
inline LaurentPoly factored_euler_product() { return sym2_factor() * standard_gl2_factor(1) * standard_gl2_factor(-1); }

/// Formal identity of the two sides.
inline bool factorization_check() { return std7_euler_factor() == factored_euler_product(); }

/// Same identity after alpha -> +1 or -1.
inline bool factorization_check(int alpha_sign) {
  return std7_euler_factor().specialize_alpha(alpha_sign) == factored_euler_product().specialize_alpha(alpha_sign);
}

/// |std7 - product of the seven linear factors| at a numeric point.
inline double factorization_residual(std::complex<double> alpha, double p, std::complex<double> T) {
  double s = std::sqrt(p);
  std::complex<double> rhs = (1.0 - T) * (1.0 - alpha * alpha * T) * (1.0 - T / (alpha * alpha)) *
                             (1.0 - alpha * s * T) * (1.0 - s * T / alpha) * (1.0 - alpha * T / s) *
                             (1.0 - T / (alpha * s));
  return std::abs(std7_euler_factor().eval(alpha, p, T) - rhs);
}

}  // namespace g2lift
