// Fourier coefficients of the lift on G2 and the ratio test against central L-values.
#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2lift/cubic.hpp"
#include "g2lift/lfunctions.hpp"
#include "g2lift/modforms.hpp"
#include "g2lift/shimura.hpp"

namespace g2lift {

class FormUnsupported : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CentralVanishing : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// delta, f16, f20: the level-one eigenforms with rational coefficients and k = weight/2 even.
inline int form_weight(const std::string& name) {
  if (name == "delta") return 12;
  if (name == "f16") return 16;
  if (name == "f20") return 20;
  throw FormUnsupported("unknown form " + name);
}

struct LiftData {
  std::string name;
  long k = 0;     // f has weight 2k, g has weight k + 1/2
  QExpansion f;
  HalfIntegralForm g;
};

inline LiftData make_lift_data(int two_k, std::size_t f_prec, std::size_t g_prec) {
  if (two_k % 4 != 0) throw FormUnsupported("weight " + std::to_string(two_k) + " has odd k");
  LiftData d;
  d.k = two_k / 2;
  d.name = two_k == 12 ? "delta" : "f" + std::to_string(two_k);
  try {
    d.f = cached_eigenform(two_k, f_prec);
  } catch (const std::invalid_argument& e) {
    throw FormUnsupported(e.what());
  }
  auto basis = plus_cusp_basis(d.k, std::max<std::size_t>(g_prec, 8 * d.k));
  if (basis.size() != 1) throw FormUnsupported("plus space is not one-dimensional");
  d.g = std::move(basis.front());
  return d;
}

inline LiftData make_lift_data(const std::string& name, std::size_t f_prec, std::size_t g_prec) {
  return make_lift_data(form_weight(name), f_prec, g_prec);
}

/// C_w / C(S) = mu_f(det m)^{-1} mu_f(S)^{-1} c_{tS}; C(S) itself is never computed.
struct LiftCoefficient {
  CubicVector w{};
  Rational t, S;
  Matrix2 m, m_prime;
  std::complex<double> phase{1.0, 0.0};
  Rational c_value, magnitude_sq;
  std::string etale;
  std::size_t index = 0;  // -tS
};

struct FourierOptions {
  std::size_t root_choice = 0;
};

namespace detail {

inline std::complex<double> mu_inverse(const QExpansion& f, const Rational& r) { return 1.0 / mu_f(f, r); }

inline void fill_value(const LiftData& d, LiftCoefficient& c) {
  Rational ts = c.t * c.S;
  if (!ts.is_integer() || ts.sign() >= 0)
    throw std::domain_error("index outside supported lattice normalization");
  c.c_value = c_coeff(d.g, ts.num());
  c.magnitude_sq = c.c_value * c.c_value;
  c.index = BigInt(-ts.num()).get_ui();
}

}  // namespace detail

inline LiftCoefficient fourier_coefficient(const LiftData& d, const CubicVector& w, const FourierOptions& opt = {}) {
  Rational q = quartic_q(w);
  if (q.is_zero()) throw std::domain_error("non-etale input");
  if (!is_totally_real(w)) throw std::domain_error("fourier_coefficient: w is not totally real");
  EtaleType e = etale_type(w);
  if (e.kind == EtaleType::Kind::CubicField) throw std::domain_error("cubic-field orbit unsupported");
  CanonicalReduction r = normalize_reduction(w, reduce_to_canonical(w, {opt.root_choice}));
  LiftCoefficient c;
  c.w = w;
  c.t = r.t;
  c.S = r.S;
  c.m = r.m;
  c.m_prime = r.m_prime;
  c.etale = e.name();
  detail::fill_value(d, c);
  c.phase = detail::mu_inverse(d.f, det2(c.m)) * detail::mu_inverse(d.f, c.S);
  return c;
}

/// Record at w' = det(m')^2 rho3(m'^{-1}) w, m' = Ad(w_a)(m).
inline LiftCoefficient transform_coefficient(const LiftData& d, const LiftCoefficient& c, const Matrix2& m) {
  Matrix2 mp = ad_weyl_alpha(m);
  Rational det = det2(mp);
  if (det.is_zero()) throw std::invalid_argument("transform_coefficient: singular m");
  LiftCoefficient out = c;
  out.w = coadjoint_w(mp, c.w);
  out.m = c.m * m;
  out.m_prime = c.m_prime * mp;
  double sign = (det.sign() < 0 && d.k % 2) ? -1.0 : 1.0;
  out.phase = c.phase * detail::mu_inverse(d.f, det) * sign;
  return out;
}

/// Whether a record's (t, S, m) really reduces its w in the 7x7 model.
inline bool record_consistent(const LiftCoefficient& c) {
  return verify_reduction(c.w, CanonicalReduction{c.t, c.S, c.m, c.m_prime});
}

struct GrossOptions {
  double tol = 1e-10;
  bool require_maximal = true;
};

struct GrossResult {
  double ratio = 0;
  double rel_error = 0;
  LiftCoefficient coefficient;
  double l_split = 0;
};

inline GrossResult gross_ratio_detail(const LiftData& d, const CubicVector& w, const GrossOptions& opt = {}) {
  GrossResult out;
  out.coefficient = fourier_coefficient(d, w);
  if (opt.require_maximal && !cubic_ring(w).is_maximal())
    throw std::domain_error("gross_ratio: A_w is not maximal");
  EtaleType e = etale_type(w);
  auto check = [&](const LValue& v) {
    if (std::abs(v.value) <= 10 * v.abs_error_bound) throw CentralVanishing("central vanishing; ratio undefined");
    return v;
  };
  LValue l1 = check(central_twisted_value(d.f, 1, opt.tol));
  LValue l2 = l1;
  if (e.kind == EtaleType::Kind::QuadraticSplit) l2 = check(central_twisted_value(d.f, e.field_disc.get_si(), opt.tol));
  out.l_split = l1.value * l2.value;
  const double k = static_cast<double>(d.k);
  double c = out.coefficient.c_value.to_double();
  double absq = std::abs(quartic_q(w).to_double());
  out.ratio = c * c * std::pow(M_PI, 2 * k) / (std::tgamma(k) * std::tgamma(k) * std::pow(absq, k - 0.5) * out.l_split);
  out.rel_error = l1.abs_error_bound / std::abs(l1.value) + l2.abs_error_bound / std::abs(l2.value);
  return out;
}

inline double gross_ratio(const LiftData& d, const CubicVector& w, const GrossOptions& opt = {}) {
  return gross_ratio_detail(d, w, opt).ratio;
}

/// (-D, 0, 1/3, 0): the canonical representative, index 2 at 2 in its maximal order.
inline CubicVector gross_canonical_vector(long D) { return canonical_vector(Rational(-D), Rational(1)); }

/// (-(D - e)/4, e/3, 1/3, 0), e = D mod 4: u (v^2 + e u v - (D - e)/4 u^2), maximal.
inline CubicVector gross_maximal_vector(long D) {
  long e = D % 4;
  return {Rational(-(D - e), 4), Rational(e, 3), Rational(1, 3), Rational(0)};
}

enum class Agreement { Agree, Mismatch, Inconclusive };

inline const char* agreement_name(Agreement a) {
  switch (a) {
    case Agreement::Agree:
      return "agree";
    case Agreement::Mismatch:
      return "mismatch";
    case Agreement::Inconclusive:
      break;
  }
  return "inconclusive";
}

struct NonvanishingResult {
  bool coefficient_nonzero = false;
  bool lvalue_nonzero = false;
  Agreement status = Agreement::Inconclusive;
  double lvalue = 0;
  double error_bound = 0;
};

/// c(1) != 0 against |L(k, f)| > 10 max(error bound, tol).
inline NonvanishingResult nonvanishing_split(const LiftData& d, double tol = 1e-10) {
  NonvanishingResult r;
  r.coefficient_nonzero = !d.g.c(1).is_zero();
  LValue v;
  try {
    v = central_twisted_value(d.f, 1, std::max(tol, 1e-12));
  } catch (const SeriesInstability&) {
    return r;
  }
  r.lvalue = v.value;
  r.error_bound = std::max(v.abs_error_bound, tol);
  if (std::abs(v.value) <= 10 * r.error_bound) return r;
  r.lvalue_nonzero = true;
  r.status = r.coefficient_nonzero ? Agreement::Agree : Agreement::Mismatch;
  return r;
}

}  // namespace g2lift
