// Binary cubic forms on W, their cubic rings and the canonical shape (t, 0, S/3, 0).
#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "g2lift/g2.hpp"
#include "g2lift/rational.hpp"

namespace g2lift {

/// w = (a1, a2, a3, a4) with f_w = a1 u^3 + 3 a2 u^2 v + 3 a3 u v^2 + a4 v^3.
using CubicVector = Vec4;

/// Quartic invariant; disc(f_w) = -27 q(w).
inline Rational quartic_q(const CubicVector& w) {
  const auto& [a1, a2, a3, a4] = w;
  return Rational(-3) * a2 * a2 * a3 * a3 + Rational(4) * a1 * a3 * a3 * a3 +
         Rational(4) * a2 * a2 * a2 * a4 - Rational(6) * a1 * a2 * a3 * a4 + a1 * a1 * a4 * a4;
}

/// a1, a4 integral and 3a2, 3a3 integral.
inline bool in_lattice(const CubicVector& w) {
  return w[0].is_integer() && w[3].is_integer() && (Rational(3) * w[1]).is_integer() &&
         (Rational(3) * w[2]).is_integer();
}

/// Coefficients (a, b, c, d) of a x^3 + b x^2 y + c x y^2 + d y^3.
using IntForm = std::array<BigInt, 4>;

inline std::array<Rational, 4> form_coefficients(const CubicVector& w) {
  return {w[0], Rational(3) * w[1], Rational(3) * w[2], w[3]};
}

inline IntForm integral_form(const CubicVector& w) {
  if (!in_lattice(w)) throw std::invalid_argument("integral_form: w is not in the integral lattice");
  auto f = form_coefficients(w);
  return {f[0].num(), f[1].num(), f[2].num(), f[3].num()};
}

/// Primitive integral multiple of the form attached to a rational w.
inline IntForm primitive_form(const CubicVector& w) {
  auto f = form_coefficients(w);
  BigInt l = 1, g = 0;
  for (const auto& x : f) l = lcm(l, x.den());
  IntForm out;
  for (int i = 0; i < 4; ++i) {
    out[i] = f[i].num() * (l / f[i].den());
    g = gcd(g, out[i]);
  }
  if (g == 0) throw std::invalid_argument("primitive_form: zero form");
  for (auto& x : out) x /= g;
  return out;
}

inline BigInt form_discriminant(const IntForm& f) {
  const auto& [a, b, c, d] = f;
  return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
}

/// Real projective roots all real; vanishing leading terms count as the root at infinity.
inline bool is_totally_real(const CubicVector& w) { return quartic_q(w).sign() <= 0; }

namespace detail {

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline BigInt isqrt(const BigInt& n) {
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  return s;
}

inline bool is_square(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

/// Integer roots of X^3 + b X^2 + c X + d by bisection on monotone pieces.
inline std::vector<BigInt> monic_cubic_integer_roots(const BigInt& b, const BigInt& c, const BigInt& d) {
  auto g = [&](const BigInt& x) -> BigInt { return ((x + b) * x + c) * x + d; };
  BigInt bound = 1 + std::max({abs(b), abs(c), abs(d)});
  std::vector<BigInt> roots;
  auto add = [&](const BigInt& x) {
    if (g(x) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
  };
  // Find a root of a monotone piece by bisection; dir = +1 increasing, -1 decreasing.
  auto piece = [&](BigInt lo, BigInt hi, int dir) {
    if (lo > hi) return;
    int slo = sgn(g(lo)) * dir, shi = sgn(g(hi)) * dir;
    if (slo == 0) add(lo);
    if (shi == 0) add(hi);
    if (slo > 0 || shi < 0) return;
    while (hi - lo > 1) {
      BigInt mid = floor_div(lo + hi, 2);
      int s = sgn(g(mid)) * dir;
      if (s == 0) {
        add(mid);
        return;
      }
      (s < 0 ? lo : hi) = mid;
    }
  };
  BigInt delta = b * b - 3 * c;
  if (delta <= 0) {
    piece(-bound, bound, 1);
  } else {
    BigInt s = isqrt(delta);
    BigInt c1 = floor_div(-b - s, 3), c2 = floor_div(-b + s, 3);
    for (int k = -2; k <= 2; ++k) {
      add(c1 + k);
      add(c2 + k);
    }
    piece(-bound, c1 - 3, 1);
    piece(c1 + 3, c2 - 3, -1);
    piece(c2 + 3, bound, 1);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

inline std::pair<BigInt, BigInt> primitive_point(BigInt x, BigInt y) {
  BigInt g = gcd(x, y);
  x /= g;
  y /= g;
  if (y < 0 || (y == 0 && x < 0)) {
    x = -x;
    y = -y;
  }
  return {x, y};
}

}  // namespace detail

/// A projective point (x : y) with gcd(x, y) = 1, y >= 0, and (1 : 0) for infinity.
using ProjPoint = std::pair<BigInt, BigInt>;

/// Distinct rational projective roots of the binary cubic f.
inline std::vector<ProjPoint> rational_roots(const IntForm& f) {
  const auto& [a, b, c, d] = f;
  std::vector<ProjPoint> out;
  auto push = [&](const ProjPoint& p) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  if (a != 0) {
    for (const auto& r : detail::monic_cubic_integer_roots(b, a * c, a * a * d)) push(detail::primitive_point(r, a));
  } else {
    if (b == 0 && c == 0 && d == 0) throw std::invalid_argument("rational_roots: zero form");
    push({BigInt(1), BigInt(0)});
    if (b != 0) {
      BigInt disc = c * c - 4 * b * d;
      if (detail::is_square(disc)) {
        BigInt s = detail::isqrt(disc);
        push(detail::primitive_point(-c + s, 2 * b));
        push(detail::primitive_point(-c - s, 2 * b));
      }
    } else if (c != 0) {
      push(detail::primitive_point(-d, c));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline BigInt eval_form(const IntForm& f, const BigInt& x, const BigInt& y) {
  return f[0] * x * x * x + f[1] * x * x * y + f[2] * x * y * y + f[3] * y * y * y;
}

/// Fundamental discriminant of Q(sqrt(r)) for a nonsquare rational r; 1 when r is a square.
inline BigInt fundamental_discriminant_of(const Rational& r) {
  if (r.is_zero()) throw std::domain_error("fundamental_discriminant_of: zero");
  BigInt s = squarefree_part(BigInt(r.num() * r.den()));
  if (s == 1) return 1;
  BigInt m4 = s % 4;
  if (m4 < 0) m4 += 4;
  return m4 == 1 ? s : BigInt(4 * s);
}

struct EtaleType {
  enum class Kind { TotallySplit, QuadraticSplit, CubicField };
  Kind kind = Kind::TotallySplit;
  BigInt field_disc = 1;  // quadratic factor only
  bool real = true;       // quadratic factor only
  IntForm cubic_poly{};   // cubic field only: x^3 coefficient first

  std::string name() const {
    switch (kind) {
      case Kind::TotallySplit:
        return "Q^3";
      case Kind::QuadraticSplit:
        return "QxQ(sqrt(" + field_disc.get_str() + "))";
      case Kind::CubicField:
        break;
    }
    return "cubic field";
  }
};

/// Quadratic cofactor (A, B, C) of f after dividing out the linear factor vanishing at p.
inline std::array<Rational, 3> quadratic_cofactor(const IntForm& f, const ProjPoint& p) {
  // L = y0 x - x0 y vanishes at (x0 : y0).
  Rational lp(p.second), lr(BigInt(-p.first));
  Rational a(f[0]), b(f[1]), c(f[2]), d(f[3]);
  std::array<Rational, 3> q;
  if (!lp.is_zero()) {
    q[0] = a / lp;
    q[1] = (b - lr * q[0]) / lp;
    q[2] = (c - lr * q[1]) / lp;
  } else {
    q[2] = d / lr;
    q[1] = c / lr;
    q[0] = b / lr;
  }
  return q;
}

inline EtaleType etale_type(const CubicVector& w) {
  if (quartic_q(w).is_zero()) throw std::domain_error("non-etale input");
  IntForm f = primitive_form(w);
  auto roots = rational_roots(f);
  EtaleType e;
  if (roots.size() == 3) return e;
  if (roots.size() == 1) {
    auto q = quadratic_cofactor(f, roots[0]);
    Rational disc = q[1] * q[1] - Rational(4) * q[0] * q[2];
    e.kind = EtaleType::Kind::QuadraticSplit;
    e.real = disc.sign() > 0;
    e.field_disc = fundamental_discriminant_of(disc);
    return e;
  }
  if (!roots.empty()) throw std::logic_error("etale_type: repeated root despite q != 0");
  e.kind = EtaleType::Kind::CubicField;
  e.cubic_poly = f;
  return e;
}

/// Rank-3 ring attached to (a, b, c, d) on the basis (1, omega, theta):
/// omega theta = -ad, omega^2 = -ac + b omega - a theta, theta^2 = -bd + d omega - c theta.
class CubicRing {
 public:
  using Elem = std::array<Rational, 3>;

  explicit CubicRing(const IntForm& f) : f_(f) {}
  static CubicRing from_vector(const CubicVector& w) { return CubicRing(integral_form(w)); }

  const IntForm& form() const { return f_; }

  Elem multiply(const Elem& x, const Elem& y) const {
    const Rational a(f_[0]), b(f_[1]), c(f_[2]), d(f_[3]);
    // Products of basis elements: ww, wt, tt.
    const Elem ww{-a * c, b, -a}, wt{-a * d, 0, 0}, tt{-b * d, d, -c};
    Elem r{x[0] * y[0], x[0] * y[1] + x[1] * y[0], x[0] * y[2] + x[2] * y[0]};
    auto acc = [&r](const Rational& s, const Elem& e) {
      if (s.is_zero()) return;
      for (int i = 0; i < 3; ++i) r[i] += s * e[i];
    };
    acc(x[1] * y[1], ww);
    acc(x[1] * y[2] + x[2] * y[1], wt);
    acc(x[2] * y[2], tt);
    return r;
  }

  Rational trace(const Elem& x) const {
    Rational t(0);
    const Elem basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int i = 0; i < 3; ++i) t += multiply(x, basis[i])[i];
    return t;
  }

  /// det of the trace form on (1, omega, theta).
  BigInt discriminant() const {
    const Elem basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    RationalMatrix g(3, RationalRow(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g[i][j] = trace(multiply(basis[i], basis[j]));
    Rational det = determinant(g);
    if (!det.is_integer()) throw std::logic_error("CubicRing: non-integral discriminant");
    return det.num();
  }

  /// Local criterion at p: non-maximal iff f = 0 mod p, or f has a multiple root
  /// mod p whose primitive lift (x0, y0) has p^2 | f(x0, y0).
  bool is_maximal_at(const BigInt& p) const {
    const auto& f = f_;
    auto mod = [&](const BigInt& v) {
      BigInt r = v % p;
      return r < 0 ? BigInt(r + p) : r;
    };
    if (mod(f[0]) == 0 && mod(f[1]) == 0 && mod(f[2]) == 0 && mod(f[3]) == 0) return false;
    BigInt p2 = p * p;
    // Root at infinity of multiplicity >= 2.
    if (mod(f[0]) == 0 && mod(f[1]) == 0 && BigInt(f[0] % p2) == 0) return false;
    if (p > BigInt(100000000)) throw std::domain_error("is_maximal_at: prime too large for root search");
    for (BigInt r = 0; r < p; ++r) {
      BigInt v = eval_form(f, r, 1);
      if (mod(v) != 0) continue;
      BigInt dv = 3 * f[0] * r * r + 2 * f[1] * r + f[2];
      if (mod(dv) != 0) continue;
      if (BigInt(v % p2) == 0) return false;
    }
    return true;
  }

  bool is_maximal() const {
    BigInt disc = discriminant();
    if (disc == 0) throw std::domain_error("is_maximal: degenerate ring");
    for (const auto& [p, e] : factor_integer(disc))
      if (e >= 2 && !is_maximal_at(p)) return false;
    return true;
  }

 private:
  IntForm f_;
};

inline CubicRing cubic_ring(const CubicVector& w) { return CubicRing::from_vector(w); }

// ---- canonical reduction ----

struct CanonicalReduction {
  Rational t, S;
  Matrix2 m;        // element of M, as a 2x2 matrix
  Matrix2 m_prime;  // Ad(w_a)(m)
};

struct ReduceOptions {
  std::size_t root_choice = 0;  // index into the sorted rational roots
};

/// m' = w_a m w_a^{-1}, computed in the 7x7 model.
inline Matrix2 ad_weyl_alpha(const Matrix2& m) {
  GroupElement wa = weyl(kAlpha);
  auto r = levi_m_coords(wa * levi_m(m) * wa.inverse());
  if (!r) throw std::logic_error("ad_weyl_alpha: conjugate left M");
  return *r;
}

inline Matrix2 ad_weyl_alpha_inverse(const Matrix2& mp) {
  GroupElement wa = weyl(kAlpha);
  auto r = levi_m_coords(wa.inverse() * levi_m(mp) * wa);
  if (!r) throw std::logic_error("ad_weyl_alpha_inverse: conjugate left M");
  return *r;
}

inline CubicVector canonical_vector(const Rational& t, const Rational& S) {
  return {t, Rational(0), S / Rational(3), Rational(0)};
}

/// Checks w = Ad(m'^{-1})(t, 0, S/3, 0) by pairing against m' n1(e_i) m'^{-1} in the 7x7 model.
inline bool verify_reduction(const CubicVector& w, const CanonicalReduction& r) {
  if (!(ad_weyl_alpha(r.m) == r.m_prime)) return false;
  CubicVector w0 = canonical_vector(r.t, r.S);
  GroupElement mp = levi_m(r.m_prime), mpi = mp.inverse();
  for (int i = 0; i < 4; ++i) {
    Vec4 e{0, 0, 0, 0};
    e[i] = Rational(1);
    auto c = heis1_coords(mp * heis_n1(e, 0) * mpi);
    if (!c) return false;
    if (!(symplectic(w, e) == symplectic(w0, c->a))) return false;
  }
  Rational D = det2(r.m_prime);
  return quartic_q(w) == D * D * quartic_q(w0);
}

namespace detail {

inline void ext_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& s, BigInt& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

/// Substitution matrix M acting by f -> f(M (u, v)^T) turned into the matching m'.
/// The map is an anti-homomorphism.
inline Matrix2 levi_from_substitution(const Matrix2& M) { return make2(M(1, 1), M(0, 1), M(1, 0), M(0, 0)); }

}  // namespace detail

/// Moves w into the shape (t, 0, S/3, 0) with t < 0 < S.
inline CanonicalReduction reduce_to_canonical(const CubicVector& w, const ReduceOptions& opt = {}) {
  Rational q = quartic_q(w);
  if (q.sign() >= 0) throw std::domain_error("reduce_to_canonical: requires q(w) < 0");
  CanonicalReduction out;
  if (w[1].is_zero() && w[3].is_zero() && w[0].sign() < 0 && w[2].sign() > 0 && opt.root_choice == 0) {
    out.t = w[0];
    out.S = Rational(3) * w[2];
    out.m = out.m_prime = Matrix2::identity();
    return out;
  }
  IntForm f = primitive_form(w);
  auto roots = rational_roots(f);
  if (roots.empty()) throw std::domain_error("cubic-field orbit unsupported");
  if (opt.root_choice >= roots.size()) throw std::invalid_argument("reduce_to_canonical: root_choice out of range");
  const auto& [x0, y0] = roots[opt.root_choice];
  // M1 sends (0, 1) to the root, with det 1.
  BigInt g, s, t;
  detail::ext_gcd(y0, BigInt(-x0), g, s, t);  // s y0 - t x0 = 1
  Matrix2 M = make2(Rational(s), Rational(x0), Rational(t), Rational(y0));
  auto substitute = [&](const Matrix2& A) {
    Matrix2 mp = detail::levi_from_substitution(A);
    Rational D = det2(mp);
    return scale(rho3(mp, w), (D * D).inverse());
  };
  CubicVector w1 = substitute(M);
  if (!w1[3].is_zero()) throw std::logic_error("reduce_to_canonical: root not moved to (0:1)");
  // Now f = u (A u^2 + B u v + C v^2) with B = 3 a2, C = 3 a3.
  if (w1[2].is_zero()) throw std::logic_error("reduce_to_canonical: repeated root");
  Rational lambda = -w1[1] / (Rational(2) * w1[2]);
  M = M * make2(1, 0, lambda, 1);
  CubicVector w2 = substitute(M);
  if (w2[0].sign() > 0) {
    M = M * make2(-1, 0, 0, 1);
    w2 = substitute(M);
  }
  out.t = w2[0];
  out.S = Rational(3) * w2[2];
  out.m_prime = detail::levi_from_substitution(M);
  out.m = ad_weyl_alpha_inverse(out.m_prime);
  if (!(out.t.sign() < 0 && out.S.sign() > 0 && w2[1].is_zero() && w2[3].is_zero()))
    throw std::logic_error("reduce_to_canonical: shape not reached");
  if (!verify_reduction(w, out)) throw std::logic_error("reduce_to_canonical: 7x7 verification failed");
  return out;
}

/// Rescales by a diagonal element so that S = 1 and -t is 1 or a fundamental discriminant.
inline CanonicalReduction normalize_reduction(const CubicVector& w, const CanonicalReduction& r) {
  Rational rr = -(r.t * r.S);
  Rational D(fundamental_discriminant_of(rr));
  Rational beta;
  if (!rational_sqrt(rr / D, beta)) throw std::logic_error("normalize_reduction: square root failed");
  // f(alpha u, beta v) with alpha = S.
  Matrix2 diag = make2(r.S, 0, 0, beta);
  CanonicalReduction out;
  out.m_prime = detail::levi_from_substitution(diag) * r.m_prime;
  out.m = ad_weyl_alpha_inverse(out.m_prime);
  out.t = -D;
  out.S = Rational(1);
  if (!verify_reduction(w, out)) throw std::logic_error("normalize_reduction: 7x7 verification failed");
  return out;
}

}  // namespace g2lift
