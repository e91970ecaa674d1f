// Split G2 as 7x7 rational matrices preserving a signature (3,4) form.
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "g2lift/linalg.hpp"
#include "g2lift/matrix.hpp"
#include "g2lift/rational.hpp"

namespace g2lift {

using Vec4 = std::array<Rational, 4>;

enum class PositiveRoot { A, B, AB, A2B, A3B, A3B2 };

/// One of the 12 roots: a positive root together with a sign.
struct RootLabel {
  PositiveRoot base = PositiveRoot::A;
  bool negative = false;

  RootLabel operator-() const { return {base, !negative}; }
  friend bool operator==(const RootLabel&, const RootLabel&) = default;

  std::string name() const {
    static const char* names[] = {"a", "b", "a+b", "2a+b", "3a+b", "3a+2b"};
    std::string s = names[static_cast<int>(base)];
    if (!negative) return s;
    return s.size() == 1 ? "-" + s : "-(" + s + ")";
  }

  /// Accepts the spellings produced by name().
  static RootLabel parse(std::string_view s) {
    for (const auto& r : all())
      if (r.name() == s) return r;
    throw std::invalid_argument("unknown root '" + std::string(s) + "'");
  }

  static std::vector<RootLabel> positive() {
    return {{PositiveRoot::A}, {PositiveRoot::B},   {PositiveRoot::AB},
            {PositiveRoot::A2B}, {PositiveRoot::A3B}, {PositiveRoot::A3B2}};
  }
  static std::vector<RootLabel> all() {
    auto v = positive();
    for (const auto& r : positive()) v.push_back(-r);
    return v;
  }
};

inline const RootLabel kAlpha{PositiveRoot::A};
inline const RootLabel kBeta{PositiveRoot::B};
inline const RootLabel kAlphaBeta{PositiveRoot::AB};
inline const RootLabel k2AlphaBeta{PositiveRoot::A2B};
inline const RootLabel k3AlphaBeta{PositiveRoot::A3B};
inline const RootLabel k3Alpha2Beta{PositiveRoot::A3B2};

namespace detail {

struct Entry {
  int row, col, value;  // 1-based
};

inline Matrix7 from_entries(std::initializer_list<Entry> es) {
  Matrix7 m;
  for (const auto& e : es) m(e.row - 1, e.col - 1) = Rational(e.value);
  return m;
}

}  // namespace detail

/// The Gram matrix of the invariant form.
inline const Matrix7& gram_matrix() {
  static const Matrix7 s = [] {
    Matrix7 m;
    m(0, 5) = m(1, 6) = m(5, 0) = m(6, 1) = Rational(1);
    m(2, 4) = m(4, 2) = Rational(1);
    m(3, 3) = Rational(-2);
    return m;
  }();
  return s;
}

/// Nilpotent Lie algebra element X_gamma.
inline Matrix7 lie_generator(const RootLabel& r) {
  using detail::from_entries;
  Matrix7 pos;
  switch (r.base) {
    case PositiveRoot::A:
      if (r.negative) return from_entries({{1, 2, -1}, {3, 4, -2}, {4, 5, -1}, {7, 6, 1}});
      return from_entries({{2, 1, -1}, {4, 3, -1}, {5, 4, -2}, {6, 7, 1}});
    case PositiveRoot::AB:
      if (r.negative) return from_entries({{4, 1, 1}, {5, 2, -1}, {6, 4, 2}, {7, 3, 1}});
      return from_entries({{1, 4, 2}, {2, 5, -1}, {3, 7, 1}, {4, 6, 1}});
    case PositiveRoot::A2B:
      if (r.negative) return from_entries({{3, 1, -1}, {4, 2, 1}, {6, 5, 1}, {7, 4, 2}});
      return from_entries({{1, 3, -1}, {2, 4, 2}, {4, 7, 1}, {5, 6, 1}});
    case PositiveRoot::B:
      pos = from_entries({{1, 5, -1}, {3, 6, 1}});
      break;
    case PositiveRoot::A3B:
      pos = from_entries({{2, 3, -1}, {5, 7, 1}});
      break;
    case PositiveRoot::A3B2:
      pos = from_entries({{1, 7, -1}, {2, 6, 1}});
      break;
  }
  return r.negative ? pos.transpose() : pos;
}

/// True iff g^T S g = S and det g = 1.
inline bool preserves_form(const Matrix7& g) {
  if (!(g.transpose() * gram_matrix() * g == gram_matrix())) return false;
  return g.determinant() == Rational(1);
}

/// exp of a nilpotent matrix; the series stops once the power vanishes.
inline Matrix7 nilpotent_exp(const Matrix7& x) {
  Matrix7 result = Matrix7::identity();
  Matrix7 power = Matrix7::identity();
  for (int n = 1; n <= 7; ++n) {
    power = power * x;
    if (power.is_zero()) return result;
    power *= Rational(1, n);
    result += power;
  }
  throw std::logic_error("nilpotent_exp: matrix is not nilpotent");
}

/// An element of the ambient orthogonal group, validated on construction.
class GroupElement {
 public:
  GroupElement() : m_(Matrix7::identity()) {}

  /// Throws std::invalid_argument if the matrix does not preserve the form.
  static GroupElement from_matrix(const Matrix7& m) {
    if (!preserves_form(m)) throw std::invalid_argument("GroupElement: matrix does not preserve the form");
    return GroupElement(m, 0);
  }

  const Matrix7& matrix() const { return m_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  /// Inverse via the form: g^{-1} = S^{-1} g^T S.
  GroupElement inverse() const {
    static const Matrix7 s_inv = gram_matrix().inverse();
    return GroupElement(s_inv * m_.transpose() * gram_matrix(), 0);
  }

  // The group is closed under products, so no re-validation here.
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return GroupElement(a.m_ * b.m_, 0);
  }
  GroupElement& operator*=(const GroupElement& o) { return *this = *this * o; }
  GroupElement pow(int e) const {
    GroupElement base = e < 0 ? inverse() : *this, r;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
    return r;
  }
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.m_ == b.m_; }

  std::string dump() const { return m_.to_grid(); }

 private:
  GroupElement(const Matrix7& m, int) : m_(m) {}
  Matrix7 m_;
};

inline GroupElement root_generator(const RootLabel& r, const Rational& u) {
  return GroupElement::from_matrix(nilpotent_exp(lie_generator(r) * u));
}

/// w_gamma(t) = x_gamma(t) x_{-gamma}(-1/t) x_gamma(t).
inline GroupElement weyl_t(const RootLabel& r, const Rational& t) {
  if (t.is_zero()) throw std::invalid_argument("weyl_t: t must be nonzero");
  GroupElement x = root_generator(r, t);
  return x * root_generator(-r, -t.inverse()) * x;
}

inline GroupElement weyl(const RootLabel& r) { return weyl_t(r, Rational(1)); }

/// h_gamma(t) = w_gamma(t) w_gamma(1)^{-1}.
inline GroupElement torus(const RootLabel& r, const Rational& t) {
  return weyl_t(r, t) * weyl(r).inverse();
}

// ---- Heisenberg parabolic P = MN ----

inline GroupElement heis_n(const Vec4& a, const Rational& t) {
  const auto& [a1, a2, a3, a4] = a;
  Matrix7 m = Matrix7::identity();
  m(0, 2) = -a3;
  m(0, 3) = Rational(2) * a2;
  m(0, 4) = -a1;
  m(0, 5) = a2 * a2 - a1 * a3;
  m(0, 6) = Rational(2) * a2 * a3 - a1 * a4 - t;
  m(1, 2) = -a4;
  m(1, 3) = Rational(2) * a3;
  m(1, 4) = -a2;
  m(1, 5) = t - a2 * a3;
  m(1, 6) = a3 * a3 - a2 * a4;
  m(2, 5) = a1;
  m(2, 6) = a2;
  m(3, 5) = a2;
  m(3, 6) = a3;
  m(4, 5) = a3;
  m(4, 6) = a4;
  return GroupElement::from_matrix(m);
}

/// Center coordinate of heis_n in terms of the heis_n1 one.
inline Rational heis_t_from_n1(const Vec4& a, const Rational& t) {
  return t / Rational(2) - (a[0] * a[3] / Rational(2) - Rational(3, 2) * a[1] * a[2]);
}

inline GroupElement heis_n1(const Vec4& a, const Rational& t) { return heis_n(a, heis_t_from_n1(a, t)); }

struct HeisenbergCoord {
  Vec4 a;
  Rational t;
  friend bool operator==(const HeisenbergCoord&, const HeisenbergCoord&) = default;
};

/// Coordinates (a, t) with g = heis_n(a, t), or nullopt if g is not in N.
inline std::optional<HeisenbergCoord> heis_coords(const GroupElement& g) {
  HeisenbergCoord c{{g(2, 5), g(2, 6), g(3, 6), g(4, 6)}, Rational(0)};
  c.t = g(1, 5) + c.a[1] * c.a[2];
  if (!(heis_n(c.a, c.t) == g)) return std::nullopt;
  return c;
}

inline std::optional<HeisenbergCoord> heis1_coords(const GroupElement& g) {
  auto c = heis_coords(g);
  if (!c) return std::nullopt;
  const auto& a = c->a;
  c->t = Rational(2) * c->t + a[0] * a[3] - Rational(3) * a[1] * a[2];
  return c;
}

inline Rational symplectic(const Vec4& a, const Vec4& b) {
  return a[0] * b[3] - Rational(3) * a[1] * b[2] + Rational(3) * a[2] * b[1] - a[3] * b[0];
}

inline void require_invertible(const Matrix2& a, const char* who) {
  if (det2(a).is_zero()) throw std::invalid_argument(std::string(who) + ": singular matrix");
}

inline GroupElement levi_m(const Matrix2& A) {
  require_invertible(A, "levi_m");
  const Rational &a = A(0, 0), &b = A(0, 1), &c = A(1, 0), &d = A(1, 1);
  Rational D = det2(A);
  Rational inv = D.inverse();
  Matrix7 m;
  m(0, 0) = d;
  m(0, 1) = c;
  m(1, 0) = b;
  m(1, 1) = a;
  m(2, 2) = d * d * inv;
  m(2, 3) = Rational(2) * c * d * inv;
  m(2, 4) = c * c * inv;
  m(3, 2) = b * d * inv;
  m(3, 3) = (a * d + b * c) * inv;
  m(3, 4) = a * c * inv;
  m(4, 2) = b * b * inv;
  m(4, 3) = Rational(2) * a * b * inv;
  m(4, 4) = a * a * inv;
  m(5, 5) = a * inv;
  m(5, 6) = -b * inv;
  m(6, 5) = -c * inv;
  m(6, 6) = d * inv;
  return GroupElement::from_matrix(m);
}

/// Recovers A from m(A), or nullopt if g is not of that form.
inline std::optional<Matrix2> levi_m_coords(const GroupElement& g) {
  if (det2(make2(g(1, 1), g(1, 0), g(0, 1), g(0, 0))).is_zero()) return std::nullopt;
  Matrix2 A = make2(g(1, 1), g(1, 0), g(0, 1), g(0, 0));
  if (!(levi_m(A) == g)) return std::nullopt;
  return A;
}

inline GroupElement levi_l(const Matrix2& A) {
  require_invertible(A, "levi_l");
  const Rational &a = A(0, 0), &b = A(0, 1), &c = A(1, 0), &d = A(1, 1);
  Rational D = det2(A);
  Rational inv = D.inverse();
  Matrix7 m;
  m(0, 0) = a;
  m(0, 4) = b;
  m(1, 1) = D;
  m(2, 2) = a * inv;
  m(2, 5) = -b * inv;
  m(3, 3) = Rational(1);
  m(4, 0) = c;
  m(4, 4) = d;
  m(5, 2) = -c * inv;
  m(5, 5) = d * inv;
  m(6, 6) = inv;
  return GroupElement::from_matrix(m);
}

// ---- parabolic Q = LU ----

/// u(a1..a4, z) = x_a(a1) x_{a+b}(a2) x_{2a+b}(a3) x_{3a+b}(a4) x_{3a+2b}(z).
inline GroupElement u_coord(const Vec4& a, const Rational& z) {
  return root_generator(kAlpha, a[0]) * root_generator(kAlphaBeta, a[1]) *
         root_generator(k2AlphaBeta, a[2]) * root_generator(k3AlphaBeta, a[3]) *
         root_generator(k3Alpha2Beta, z);
}

struct UCoord {
  Vec4 a;
  Rational z;
  friend bool operator==(const UCoord&, const UCoord&) = default;
};

inline std::optional<UCoord> u_coords(const GroupElement& g) {
  UCoord c;
  c.a[0] = -g(1, 0);
  c.a[1] = g(0, 3) / Rational(2);
  c.a[2] = -g(0, 2);
  c.z = Rational(2) * c.a[1] * c.a[2] - g(0, 6);
  c.a[3] = g(4, 6) - c.a[0] * c.a[0] * c.a[1] + Rational(2) * c.a[0] * c.a[2];
  if (!(u_coord(c.a, c.z) == g)) return std::nullopt;
  return c;
}

inline GroupElement z_coord(const Rational& x, const Rational& y) {
  return u_coord({Rational(0), Rational(0), Rational(0), x}, y);
}

/// (x, y) with g = z_coord(x, y), or nullopt if g is not in Z_U.
inline std::optional<std::array<Rational, 2>> z_coords(const GroupElement& g) {
  Rational x = -g(1, 2), y = -g(0, 6);
  if (!(z_coord(x, y) == g)) return std::nullopt;
  return std::array<Rational, 2>{x, y};
}

inline GroupElement u_tilde(const Rational& a1, const Rational& a2, const Rational& a3) {
  return u_coord({a1, a2, a3, Rational(0)}, Rational(0));
}

inline GroupElement u_tilde1(const Rational& a1, const Rational& a2, const Rational& a3) {
  return u_tilde(a1, a2, a3 + a1 * a2);
}

// ---- Weyl words ----

/// iota = w_b w_a w_b w_a w_b^{-1}.
inline GroupElement iota() {
  GroupElement wa = weyl(kAlpha), wb = weyl(kBeta);
  return wb * wa * wb * wa * wb.inverse();
}

// ---- the cubic-form action on W ----

/// Coefficients of a1 u^3 + 3a2 u^2 v + 3a3 u v^2 + a4 v^3 after (u, v) -> (d u + b v, c u + a v).
inline Vec4 rho3(const Matrix2& A, const Vec4& w) {
  require_invertible(A, "rho3");
  using Lin = std::array<Rational, 2>;
  using Cub = std::array<Rational, 4>;
  auto mul = [](const std::vector<Lin>& fs) {
    std::vector<Rational> p{Rational(1)};
    for (const auto& f : fs) {
      std::vector<Rational> q(p.size() + 1, Rational(0));
      for (std::size_t i = 0; i < p.size(); ++i) {
        q[i] += p[i] * f[0];
        q[i + 1] += p[i] * f[1];
      }
      p = std::move(q);
    }
    return p;
  };
  Lin X{A(1, 1), A(0, 1)}, Y{A(1, 0), A(0, 0)};
  const std::vector<Lin> terms[4] = {{X, X, X}, {X, X, Y}, {X, Y, Y}, {Y, Y, Y}};
  const Rational weights[4] = {w[0], Rational(3) * w[1], Rational(3) * w[2], w[3]};
  Cub out{};
  for (int k = 0; k < 4; ++k) {
    if (weights[k].is_zero()) continue;
    auto p = mul(terms[k]);
    for (int i = 0; i < 4; ++i) out[i] += weights[k] * p[i];
  }
  out[1] /= Rational(3);
  out[2] /= Rational(3);
  return out;
}

/// det(A)^2 rho3(A^{-1}) w, the action on characters of N.
inline Vec4 coadjoint_w(const Matrix2& A, const Vec4& w) {
  Rational D = det2(A);
  Vec4 v = rho3(A.inverse(), w);
  for (auto& x : v) x *= D * D;
  return v;
}

inline Vec4 scale(const Vec4& v, const Rational& s) {
  return {v[0] * s, v[1] * s, v[2] * s, v[3] * s};
}

inline Vec4 add(const Vec4& a, const Vec4& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

// ---- adjoint determinants on unipotent Lie algebras ----

/// Matrix of X -> g X g^{-1} on span{X_r : r in basis}; throws if not stable.
inline RationalMatrix adjoint_matrix(const GroupElement& g, const std::vector<RootLabel>& basis) {
  const std::size_t n = basis.size();
  std::vector<Matrix7> xs;
  for (const auto& r : basis) xs.push_back(lie_generator(r));
  GroupElement gi = g.inverse();
  RationalMatrix result(n, RationalRow(n, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    Matrix7 y = g.matrix() * xs[j] * gi.matrix();
    // Solve sum_i c_i X_i = y over the 49 entries.
    RationalMatrix sys(49, RationalRow(n + 1, Rational(0)));
    for (std::size_t e = 0; e < 49; ++e) {
      for (std::size_t i = 0; i < n; ++i) sys[e][i] = xs[i](e / 7, e % 7);
      sys[e][n] = y(e / 7, e % 7);
    }
    auto piv = rref(sys);
    if (!piv.empty() && piv.back() == n) throw std::domain_error("adjoint_matrix: span not stable");
    for (std::size_t i = 0; i < piv.size(); ++i) result[piv[i]][j] = sys[i][n];
  }
  return result;
}

inline Rational determinant(RationalMatrix a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    Rational inv = a[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      Rational f = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

inline std::vector<RootLabel> lie_n_basis() {
  return {kBeta, kAlphaBeta, k2AlphaBeta, k3AlphaBeta, k3Alpha2Beta};
}
inline std::vector<RootLabel> lie_u_basis() {
  return {kAlpha, kAlphaBeta, k2AlphaBeta, k3AlphaBeta, k3Alpha2Beta};
}

inline Rational modulus_det_n(const Matrix2& A) { return determinant(adjoint_matrix(levi_m(A), lie_n_basis())); }
inline Rational modulus_det_u(const Matrix2& A) { return determinant(adjoint_matrix(levi_l(A), lie_u_basis())); }

}  // namespace g2lift
