// Dense exact square matrices (used at sizes 7 and 2).
#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2lift/rational.hpp"

namespace g2lift {

template <std::size_t N>
class SquareMatrix {
 public:
  SquareMatrix() = default;

  SquareMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    if (rows.size() != N) throw std::invalid_argument("SquareMatrix: wrong row count");
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != N) throw std::invalid_argument("SquareMatrix: wrong column count");
      std::size_t j = 0;
      for (const auto& x : row) e_[i * N + j++] = x;
      ++i;
    }
  }

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = Rational(1);
    return m;
  }

  static constexpr std::size_t size() { return N; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * N + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return e_[i * N + j]; }

  SquareMatrix transpose() const {
    SquareMatrix t;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Fraction-free Bareiss elimination on the row-scaled integer matrix.
  Rational determinant() const {
    std::array<BigInt, N * N> a;
    BigInt scale = 1;
    for (std::size_t i = 0; i < N; ++i) {
      BigInt l = 1;
      for (std::size_t j = 0; j < N; ++j) l = lcm(l, (*this)(i, j).den());
      scale *= l;
      for (std::size_t j = 0; j < N; ++j) {
        const Rational& x = (*this)(i, j);
        a[i * N + j] = x.num() * (l / x.den());
      }
    }
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < N; ++k) {
      if (a[k * N + k] == 0) {
        std::size_t swap = k + 1;
        while (swap < N && a[swap * N + k] == 0) ++swap;
        if (swap == N) return Rational(0);
        for (std::size_t j = 0; j < N; ++j) std::swap(a[k * N + j], a[swap * N + j]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < N; ++i) {
        for (std::size_t j = k + 1; j < N; ++j) {
          BigInt v = a[i * N + j] * a[k * N + k] - a[i * N + k] * a[k * N + j];
          mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
          a[i * N + j] = v;
        }
        a[i * N + k] = 0;
      }
      prev = a[k * N + k];
    }
    return Rational(BigInt(sign * a[N * N - 1]), scale);
  }

  /// Gauss-Jordan inverse; throws std::domain_error when singular.
  SquareMatrix inverse() const {
    SquareMatrix a = *this;
    SquareMatrix inv = identity();
    for (std::size_t c = 0; c < N; ++c) {
      std::size_t piv = c;
      while (piv < N && a(piv, c).is_zero()) ++piv;
      if (piv == N) throw std::domain_error("SquareMatrix::inverse: singular matrix");
      if (piv != c)
        for (std::size_t j = 0; j < N; ++j) {
          std::swap(a(c, j), a(piv, j));
          std::swap(inv(c, j), inv(piv, j));
        }
      Rational p = a(c, c).inverse();
      for (std::size_t j = 0; j < N; ++j) {
        a(c, j) *= p;
        inv(c, j) *= p;
      }
      for (std::size_t i = 0; i < N; ++i) {
        if (i == c || a(i, c).is_zero()) continue;
        Rational f = a(i, c);
        for (std::size_t j = 0; j < N; ++j) {
          if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
          if (!inv(c, j).is_zero()) inv(i, j) -= f * inv(c, j);
        }
      }
    }
    return inv;
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) e_[k] += o.e_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) e_[k] -= o.e_[k];
    return *this;
  }
  SquareMatrix& operator*=(const Rational& s) {
    for (auto& x : e_) x *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, const Rational& s) { return a *= s; }
  friend SquareMatrix operator*(const Rational& s, SquareMatrix a) { return a *= s; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix c;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Rational& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < N; ++j)
          if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
      }
    return c;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) { return a.e_ == b.e_; }

  /// Right-aligned text grid of exact entries.
  std::string to_grid() const {
    std::array<std::string, N * N> s;
    std::size_t w = 1;
    for (std::size_t k = 0; k < N * N; ++k) {
      s[k] = e_[k].to_string();
      w = std::max(w, s[k].size());
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        if (j) os << ' ';
        os << std::string(w - s[i * N + j].size(), ' ') << s[i * N + j];
      }
      os << '\n';
    }
    return os.str();
  }

 private:
  std::array<Rational, N * N> e_{};
};

using Matrix7 = SquareMatrix<7>;
using Matrix2 = SquareMatrix<2>;

template <std::size_t N>
SquareMatrix<N> mat_mul(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  return a * b;
}

inline Matrix2 make2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  Matrix2 m;
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

inline Rational det2(const Matrix2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

}  // namespace g2lift
