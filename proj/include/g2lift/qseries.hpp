// Truncated q-expansions with exact coefficients.
#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2lift/rational.hpp"

namespace g2lift {

/// sum_{n < N} c(n) q^n of a given (possibly half-integral) weight and level.
class QExpansion {
 public:
  QExpansion() = default;
  QExpansion(Rational weight, long level, std::vector<Rational> coeffs)
      : weight_(std::move(weight)), level_(level), c_(std::move(coeffs)) {
    if (level_ < 1) throw std::invalid_argument("QExpansion: level must be positive");
  }

  static QExpansion zero(Rational weight, long level, std::size_t n) {
    return QExpansion(std::move(weight), level, std::vector<Rational>(n, Rational(0)));
  }
  static QExpansion one(long level, std::size_t n) {
    auto e = zero(Rational(0), level, n);
    if (n) e.c_[0] = Rational(1);
    return e;
  }

  const Rational& weight() const { return weight_; }
  long level() const { return level_; }
  std::size_t precision() const { return c_.size(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  const Rational& operator[](std::size_t n) const {
    if (n >= c_.size()) throw std::out_of_range("QExpansion: coefficient beyond precision");
    return c_[n];
  }
  Rational& operator[](std::size_t n) {
    if (n >= c_.size()) throw std::out_of_range("QExpansion: coefficient beyond precision");
    return c_[n];
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
  }
  bool is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_integer(); });
  }

  QExpansion truncate(std::size_t n) const {
    if (n > c_.size()) throw std::out_of_range("QExpansion::truncate: beyond precision");
    return QExpansion(weight_, level_, std::vector<Rational>(c_.begin(), c_.begin() + n));
  }

  /// Index of the first nonzero coefficient, or precision() if none.
  std::size_t order() const {
    std::size_t n = 0;
    while (n < c_.size() && c_[n].is_zero()) ++n;
    return n;
  }

  QExpansion& operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend QExpansion operator*(QExpansion a, const Rational& s) { return a *= s; }
  friend QExpansion operator*(const Rational& s, QExpansion a) { return a *= s; }

  friend QExpansion operator+(const QExpansion& a, const QExpansion& b) { return combine(a, b, 1); }
  friend QExpansion operator-(const QExpansion& a, const QExpansion& b) { return combine(a, b, -1); }

  friend QExpansion operator*(const QExpansion& a, const QExpansion& b) {
    const std::size_t n = std::min(a.precision(), b.precision());
    long level = std::lcm(a.level_, b.level_);
    std::vector<Rational> out(n, Rational(0));
    if (a.is_integral() && b.is_integral()) {
      std::vector<BigInt> x(n), y(n), z(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = a.c_[i].num();
        y[i] = b.c_[i].num();
      }
      // Put the sparser factor in the outer loop.
      auto nnz = [](const std::vector<BigInt>& v) {
        return std::count_if(v.begin(), v.end(), [](const BigInt& t) { return t != 0; });
      };
      if (nnz(x) > nnz(y)) std::swap(x, y);
      for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j)
          if (y[j] != 0) mpz_addmul(z[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
      }
      for (std::size_t i = 0; i < n; ++i) out[i] = Rational(z[i]);
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j)
          if (!b.c_[j].is_zero()) out[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return QExpansion(a.weight_ + b.weight_, level, std::move(out));
  }

  QExpansion pow(unsigned e) const {
    QExpansion r = one(level_, precision());
    QExpansion base = *this;
    while (e) {
      if (e & 1u) r = r * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return r;
  }

  friend bool operator==(const QExpansion& a, const QExpansion& b) {
    return a.weight_ == b.weight_ && a.level_ == b.level_ && a.c_ == b.c_;
  }

  /// Header `weight level N`, then N lines `num/den`.
  void write(std::ostream& os) const {
    os << weight_.to_string() << ' ' << level_ << ' ' << c_.size() << '\n';
    for (const auto& x : c_) os << x.to_fraction() << '\n';
  }

  static QExpansion read(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw std::runtime_error("QExpansion::read: missing header");
    std::istringstream hs(header);
    std::string w;
    long level = 0;
    std::size_t n = 0;
    if (!(hs >> w >> level >> n)) throw std::runtime_error("QExpansion::read: malformed header");
    std::vector<Rational> c;
    c.reserve(n);
    std::string line;
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::getline(is, line)) throw std::runtime_error("QExpansion::read: truncated body");
      c.push_back(Rational::parse(line));
    }
    return QExpansion(Rational::parse(w), level, std::move(c));
  }

 private:
  static QExpansion combine(const QExpansion& a, const QExpansion& b, int sign) {
    if (!(a.weight_ == b.weight_)) throw std::invalid_argument("QExpansion: weight mismatch");
    const std::size_t n = std::min(a.precision(), b.precision());
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = sign > 0 ? a.c_[i] + b.c_[i] : a.c_[i] - b.c_[i];
    return QExpansion(a.weight_, std::lcm(a.level_, b.level_), std::move(out));
  }

  Rational weight_{0};
  long level_ = 1;
  std::vector<Rational> c_;
};

/// sigma_k(n) for 1 <= n < N (index 0 unused).
inline std::vector<BigInt> divisor_sums(std::size_t N, unsigned k) {
  std::vector<BigInt> s(N, 0);
  for (std::size_t d = 1; d < N; ++d) {
    BigInt dk = ipow(BigInt(static_cast<unsigned long>(d)), k);
    for (std::size_t m = d; m < N; m += d) s[m] += dk;
  }
  return s;
}

}  // namespace g2lift
