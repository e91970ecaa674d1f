// Exact rational scalars backed by GMP.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace g2lift {

using BigInt = mpz_class;

/// Arbitrary-precision rational kept in lowest terms with a positive
/// denominator. Every constructor canonicalizes.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(static_cast<long>(v)) {}
  Rational(long v) : v_(v) {}
  Rational(long long v) : v_(BigInt(std::to_string(v))) {}
  Rational(const BigInt& n) : v_(n) {}
  template <class U>
  Rational(const __gmp_expr<mpz_t, U>& e) : v_(BigInt(e)) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "p", "p/q", with optional surrounding whitespace and sign.
  static Rational parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    auto valid_int = [](std::string_view s) {
      if (s.empty()) return false;
      std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (i == s.size()) return false;
      for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
      return true;
    };
    auto to_int = [](std::string_view s) {
      if (s[0] == '+') s.remove_prefix(1);
      return BigInt(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      if (!valid_int(text))
        throw std::invalid_argument("Rational::parse: bad literal '" + std::string(text) + "'");
      return Rational(to_int(text));
    }
    auto num = trim(text.substr(0, slash));
    auto den = trim(text.substr(slash + 1));
    if (!valid_int(num) || !valid_int(den))
      throw std::invalid_argument("Rational::parse: bad literal '" + std::string(text) + "'");
    return Rational(to_int(num), to_int(den));
  }

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
  }
  Rational pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    mpq_class r(n, d);
    return Rational(r);
  }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const {
    return is_integer() ? v_.get_num().get_str() : v_.get_str();
  }
  /// Always "p/q" (denominator 1 included); the serialization form.
  std::string to_fraction() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt ipow(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
inline bool rational_sqrt(const Rational& r, Rational& out) {
  if (r.sign() < 0) return false;
  BigInt n = r.num(), d = r.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  BigInt sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  out = Rational(sn, sd);
  return true;
}

/// p-adic valuation of a nonzero integer.
inline int valuation(BigInt n, unsigned long p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  int v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++v;
  }
  return v;
}

/// Prime factorization by trial division. Throws if a cofactor above 10^18
/// survives trial division up to 10^6 (not certifiable here).
inline std::vector<std::pair<BigInt, int>> factor_integer(BigInt n) {
  std::vector<std::pair<BigInt, int>> out;
  if (n < 0) n = -n;
  if (n == 0) throw std::domain_error("factor_integer: zero");
  for (unsigned long p = 2; p <= 1000000UL; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      int e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++e;
      }
      out.emplace_back(BigInt(p), e);
    }
  }
  if (n > 1) {
    if (n >= BigInt("1000000000000000000")) {
      if (mpz_perfect_square_p(n.get_mpz_t())) {
        BigInt s;
        mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
        if (mpz_probab_prime_p(s.get_mpz_t(), 40) == 0)
          throw std::domain_error("factor_integer: cofactor too large");
        out.emplace_back(s, 2);
        return out;
      }
      if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
        throw std::domain_error("factor_integer: cofactor too large");
      out.emplace_back(n, 1);
      return out;
    }
    // n < 10^18 with no prime factor below 10^6: prime, prime^2, or p*q.
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
      out.emplace_back(n, 1);
    } else if (mpz_perfect_square_p(n.get_mpz_t())) {
      BigInt s;
      mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
      out.emplace_back(s, 2);
    } else {
      // Squarefree semiprime; the factors themselves are unknown but never
      // needed individually by callers that only ask for squarefree parts.
      out.emplace_back(n, 1);
    }
  }
  return out;
}

/// Squarefree part of a nonzero integer, sign preserved.
inline BigInt squarefree_part(const BigInt& n) {
  BigInt s = 1;
  for (auto& [p, e] : factor_integer(n))
    if (e % 2) s *= p;
  return n < 0 ? BigInt(-s) : s;
}

}  // namespace g2lift
