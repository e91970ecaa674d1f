// Seeded generators for property tests.
#pragma once

#include <random>

#include "g2lift/g2.hpp"

namespace testing_support {

using namespace g2lift;

class RandomRationals {
 public:
  explicit RandomRationals(unsigned long long seed, long bound = 1000) : rng_(seed), bound_(bound) {}

  Rational rational() {
    std::uniform_int_distribution<long> num(-bound_, bound_), den(1, bound_);
    return Rational(num(rng_), den(rng_));
  }
  Rational nonzero() {
    for (;;) {
      Rational r = rational();
      if (!r.is_zero()) return r;
    }
  }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Vec4 vec4() { return {rational(), rational(), rational(), rational()}; }
  Matrix2 gl2() {
    for (;;) {
      Matrix2 a = make2(rational(), rational(), rational(), rational());
      if (!det2(a).is_zero()) return a;
    }
  }
  Matrix2 gl2_small(long h) {
    for (;;) {
      std::uniform_int_distribution<long> e(-h, h);
      Matrix2 a = make2(Rational(e(rng_)), Rational(e(rng_)), Rational(e(rng_)), Rational(e(rng_)));
      if (!det2(a).is_zero()) return a;
    }
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  long bound_;
};

}  // namespace testing_support
