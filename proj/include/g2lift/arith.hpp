// Quadratic characters and fundamental discriminants.
#pragma once

#include <stdexcept>

#include "g2lift/rational.hpp"

namespace g2lift {

inline bool is_squarefree(const BigInt& n) {
  if (n == 0) return false;
  for (const auto& [p, e] : factor_integer(n))
    if (e > 1) return false;
  return true;
}

/// D = 1 mod 4 squarefree, or D = 4m with m = 2, 3 mod 4 squarefree. D = 1 is excluded.
inline bool is_fundamental_discriminant(const BigInt& D) {
  if (D == 0 || D == 1) return false;
  BigInt r = D % 4;
  if (r < 0) r += 4;
  if (r == 1) return is_squarefree(D);
  if (r != 0) return false;
  BigInt m = D / 4, rm = m % 4;
  if (rm < 0) rm += 4;
  return (rm == 2 || rm == 3) && is_squarefree(m);
}

/// Kronecker symbol (D / n) for n >= 1, D fundamental or 1.
inline int kronecker_chi(const BigInt& D, const BigInt& n) {
  if (!(D == 1) && !is_fundamental_discriminant(D)) throw std::invalid_argument("kronecker_chi: D is not a fundamental discriminant");
  if (n < 1) throw std::invalid_argument("kronecker_chi: n must be positive");
  if (D == 1) return 1;
  return mpz_kronecker(D.get_mpz_t(), n.get_mpz_t());
}

/// Same symbol for a precomputed fundamental D; no validation.
inline int kronecker_unchecked(const BigInt& D, long n) {
  if (D == 1) return 1;
  BigInt nn(n);
  return mpz_kronecker(D.get_mpz_t(), nn.get_mpz_t());
}

}  // namespace g2lift
