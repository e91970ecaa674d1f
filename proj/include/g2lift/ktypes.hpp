// SU(2) content of Sym^n(Sym^3 C^2) and the K-types of the quaternionic discrete series.
#pragma once

#include <map>
#include <stdexcept>

#include "g2lift/rational.hpp"

namespace g2lift {

/// Highest weight j (Sym^j C^2) -> multiplicity.
using SU2Decomposition = std::map<long, long>;

namespace detail {

inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace detail

/// Two-range floor formula; floor(-1/3) = -1.
inline SU2Decomposition plethysm_symn_sym3(long n) {
  if (n < 0) throw std::invalid_argument("plethysm_symn_sym3: n must be nonnegative");
  using detail::floor_div;
  SU2Decomposition out;
  for (long i = 0; 2 * i <= 3 * n; ++i) {
    long m = floor_div(i, 2) - floor_div(i - 1, 3);
    if (i > n) m -= floor_div(i - n - 1, 2) + 1;
    if (m < 0) throw std::logic_error("plethysm_symn_sym3: negative multiplicity");
    if (m) out[3 * n - 2 * i] = m;
  }
  return out;
}

inline long su2_dimension(const SU2Decomposition& d) {
  long s = 0;
  for (const auto& [j, m] : d) s += (j + 1) * m;
  return s;
}

/// dim Sym^{2k+n} C^2 x Sym^n(W) = (2k + n + 1) C(n + 3, 3).
inline BigInt ktype_dimension(long k, long n) {
  if (k < 2 || n < 0) throw std::invalid_argument("ktype_dimension: need k >= 2, n >= 0");
  BigInt b = BigInt(n + 3) * (n + 2) * (n + 1) / 6;
  return BigInt(2 * k + n + 1) * b;
}

}  // namespace g2lift
