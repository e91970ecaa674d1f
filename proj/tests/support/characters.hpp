// SU(2) character arithmetic used as the independent plethysm oracle.
#pragma once

#include <map>
#include <vector>

#include "g2lift/ktypes.hpp"

namespace oracles {

using g2lift::BigInt;
using Laurent = std::map<long, BigInt>;

inline Laurent mul(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) r[i + j] += x * y;
  return r;
}

/// h_n of {x^3, x, x^-1, x^-3}, n = 0..N, by Newton's identities n h_n = sum_{i=1}^n p_i h_{n-i}.
inline std::vector<Laurent> complete_homogeneous(long N) {
  const long w[] = {3, 1, -1, -3};
  std::vector<Laurent> p(N + 1), h(N + 1);
  for (long i = 1; i <= N; ++i)
    for (long e : w) p[i][e * i] += 1;
  h[0][0] = 1;
  for (long n = 1; n <= N; ++n) {
    Laurent acc;
    for (long i = 1; i <= n; ++i)
      for (const auto& [e, c] : mul(p[i], h[n - i])) acc[e] += c;
    for (auto& [e, c] : acc) {
      if (c % n != 0) throw std::logic_error("complete_homogeneous: inexact division");
      c /= n;
    }
    h[n] = acc;
  }
  return h;
}

/// Highest weights of a character: mult(j) = coef(j) - coef(j + 2).
inline g2lift::SU2Decomposition decompose(const Laurent& ch) {
  g2lift::SU2Decomposition d;
  auto coef = [&](long j) {
    auto it = ch.find(j);
    return it == ch.end() ? BigInt(0) : it->second;
  };
  long top = ch.empty() ? 0 : ch.rbegin()->first;
  for (long j = top; j >= 0; --j) {
    BigInt m = coef(j) - coef(j + 2);
    if (m < 0) throw std::logic_error("decompose: not a character");
    if (m != 0) d[j] = m.get_si();
  }
  return d;
}

}  // namespace oracles
