// Small dynamic exact linear algebra (row reduction, kernels).
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "g2lift/rational.hpp"

namespace g2lift {

using RationalRow = std::vector<Rational>;
using RationalMatrix = std::vector<RationalRow>;

/// In-place reduced row echelon form. Returns pivot columns.
inline std::vector<std::size_t> rref(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    Rational inv = a[r][c].inverse();
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Basis of {x : a x = 0}; `cols` is needed when a has no rows.
inline RationalMatrix nullspace(RationalMatrix a, std::size_t cols) {
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("nullspace: ragged matrix");
  auto piv = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : piv) is_pivot[c] = true;
  RationalMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalRow v(cols, Rational(0));
    v[f] = Rational(1);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::size_t rank(RationalMatrix a) { return rref(a).size(); }

}  // namespace g2lift
