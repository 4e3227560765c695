#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace skv {

// Solves the square system m * x = rhs by exact Gaussian elimination over a
// field F.  F must provide is_zero(f) and field_inverse(f) (found by ADL),
// plus +, -, *.  Returns nullopt when the matrix is singular.  Pivoting picks
// the first nonzero entry: with exact arithmetic there is no stability
// concern, only a zero/nonzero test.
template <typename F>
std::optional<std::vector<F>> solve_linear(std::vector<std::vector<F>> m,
                                           std::vector<F> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(m[pivot][col])) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);

    const F inv = field_inverse(m[col][col]);
    for (std::size_t j = col; j < n; ++j) m[col][j] = m[col][j] * inv;
    rhs[col] = rhs[col] * inv;

    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || is_zero(m[row][col])) continue;
      const F factor = m[row][col];
      for (std::size_t j = col; j < n; ++j) {
        m[row][j] = m[row][j] - factor * m[col][j];
      }
      rhs[row] = rhs[row] - factor * rhs[col];
    }
  }
  return rhs;
}

}  // namespace skv
