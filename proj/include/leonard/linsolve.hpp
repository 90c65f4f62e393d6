#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace leonard {

/// Solves rows * x = rhs over any exact field type T (Scalar, ExtValue) by
/// Gauss-Jordan elimination. Returns one solution with free variables set to
/// zero, or nullopt if the system is inconsistent. `zero` supplies the
/// additive identity (T carries its field, so it cannot be default-built).
template <class T>
std::optional<std::vector<T>> solve_linear(std::vector<std::vector<T>> rows, std::vector<T> rhs, const T& zero) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.front().size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && rows[p][c].is_zero()) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    const T inv = rows[r][c].inverse();
    for (std::size_t j = c; j < n; ++j) rows[r][j] = rows[r][j] * inv;
    rhs[r] = rhs[r] * inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const T f = rows[i][c];
      for (std::size_t j = c; j < n; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
      rhs[i] = rhs[i] - f * rhs[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i) {
    if (!rhs[i].is_zero()) return std::nullopt;
  }
  std::vector<T> x(n, zero);
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = rhs[i];
  return x;
}

}  // namespace leonard
