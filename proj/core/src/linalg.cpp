#include "linalg.hpp"

#include <utility>

namespace ehrhart::detail {

std::size_t row_reduce(RationalMatrix& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational inv = 1 / rows[rank][c];
    for (std::size_t j = c; j < cols; ++j) rows[rank][j] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational factor = rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::size_t rank(RationalMatrix rows) { return row_reduce(rows); }

std::size_t affine_rank(const std::vector<const std::vector<Integer>*>& points) {
  if (points.size() < 2) return 0;
  const auto& base = *points.front();
  RationalMatrix rows;
  rows.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> row(base.size());
    for (std::size_t j = 0; j < base.size(); ++j) row[j] = Rational((*points[i])[j] - base[j]);
    rows.push_back(std::move(row));
  }
  return row_reduce(rows);
}

std::optional<std::vector<Rational>> kernel_line(RationalMatrix rows, std::size_t cols) {
  const std::size_t r = row_reduce(rows);
  if (cols - r != 1) return std::nullopt;

  // Locate pivot columns of the reduced form; the single free column
  // parametrizes the kernel.
  std::vector<std::size_t> pivot_col(r);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t c = 0;
    while (rows[i][c] == 0) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;

  std::vector<Rational> v(cols);
  v[free_col] = 1;
  for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = -rows[i][free_col];
  return v;
}

Integer determinant(IntegerMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return Integer(1);
  int sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return Integer(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<Integer> primitive_integer(const std::vector<Rational>& v) {
  Integer lcm_den(1);
  for (const auto& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator_of(x));
  std::vector<Integer> out(v.size());
  Integer g(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = numerator_of(v[i]) * (lcm_den / denominator_of(v[i]));
    g = boost::multiprecision::gcd(g, out[i]);
  }
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

}  // namespace ehrhart::detail
