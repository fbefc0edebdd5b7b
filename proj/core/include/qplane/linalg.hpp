#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qplane/errors.hpp"

namespace qplane {

// Dense row-major matrix over a field F (Rational or Scalar). Elimination always
// pivots on the first nonzero entry of a column, scanning rows top to bottom,
// so every result is reproducible.
template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
Matrix<F> zero_matrix(std::size_t rows, std::size_t cols) {
  return Matrix<F>(rows, std::vector<F>(cols, F(0)));
}

template <class F>
Matrix<F> identity_matrix(std::size_t n) {
  Matrix<F> m = zero_matrix<F>(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = F(1);
  return m;
}

template <class F>
Matrix<F> matmul(const Matrix<F>& a, const Matrix<F>& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix<F> r = zero_matrix<F>(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] = r[i][j] + a[i][l] * b[l][j];
    }
  return r;
}

template <class F>
std::vector<F> matvec(const Matrix<F>& a, const std::vector<F>& v) {
  std::vector<F> r(a.size(), F(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] = r[i] + a[i][j] * v[j];
  return r;
}

// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const F inv = F(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      const F f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref(m).size();
}

// Basis of the right null space {v : m v = 0}, one vector per free column in
// increasing column order, each with a 1 in its free column.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m, std::size_t cols) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& m) {
  if (m.empty()) throw InvariantViolation("nullspace of an empty matrix needs a column count");
  return nullspace(m, m[0].size());
}

template <class F>
F determinant(Matrix<F> m) {
  const std::size_t n = m.size();
  F det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m[p][c])) ++p;
    if (p == n) return F(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det = det * m[c][c];
    const F inv = F(1) / m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m[i][c])) continue;
      const F f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
    }
  }
  return det;
}

// Solves m x = b for square invertible m; throws when singular.
template <class F>
std::vector<F> solve(const Matrix<F>& m, const std::vector<F>& b) {
  const std::size_t n = m.size();
  Matrix<F> aug = m;
  for (std::size_t i = 0; i < n; ++i) aug[i].push_back(b[i]);
  const auto pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1) throw InvariantViolation("singular linear system");
  std::vector<F> x(n, F(0));
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  const std::size_t n = m.size();
  Matrix<F> aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n, F(0));
    aug[i][n + i] = F(1);
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw InvariantViolation("matrix is not invertible");
  Matrix<F> r = zero_matrix<F>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i][j] = aug[i][n + j];
  return r;
}

}  // namespace qplane
