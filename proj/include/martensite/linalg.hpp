#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "martensite/algebraic.hpp"
#include "martensite/interval.hpp"
#include "martensite/rational.hpp"
#include "martensite/sym_strain.hpp"

namespace martensite {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// In-place reduced row echelon form over a field; returns pivot columns.
template <class T>
std::vector<size_t> rref(Matrix<T>& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    T inv = T(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      T f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
size_t rank(Matrix<T> m) {
  return rref(m).size();
}

/// Basis of {x : m x = 0}.
template <class T>
Matrix<T> nullspace(Matrix<T> m, size_t cols) {
  auto pivots = rref(m);
  Matrix<T> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<T> x(cols, T(0));
    x[free] = T(1);
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = T(0) - m[k][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Dimension of the affine span of the given strains.
template <class T>
int affine_dim(const std::vector<SymStrain<T>>& pts) {
  if (pts.size() <= 1) return 0;
  Matrix<T> rows;
  for (size_t i = 1; i < pts.size(); ++i) {
    SymStrain<T> d = pts[i] - pts[0];
    rows.emplace_back(d.v.begin(), d.v.end());
  }
  return static_cast<int>(rank(std::move(rows)));
}

/// Determinant of a square interval matrix by cofactor expansion; the result
/// encloses the determinant of every point matrix inside.
Interval interval_det(const Matrix<Interval>& m);

}  // namespace martensite
