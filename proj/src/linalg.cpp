#include "martensite/linalg.hpp"

namespace martensite {

namespace {

Interval det_rec(const Matrix<Interval>& m, std::vector<size_t>& cols, size_t row) {
  if (row == m.size()) return Interval(Rational(1));
  Interval acc(Rational(0));
  int sign = 1;
  for (size_t k = 0; k < cols.size(); ++k) {
    size_t c = cols[k];
    cols.erase(cols.begin() + static_cast<long>(k));
    Interval term = m[row][c] * det_rec(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<long>(k), c);
    acc = sign > 0 ? acc + term : acc - term;
    sign = -sign;
  }
  return acc;
}

}  // namespace

Interval interval_det(const Matrix<Interval>& m) {
  std::vector<size_t> cols(m.size());
  for (size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return det_rec(m, cols, 0);
}

}  // namespace martensite
