#include "bisetcalc/exact_linalg.hpp"

#include <stdexcept>

namespace bisetcalc {

int rat_rank(RatMatrix m) {
  if (m.empty()) return 0;
  const size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t pr = SIZE_MAX;
    for (size_t r = row; r < m.size(); ++r)
      if (m[r][col] != 0) { pr = r; break; }
    if (pr == SIZE_MAX) continue;
    std::swap(m[row], m[pr]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) { x *= inv; x.canonicalize(); }
    for (size_t r = row + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (size_t c = col; c < cols; ++c) {
        m[r][c] -= f * m[row][c];
        m[r][c].canonicalize();
      }
    }
    ++row;
  }
  return static_cast<int>(row);
}

int rat_nullspace_dim(const RatMatrix& m) {
  if (m.empty()) return 0;
  return static_cast<int>(m[0].size()) - rat_rank(m);
}

std::vector<RatVector> rat_nullspace(RatMatrix m) {
  if (m.empty()) return {};
  const size_t cols = m[0].size();
  std::vector<size_t> pivot_of_row;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t pr = SIZE_MAX;
    for (size_t r = row; r < m.size(); ++r)
      if (m[r][col] != 0) { pr = r; break; }
    if (pr == SIZE_MAX) continue;
    std::swap(m[row], m[pr]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) { x *= inv; x.canonicalize(); }
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (size_t c = 0; c < cols; ++c) {
        m[r][c] -= f * m[row][c];
        m[r][c].canonicalize();
      }
    }
    pivot_of_row.push_back(col);
    ++row;
  }
  std::vector<char> is_pivot(cols, 0);
  for (size_t p : pivot_of_row) is_pivot[p] = 1;
  std::vector<RatVector> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(cols, Rational(0));
    v[free] = 1;
    for (size_t r = 0; r < pivot_of_row.size(); ++r)
      v[pivot_of_row[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational det_bareiss(const RatMatrix& m) {
  const size_t n = m.size();
  if (n == 0) return Rational(1);
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant needs a square matrix");

  // clear denominators per row, track the scale
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Rational scale(1);
  for (size_t i = 0; i < n; ++i) {
    Integer l(1);
    for (const auto& x : m[i]) {
      Rational c = x;
      c.canonicalize();
      l = lcm(l, c.get_den());
    }
    scale /= Rational(l);
    for (size_t j = 0; j < n; ++j) {
      Rational c = m[i][j] * Rational(l);
      c.canonicalize();
      a[i][j] = c.get_num();
    }
  }

  Integer prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t swap_row = SIZE_MAX;
      for (size_t r = k + 1; r < n; ++r)
        if (a[r][k] != 0) { swap_row = r; break; }
      if (swap_row == SIZE_MAX) return Rational(0);
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
    prev = a[k][k];
  }
  Rational det = Rational(a[n - 1][n - 1]) * scale * sign;
  det.canonicalize();
  return det;
}

RatVector RatSpan::reduce(RatVector v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rational& c = v[pivots_[i]];
    if (c == 0) continue;
    Rational f = c;
    for (size_t j = pivots_[i]; j < v.size(); ++j) {
      v[j] -= f * rows_[i][j];
      v[j].canonicalize();
    }
  }
  return v;
}

bool RatSpan::add(RatVector v) {
  v = reduce(std::move(v));
  size_t p = 0;
  while (p < v.size() && v[p] == 0) ++p;
  if (p == v.size()) return false;
  Rational inv = 1 / v[p];
  for (auto& x : v) { x *= inv; x.canonicalize(); }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RatSpan::contains(RatVector v) const {
  v = reduce(std::move(v));
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace bisetcalc
