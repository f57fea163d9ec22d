#pragma once

#include <vector>

#include "bisetcalc/rational.hpp"

namespace bisetcalc {

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

int rat_rank(RatMatrix m);
int rat_nullspace_dim(const RatMatrix& m);  // columns - rank

// Basis of { x : m x = 0 }, one vector per free column.
std::vector<RatVector> rat_nullspace(RatMatrix m);

// Exact determinant by fraction-free (Bareiss) elimination after clearing
// denominators row by row.
Rational det_bareiss(const RatMatrix& m);

// Incremental row space with reduction, over the rationals.
class RatSpan {
 public:
  // returns true when the vector enlarged the span
  bool add(RatVector v);
  bool contains(RatVector v) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  RatVector reduce(RatVector v) const;
  std::vector<RatVector> rows_;   // echelon, pivots normalized to 1
  std::vector<size_t> pivots_;
};

// Generic echelon span over any exact field element type providing
// +,-,*, is_zero() and inverse(). Used with Cyclotomic.
template <class F>
class FieldSpan {
 public:
  bool add(std::vector<F> v) {
    reduce_inplace(v);
    size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return false;
    F inv = v[p].inverse();
    for (auto& x : v) x = x * inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  // reduce v against the span; zero iff v was in the span
  void reduce_inplace(std::vector<F>& v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
      const F& c = v[pivots_[i]];
      if (c.is_zero()) continue;
      F f = c;
      for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - f * rows_[i][j];
    }
  }

  bool contains(std::vector<F> v) const {
    reduce_inplace(v);
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<F>>& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

 private:
  std::vector<std::vector<F>> rows_;
  std::vector<size_t> pivots_;
};

}  // namespace bisetcalc
