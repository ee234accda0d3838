#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dgalab/matrix.hpp"

namespace dgalab {

// Sparse exact column vector: (index, coefficient) pairs sorted by index,
// no zero coefficients. Backbone of the resolution tower, where dense
// elimination would not reach the required step counts.
using SparseVec = std::vector<std::pair<std::uint32_t, FieldScalar>>;

SparseVec sparse_from_dense(const Vec& v);
Vec sparse_to_dense(const SparseVec& v, Field f, std::size_t n);

// y += c * x (merge of sorted vectors).
void sparse_axpy(SparseVec& y, const FieldScalar& c, const SparseVec& x);
void sparse_scale(SparseVec& v, const FieldScalar& c);

// Incremental sparse echelon under deterministic min-index pivoting.
// Each stored column has its pivot (smallest index) scaled to 1; reduction
// repeatedly cancels the current smallest index against stored pivots, so
// the result is independent of container iteration order.
class SparseEchelon {
 public:
  explicit SparseEchelon(Field f) : field_(f) {}

  // Reduces v against the stored pivots (front index strictly increases
  // each step); the returned vector is empty iff v was in the span.
  SparseVec reduce(SparseVec v) const;
  // Reduce-then-store; returns true when the span grew.
  bool insert(SparseVec v);
  std::size_t dim() const { return cols_.size(); }
  bool contains(SparseVec v) const { return reduce(std::move(v)).empty(); }

 private:
  Field field_;
  std::unordered_map<std::uint32_t, SparseVec> cols_;  // pivot index -> column
};

struct SparseKernel {
  std::size_t rank = 0;
  std::vector<SparseVec> kernel;  // basis of the right kernel, in column order
};

// Rank and (optionally) right-kernel basis of the matrix whose columns are
// given. Deterministic: columns processed left to right, min-index pivots.
// Kernel vectors carry coefficient 1 at their defining column.
SparseKernel sparse_kernel(std::size_t rows, const std::vector<SparseVec>& cols, Field f,
                           bool want_kernel);

std::size_t sparse_rank(std::size_t rows, const std::vector<SparseVec>& cols, Field f);

}  // namespace dgalab
