#pragma once

#include <optional>
#include <vector>

#include "dgalab/field.hpp"

namespace dgalab {

using Vec = std::vector<FieldScalar>;

Vec zero_vec(Field f, std::size_t n);

// Dense exact matrix, row-major, all entries sharing one field tag.
class DenseMatrix {
 public:
  DenseMatrix() : rows_(0), cols_(0) {}
  DenseMatrix(Field f, std::size_t rows, std::size_t cols);
  static DenseMatrix identity(Field f, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  FieldScalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const FieldScalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  DenseMatrix operator*(const DenseMatrix& o) const;
  DenseMatrix operator+(const DenseMatrix& o) const;
  DenseMatrix operator-(const DenseMatrix& o) const;
  DenseMatrix scaled(const FieldScalar& c) const;
  DenseMatrix transpose() const;
  Vec apply(const Vec& v) const;  // matrix * column vector
  bool is_zero() const;
  bool operator==(const DenseMatrix& o) const;

 private:
  std::size_t rows_, cols_;
  Field field_;
  std::vector<FieldScalar> a_;
};

struct RankKernel {
  std::size_t rank = 0;
  std::vector<Vec> kernel;  // right-kernel basis, deterministic order
};

// Exact rank and right-kernel basis. Over Q: rows are scaled integral and
// eliminated fraction-free (Bareiss) with first-nonzero pivoting; kernel
// vectors are integer-primitive with positive leading entry. Over F_p:
// plain elimination; kernel vectors have leading entry 1.
RankKernel rank_kernel(const DenseMatrix& m);

std::size_t rank_of(const DenseMatrix& m);

// One exact solution of m * x = b (free variables set to 0), or nullopt
// when the system is inconsistent.
std::optional<Vec> solve_linear(const DenseMatrix& m, const Vec& b);

}  // namespace dgalab
