#pragma once

#include <map>
#include <optional>

#include "dgalab/matrix.hpp"

namespace dgalab {

// Incremental reduced echelon basis of a subspace of k^n. Stored rows are
// fully reduced against each other (pivot entries 1, pivot coordinates
// eliminated everywhere else), so reduce() is a canonical projection along
// the subspace and membership tests are exact.
class LinearSpan {
 public:
  LinearSpan(Field f, std::size_t n) : field_(f), n_(n) {}

  // Returns true when v was independent (the span grew).
  bool insert(Vec v);
  // Canonical residual of v modulo the span (zero iff member).
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  Field field() const { return field_; }
  std::vector<Vec> basis() const;
  const std::map<std::size_t, Vec>& rows() const { return rows_; }

  static bool is_zero_vec(const Vec& v);

 private:
  Field field_;
  std::size_t n_;
  std::map<std::size_t, Vec> rows_;  // pivot index -> row
};

// Echelon with bookkeeping: expresses members as exact combinations of the
// generators in insertion order.
class SpanSolver {
 public:
  SpanSolver(Field f, std::size_t n) : field_(f), n_(n) {}

  // Adds a generator (dependent generators are fine); true when independent.
  bool add(const Vec& v);
  std::size_t added() const { return count_; }
  std::size_t dim() const { return rows_.size(); }

  // Coordinates c with v = sum c_j * generator_j, or nullopt if v is not
  // in the span. Coordinates are canonical for the insertion order.
  std::optional<std::vector<FieldScalar>> solve(const Vec& v) const;

 private:
  Field field_;
  std::size_t n_;
  std::size_t count_ = 0;
  // pivot -> (row, record); row = sum record_j * generator_j
  std::map<std::size_t, std::pair<Vec, std::vector<FieldScalar>>> rows_;
};

// Dimension of U + W.
std::size_t sum_dim(const LinearSpan& u, const LinearSpan& w);
// dim(U ∩ W) = dim U + dim W - dim(U + W).
std::size_t intersection_dim(const LinearSpan& u, const LinearSpan& w);

}  // namespace dgalab
