#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgalab/linalg.hpp"
#include "dgalab/sparse.hpp"

namespace dgalab {

// Finite graded strictly skew-commutative k-algebra, given by a homogeneous
// basis s_0 = 1, s_1, ..., s_{n-1} with degrees (0 for the unit, >= 1
// otherwise) and structure constants; may carry a degree -1 differential.
// Construction checks shape only (sorted tables, field tags, the grading of
// the basis itself); the algebra axioms live in check_axioms so defective
// tables can be built and diagnosed.
class SkewAlgebra {
 public:
  using Ptr = std::shared_ptr<const SkewAlgebra>;

  static Ptr make(Field f, std::vector<std::string> names, std::vector<int> degrees,
                  std::vector<std::vector<SparseVec>> mult,
                  std::optional<DenseMatrix> differential = std::nullopt,
                  std::optional<std::pair<std::size_t, std::size_t>> preferred = std::nullopt);

  std::size_t dim() const { return names_.size(); }
  Field field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& degrees() const { return degrees_; }
  const SparseVec& mult(std::size_t i, std::size_t j) const { return mult_[i][j]; }
  const std::optional<DenseMatrix>& differential() const { return diff_; }

  Vec multiply(const Vec& a, const Vec& b) const;
  Vec mult_basis(std::size_t i, const Vec& v) const;  // s_i * v

  int top_degree() const;
  std::vector<std::size_t> degree_indices(int d) const;
  // -1 if v is zero or mixes degrees
  int homogeneous_degree(const Vec& v) const;
  std::string element_str(const Vec& v) const;

  LinearSpan positive_square() const;  // (S_+)^2
  // socle of the augmentation ideal: {v in S_+ : S_+ * v = 0}, computed
  // degree by degree so the returned basis vectors are homogeneous
  std::vector<Vec> socle_positive() const;

  // set by the class-table builder: preferred witness pair (basis indices)
  const std::optional<std::pair<std::size_t, std::size_t>>& preferred_pair() const {
    return preferred_;
  }

 private:
  SkewAlgebra() = default;

  Field field_;
  std::vector<std::string> names_;
  std::vector<int> degrees_;
  std::vector<std::vector<SparseVec>> mult_;
  std::optional<DenseMatrix> diff_;
  std::optional<std::pair<std::size_t, std::size_t>> preferred_;
};

// Axiom audit. All checks run; the first failure is described with the
// offending basis elements so a bad table can be traced back.
struct SkewAxiomReport {
  bool unit_ok = true;
  bool graded_ok = true;
  bool skew_ok = true;        // s_i s_j = (-1)^{|i||j|} s_j s_i
  bool odd_squares_ok = true; // s^2 = 0 in odd degree
  bool assoc_ok = true;
  bool diff_ok = true;        // degree -1, d(1) = 0, d^2 = 0, Leibniz
  std::string first_failure;  // empty iff everything passed

  bool pass() const {
    return unit_ok && graded_ok && skew_ok && odd_squares_ok && assoc_ok && diff_ok;
  }
};

SkewAxiomReport check_axioms(const SkewAlgebra& s);

// Homogeneous socle pair that stays independent in S_+/(S_+)^2.
struct SocleWitness {
  Vec u, v;
  int a = 0, b = 0;          // degrees of u, v
  std::string u_str, v_str;
  bool preferred = false;    // came from the builder's canonical pair
};

// Looks for two socle elements of S_+ that are independent modulo (S_+)^2:
// the builder's preferred pair is validated first, then a deterministic
// degree-by-degree greedy search. Requires a zero differential.
std::optional<SocleWitness> socle_split_pair(const SkewAlgebra& s);

// Basis-adapted projection S -> span{u, v} whose complement contains
// (S_+)^2, with the module axiom sigma(s*y) = s*sigma(y) and
// sigma|span{u,v} = id verified on all basis pairs. Invalid witness ->
// InputError; a verification miss -> InvariantViolation.
struct SplitCheck {
  DenseMatrix sigma;  // n x n, image inside span{u, v}, zero on the unit
  std::size_t pairs_checked = 0;
};

SplitCheck split_witness(const SkewAlgebra& s, const SocleWitness& w);

// Conjugates the structure constants by a seeded random invertible graded
// change of basis (identity on the unit). Degrees survive, names stay as
// labels of the new basis, any preferred pair is dropped.
SkewAlgebra::Ptr conjugate_graded(const SkewAlgebra& s, std::uint64_t seed);

}  // namespace dgalab
