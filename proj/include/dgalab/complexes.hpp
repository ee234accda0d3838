#pragma once

#include <cstdint>
#include <vector>

#include "dgalab/matrix.hpp"
#include "dgalab/poly.hpp"

namespace dgalab {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;  // row-major

PolyMatrix poly_identity(Field f, std::size_t nvars, std::size_t n);
// dimensions inferred from the shapes; throws InputError on a mismatch
PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b);

// Bounded complex C_0 <- C_1 <- ... <- C_len of graded free modules over
// k[x1..xv]. Each term carries generator degrees; differential entries must
// be homogeneous of the matching degree and consecutive differentials must
// compose to zero (checked at construction, exactly).
class PolyComplex {
 public:
  // diffs[i] is d_{i+1}: C_{i+1} -> C_i (same convention as the resolution
  // prefixes); pass one fewer matrix than there are terms.
  static PolyComplex make(Field f, std::size_t nvars,
                          std::vector<std::vector<int>> gen_degrees,
                          std::vector<PolyMatrix> diffs);

  Field field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t length() const { return gen_degrees_.size() - 1; }  // top index
  std::size_t rank(std::size_t i) const { return gen_degrees_[i].size(); }
  const std::vector<int>& degrees(std::size_t i) const { return gen_degrees_[i]; }
  const PolyMatrix& diff(std::size_t i) const { return diffs_[i]; }  // d_{i+1}

  // dimension of the internal-degree-t slice of C_i
  std::size_t slice_dim(std::size_t i, unsigned t) const;
  // homology[i][t] = dim_k H_i(C) in internal degree t, for t <= window
  std::vector<std::vector<std::size_t>> homology(unsigned window) const;
  // no homology in homological degrees >= 1 anywhere on the window
  bool acyclic_positive(unsigned window) const;

  // C / (x_var) C as a complex over one variable fewer
  PolyComplex quotient_variable(std::size_t var) const;

 private:
  PolyComplex() = default;
  DenseMatrix slice_matrix(std::size_t i, unsigned t) const;  // d_{i+1} on slices

  Field field_;
  std::size_t nvars_ = 0;
  std::vector<std::vector<int>> gen_degrees_;
  std::vector<PolyMatrix> diffs_;
};

// Degree-0 chain map f: C -> D given per homological degree (missing top
// components are treated as zero maps). Checks shapes, homogeneity and
// d_D f = f d_C; throws InputError on violation.
void validate_chain_map(const PolyComplex& c, const PolyComplex& d,
                        const std::vector<PolyMatrix>& f);

// cone(f)_i = D_i + C_{i-1}, differential (y, x) -> (d y + f x, -d x)
PolyComplex cone(const PolyComplex& c, const PolyComplex& d, const std::vector<PolyMatrix>& f);

// induced isomorphism on homology slices for all t <= window
bool quasi_iso_direct(const PolyComplex& c, const PolyComplex& d,
                      const std::vector<PolyMatrix>& f, unsigned window);

struct QuotientCheck {
  std::vector<std::vector<std::size_t>> homology;           // original complex
  std::vector<std::vector<std::size_t>> quotient_homology;  // after killing the variable
  bool acyclic = false;
  bool quotient_acyclic = false;
  bool preserved = false;  // acyclic implies quotient_acyclic, on the window
};

QuotientCheck complex_quotient_check(const PolyComplex& c, std::size_t var, unsigned window);

// Seeded two-variable acyclic complexes: block-diagonal regular-element
// covers plus split padding, conjugated by seeded graded unitriangular
// automorphisms. Positive homology vanishes; the cokernel stays regular
// for the second variable, so quotient checks pass non-vacuously.
PolyComplex seeded_acyclic_complex(Field f, std::uint64_t seed);

struct SeededChainMap {
  PolyComplex from, to;
  std::vector<PolyMatrix> map;
  bool built_quasi_iso = false;  // known from the construction
};

// A chain map with known quasi-isomorphism status: an inclusion into a
// split-padded copy (or the zero map), perturbed by a seeded homotopy and
// hidden behind a change of basis.
SeededChainMap seeded_chain_map(Field f, std::uint64_t seed, bool quasi_iso);

}  // namespace dgalab
