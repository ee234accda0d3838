#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgalab/linalg.hpp"

namespace dgalab {

// Truncated discrete-valuation avatar: polynomials in pi over k with a hard
// degree bound. Any arithmetic that would produce a nonzero coefficient at
// degree >= bound throws GuardViolation instead of silently truncating.
class DvrElt {
 public:
  DvrElt(Field f, unsigned bound);  // zero
  static DvrElt constant(Field f, unsigned bound, const FieldScalar& c);
  static DvrElt pi_power(Field f, unsigned bound, unsigned k);  // guard: k < bound

  Field field() const { return field_; }
  unsigned bound() const { return bound_; }
  bool is_zero() const;
  const FieldScalar& coeff(unsigned k) const { return c_.at(k); }
  std::optional<unsigned> valuation() const;  // nullopt for zero

  DvrElt operator+(const DvrElt& o) const;
  DvrElt operator-(const DvrElt& o) const;
  DvrElt operator*(const DvrElt& o) const;
  DvrElt scaled(const FieldScalar& c) const;
  bool operator==(const DvrElt& o) const;

  FieldScalar residue() const { return c_[0]; }  // image in k = Q/(pi)
  // exact division by pi^k; InvariantViolation when not divisible
  DvrElt divide_by_pi_power(unsigned k) const;
  // image in Q/(pi^k): coefficients at degrees >= k dropped (quotient
  // semantics, not a guard violation)
  DvrElt reduce_mod(unsigned k) const;

  std::string str() const;

 private:
  void check_compat(const DvrElt& o) const;
  Field field_;
  unsigned bound_ = 0;
  std::vector<FieldScalar> c_;  // dense, size bound
};

// Witness that the shifted residue field splits off the reduced kernel
// complex of a minimal cover of N = ⊕_j Q/(pi^{a_j}) over the avatar with
// relation pi^n. Every identity is verified exactly during construction.
struct SplitWitnessK {
  unsigned n = 0, bound = 0;
  std::vector<unsigned> exponents;      // the a_j
  std::size_t rank = 0;                 // common rank of both kernel terms
  std::vector<unsigned> kernel_shifts;  // n - a_j, diagonal of the kernel differential
  DenseMatrix dbar;                     // differential of the mod-pi kernel complex
  DenseMatrix eta;                      // action of the degree-1 Koszul class, mod pi
  Vec w1;                               // cycle in degree 1 outside image(eta)
  Vec beta1;                            // functional with beta1(w1) = 1, beta1(im eta) = 0
  std::size_t h1_dim = 0, h0_dim = 0;   // homology of the reduced complex
  bool summand = false;                 // shifted residue field is a direct summand
  bool verified = false;                // all identity checks passed
};

// Executes the splitting construction: minimal cover of N, kernel complex K
// with equal ranks, reduction mod pi, choice of a cycle w1 outside the eta
// image, and the retraction beta with beta∘alpha = identity. Rejects any
// summand exponent outside (0, n); bound defaults to 2n and must be >= 2n.
SplitWitnessK residue_witness(Field f, unsigned n, const std::vector<unsigned>& exponents,
                              unsigned bound = 0);

}  // namespace dgalab
