#pragma once

#include "dgalab/algebra.hpp"
#include "dgalab/skew.hpp"

namespace dgalab {

// Homology dimensions (index 0..e) of the exterior differential complex on
// the e marked generators. Errors when the marked generators fail to span
// m/m^2 (the complex would not compute what callers expect).
std::vector<std::size_t> koszul_homology(const Algebra::Ptr& a);

// The same homology carried as a graded skew algebra: basis h<j>_<i> in
// degree j, unit = the class of 1, products computed on cycle
// representatives and reduced modulo boundaries.
SkewAlgebra::Ptr koszul_homology_algebra(const Algebra::Ptr& a);

// True when the positive part of the homology algebra multiplies to zero.
bool golod_multiplication(const Algebra::Ptr& a);

// Coefficients 0..range of (1+t)^e / (1 - sum_{j>=1} dim H_j t^{j+1}),
// computed by exact integer power-series division.
std::vector<BigInt> golod_series(const Algebra::Ptr& a, std::size_t range);

}  // namespace dgalab
