#pragma once

#include "dgalab/algebra.hpp"

namespace dgalab {

inline constexpr unsigned kResolveCap = 24;

// One differential d_{i+1}: F_{i+1} -> F_i of a minimal free resolution.
// Column l is the image of the l-th generator of F_{i+1} in k-coordinates
// of F_i = A^{b_i} (index j*n + s <-> e_j ⊗ b_s).
struct DiffLevel {
  std::size_t rows = 0;
  std::vector<SparseVec> cols;
};

// Prefix F_steps -> ... -> F_0 -> M of the minimal free resolution.
// betti[i] for i in [0, steps]; diffs[i] = d_{i+1} (so diffs has `steps`
// entries); syz_dims[i] = dim_k ker(F_i -> F_{i-1}) with F_{-1} = M.
// Levels are shared immutable blocks, so copies are cheap and prefixes of
// different lengths of one module alias the same differentials.
struct ResolutionPrefix {
  Module::Ptr module;
  std::vector<std::size_t> betti;
  std::vector<std::size_t> syz_dims;
  std::vector<Vec> generators;  // minimal generators of M, k-coordinates
  std::vector<std::shared_ptr<const DiffLevel>> diffs;
};

// Minimal free resolution by iterated exact syzygy kernels, memoized per
// module and extended in place on deeper requests. steps is capped at 24;
// internal callers that need one level past a user range set allow_deep.
ResolutionPrefix resolve(const Module::Ptr& m, unsigned steps, bool allow_deep = false);

// Re-checks d∘d = 0 and minimality (no unit coordinates anywhere) on a
// computed prefix; throws InvariantViolation on failure.
void verify_resolution(const ResolutionPrefix& r);

struct BettiTable {
  std::vector<std::size_t> betti;
  // observed-prefix flags, not asymptotic claims
  std::optional<unsigned> eventually_zero_from;      // all later entries zero
  std::optional<unsigned> strictly_increasing_from;  // strictly rising to the end
};

BettiTable betti_table(const Module::Ptr& m, unsigned range);

struct BassTable {
  std::vector<std::size_t> mu;  // mu_i = dim Ext^i(k, M)
};

// dim_k Ext^i_A(M, N) for i in [0, range], via Hom(F_*, N) of the minimal
// resolution of M. Throws InputError when M, N live over different algebras.
std::vector<std::size_t> ext_dims(const Module::Ptr& m, const Module::Ptr& n, unsigned range);

// dim_k Tor_i^A(M, N) for i in [0, range], via F_* ⊗ N.
std::vector<std::size_t> tor_dims(const Module::Ptr& m, const Module::Ptr& n, unsigned range);

BassTable bass_table(const Module::Ptr& m, unsigned range);

// Minimal generator counts mu(Ext^i(M,N)) of the Ext modules (dimension of
// Ext^i modulo m·Ext^i), for the generator-count descent checks.
std::vector<std::size_t> ext_generator_counts(const Module::Ptr& m, const Module::Ptr& n,
                                              unsigned range);

// Independent degree-zero oracles, computed without resolutions:
// dim_k Hom_A(M, N) by solving the A-linearity system directly, and
// dim_k (M ⊗_A N) by modding M ⊗_k N by the balancing relations.
std::size_t hom_dim(const Module::Ptr& m, const Module::Ptr& n);
std::size_t tensor_dim(const Module::Ptr& m, const Module::Ptr& n);

}  // namespace dgalab
