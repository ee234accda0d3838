#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgalab/complexes.hpp"
#include "dgalab/resolution.hpp"

namespace dgalab {

inline constexpr unsigned kRigidityExponentCap = 8;
inline constexpr unsigned kRigidityRangeCap = 20;

// Pair of square matrices over k[x1..xv] multiplying to f times the
// identity, both ways. Plain data; mf_validate reports on the axioms.
struct MatrixFactorization {
  Field field;
  std::size_t nvars = 0;
  MultiPoly f;
  PolyMatrix phi, psi;
};

struct MfReport {
  bool shapes_ok = false;
  bool f_in_square = false;    // every term of f has degree >= 2
  bool entries_in_ideal = false;  // no constant terms in phi or psi
  bool phi_psi_ok = false;     // phi * psi = f * identity, exactly
  bool psi_phi_ok = false;
  std::string first_failure;
  bool pass() const {
    return shapes_ok && f_in_square && entries_in_ideal && phi_psi_ok && psi_phi_ok;
  }
};

MfReport mf_validate(const MatrixFactorization& mf);

// Exactness of the induced 2-periodic complex over k[x]/(f) away from
// degree 0, by the rank count on the Artinian avatar. One variable only.
bool periodic_exact(const MatrixFactorization& mf);

// A = k[x]/(x^n) and its cyclic modules A/(x^e); e = n gives A itself.
Algebra::Ptr hypersurface_ring(Field f, unsigned n);
Module::Ptr cyclic_power_module(const Algebra::Ptr& a, unsigned e);

struct RigidityRow {
  unsigned a = 0, b = 0;
  std::vector<std::size_t> tor, ext;  // dims for indices 0..N
  bool tor_double_vanish = false;     // some i >= 1 with entries i, i+1 both zero
  bool ext_double_vanish = false;
};

struct RigidityTable {
  unsigned n = 0, range = 0;
  std::vector<RigidityRow> rows;  // all 0 < a,b < n, lexicographic
  bool clean = true;              // no row double-vanishes
  bool free_cases_vanish = true;  // A against every A/(x^b): zero from index 1
};

// Tor/Ext vanishing scan over k[x]/(x^n) for all pairs A/(x^a), A/(x^b)
// with 0 < a,b < n. Caps: n <= 8, N <= 20.
RigidityTable rigidity_scan(Field f, unsigned n, unsigned N);

struct TailCheck {
  std::vector<std::size_t> ext;
  // smallest i >= 1 with ext[i] = ext[i+1] = 0, when one exists
  std::optional<std::size_t> first_double_zero;
  bool tail_vanishes = true;  // all entries from there on are zero (vacuous if none)
  bool pass() const { return tail_vanishes; }
};

// Two consecutive Ext vanishings past index 0 must force a zero tail on the
// computed range. a, b in [1, n]; a = n or b = n gives the free case.
TailCheck change_of_rings_check(Field f, unsigned n, unsigned a, unsigned b, unsigned N);

struct PeriodicityReport {
  std::vector<std::size_t> betti;
  std::vector<std::size_t> syz_dims;
  bool betti_periodic = true;   // betti[i+2] = betti[i] for 1 <= i <= N-2
  bool syzygy_periodic = true;
  bool pass() const { return betti_periodic && syzygy_periodic; }
};

PeriodicityReport periodicity_check(const Module::Ptr& m, unsigned N);

}  // namespace dgalab
