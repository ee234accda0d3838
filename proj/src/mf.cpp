#include "dgalab/mf.hpp"

#include <algorithm>

namespace dgalab {

namespace {

bool square_shape(const PolyMatrix& m, std::size_t s) {
  if (m.size() != s) return false;
  for (const auto& row : m)
    if (row.size() != s) return false;
  return true;
}

bool entries_over(const PolyMatrix& m, Field f, std::size_t nvars) {
  for (const auto& row : m)
    for (const auto& p : row)
      if (p.nvars() != nvars || (!p.is_zero() && p.field() != f)) return false;
  return true;
}

void note(MfReport& rep, const std::string& msg) {
  if (rep.first_failure.empty()) rep.first_failure = msg;
}

}  // namespace

MfReport mf_validate(const MatrixFactorization& mf) {
  MfReport rep;
  const std::size_t s = mf.phi.size();
  rep.shapes_ok = s > 0 && square_shape(mf.phi, s) && square_shape(mf.psi, s) &&
                  mf.f.nvars() == mf.nvars &&
                  entries_over(mf.phi, mf.field, mf.nvars) &&
                  entries_over(mf.psi, mf.field, mf.nvars);
  if (!rep.shapes_ok) {
    note(rep, "matrices are not square of equal size over the stated ring");
    return rep;
  }

  rep.f_in_square = true;
  for (const auto& [e, c] : mf.f.terms())
    if (total_degree(e) < 2) rep.f_in_square = false;
  if (!rep.f_in_square) note(rep, "f has terms of degree below two");

  rep.entries_in_ideal = true;
  for (const auto* m : {&mf.phi, &mf.psi})
    for (const auto& row : *m)
      for (const auto& p : row)
        if (!p.constant_term().is_zero()) rep.entries_in_ideal = false;
  if (!rep.entries_in_ideal) note(rep, "a matrix entry has a constant term");

  auto is_f_identity = [&](const PolyMatrix& prod) {
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) {
        const MultiPoly want = i == j ? mf.f : MultiPoly(mf.field, mf.nvars);
        if (!(prod[i][j] - want).is_zero()) return false;
      }
    return true;
  };
  rep.phi_psi_ok = is_f_identity(poly_mul(mf.phi, mf.psi));
  if (!rep.phi_psi_ok) note(rep, "phi*psi is not f times the identity");
  rep.psi_phi_ok = is_f_identity(poly_mul(mf.psi, mf.phi));
  if (!rep.psi_phi_ok) note(rep, "psi*phi is not f times the identity");
  return rep;
}

namespace {

// companion matrix of the monic normalization of a one-variable f
DenseMatrix companion(Field fd, const MultiPoly& f) {
  const unsigned d = f.degree();
  std::vector<FieldScalar> coeff(d + 1, FieldScalar::zero(fd));
  for (const auto& [e, c] : f.terms()) coeff[e[0]] = c;
  DenseMatrix m(fd, d, d);
  for (unsigned i = 0; i + 1 < d; ++i) m.at(i + 1, i) = FieldScalar::one(fd);
  for (unsigned j = 0; j < d; ++j) m.at(j, d - 1) = -(coeff[j] / coeff[d]);
  return m;
}

DenseMatrix eval_at(const MultiPoly& p, const std::vector<DenseMatrix>& powers) {
  const DenseMatrix& id = powers[0];
  DenseMatrix out(id.field(), id.rows(), id.rows());
  for (const auto& [e, c] : p.terms()) {
    const DenseMatrix& pw = powers[e[0]];
    for (std::size_t r = 0; r < id.rows(); ++r)
      for (std::size_t s = 0; s < id.rows(); ++s) out.at(r, s) += pw.at(r, s) * c;
  }
  return out;
}

DenseMatrix block_eval(const PolyMatrix& m, const std::vector<DenseMatrix>& powers) {
  const std::size_t s = m.size(), d = powers[0].rows();
  DenseMatrix out(powers[0].field(), s * d, s * d);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      DenseMatrix b = eval_at(m[i][j], powers);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) out.at(i * d + r, j * d + c) = b.at(r, c);
    }
  return out;
}

}  // namespace

bool periodic_exact(const MatrixFactorization& mf) {
  if (mf.nvars != 1)
    throw InputError("periodic exactness needs the one-variable Artinian avatar");
  if (mf.f.is_zero() || !mf.f.constant_term().is_zero())
    throw InputError("f must be nonzero and vanish at the origin");
  const std::size_t s = mf.phi.size();
  if (s == 0 || !square_shape(mf.phi, s) || !square_shape(mf.psi, s))
    throw InputError("matrices are not square of equal size");

  const unsigned d = mf.f.degree();
  unsigned maxdeg = 0;
  for (const auto* m : {&mf.phi, &mf.psi})
    for (const auto& row : *m)
      for (const auto& p : row) maxdeg = std::max(maxdeg, p.degree());
  std::vector<DenseMatrix> powers;
  DenseMatrix id(mf.field, d, d);
  for (unsigned i = 0; i < d; ++i) id.at(i, i) = FieldScalar::one(mf.field);
  powers.push_back(id);
  DenseMatrix c = companion(mf.field, mf.f);
  for (unsigned e = 1; e <= maxdeg; ++e) powers.push_back(powers.back() * c);

  DenseMatrix big_phi = block_eval(mf.phi, powers);
  DenseMatrix big_psi = block_eval(mf.psi, powers);
  if (!(big_phi * big_psi).is_zero() || !(big_psi * big_phi).is_zero()) return false;
  // both homology spots reduce to the same rank-nullity count
  return rank_of(big_phi) + rank_of(big_psi) == s * d;
}

Algebra::Ptr hypersurface_ring(Field f, unsigned n) {
  if (n == 0) throw InputError("hypersurface exponent must be positive");
  return Algebra::from_monomial_ideal(f, 1, {Exponents{n}});
}

Module::Ptr cyclic_power_module(const Algebra::Ptr& a, unsigned e) {
  const unsigned n = (unsigned)a->dim();
  if (e > n) throw InputError("power exceeds the nilpotency degree");
  if (e == n) return a->regular_module();
  SparseVec gen = {{(std::uint32_t)e, FieldScalar::one(a->field())}};
  return Module::cokernel(a, 1, {{gen}});
}

namespace {

bool double_vanish(const std::vector<std::size_t>& dims) {
  for (std::size_t i = 1; i + 1 < dims.size(); ++i)
    if (dims[i] == 0 && dims[i + 1] == 0) return true;
  return false;
}

bool zero_from_one(const std::vector<std::size_t>& dims) {
  for (std::size_t i = 1; i < dims.size(); ++i)
    if (dims[i] != 0) return false;
  return true;
}

}  // namespace

RigidityTable rigidity_scan(Field f, unsigned n, unsigned N) {
  if (n > kRigidityExponentCap) throw CapError("rigidity exponent cap is 8");
  if (N > kRigidityRangeCap) throw CapError("rigidity range cap is 20");
  if (n < 2) throw InputError("need exponent at least 2 for interior powers");

  Algebra::Ptr a = hypersurface_ring(f, n);
  std::vector<Module::Ptr> mods(n);  // mods[e] = A/(x^e), e in [1, n-1]
  for (unsigned e = 1; e < n; ++e) mods[e] = cyclic_power_module(a, e);
  Module::Ptr free_mod = a->regular_module();

  RigidityTable table;
  table.n = n;
  table.range = N;
  for (unsigned av = 1; av < n; ++av)
    for (unsigned bv = 1; bv < n; ++bv) {
      RigidityRow row;
      row.a = av;
      row.b = bv;
      row.tor = tor_dims(mods[av], mods[bv], N);
      row.ext = ext_dims(mods[av], mods[bv], N);
      row.tor_double_vanish = double_vanish(row.tor);
      row.ext_double_vanish = double_vanish(row.ext);
      if (row.tor_double_vanish || row.ext_double_vanish) table.clean = false;
      table.rows.push_back(std::move(row));
    }
  for (unsigned bv = 1; bv < n; ++bv) {
    if (!zero_from_one(tor_dims(free_mod, mods[bv], N)) ||
        !zero_from_one(ext_dims(free_mod, mods[bv], N)))
      table.free_cases_vanish = false;
  }
  return table;
}

TailCheck change_of_rings_check(Field f, unsigned n, unsigned a, unsigned b, unsigned N) {
  if (n > kRigidityExponentCap) throw CapError("rigidity exponent cap is 8");
  if (N > kRigidityRangeCap) throw CapError("rigidity range cap is 20");
  if (a < 1 || a > n || b < 1 || b > n)
    throw InputError("powers must lie in [1, n]");

  Algebra::Ptr ring = hypersurface_ring(f, n);
  TailCheck rep;
  rep.ext = ext_dims(cyclic_power_module(ring, a), cyclic_power_module(ring, b), N);
  for (std::size_t i = 1; i + 1 < rep.ext.size(); ++i)
    if (rep.ext[i] == 0 && rep.ext[i + 1] == 0) {
      rep.first_double_zero = i;
      break;
    }
  if (rep.first_double_zero)
    for (std::size_t j = *rep.first_double_zero; j < rep.ext.size(); ++j)
      if (rep.ext[j] != 0) rep.tail_vanishes = false;
  return rep;
}

PeriodicityReport periodicity_check(const Module::Ptr& m, unsigned N) {
  auto r = resolve(m, N);
  PeriodicityReport rep;
  rep.betti = r.betti;
  rep.syz_dims = r.syz_dims;
  for (std::size_t i = 1; i + 2 < rep.betti.size(); ++i)
    if (rep.betti[i + 2] != rep.betti[i]) rep.betti_periodic = false;
  for (std::size_t i = 1; i + 2 < rep.syz_dims.size(); ++i)
    if (rep.syz_dims[i + 2] != rep.syz_dims[i]) rep.syzygy_periodic = false;
  return rep;
}

}  // namespace dgalab
