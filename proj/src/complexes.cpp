#include "dgalab/complexes.hpp"

#include <algorithm>
#include <map>

#include "dgalab/lcg.hpp"
#include "dgalab/linalg.hpp"

namespace dgalab {

namespace {

void enum_monomials_rec(std::size_t v, unsigned t, std::size_t at, Exponents& cur,
                        std::vector<Exponents>& out) {
  if (at + 1 == v || v == 0) {
    if (v == 0) {
      if (t == 0) out.push_back(cur);
      return;
    }
    cur[at] = t;
    out.push_back(cur);
    cur[at] = 0;
    return;
  }
  for (unsigned e = 0; e <= t; ++e) {
    cur[at] = e;
    enum_monomials_rec(v, t - e, at + 1, cur, out);
  }
  cur[at] = 0;
}

std::vector<Exponents> enum_monomials(std::size_t v, unsigned t) {
  std::vector<Exponents> out;
  Exponents cur(v, 0);
  if (v == 0) {
    if (t == 0) out.push_back(cur);
    return out;
  }
  enum_monomials_rec(v, t, 0, cur, out);
  return out;
}

// positions of the slice basis (generator, monomial) of one term at degree t
struct Slice {
  std::vector<std::size_t> offset;                           // per generator
  std::vector<std::map<Exponents, std::size_t, GrlexLess>> pos;  // per generator
  std::size_t dim = 0;
};

Slice make_slice(const std::vector<int>& degs, std::size_t nvars, unsigned t) {
  Slice s;
  s.offset.resize(degs.size(), 0);
  s.pos.resize(degs.size());
  for (std::size_t b = 0; b < degs.size(); ++b) {
    s.offset[b] = s.dim;
    if (degs[b] < 0 || (unsigned)degs[b] > t) continue;
    auto mons = enum_monomials(nvars, t - (unsigned)degs[b]);
    for (std::size_t k = 0; k < mons.size(); ++k) s.pos[b][mons[k]] = s.dim + k;
    s.dim += mons.size();
  }
  return s;
}

// slice of a polynomial matrix (graded degree-0 map between free modules)
DenseMatrix matrix_slice(const PolyMatrix& m, const std::vector<int>& row_degs,
                         const std::vector<int>& col_degs, Field f, std::size_t nvars,
                         unsigned t) {
  Slice rows = make_slice(row_degs, nvars, t);
  Slice cols = make_slice(col_degs, nvars, t);
  DenseMatrix out(f, rows.dim, cols.dim);
  for (std::size_t b = 0; b < col_degs.size(); ++b)
    for (const auto& [mu, cpos] : cols.pos[b])
      for (std::size_t a = 0; a < row_degs.size(); ++a) {
        if (m.empty()) continue;
        const MultiPoly& p = m[a][b];
        for (const auto& [eps, coef] : p.terms()) {
          Exponents target = eps;
          for (std::size_t k = 0; k < nvars; ++k) target[k] += mu[k];
          auto it = rows.pos[a].find(target);
          if (it == rows.pos[a].end())
            throw InvariantViolation("slice bookkeeping lost a monomial");
          out.at(it->second, cpos) += coef;
        }
      }
  return out;
}

MultiPoly zero_poly(Field f, std::size_t nvars) { return MultiPoly(f, nvars); }

PolyMatrix zero_matrix(Field f, std::size_t nvars, std::size_t rows, std::size_t cols) {
  return PolyMatrix(rows, std::vector<MultiPoly>(cols, zero_poly(f, nvars)));
}

PolyMatrix identity_matrix(Field f, std::size_t nvars, std::size_t n) {
  PolyMatrix m = zero_matrix(f, nvars, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = MultiPoly::constant(f, nvars, FieldScalar::one(f));
  return m;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b, Field f, std::size_t nvars,
                   std::size_t rows, std::size_t mid, std::size_t cols) {
  PolyMatrix out = zero_matrix(f, nvars, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < mid; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (b[k][j].is_zero()) continue;
        out[i][j] = out[i][j] + a[i][k] * b[k][j];
      }
    }
  return out;
}

PolyMatrix mat_add(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out = a;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] = out[i][j] + b[i][j];
  return out;
}

bool mat_is_zero(const PolyMatrix& a) {
  for (const auto& row : a)
    for (const auto& p : row)
      if (!p.is_zero()) return false;
  return true;
}

}  // namespace

PolyMatrix poly_identity(Field f, std::size_t nvars, std::size_t n) {
  return identity_matrix(f, nvars, n);
}

PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.empty() || b.empty() || a[0].empty() || b[0].empty() || a[0].size() != b.size())
    throw InputError("polynomial matrix product shape mismatch");
  const MultiPoly& probe = a[0][0];
  return mat_mul(a, b, probe.field(), probe.nvars(), a.size(), b.size(), b[0].size());
}

PolyComplex PolyComplex::make(Field f, std::size_t nvars,
                              std::vector<std::vector<int>> gen_degrees,
                              std::vector<PolyMatrix> diffs) {
  PolyComplex c;
  c.field_ = f;
  c.nvars_ = nvars;
  c.gen_degrees_ = std::move(gen_degrees);
  c.diffs_ = std::move(diffs);

  if (c.gen_degrees_.empty()) throw InputError("complex needs at least one term");
  if (c.diffs_.size() + 1 != c.gen_degrees_.size())
    throw InputError("expected one differential per consecutive pair of terms");
  for (std::size_t i = 0; i < c.diffs_.size(); ++i) {
    const std::size_t rows = c.rank(i), cols = c.rank(i + 1);
    if (c.diffs_[i].size() != rows)
      throw InputError("differential " + std::to_string(i + 1) + " has wrong row count");
    for (const auto& row : c.diffs_[i])
      if (row.size() != cols)
        throw InputError("differential " + std::to_string(i + 1) + " has ragged rows");
    for (std::size_t a = 0; a < rows; ++a)
      for (std::size_t b = 0; b < cols; ++b) {
        const MultiPoly& p = c.diffs_[i][a][b];
        if (p.nvars() != nvars || (!p.is_zero() && p.field() != f))
          throw InputError("differential entry over the wrong ring");
        if (p.is_zero()) continue;
        int expected = c.gen_degrees_[i + 1][b] - c.gen_degrees_[i][a];
        auto hd = p.homogeneous_degree();
        if (expected < 0 || !hd || (int)*hd != expected)
          throw InputError("differential entry is not homogeneous of the right degree");
      }
  }
  for (std::size_t i = 0; i + 1 < c.diffs_.size(); ++i) {
    auto prod = mat_mul(c.diffs_[i], c.diffs_[i + 1], f, nvars, c.rank(i), c.rank(i + 1),
                        c.rank(i + 2));
    if (!mat_is_zero(prod))
      throw InvariantViolation("differentials do not compose to zero at step " +
                               std::to_string(i + 1));
  }
  return c;
}

std::size_t PolyComplex::slice_dim(std::size_t i, unsigned t) const {
  return make_slice(gen_degrees_[i], nvars_, t).dim;
}

DenseMatrix PolyComplex::slice_matrix(std::size_t i, unsigned t) const {
  return matrix_slice(diffs_[i], gen_degrees_[i], gen_degrees_[i + 1], field_, nvars_, t);
}

std::vector<std::vector<std::size_t>> PolyComplex::homology(unsigned window) const {
  const std::size_t len = length();
  std::vector<std::vector<std::size_t>> h(len + 1, std::vector<std::size_t>(window + 1, 0));
  for (unsigned t = 0; t <= window; ++t) {
    std::vector<std::size_t> ranks(len + 2, 0);  // ranks[i] = rank of d_i slice
    for (std::size_t i = 1; i <= len; ++i) ranks[i] = rank_of(slice_matrix(i - 1, t));
    for (std::size_t i = 0; i <= len; ++i)
      h[i][t] = slice_dim(i, t) - ranks[i] - ranks[i + 1];
  }
  return h;
}

bool PolyComplex::acyclic_positive(unsigned window) const {
  auto h = homology(window);
  for (std::size_t i = 1; i < h.size(); ++i)
    for (unsigned t = 0; t <= window; ++t)
      if (h[i][t]) return false;
  return true;
}

PolyComplex PolyComplex::quotient_variable(std::size_t var) const {
  if (var >= nvars_) throw InputError("no such variable to quotient by");
  auto drop = [this, var](const MultiPoly& p) {
    MultiPoly q(field_, nvars_ - 1);
    const MultiPoly sub = p.substitute_zero({var});
    for (const auto& [e, c] : sub.terms()) {
      Exponents r = e;
      r.erase(r.begin() + (long)var);
      q.add_term(r, c);
    }
    return q;
  };
  std::vector<PolyMatrix> nd;
  for (const auto& m : diffs_) {
    PolyMatrix t;
    for (const auto& row : m) {
      std::vector<MultiPoly> nr;
      for (const auto& p : row) nr.push_back(drop(p));
      t.push_back(std::move(nr));
    }
    nd.push_back(std::move(t));
  }
  return make(field_, nvars_ - 1, gen_degrees_, std::move(nd));
}

namespace {

// f components with rank-0 padding above the stored range
PolyMatrix map_at(const std::vector<PolyMatrix>& f, std::size_t i, Field fd, std::size_t nvars,
                  std::size_t rows, std::size_t cols) {
  if (i < f.size()) return f[i];
  return zero_matrix(fd, nvars, rows, cols);
}

std::size_t rank_at(const PolyComplex& c, std::size_t i) {
  return i <= c.length() ? c.rank(i) : 0;
}

std::vector<int> degs_at(const PolyComplex& c, std::size_t i) {
  return i <= c.length() ? c.degrees(i) : std::vector<int>{};
}

PolyMatrix diff_at(const PolyComplex& c, std::size_t i, Field f, std::size_t nvars) {
  // d_i as a matrix, rank-0 shapes outside the stored range
  if (i >= 1 && i <= c.length()) return c.diff(i - 1);
  return zero_matrix(f, nvars, rank_at(c, i == 0 ? 0 : i - 1), rank_at(c, i));
}

}  // namespace

void validate_chain_map(const PolyComplex& c, const PolyComplex& d,
                        const std::vector<PolyMatrix>& f) {
  if (c.field() != d.field() || c.nvars() != d.nvars())
    throw InputError("chain map endpoints live over different rings");
  const Field fd = c.field();
  const std::size_t nv = c.nvars();
  const std::size_t top = std::max(c.length(), d.length());
  if (f.size() > top + 1) throw InputError("chain map has more components than terms");
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].size() != rank_at(d, i))
      throw InputError("chain map component " + std::to_string(i) + " has wrong row count");
    for (const auto& row : f[i])
      if (row.size() != rank_at(c, i))
        throw InputError("chain map component " + std::to_string(i) + " has ragged rows");
    for (std::size_t a = 0; a < f[i].size(); ++a)
      for (std::size_t b = 0; b < f[i][a].size(); ++b) {
        const MultiPoly& p = f[i][a][b];
        if (p.nvars() != nv || (!p.is_zero() && p.field() != fd))
          throw InputError("chain map entry over the wrong ring");
        if (p.is_zero()) continue;
        int expected = c.degrees(i)[b] - d.degrees(i)[a];
        auto hd = p.homogeneous_degree();
        if (expected < 0 || !hd || (int)*hd != expected)
          throw InputError("chain map entry is not homogeneous of the right degree");
      }
  }
  for (std::size_t i = 1; i <= top; ++i) {
    auto lhs = mat_mul(diff_at(d, i, fd, nv),
                       map_at(f, i, fd, nv, rank_at(d, i), rank_at(c, i)), fd, nv,
                       rank_at(d, i - 1), rank_at(d, i), rank_at(c, i));
    auto rhs = mat_mul(map_at(f, i - 1, fd, nv, rank_at(d, i - 1), rank_at(c, i - 1)),
                       diff_at(c, i, fd, nv), fd, nv, rank_at(d, i - 1), rank_at(c, i - 1),
                       rank_at(c, i));
    for (std::size_t a = 0; a < lhs.size(); ++a)
      for (std::size_t b = 0; b < (lhs.empty() ? 0 : lhs[a].size()); ++b)
        if (!(lhs[a][b] - rhs[a][b]).is_zero())
          throw InputError("map does not commute with the differentials at step " +
                           std::to_string(i));
  }
}

PolyComplex cone(const PolyComplex& c, const PolyComplex& d, const std::vector<PolyMatrix>& f) {
  validate_chain_map(c, d, f);
  const Field fd = c.field();
  const std::size_t nv = c.nvars();
  const std::size_t top = std::max(d.length(), c.length() + 1);

  std::vector<std::vector<int>> degs(top + 1);
  for (std::size_t i = 0; i <= top; ++i) {
    degs[i] = degs_at(d, i);
    if (i >= 1) {
      auto extra = degs_at(c, i - 1);
      degs[i].insert(degs[i].end(), extra.begin(), extra.end());
    }
  }
  std::vector<PolyMatrix> diffs;
  for (std::size_t i = 1; i <= top; ++i) {
    const std::size_t rd = rank_at(d, i), rc = i >= 1 ? rank_at(c, i - 1) : 0;
    const std::size_t rd0 = rank_at(d, i - 1), rc0 = i >= 2 ? rank_at(c, i - 2) : 0;
    PolyMatrix m = zero_matrix(fd, nv, rd0 + rc0, rd + rc);
    PolyMatrix dd = diff_at(d, i, fd, nv);
    for (std::size_t a = 0; a < rd0; ++a)
      for (std::size_t b = 0; b < rd; ++b) m[a][b] = dd[a][b];
    PolyMatrix fm = map_at(f, i - 1, fd, nv, rd0, rank_at(c, i - 1));
    for (std::size_t a = 0; a < rd0; ++a)
      for (std::size_t b = 0; b < rc; ++b) m[a][rd + b] = fm[a][b];
    if (i >= 2) {
      PolyMatrix dc = diff_at(c, i - 1, fd, nv);
      for (std::size_t a = 0; a < rc0; ++a)
        for (std::size_t b = 0; b < rc; ++b) m[rd0 + a][rd + b] = -dc[a][b];
    }
    diffs.push_back(std::move(m));
  }
  return PolyComplex::make(fd, nv, std::move(degs), std::move(diffs));
}

bool quasi_iso_direct(const PolyComplex& c, const PolyComplex& d,
                      const std::vector<PolyMatrix>& f, unsigned window) {
  validate_chain_map(c, d, f);
  const Field fd = c.field();
  const std::size_t nv = c.nvars();
  const std::size_t top = std::max(c.length(), d.length());

  for (unsigned t = 0; t <= window; ++t) {
    for (std::size_t i = 0; i <= top; ++i) {
      auto slice_of = [&](const PolyComplex& x, std::size_t j) {
        return make_slice(degs_at(x, j), nv, t).dim;
      };
      DenseMatrix dc_in = matrix_slice(diff_at(c, i + 1, fd, nv), degs_at(c, i),
                                       degs_at(c, i + 1), fd, nv, t);
      DenseMatrix dc_out = matrix_slice(diff_at(c, i, fd, nv), degs_at(c, i == 0 ? 0 : i - 1),
                                        degs_at(c, i), fd, nv, t);
      DenseMatrix dd_in = matrix_slice(diff_at(d, i + 1, fd, nv), degs_at(d, i),
                                       degs_at(d, i + 1), fd, nv, t);
      DenseMatrix dd_out = matrix_slice(diff_at(d, i, fd, nv), degs_at(d, i == 0 ? 0 : i - 1),
                                        degs_at(d, i), fd, nv, t);

      std::vector<Vec> cycles;
      if (i == 0) {
        for (std::size_t k = 0; k < slice_of(c, 0); ++k) {
          Vec v = zero_vec(fd, slice_of(c, 0));
          v[k] = FieldScalar::one(fd);
          cycles.push_back(std::move(v));
        }
      } else {
        cycles = rank_kernel(dc_out).kernel;
      }
      const std::size_t hc = cycles.size() - rank_of(dc_in);
      const std::size_t hd =
          slice_of(d, i) - (i == 0 ? 0 : rank_of(dd_out)) - rank_of(dd_in);
      if (hc != hd) return false;
      if (hd == 0) continue;

      DenseMatrix fm = matrix_slice(map_at(f, i, fd, nv, rank_at(d, i), rank_at(c, i)),
                                    degs_at(d, i), degs_at(c, i), fd, nv, t);
      LinearSpan probe(fd, slice_of(d, i));
      for (std::size_t col = 0; col < dd_in.cols(); ++col) {
        Vec v = zero_vec(fd, dd_in.rows());
        for (std::size_t r = 0; r < dd_in.rows(); ++r) v[r] = dd_in.at(r, col);
        probe.insert(v);
      }
      const std::size_t base = probe.dim();
      for (const Vec& z : cycles) probe.insert(fm.apply(z));
      if (probe.dim() - base != hd) return false;
    }
  }
  return true;
}

QuotientCheck complex_quotient_check(const PolyComplex& c, std::size_t var, unsigned window) {
  QuotientCheck rep;
  rep.homology = c.homology(window);
  PolyComplex q = c.quotient_variable(var);
  rep.quotient_homology = q.homology(window);
  auto clean = [window](const std::vector<std::vector<std::size_t>>& h) {
    for (std::size_t i = 1; i < h.size(); ++i)
      for (unsigned t = 0; t <= window; ++t)
        if (h[i][t]) return false;
    return true;
  };
  rep.acyclic = clean(rep.homology);
  rep.quotient_acyclic = clean(rep.quotient_homology);
  rep.preserved = !rep.acyclic || rep.quotient_acyclic;
  return rep;
}

namespace {

// seeded graded automorphism: identity plus a strictly upper-triangular
// homogeneous part, so the exact inverse is the finite alternating sum
PolyMatrix seeded_unitriangular(Field f, std::size_t nvars, const std::vector<int>& degs,
                                Lcg& rng) {
  const std::size_t n = degs.size();
  PolyMatrix m = identity_matrix(f, nvars, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      int deg = degs[b] - degs[a];
      if (deg < 0) continue;
      long long coef = rng.next_int(0, 2);
      if (coef == 0) continue;
      Exponents e(nvars, 0);
      if (nvars > 0) {
        unsigned alpha = (unsigned)rng.next_below((std::uint64_t)deg + 1);
        e[0] = alpha;
        if (nvars > 1) e[nvars - 1] = (unsigned)deg - alpha;
        else if (alpha != (unsigned)deg) continue;  // single variable: need full degree
      } else if (deg != 0) {
        continue;
      }
      m[a][b] = m[a][b] + MultiPoly::monomial(f, e, FieldScalar::from_int(f, coef));
    }
  return m;
}

PolyMatrix unitriangular_inverse(const PolyMatrix& m, Field f, std::size_t nvars) {
  const std::size_t n = m.size();
  // n = i + n (nilpotent): inverse = sum (-n)^k
  PolyMatrix nil = m;
  for (std::size_t i = 0; i < n; ++i)
    nil[i][i] = nil[i][i] - MultiPoly::constant(f, nvars, FieldScalar::one(f));
  PolyMatrix inv = identity_matrix(f, nvars, n);
  PolyMatrix power = identity_matrix(f, nvars, n);
  int sign = -1;
  for (std::size_t k = 1; k <= n; ++k) {
    power = mat_mul(power, nil, f, nvars, n, n, n);
    if (mat_is_zero(power)) break;
    PolyMatrix term = power;
    if (sign < 0)
      for (auto& row : term)
        for (auto& p : row) p = -p;
    inv = mat_add(inv, term);
    sign = -sign;
  }
  return inv;
}

}  // namespace

PolyComplex seeded_acyclic_complex(Field f, std::uint64_t seed) {
  Lcg rng(seed);
  const std::size_t nv = 2;
  const std::size_t k1 = 1 + rng.next_below(2);   // diagonal regular covers
  const std::size_t pad = rng.next_below(2);      // split identity padding

  std::vector<int> d0(k1, 0);
  std::vector<int> d1;
  std::vector<MultiPoly> fs;
  for (std::size_t i = 0; i < k1; ++i) {
    unsigned a = 2 + (unsigned)rng.next_below(2);
    MultiPoly p = MultiPoly::monomial(f, Exponents{a, 0}, FieldScalar::one(f));
    long long c = rng.next_int(0, 2);
    if (c)
      p = p + MultiPoly::monomial(f, Exponents{a - 1, 1}, FieldScalar::from_int(f, c));
    fs.push_back(p);
    d1.push_back((int)a);
  }
  int pdeg = 1 + (int)rng.next_below(3);
  for (std::size_t j = 0; j < pad; ++j) d1.push_back(pdeg);

  std::vector<std::vector<int>> degs = {d0, d1};
  PolyMatrix m1 = zero_matrix(f, nv, k1, d1.size());
  for (std::size_t i = 0; i < k1; ++i) m1[i][i] = fs[i];
  std::vector<PolyMatrix> diffs = {m1};
  if (pad) {
    std::vector<int> d2(pad, pdeg);
    PolyMatrix m2 = zero_matrix(f, nv, d1.size(), pad);
    for (std::size_t j = 0; j < pad; ++j)
      m2[k1 + j][j] = MultiPoly::constant(f, nv, FieldScalar::one(f));
    degs.push_back(d2);
    diffs.push_back(std::move(m2));
  }

  // hide the block structure behind a change of basis in every term
  std::vector<PolyMatrix> v, vinv;
  for (const auto& dg : degs) {
    v.push_back(seeded_unitriangular(f, nv, dg, rng));
    vinv.push_back(unitriangular_inverse(v.back(), f, nv));
  }
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    const std::size_t r = degs[i].size(), cdim = degs[i + 1].size();
    diffs[i] = mat_mul(mat_mul(v[i], diffs[i], f, nv, r, r, cdim), vinv[i + 1], f, nv, r, cdim,
                       cdim);
  }
  return PolyComplex::make(f, nv, std::move(degs), std::move(diffs));
}

SeededChainMap seeded_chain_map(Field f, std::uint64_t seed, bool quasi_iso) {
  Lcg rng(seed);
  PolyComplex c = seeded_acyclic_complex(f, rng.next());
  const std::size_t nv = c.nvars();
  const std::size_t len = c.length();

  // target: the same complex with one split identity pair glued at (0, 1)
  int pdeg = 1 + (int)rng.next_below(3);
  std::vector<std::vector<int>> ddegs;
  for (std::size_t i = 0; i <= len; ++i) ddegs.push_back(c.degrees(i));
  ddegs[0].push_back(pdeg);
  ddegs[1].push_back(pdeg);
  std::vector<PolyMatrix> ddiffs;
  for (std::size_t i = 1; i <= len; ++i) {
    PolyMatrix m = zero_matrix(f, nv, ddegs[i - 1].size(), ddegs[i].size());
    const PolyMatrix& base = c.diff(i - 1);
    for (std::size_t a = 0; a < base.size(); ++a)
      for (std::size_t b = 0; b < base[a].size(); ++b) m[a][b] = base[a][b];
    if (i == 1)
      m[c.rank(0)][c.rank(1)] = MultiPoly::constant(f, nv, FieldScalar::one(f));
    ddiffs.push_back(std::move(m));
  }
  PolyComplex d = PolyComplex::make(f, nv, ddegs, ddiffs);

  // base map: inclusion (a quasi-isomorphism) or zero (never one here,
  // because the cokernels of the diagonal blocks are nonzero)
  std::vector<PolyMatrix> fm;
  for (std::size_t i = 0; i <= len; ++i) {
    PolyMatrix m = zero_matrix(f, nv, d.rank(i), c.rank(i));
    if (quasi_iso)
      for (std::size_t b = 0; b < c.rank(i); ++b)
        m[b][b] = MultiPoly::constant(f, nv, FieldScalar::one(f));
    fm.push_back(std::move(m));
  }

  // perturb by a homotopy: f + d_D h + h d_C stays a chain map and induces
  // the same map on homology
  std::vector<PolyMatrix> h;  // h[i]: C_i -> D_{i+1}
  for (std::size_t i = 0; i <= len; ++i) {
    const std::size_t rows = rank_at(d, i + 1), cols = c.rank(i);
    PolyMatrix m = zero_matrix(f, nv, rows, cols);
    for (std::size_t a = 0; a < rows; ++a)
      for (std::size_t b = 0; b < cols; ++b) {
        int deg = c.degrees(i)[b] - degs_at(d, i + 1)[a];
        if (deg < 0) continue;
        long long coef = rng.next_int(0, 2);
        if (!coef) continue;
        unsigned alpha = (unsigned)rng.next_below((std::uint64_t)deg + 1);
        m[a][b] = MultiPoly::monomial(f, Exponents{alpha, (unsigned)deg - alpha},
                                      FieldScalar::from_int(f, coef));
      }
    h.push_back(std::move(m));
  }
  for (std::size_t i = 0; i <= len; ++i) {
    PolyMatrix term = mat_mul(diff_at(d, i + 1, f, nv),
                              map_at(h, i, f, nv, rank_at(d, i + 1), c.rank(i)), f, nv,
                              d.rank(i), rank_at(d, i + 1), c.rank(i));
    fm[i] = mat_add(fm[i], term);
    if (i >= 1) {
      PolyMatrix t2 = mat_mul(map_at(h, i - 1, f, nv, d.rank(i), c.rank(i - 1)),
                              diff_at(c, i, f, nv), f, nv, d.rank(i), c.rank(i - 1), c.rank(i));
      fm[i] = mat_add(fm[i], t2);
    }
  }

  // change basis in the target, pushing the map along
  std::vector<PolyMatrix> w, winv;
  for (std::size_t i = 0; i <= len; ++i) {
    w.push_back(seeded_unitriangular(f, nv, d.degrees(i), rng));
    winv.push_back(unitriangular_inverse(w.back(), f, nv));
  }
  std::vector<PolyMatrix> wdiffs;
  for (std::size_t i = 1; i <= len; ++i)
    wdiffs.push_back(mat_mul(mat_mul(w[i - 1], d.diff(i - 1), f, nv, d.rank(i - 1),
                                     d.rank(i - 1), d.rank(i)),
                             winv[i], f, nv, d.rank(i - 1), d.rank(i), d.rank(i)));
  std::vector<std::vector<int>> wd;
  for (std::size_t i = 0; i <= len; ++i) wd.push_back(d.degrees(i));
  PolyComplex d2 = PolyComplex::make(f, nv, wd, wdiffs);
  for (std::size_t i = 0; i <= len; ++i)
    fm[i] = mat_mul(w[i], fm[i], f, nv, d2.rank(i), d2.rank(i), c.rank(i));

  validate_chain_map(c, d2, fm);
  return SeededChainMap{std::move(c), std::move(d2), std::move(fm), quasi_iso};
}

}  // namespace dgalab
