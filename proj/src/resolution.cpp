#include "dgalab/resolution.hpp"

#include <map>
#include <mutex>

namespace dgalab {

namespace {

struct CacheEntry {
  Module::Ptr module;
  std::vector<Vec> gens;
  std::vector<std::size_t> betti;
  std::vector<std::size_t> syz_dims;
  std::vector<std::shared_ptr<const DiffLevel>> diffs;
};

std::mutex memo_mutex;
std::map<std::uint64_t, CacheEntry>& memo() {
  static std::map<std::uint64_t, CacheEntry> m;
  return m;
}

// k-linear columns of F_i -> F_{i-1} (or of F_0 -> M when i = 0); column
// l*n + t is the image of e_l ⊗ b_t.
std::vector<SparseVec> step_columns(const CacheEntry& e, std::size_t i, std::size_t* rows_out) {
  const Algebra& a = *e.module->algebra();
  const std::size_t n = a.dim();
  std::vector<SparseVec> cols;
  if (i == 0) {
    *rows_out = e.module->dim();
    cols.reserve(e.gens.size() * n);
    for (const auto& g : e.gens)
      for (std::size_t t = 0; t < n; ++t) cols.push_back(sparse_from_dense(e.module->act(t, g)));
  } else {
    const DiffLevel& d = *e.diffs[i - 1];
    *rows_out = d.rows;
    cols.reserve(d.cols.size() * n);
    for (const auto& c : d.cols)
      for (std::size_t t = 0; t < n; ++t) cols.push_back(a.block_mult(t, c));
  }
  return cols;
}

void extend_one(CacheEntry& e) {
  const Algebra& a = *e.module->algebra();
  const std::size_t n = a.dim();
  const std::size_t i = e.diffs.size();
  std::size_t rows = 0;
  auto cols = step_columns(e, i, &rows);
  auto kk = sparse_kernel(rows, cols, e.module->field(), true);
  if (kk.rank + kk.kernel.size() != cols.size())
    throw InvariantViolation("syzygy kernel bookkeeping failed");
  e.syz_dims.push_back(kk.kernel.size());
  // the syzygies must lie in m*F_i, or the previous generators were not minimal
  for (const auto& v : kk.kernel)
    for (const auto& [idx, c] : v) {
      (void)c;
      if (idx % n == 0)
        throw InvariantViolation("resolution lost minimality: unit coordinate in a syzygy");
    }
  // minimal generators of the syzygy module: kernel vectors that stay
  // independent modulo m*Syz, greedily in the deterministic kernel order
  SparseEchelon probe(e.module->field());
  for (const auto& v : kk.kernel)
    for (std::size_t t = 1; t < n; ++t) probe.insert(a.block_mult(t, v));
  auto level = std::make_shared<DiffLevel>();
  level->rows = e.betti[i] * n;
  for (const auto& v : kk.kernel)
    if (probe.insert(v)) level->cols.push_back(v);
  e.betti.push_back(level->cols.size());
  e.diffs.push_back(std::move(level));
}

}  // namespace

ResolutionPrefix resolve(const Module::Ptr& m, unsigned steps, bool allow_deep) {
  if (!m) throw InputError("resolve needs a module");
  if (steps > kResolveCap && !allow_deep)
    throw CapError("resolution length exceeds the cap of " + std::to_string(kResolveCap));
  if (steps > kResolveCap + 1)
    throw CapError("resolution length exceeds the internal ceiling");
  CacheEntry work;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo().find(m->id());
    if (it != memo().end()) work = it->second;  // cheap: levels are shared
  }
  if (!work.module) {
    work.module = m;
    work.gens = m->minimal_generators();
    work.betti.push_back(work.gens.size());
  }
  while (work.betti.size() <= steps) extend_one(work);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto& slot = memo()[m->id()];
    if (slot.betti.size() < work.betti.size()) slot = work;
  }
  ResolutionPrefix out;
  out.module = m;
  out.generators = work.gens;
  out.betti.assign(work.betti.begin(), work.betti.begin() + steps + 1);
  out.syz_dims.assign(work.syz_dims.begin(), work.syz_dims.begin() + steps);
  out.diffs.assign(work.diffs.begin(), work.diffs.begin() + steps);
  return out;
}

void verify_resolution(const ResolutionPrefix& r) {
  const Algebra& a = *r.module->algebra();
  const std::size_t n = a.dim();
  const Field f = r.module->field();
  for (std::size_t i = 0; i < r.diffs.size(); ++i) {
    if (r.diffs[i]->cols.size() != r.betti[i + 1])
      throw InvariantViolation("differential width disagrees with the Betti number");
    for (const auto& col : r.diffs[i]->cols)
      for (const auto& [idx, c] : col) {
        (void)c;
        if (idx % n == 0)
          throw InvariantViolation("differential entry with a unit component");
      }
  }
  if (!r.diffs.empty()) {
    // augmentation ∘ d_1 = 0
    for (const auto& col : r.diffs[0]->cols) {
      Vec acc = zero_vec(f, r.module->dim());
      for (const auto& [idx, c] : col) {
        Vec img = r.module->act(idx % n, r.generators[idx / n]);
        for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += c * img[t];
      }
      if (!LinearSpan::is_zero_vec(acc))
        throw InvariantViolation("d_1 columns are not syzygies of the generators");
    }
  }
  for (std::size_t i = 1; i < r.diffs.size(); ++i) {
    const DiffLevel& upper = *r.diffs[i];
    const DiffLevel& lower = *r.diffs[i - 1];
    for (const auto& col : upper.cols) {
      SparseVec acc;
      for (const auto& [idx, c] : col)
        sparse_axpy(acc, c, a.block_mult(idx % n, lower.cols[idx / n]));
      if (!acc.empty()) throw InvariantViolation("consecutive differentials do not compose to zero");
    }
  }
}

BettiTable betti_table(const Module::Ptr& m, unsigned range) {
  BettiTable out;
  out.betti = resolve(m, range).betti;
  std::size_t z = out.betti.size();
  while (z > 0 && out.betti[z - 1] == 0) --z;
  if (z < out.betti.size()) out.eventually_zero_from = static_cast<unsigned>(z);
  if (!out.eventually_zero_from && out.betti.size() >= 2) {
    std::size_t j = out.betti.size() - 1;
    while (j > 0 && out.betti[j] > out.betti[j - 1]) --j;
    if (j + 1 < out.betti.size() || j == 0)
      out.strictly_increasing_from = static_cast<unsigned>(j);
  }
  return out;
}

namespace {

// transposed view of a differential: for each source generator j of F_i,
// the entries (l, s, c) meaning "column l of d has coefficient c at e_j b_s"
std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, FieldScalar>>> row_blocks(
    const DiffLevel& d, std::size_t nalg) {
  std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, FieldScalar>>> out(d.rows /
                                                                                      nalg);
  for (std::size_t l = 0; l < d.cols.size(); ++l)
    for (const auto& [idx, c] : d.cols[l])
      out[idx / nalg].emplace_back(static_cast<std::uint32_t>(l),
                                   static_cast<std::uint32_t>(idx % nalg), c);
  return out;
}

SparseVec from_accumulator(std::map<std::uint32_t, FieldScalar>& acc) {
  SparseVec out;
  for (auto& [i, c] : acc)
    if (!c.is_zero()) out.emplace_back(i, std::move(c));
  return out;
}

// columns of Hom(d, N): N^{b_i} -> N^{b_{i+1}} where d: F_{i+1} -> F_i
std::vector<SparseVec> hom_columns(const DiffLevel& d, const Module& nmod, std::size_t nalg) {
  const std::size_t dn = nmod.dim();
  const std::size_t bi = d.rows / nalg;
  auto blocks = row_blocks(d, nalg);
  std::vector<SparseVec> cols;
  cols.reserve(bi * dn);
  for (std::size_t j = 0; j < bi; ++j)
    for (std::size_t u = 0; u < dn; ++u) {
      std::map<std::uint32_t, FieldScalar> acc;
      for (const auto& [l, s, c] : blocks[j]) {
        const DenseMatrix& rho = nmod.action(s);
        for (std::size_t v = 0; v < dn; ++v) {
          if (rho.at(v, u).is_zero()) continue;
          std::uint32_t row = static_cast<std::uint32_t>(l * dn + v);
          auto it = acc.find(row);
          if (it == acc.end()) acc.emplace(row, c * rho.at(v, u));
          else it->second += c * rho.at(v, u);
        }
      }
      cols.push_back(from_accumulator(acc));
    }
  return cols;
}

// columns of d ⊗ N: N^{b_{i+1}} -> N^{b_i}
std::vector<SparseVec> tensor_columns(const DiffLevel& d, const Module& nmod, std::size_t nalg) {
  const std::size_t dn = nmod.dim();
  std::vector<SparseVec> cols;
  cols.reserve(d.cols.size() * dn);
  for (const auto& col : d.cols)
    for (std::size_t u = 0; u < dn; ++u) {
      std::map<std::uint32_t, FieldScalar> acc;
      for (const auto& [idx, c] : col) {
        std::size_t j = idx / nalg, s = idx % nalg;
        const DenseMatrix& rho = nmod.action(s);
        for (std::size_t v = 0; v < dn; ++v) {
          if (rho.at(v, u).is_zero()) continue;
          std::uint32_t row = static_cast<std::uint32_t>(j * dn + v);
          auto it = acc.find(row);
          if (it == acc.end()) acc.emplace(row, c * rho.at(v, u));
          else it->second += c * rho.at(v, u);
        }
      }
      cols.push_back(from_accumulator(acc));
    }
  return cols;
}

void check_same_algebra(const Module::Ptr& m, const Module::Ptr& n, const char* what) {
  if (!m || !n) throw InputError(std::string(what) + " needs two modules");
  if (m->algebra()->id() != n->algebra()->id())
    throw InputError(std::string(what) + " needs both modules over one algebra");
}

// action of b_t on a vector in N^b, componentwise through rho_N(b_t)
SparseVec tuple_action(const Module& nmod, std::size_t t, const SparseVec& v) {
  const std::size_t dn = nmod.dim();
  const DenseMatrix& rho = nmod.action(t);
  std::map<std::uint32_t, FieldScalar> acc;
  for (const auto& [idx, c] : v) {
    std::size_t j = idx / dn, u = idx % dn;
    for (std::size_t w = 0; w < dn; ++w) {
      if (rho.at(w, u).is_zero()) continue;
      std::uint32_t row = static_cast<std::uint32_t>(j * dn + w);
      auto it = acc.find(row);
      if (it == acc.end()) acc.emplace(row, c * rho.at(w, u));
      else it->second += c * rho.at(w, u);
    }
  }
  return from_accumulator(acc);
}

}  // namespace

std::vector<std::size_t> ext_dims(const Module::Ptr& m, const Module::Ptr& n, unsigned range) {
  check_same_algebra(m, n, "ext");
  auto r = resolve(m, range + 1, true);
  const std::size_t nalg = m->algebra()->dim();
  const std::size_t dn = n->dim();
  // ranks[i+1] = rank of delta^i: N^{b_i} -> N^{b_{i+1}}; ranks[0] = 0
  std::vector<std::size_t> ranks(range + 2, 0);
  for (unsigned i = 0; i <= range; ++i) {
    const DiffLevel& d = *r.diffs[i];
    auto cols = hom_columns(d, *n, nalg);
    ranks[i + 1] = sparse_rank(d.cols.size() * dn, cols, m->field());
  }
  std::vector<std::size_t> out;
  for (unsigned i = 0; i <= range; ++i) out.push_back(r.betti[i] * dn - ranks[i + 1] - ranks[i]);
  return out;
}

std::vector<std::size_t> tor_dims(const Module::Ptr& m, const Module::Ptr& n, unsigned range) {
  check_same_algebra(m, n, "tor");
  auto r = resolve(m, range + 1, true);
  const std::size_t nalg = m->algebra()->dim();
  const std::size_t dn = n->dim();
  // ranks[i] = rank of d_i ⊗ N for i >= 1; ranks[0] = 0
  std::vector<std::size_t> ranks(range + 2, 0);
  for (unsigned i = 0; i <= range; ++i) {
    const DiffLevel& d = *r.diffs[i];
    auto cols = tensor_columns(d, *n, nalg);
    ranks[i + 1] = sparse_rank((d.rows / nalg) * dn, cols, m->field());
  }
  std::vector<std::size_t> out;
  for (unsigned i = 0; i <= range; ++i) out.push_back(r.betti[i] * dn - ranks[i] - ranks[i + 1]);
  return out;
}

BassTable bass_table(const Module::Ptr& m, unsigned range) {
  BassTable out;
  out.mu = ext_dims(m->algebra()->residue_module(), m, range);
  return out;
}

std::vector<std::size_t> ext_generator_counts(const Module::Ptr& m, const Module::Ptr& n,
                                              unsigned range) {
  check_same_algebra(m, n, "ext generator counts");
  auto r = resolve(m, range + 1, true);
  const Algebra& a = *m->algebra();
  const std::size_t nalg = a.dim();
  const std::size_t dn = n->dim();
  std::vector<std::size_t> out;
  for (unsigned i = 0; i <= range; ++i) {
    auto cycles = sparse_kernel(r.diffs[i]->cols.size() * dn,
                                hom_columns(*r.diffs[i], *n, nalg), m->field(), true);
    SparseEchelon span(m->field());  // m*cycles + boundaries
    if (i > 0)
      for (const auto& b : hom_columns(*r.diffs[i - 1], *n, nalg)) span.insert(b);
    for (const auto& z : cycles.kernel)
      for (std::size_t t = 1; t < nalg; ++t) span.insert(tuple_action(*n, t, z));
    out.push_back(cycles.kernel.size() - span.dim());
  }
  return out;
}

std::size_t hom_dim(const Module::Ptr& m, const Module::Ptr& n) {
  check_same_algebra(m, n, "hom");
  const Algebra& a = *m->algebra();
  const std::size_t dm = m->dim(), dn = n->dim();
  const auto& gens = a.generators();
  if (gens.empty()) return dm * dn;
  // unknowns phi[v][w] (index v*dm + w); equations phi rho_M(g) = rho_N(g) phi
  DenseMatrix sys(m->field(), gens.size() * dn * dm, dn * dm);
  std::size_t row = 0;
  for (std::size_t g : gens) {
    const DenseMatrix& rm = m->action(g);
    const DenseMatrix& rn = n->action(g);
    for (std::size_t v = 0; v < dn; ++v)
      for (std::size_t w = 0; w < dm; ++w) {
        for (std::size_t u = 0; u < dm; ++u) sys.at(row, v * dm + u) += rm.at(u, w);
        for (std::size_t u = 0; u < dn; ++u) sys.at(row, u * dm + w) -= rn.at(v, u);
        ++row;
      }
  }
  return dn * dm - rank_of(sys);
}

std::size_t tensor_dim(const Module::Ptr& m, const Module::Ptr& n) {
  check_same_algebra(m, n, "tensor");
  const Algebra& a = *m->algebra();
  const std::size_t dm = m->dim(), dn = n->dim();
  LinearSpan rel(m->field(), dm * dn);
  for (std::size_t g : a.generators()) {
    const DenseMatrix& rm = m->action(g);
    const DenseMatrix& rn = n->action(g);
    for (std::size_t w = 0; w < dm; ++w)
      for (std::size_t u = 0; u < dn; ++u) {
        // (g m_w) ⊗ n_u − m_w ⊗ (g n_u)
        Vec v = zero_vec(m->field(), dm * dn);
        for (std::size_t x = 0; x < dm; ++x) v[x * dn + u] += rm.at(x, w);
        for (std::size_t y = 0; y < dn; ++y) v[w * dn + y] -= rn.at(y, u);
        rel.insert(std::move(v));
      }
  }
  return dm * dn - rel.dim();
}

}  // namespace dgalab
