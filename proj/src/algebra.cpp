#include "dgalab/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <set>

namespace dgalab {

namespace {

std::atomic<std::uint64_t> next_id{1};

SparseVec unit_vec_sparse(Field f, std::uint32_t i) {
  return SparseVec{{i, FieldScalar::one(f)}};
}

// sparse product of two algebra elements through the structure constants
SparseVec mult_sparse(const Algebra& a, const SparseVec& x, const SparseVec& y) {
  std::map<std::uint32_t, FieldScalar> acc;
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y) {
      FieldScalar c = ci * cj;
      for (const auto& [t, ct] : a.mult(i, j)) {
        auto it = acc.find(t);
        if (it == acc.end()) acc.emplace(t, c * ct);
        else it->second += c * ct;
      }
    }
  SparseVec out;
  for (const auto& [t, c] : acc)
    if (!c.is_zero()) out.emplace_back(t, c);
  return out;
}

}  // namespace

Algebra::Ptr Algebra::from_table(Field f, std::vector<std::string> names,
                                 std::vector<std::vector<SparseVec>> mult,
                                 std::optional<std::vector<std::size_t>> generators,
                                 std::optional<std::vector<int>> degrees) {
  auto a = std::shared_ptr<Algebra>(new Algebra());
  a->field_ = f;
  a->dim_ = names.size();
  a->names_ = std::move(names);
  a->mult_ = std::move(mult);
  a->degrees_ = std::move(degrees);
  a->id_ = next_id.fetch_add(1);
  if (generators) {
    a->gens_ = std::move(*generators);
  } else if (a->dim_ > 1) {
    // deterministic minimal default: basis elements that grow m modulo m^2
    a->gens_.clear();
  }
  if (a->dim_ == 0) throw InputError("algebra needs at least the unit basis element");
  if (a->dim_ > kDimCap) throw CapError("algebra dimension exceeds the cap of 400");
  if (a->mult_.size() != a->dim_) throw InputError("structure table has wrong row count");
  for (const auto& row : a->mult_)
    if (row.size() != a->dim_) throw InputError("structure table has wrong column count");
  if (!generators && a->dim_ > 1) {
    // compute m^2 first (needs the table only)
    LinearSpan m2(f, a->dim_);
    for (std::size_t i = 1; i < a->dim_; ++i)
      for (std::size_t j = i; j < a->dim_; ++j)
        m2.insert(sparse_to_dense(a->mult_[i][j], f, a->dim_));
    LinearSpan span = m2;
    for (std::size_t i = 1; i < a->dim_; ++i) {
      Vec e = zero_vec(f, a->dim_);
      e[i] = FieldScalar::one(f);
      if (span.insert(e)) a->gens_.push_back(i);
    }
  }
  a->validate();
  return a;
}

void Algebra::validate() const {
  const Field f = field_;
  const std::size_t n = dim_;
  // entries well-formed
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t prev = 0;
      bool first = true;
      for (const auto& [t, c] : mult_[i][j]) {
        if (t >= n) throw InputError("structure constant index out of range");
        if (!first && t <= prev) throw InputError("structure constants not sorted");
        prev = t;
        first = false;
        if (c.field() != f) throw FieldMismatchError("structure constant over wrong field");
        if (c.is_zero()) throw InputError("structure table stores a zero coefficient");
      }
    }
  // unit row: b_0 * b_j = b_j
  for (std::size_t j = 0; j < n; ++j)
    if (mult_[0][j] != unit_vec_sparse(f, static_cast<std::uint32_t>(j)))
      throw InputError("b_0 does not act as the unit on " + names_[j]);
  // commutativity
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (mult_[i][j] != mult_[j][i])
        throw InputError("structure table is not commutative at (" + names_[i] + ", " +
                         names_[j] + ")");
  // span(b_1..) must be an ideal: no unit component in products of non-units
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (!mult_[i][j].empty() && mult_[i][j].front().first == 0)
        throw InputError("product " + names_[i] + "*" + names_[j] +
                         " has a unit component; span(b_1..) is not an ideal");
  // associativity on all sorted triples (commutativity covers the rest)
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        SparseVec lhs = mult_sparse(*this, mult_[i][j], unit_vec_sparse(f, k));
        SparseVec rhs = mult_sparse(*this, unit_vec_sparse(f, i), mult_[j][k]);
        if (lhs != rhs)
          throw InputError("associativity fails at (" + names_[i] + ", " + names_[j] + ", " +
                           names_[k] + ")");
      }
  // nilpotency of m
  if (n > 1) {
    LinearSpan cur = maximal_ideal();
    for (std::size_t step = 0; step <= n; ++step) {
      if (cur.dim() == 0) break;
      LinearSpan nxt(f, n);
      for (const auto& v : cur.basis())
        for (std::size_t i = 1; i < n; ++i) nxt.insert(mult_basis(i, v));
      if (nxt.dim() >= cur.dim())
        throw InputError("maximal ideal is not nilpotent");
      cur = std::move(nxt);
    }
    if (cur.dim() != 0) throw InputError("maximal ideal is not nilpotent");
  }
  // generators: inside m, unique, and generate m as an ideal
  {
    std::set<std::size_t> seen;
    for (std::size_t g : gens_) {
      if (g == 0 || g >= n) throw InputError("generator index out of range");
      if (!seen.insert(g).second) throw InputError("duplicate generator index");
    }
    if (n > 1) {
      if (gens_.empty()) throw InputError("no generators marked for the maximal ideal");
      LinearSpan u(f, n);
      for (std::size_t g : gens_) {
        Vec e = zero_vec(f, n);
        e[g] = FieldScalar::one(f);
        u.insert(e);
      }
      for (;;) {
        std::size_t before = u.dim();
        for (const auto& v : u.basis())
          for (std::size_t i = 1; i < n; ++i) u.insert(mult_basis(i, v));
        if (u.dim() == before) break;
      }
      if (u.dim() != n - 1)
        throw InputError("marked generators do not generate the maximal ideal");
    } else if (!gens_.empty()) {
      throw InputError("the one-dimensional algebra has no maximal-ideal generators");
    }
  }
  // grading, if present
  if (degrees_) {
    if (degrees_->size() != n) throw InputError("degree list has wrong length");
    if ((*degrees_)[0] != 0) throw InputError("unit must have degree 0");
    for (std::size_t i = 1; i < n; ++i)
      if ((*degrees_)[i] < 1) throw InputError("non-unit basis element with degree < 1");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [t, c] : mult_[i][j]) {
          (void)c;
          if ((*degrees_)[t] != (*degrees_)[i] + (*degrees_)[j])
            throw InputError("grading violated by the product " + names_[i] + "*" + names_[j]);
        }
  }
}

Algebra::Ptr Algebra::from_monomial_ideal(Field f, std::size_t nvars,
                                          const std::vector<Exponents>& gens) {
  for (const auto& g : gens) {
    if (g.size() != nvars) throw InputError("ideal generator has wrong variable count");
    if (total_degree(g) == 0) throw InputError("ideal contains 1; the quotient is zero");
  }
  // Artinian test: every variable needs a pure power among the generators
  for (std::size_t v = 0; v < nvars; ++v) {
    bool pure = false;
    for (const auto& g : gens) {
      bool only_v = g[v] > 0;
      for (std::size_t u = 0; u < nvars && only_v; ++u)
        if (u != v && g[u] > 0) only_v = false;
      if (only_v) { pure = true; break; }
    }
    if (!pure)
      throw InputError("ideal is not Artinian: x" + std::to_string(v + 1) +
                       " has no pure power among the generators");
  }
  auto in_ideal = [&gens](const Exponents& e) {
    for (const auto& g : gens) {
      bool div = true;
      for (std::size_t i = 0; i < e.size() && div; ++i)
        if (g[i] > e[i]) div = false;
      if (div) return true;
    }
    return false;
  };
  // standard monomials, level by level
  std::set<Exponents, GrlexLess> standard;
  std::set<Exponents, GrlexLess> level;
  level.insert(Exponents(nvars, 0));
  for (unsigned d = 0; d <= kNilpotencyCap; ++d) {
    if (level.empty()) break;
    if (d == kNilpotencyCap)
      throw CapError("standard monomials persist at degree " + std::to_string(kNilpotencyCap) +
                     "; the nilpotency bound is exceeded");
    for (const auto& e : level) standard.insert(e);
    std::set<Exponents, GrlexLess> next;
    for (const auto& e : level)
      for (std::size_t v = 0; v < nvars; ++v) {
        Exponents e2 = e;
        ++e2[v];
        if (!in_ideal(e2)) next.insert(e2);
      }
    level = std::move(next);
  }
  const std::size_t n = standard.size();
  if (n > kDimCap) throw CapError("monomial quotient dimension exceeds the cap of 400");
  std::vector<Exponents> basis(standard.begin(), standard.end());
  std::map<Exponents, std::size_t, GrlexLess> index;
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (std::size_t i = 0; i < n; ++i) {
    index.emplace(basis[i], i);
    names.push_back(monomial_str(basis[i]));
    degrees.push_back(static_cast<int>(total_degree(basis[i])));
  }
  std::vector<std::vector<SparseVec>> mult(n, std::vector<SparseVec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Exponents e(nvars);
      for (std::size_t v = 0; v < nvars; ++v) e[v] = basis[i][v] + basis[j][v];
      if (in_ideal(e)) continue;
      auto it = index.find(e);
      if (it == index.end())
        throw InvariantViolation("standard monomial product escaped the enumeration");
      mult[i][j] = unit_vec_sparse(f, static_cast<std::uint32_t>(it->second));
    }
  std::vector<std::size_t> g;
  for (std::size_t i = 0; i < n; ++i)
    if (degrees[i] == 1) g.push_back(i);
  return from_table(f, std::move(names), std::move(mult), g, degrees);
}

Algebra::Ptr Algebra::trivial_extension(const Ptr& base, std::size_t r) {
  const std::size_t nb = base->dim();
  const std::size_t n = nb + r;
  if (n > kDimCap) throw CapError("trivial extension dimension exceeds the cap of 400");
  const Field f = base->field();
  std::vector<std::string> names = base->names();
  std::string prefix = "z";
  for (bool clash = true; clash;) {
    clash = false;
    for (std::size_t i = 1; i <= r && !clash; ++i)
      clash = std::find(names.begin(), names.end(), prefix + std::to_string(i)) != names.end();
    if (clash) prefix = "z" + prefix;
  }
  for (std::size_t i = 1; i <= r; ++i) names.push_back(prefix + std::to_string(i));
  std::vector<std::vector<SparseVec>> mult(n, std::vector<SparseVec>(n));
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) mult[i][j] = base->mult(i, j);
  for (std::size_t z = nb; z < n; ++z) {
    mult[0][z] = unit_vec_sparse(f, static_cast<std::uint32_t>(z));
    mult[z][0] = mult[0][z];
    // z * m = 0 and z * z' = 0: all other products stay empty
  }
  std::vector<std::size_t> gens = base->generators();
  for (std::size_t z = nb; z < n; ++z) gens.push_back(z);
  std::optional<std::vector<int>> degrees;
  if (base->degrees()) {
    degrees = *base->degrees();
    for (std::size_t z = nb; z < n; ++z) degrees->push_back(1);
  }
  return from_table(f, std::move(names), std::move(mult), gens, degrees);
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw InputError("element has wrong length");
  Vec out = zero_vec(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      FieldScalar c = a[i] * b[j];
      for (const auto& [t, ct] : mult_[i][j]) out[t] += c * ct;
    }
  }
  return out;
}

Vec Algebra::mult_basis(std::size_t i, const Vec& v) const {
  Vec out = zero_vec(field_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& [t, ct] : mult_[i][j]) out[t] += v[j] * ct;
  }
  return out;
}

SparseVec Algebra::block_mult(std::size_t t, const SparseVec& w) const {
  std::map<std::uint32_t, FieldScalar> acc;
  const std::uint32_t n = static_cast<std::uint32_t>(dim_);
  for (const auto& [idx, c] : w) {
    std::uint32_t j = idx / n, s = idx % n;
    for (const auto& [u, cu] : mult_[t][s]) {
      std::uint32_t key = j * n + u;
      auto it = acc.find(key);
      if (it == acc.end()) acc.emplace(key, c * cu);
      else it->second += c * cu;
    }
  }
  SparseVec out;
  for (const auto& [k, c] : acc)
    if (!c.is_zero()) out.emplace_back(k, c);
  return out;
}

LinearSpan Algebra::maximal_ideal() const {
  LinearSpan m(field_, dim_);
  for (std::size_t i = 1; i < dim_; ++i) {
    Vec e = zero_vec(field_, dim_);
    e[i] = FieldScalar::one(field_);
    m.insert(e);
  }
  return m;
}

LinearSpan Algebra::m_power(unsigned k) const {
  if (k == 0) throw InputError("m_power expects k >= 1");
  LinearSpan cur = maximal_ideal();
  for (unsigned step = 1; step < k; ++step) {
    LinearSpan nxt(field_, dim_);
    for (const auto& v : cur.basis())
      for (std::size_t i = 1; i < dim_; ++i) nxt.insert(mult_basis(i, v));
    cur = std::move(nxt);
  }
  return cur;
}

LinearSpan Algebra::socle() const {
  // iteratively intersect kernels of multiplication by each non-unit basis element
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < dim_; ++i) {
    Vec e = zero_vec(field_, dim_);
    e[i] = FieldScalar::one(field_);
    basis.push_back(std::move(e));
  }
  for (std::size_t i = 1; i < dim_ && !basis.empty(); ++i) {
    DenseMatrix m(field_, dim_, basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
      Vec img = mult_basis(i, basis[c]);
      for (std::size_t r = 0; r < dim_; ++r) m.at(r, c) = img[r];
    }
    auto rk = rank_kernel(m);
    std::vector<Vec> next;
    for (const auto& coeffs : rk.kernel) {
      Vec v = zero_vec(field_, dim_);
      for (std::size_t c = 0; c < basis.size(); ++c)
        if (!coeffs[c].is_zero())
          for (std::size_t r = 0; r < dim_; ++r) v[r] += coeffs[c] * basis[c][r];
      next.push_back(std::move(v));
    }
    basis = std::move(next);
  }
  LinearSpan out(field_, dim_);
  for (auto& v : basis) out.insert(std::move(v));
  return out;
}

std::size_t Algebra::embedding_dim() const {
  if (dim_ == 1) return 0;
  return (dim_ - 1) - m_power(2).dim();
}

std::shared_ptr<const Module> Algebra::residue_module() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!k_module_) {
    auto m = std::shared_ptr<Module>(new Module());
    m->a_ = shared_from_this();
    m->dim_ = 1;
    m->trusted_ = true;
    m->id_ = next_id.fetch_add(1);
    for (std::size_t i = 0; i < dim_; ++i) {
      DenseMatrix a(field_, 1, 1);
      if (i == 0) a.at(0, 0) = FieldScalar::one(field_);
      m->actions_.push_back(std::move(a));
    }
    k_module_ = m;
  }
  return k_module_;
}

std::shared_ptr<const Module> Algebra::regular_module() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!a_module_) {
    auto m = std::shared_ptr<Module>(new Module());
    m->a_ = shared_from_this();
    m->dim_ = dim_;
    m->trusted_ = true;
    m->id_ = next_id.fetch_add(1);
    for (std::size_t i = 0; i < dim_; ++i) {
      DenseMatrix a(field_, dim_, dim_);
      for (std::size_t j = 0; j < dim_; ++j)
        for (const auto& [t, c] : mult_[i][j]) a.at(t, j) = c;
      m->actions_.push_back(std::move(a));
    }
    a_module_ = m;
  }
  return a_module_;
}

std::shared_ptr<const Module> Algebra::maximal_ideal_module() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!m_module_) {
    auto m = std::shared_ptr<Module>(new Module());
    m->a_ = shared_from_this();
    m->dim_ = dim_ - 1;
    m->trusted_ = true;
    m->id_ = next_id.fetch_add(1);
    for (std::size_t i = 0; i < dim_; ++i) {
      DenseMatrix a(field_, dim_ - 1, dim_ - 1);
      for (std::size_t j = 1; j < dim_; ++j)
        for (const auto& [t, c] : mult_[i][j]) {
          if (t == 0) throw InvariantViolation("maximal ideal is not closed under the action");
          a.at(t - 1, j - 1) = c;
        }
      m->actions_.push_back(std::move(a));
    }
    m_module_ = m;
  }
  return m_module_;
}

MaxIdealSplit decompose_maximal_ideal(const Algebra::Ptr& a) {
  MaxIdealSplit out;
  if (a->dim() == 1) return out;
  LinearSpan soc = a->socle();
  LinearSpan m2 = a->m_power(2);
  LinearSpan probe = m2;
  for (const auto& v : soc.basis())
    if (probe.insert(v)) {
      out.witnesses.push_back(v);
      ++out.s;
    }
  return out;
}

// ---- Module ----

Module::Module(Algebra::Ptr a, std::vector<DenseMatrix> actions) {
  a_ = std::move(a);
  actions_ = std::move(actions);
  dim_ = actions_.empty() ? 0 : actions_[0].rows();
  id_ = next_id.fetch_add(1);
  validate();
}

Module::Ptr Module::make(Algebra::Ptr a, std::vector<DenseMatrix> actions) {
  return std::make_shared<const Module>(std::move(a), std::move(actions));
}

void Module::validate() const {
  const std::size_t n = a_->dim();
  if (actions_.size() != n) throw InputError("module needs one action matrix per basis element");
  if (dim_ > kDimCap) throw CapError("module dimension exceeds the cap of 400");
  const Field f = a_->field();
  for (const auto& m : actions_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw InputError("action matrix shape mismatch");
    if (m.field() != f) throw FieldMismatchError("action matrix over wrong field");
  }
  if (trusted_) return;
  if (!(actions_[0] == DenseMatrix::identity(f, dim_)))
    throw InputError("b_0 must act as the identity");
  auto expect = [&](std::size_t i, std::size_t j) {
    DenseMatrix rhs(f, dim_, dim_);
    for (const auto& [t, c] : a_->mult(i, j)) rhs = rhs + actions_[t].scaled(c);
    if (!(actions_[i] * actions_[j] == rhs))
      throw InputError("module action is incompatible with the structure constants at (" +
                       a_->names()[i] + ", " + a_->names()[j] + ")");
  };
  const double budget = 2e8;
  const double full_cost = static_cast<double>(n) * n * dim_ * dim_ * dim_;
  if (full_cost <= budget) {
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) expect(i, j);
    // commutation of the actions follows from the symmetric table
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!(actions_[i] * actions_[j] == actions_[j] * actions_[i]))
          throw InputError("module actions do not commute");
  } else {
    for (std::size_t g : a_->generators())
      for (std::size_t j = 1; j < n; ++j) {
        expect(g, j);
        if (!(actions_[g] * actions_[j] == actions_[j] * actions_[g]))
          throw InputError("module actions do not commute");
      }
  }
}

Module::Ptr Module::free_module(const Algebra::Ptr& a, std::size_t rank) {
  const std::size_t n = a->dim();
  if (rank * n > kDimCap) throw CapError("free module dimension exceeds the cap of 400");
  auto m = std::shared_ptr<Module>(new Module());
  m->a_ = a;
  m->dim_ = rank * n;
  m->trusted_ = true;
  m->id_ = next_id.fetch_add(1);
  for (std::size_t i = 0; i < n; ++i) {
    DenseMatrix mat(a->field(), rank * n, rank * n);
    for (std::size_t blk = 0; blk < rank; ++blk)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [t, c] : a->mult(i, j)) mat.at(blk * n + t, blk * n + j) = c;
    m->actions_.push_back(std::move(mat));
  }
  return m;
}

Module::Ptr Module::quotient_of_free(const Algebra::Ptr& a, std::size_t s,
                                     const std::vector<Vec>& submodule_gens) {
  const std::size_t n = a->dim();
  const std::size_t amb = s * n;
  const Field f = a->field();
  LinearSpan u(f, amb);
  for (const auto& v : submodule_gens) u.insert(v);
  // close under the action of m
  for (;;) {
    std::size_t before = u.dim();
    for (const auto& v : u.basis())
      for (std::size_t i = 1; i < n; ++i) {
        SparseVec w = a->block_mult(i, sparse_from_dense(v));
        u.insert(sparse_to_dense(w, f, amb));
      }
    if (u.dim() == before) break;
  }
  std::vector<std::size_t> complement;
  for (std::size_t j = 0; j < amb; ++j)
    if (!u.rows().count(j)) complement.push_back(j);
  const std::size_t q = complement.size();
  if (q > kDimCap) throw CapError("quotient module dimension exceeds the cap of 400");
  auto m = std::shared_ptr<Module>(new Module());
  m->a_ = a;
  m->dim_ = q;
  m->trusted_ = true;
  m->id_ = next_id.fetch_add(1);
  for (std::size_t i = 0; i < n; ++i) {
    DenseMatrix mat(f, q, q);
    for (std::size_t c = 0; c < q; ++c) {
      SparseVec e{{static_cast<std::uint32_t>(complement[c]), FieldScalar::one(f)}};
      Vec img = u.reduce(sparse_to_dense(a->block_mult(i, e), f, amb));
      for (std::size_t r = 0; r < q; ++r) mat.at(r, c) = img[complement[r]];
    }
    m->actions_.push_back(std::move(mat));
  }
  return m;
}

Module::Ptr Module::cokernel(const Algebra::Ptr& a, std::size_t s,
                             const std::vector<std::vector<SparseVec>>& columns) {
  const std::size_t n = a->dim();
  std::vector<Vec> gens;
  for (const auto& col : columns) {
    if (col.size() != s) throw InputError("presentation column has wrong height");
    Vec v = zero_vec(a->field(), s * n);
    for (std::size_t j = 0; j < s; ++j)
      for (const auto& [t, c] : col[j]) {
        if (t >= n) throw InputError("presentation entry index out of range");
        v[j * n + t] += c;
      }
    gens.push_back(std::move(v));
  }
  return quotient_of_free(a, s, gens);
}

Module::Ptr Module::matlis_dual(const Ptr& m) {
  auto d = std::shared_ptr<Module>(new Module());
  d->a_ = m->a_;
  d->dim_ = m->dim_;
  d->trusted_ = true;
  d->id_ = next_id.fetch_add(1);
  for (std::size_t i = 0; i < m->actions_.size(); ++i)
    d->actions_.push_back(m->actions_[i].transpose());
  return d;
}

LinearSpan Module::radical() const {
  LinearSpan r(field(), dim_);
  const std::size_t n = a_->dim();
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      Vec e = zero_vec(field(), dim_);
      e[j] = FieldScalar::one(field());
      r.insert(act(i, e));
    }
  return r;
}

std::vector<Vec> Module::minimal_generators() const {
  LinearSpan probe = radical();
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec e = zero_vec(field(), dim_);
    e[j] = FieldScalar::one(field());
    if (probe.insert(e)) gens.push_back(std::move(e));
  }
  return gens;
}

}  // namespace dgalab
