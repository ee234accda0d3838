#include "dgalab/skew.hpp"

#include <algorithm>
#include <set>

#include "dgalab/algebra.hpp"  // kDimCap
#include "dgalab/lcg.hpp"

namespace dgalab {

namespace {

void check_table_entry(const SparseVec& v, Field f, std::size_t n, const std::string& where) {
  std::uint32_t last = 0;
  bool first = true;
  for (const auto& [idx, c] : v) {
    if (idx >= n) throw InputError("structure constant index out of range at " + where);
    if (!first && idx <= last) throw InputError("structure constants not sorted at " + where);
    if (c.field() != f) throw FieldMismatchError("structure constant field mismatch at " + where);
    if (c.is_zero()) throw InputError("zero coefficient stored at " + where);
    last = idx;
    first = false;
  }
}

Vec basis_vec(Field f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = FieldScalar::one(f);
  return v;
}

}  // namespace

SkewAlgebra::Ptr SkewAlgebra::make(Field f, std::vector<std::string> names,
                                   std::vector<int> degrees,
                                   std::vector<std::vector<SparseVec>> mult,
                                   std::optional<DenseMatrix> differential,
                                   std::optional<std::pair<std::size_t, std::size_t>> preferred) {
  auto s = std::shared_ptr<SkewAlgebra>(new SkewAlgebra());
  s->field_ = f;
  s->names_ = std::move(names);
  s->degrees_ = std::move(degrees);
  s->mult_ = std::move(mult);
  s->diff_ = std::move(differential);
  s->preferred_ = preferred;

  const std::size_t n = s->names_.size();
  if (n == 0) throw InputError("empty basis");
  if (n > kDimCap) throw CapError("basis larger than the dimension cap");
  if (s->degrees_.size() != n) throw InputError("degree list does not match the basis");
  if (s->degrees_[0] != 0) throw InputError("basis element 0 must be the unit in degree 0");
  for (std::size_t i = 1; i < n; ++i)
    if (s->degrees_[i] < 1)
      throw InputError("degree 0 is reserved for the unit (" + s->names_[i] + ")");
  std::set<std::string> seen(s->names_.begin(), s->names_.end());
  if (seen.size() != n) throw InputError("duplicate basis names");
  if (s->mult_.size() != n) throw InputError("multiplication table has wrong shape");
  for (std::size_t i = 0; i < n; ++i) {
    if (s->mult_[i].size() != n) throw InputError("multiplication table has wrong shape");
    for (std::size_t j = 0; j < n; ++j)
      check_table_entry(s->mult_[i][j], f, n, s->names_[i] + "*" + s->names_[j]);
  }
  if (s->diff_) {
    if (s->diff_->rows() != n || s->diff_->cols() != n)
      throw InputError("differential matrix has wrong shape");
    if (s->diff_->field() != f) throw FieldMismatchError("differential field mismatch");
  }
  if (s->preferred_ && (s->preferred_->first >= n || s->preferred_->second >= n))
    throw InputError("preferred pair index out of range");
  return s;
}

Vec SkewAlgebra::multiply(const Vec& a, const Vec& b) const {
  const std::size_t n = dim();
  if (a.size() != n || b.size() != n) throw InputError("element has wrong length");
  Vec out = zero_vec(field_, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      FieldScalar c = a[i] * b[j];
      for (const auto& [idx, coef] : mult_[i][j]) out[idx] += c * coef;
    }
  }
  return out;
}

Vec SkewAlgebra::mult_basis(std::size_t i, const Vec& v) const {
  const std::size_t n = dim();
  Vec out = zero_vec(field_, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& [idx, coef] : mult_[i][j]) out[idx] += v[j] * coef;
  }
  return out;
}

int SkewAlgebra::top_degree() const {
  int t = 0;
  for (int d : degrees_) t = std::max(t, d);
  return t;
}

std::vector<std::size_t> SkewAlgebra::degree_indices(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    if (degrees_[i] == d) out.push_back(i);
  return out;
}

int SkewAlgebra::homogeneous_degree(const Vec& v) const {
  int d = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (d == -1) d = degrees_[i];
    else if (d != degrees_[i]) return -1;
  }
  return d;
}

std::string SkewAlgebra::element_str(const Vec& v) const {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string c = v[i].str();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (c == "1") out += names_[i];
    else out += c + "*" + names_[i];
  }
  return out.empty() ? "0" : out;
}

LinearSpan SkewAlgebra::positive_square() const {
  const std::size_t n = dim();
  LinearSpan span(field_, n);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      if (!mult_[i][j].empty()) span.insert(sparse_to_dense(mult_[i][j], field_, n));
  return span;
}

std::vector<Vec> SkewAlgebra::socle_positive() const {
  const std::size_t n = dim();
  std::vector<Vec> out;
  for (int d = 1; d <= top_degree(); ++d) {
    auto slice = degree_indices(d);
    if (slice.empty()) continue;
    // stacked left-multiplications s_i * (.) restricted to the degree slice
    DenseMatrix mat(field_, (n - 1) * n, slice.size());
    for (std::size_t col = 0; col < slice.size(); ++col)
      for (std::size_t i = 1; i < n; ++i)
        for (const auto& [idx, coef] : mult_[i][slice[col]])
          mat.at((i - 1) * n + idx, col) = coef;
    for (const Vec& kv : rank_kernel(mat).kernel) {
      Vec full = zero_vec(field_, n);
      for (std::size_t col = 0; col < slice.size(); ++col) full[slice[col]] = kv[col];
      out.push_back(std::move(full));
    }
  }
  return out;
}

SkewAxiomReport check_axioms(const SkewAlgebra& s) {
  SkewAxiomReport rep;
  const std::size_t n = s.dim();
  const Field f = s.field();
  auto note = [&rep](bool& flag, const std::string& msg) {
    flag = false;
    if (rep.first_failure.empty()) rep.first_failure = msg;
  };

  for (std::size_t j = 0; j < n && rep.unit_ok; ++j) {
    Vec ej = basis_vec(f, n, j);
    if (s.mult_basis(0, ej) != ej || s.multiply(ej, basis_vec(f, n, 0)) != ej)
      note(rep.unit_ok, "unit row wrong at " + s.names()[j]);
  }

  for (std::size_t i = 0; i < n && rep.graded_ok; ++i)
    for (std::size_t j = 0; j < n && rep.graded_ok; ++j)
      for (const auto& [idx, coef] : s.mult(i, j)) {
        (void)coef;
        if (s.degrees()[idx] != s.degrees()[i] + s.degrees()[j]) {
          note(rep.graded_ok,
               "product " + s.names()[i] + "*" + s.names()[j] + " is not homogeneous");
          break;
        }
      }

  for (std::size_t i = 1; i < n && rep.skew_ok; ++i)
    for (std::size_t j = i; j < n && rep.skew_ok; ++j) {
      Vec lhs = sparse_to_dense(s.mult(i, j), f, n);
      Vec rhs = sparse_to_dense(s.mult(j, i), f, n);
      bool flip = (s.degrees()[i] % 2) && (s.degrees()[j] % 2);
      for (std::size_t t = 0; t < n; ++t)
        if (lhs[t] != (flip ? -rhs[t] : rhs[t])) {
          note(rep.skew_ok,
               "skew-commutativity fails at (" + s.names()[i] + ", " + s.names()[j] + ")");
          break;
        }
    }

  for (std::size_t i = 1; i < n && rep.odd_squares_ok; ++i)
    if (s.degrees()[i] % 2 && !s.mult(i, i).empty())
      note(rep.odd_squares_ok, "odd square " + s.names()[i] + "^2 is nonzero");

  // with skew-commutativity already certified, sorted triples suffice
  if (rep.skew_ok)
    for (std::size_t i = 1; i < n && rep.assoc_ok; ++i)
      for (std::size_t j = i; j < n && rep.assoc_ok; ++j)
        for (std::size_t k = j; k < n && rep.assoc_ok; ++k) {
          Vec ek = basis_vec(f, n, k);
          Vec lhs = s.multiply(sparse_to_dense(s.mult(i, j), f, n), ek);
          Vec rhs = s.mult_basis(i, sparse_to_dense(s.mult(j, k), f, n));
          if (lhs != rhs)
            note(rep.assoc_ok, "associativity fails at (" + s.names()[i] + ", " + s.names()[j] +
                                   ", " + s.names()[k] + ")");
        }

  if (s.differential()) {
    const DenseMatrix& d = *s.differential();
    for (std::size_t j = 0; j < n && rep.diff_ok; ++j)
      for (std::size_t r = 0; r < n && rep.diff_ok; ++r)
        if (!d.at(r, j).is_zero() && s.degrees()[r] != s.degrees()[j] - 1)
          note(rep.diff_ok, "differential is not of degree -1 at " + s.names()[j]);
    if (rep.diff_ok && !(d * d).is_zero()) note(rep.diff_ok, "d*d is nonzero");
    for (std::size_t i = 1; i < n && rep.diff_ok; ++i)
      for (std::size_t j = i; j < n && rep.diff_ok; ++j) {
        Vec lhs = d.apply(sparse_to_dense(s.mult(i, j), f, n));
        Vec rhs = s.multiply(d.apply(basis_vec(f, n, i)), basis_vec(f, n, j));
        Vec second = s.mult_basis(i, d.apply(basis_vec(f, n, j)));
        FieldScalar sign = FieldScalar::from_int(f, s.degrees()[i] % 2 ? -1 : 1);
        for (std::size_t t = 0; t < n; ++t) rhs[t] += sign * second[t];
        if (lhs != rhs)
          note(rep.diff_ok,
               "Leibniz fails at (" + s.names()[i] + ", " + s.names()[j] + ")");
      }
  }
  return rep;
}

namespace {

// u, v qualify when both are homogeneous, killed by S_+, and jointly
// independent modulo (S_+)^2. Returns an empty string on success.
std::string pair_defect(const SkewAlgebra& s, const Vec& u, const Vec& v,
                        const LinearSpan& sq) {
  for (const Vec* w : {&u, &v}) {
    if (s.homogeneous_degree(*w) < 1) return "element " + s.element_str(*w) + " is not homogeneous of positive degree";
    for (std::size_t i = 1; i < s.dim(); ++i)
      if (!LinearSpan::is_zero_vec(s.mult_basis(i, *w)))
        return "element " + s.element_str(*w) + " is not killed by the augmentation ideal";
  }
  LinearSpan probe = sq;
  if (!probe.insert(u))
    return "element " + s.element_str(u) + " lies in the square of the augmentation ideal";
  if (!probe.insert(v))
    return "pair is dependent modulo the square of the augmentation ideal";
  return "";
}

void require_zero_differential(const SkewAlgebra& s, const char* what) {
  if (s.differential() && !s.differential()->is_zero())
    throw InputError(std::string(what) + " needs a zero differential; pass to homology first");
}

}  // namespace

std::optional<SocleWitness> socle_split_pair(const SkewAlgebra& s) {
  require_zero_differential(s, "socle pair search");
  LinearSpan sq = s.positive_square();

  auto build = [&s](Vec u, Vec v, bool preferred) {
    SocleWitness w;
    w.a = s.homogeneous_degree(u);
    w.b = s.homogeneous_degree(v);
    w.u_str = s.element_str(u);
    w.v_str = s.element_str(v);
    w.u = std::move(u);
    w.v = std::move(v);
    w.preferred = preferred;
    return w;
  };

  if (s.preferred_pair()) {
    Vec u = basis_vec(s.field(), s.dim(), s.preferred_pair()->first);
    Vec v = basis_vec(s.field(), s.dim(), s.preferred_pair()->second);
    if (pair_defect(s, u, v, sq).empty()) return build(std::move(u), std::move(v), true);
  }

  std::vector<Vec> picked;
  LinearSpan probe = sq;
  for (Vec& cand : s.socle_positive()) {
    if (probe.insert(cand)) picked.push_back(std::move(cand));
    if (picked.size() == 2)
      return build(std::move(picked[0]), std::move(picked[1]), false);
  }
  return std::nullopt;
}

SplitCheck split_witness(const SkewAlgebra& s, const SocleWitness& w) {
  require_zero_differential(s, "splitting verification");
  const std::size_t n = s.dim();
  const Field f = s.field();
  LinearSpan sq = s.positive_square();
  std::string defect = pair_defect(s, w.u, w.v, sq);
  if (!defect.empty()) throw InputError("invalid witness: " + defect);

  // Adapted coordinates: u, v first, then (S_+)^2, then the standard basis.
  // SpanSolver coordinates are canonical for this order, so the projection
  // kills (S_+)^2 and every later completion vector by construction.
  SpanSolver solver(f, n);
  solver.add(w.u);
  solver.add(w.v);
  for (const Vec& b : sq.basis()) solver.add(b);
  for (std::size_t i = 1; i < n; ++i) solver.add(basis_vec(f, n, i));

  DenseMatrix sigma(f, n, n);
  for (std::size_t i = 1; i < n; ++i) {
    auto coords = solver.solve(basis_vec(f, n, i));
    if (!coords) throw InvariantViolation("adapted basis does not span");  // unreachable
    for (std::size_t r = 0; r < n; ++r)
      sigma.at(r, i) = (*coords)[0] * w.u[r] + (*coords)[1] * w.v[r];
  }

  if (sigma.apply(w.u) != w.u || sigma.apply(w.v) != w.v)
    throw InvariantViolation("projection does not fix the witness pair");

  SplitCheck out{std::move(sigma), 0};
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      Vec lhs = out.sigma.apply(sparse_to_dense(s.mult(i, j), f, n));
      Vec rhs = s.mult_basis(i, out.sigma.apply(basis_vec(f, n, j)));
      if (lhs != rhs)
        throw InvariantViolation("projection is not multiplication-linear at (" + s.names()[i] +
                                 ", " + s.names()[j] + ")");
      ++out.pairs_checked;
    }
  return out;
}

SkewAlgebra::Ptr conjugate_graded(const SkewAlgebra& s, std::uint64_t seed) {
  const std::size_t n = s.dim();
  const Field f = s.field();
  Lcg rng(seed);

  DenseMatrix p = DenseMatrix::identity(f, n);
  for (int d = 1; d <= s.top_degree(); ++d) {
    auto slice = s.degree_indices(d);
    if (slice.empty()) continue;
    const std::size_t k = slice.size();
    DenseMatrix block(f, k, k);
    for (int attempt = 0;; ++attempt) {
      if (attempt > 64) throw InvariantViolation("could not draw an invertible block");
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
          block.at(r, c) = f.is_rationals()
                               ? FieldScalar::from_int(f, rng.next_int(-2, 2))
                               : FieldScalar::from_int(f, rng.next_int(0, f.p - 1));
      if (rank_of(block) == k) break;
    }
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) p.at(slice[r], slice[c]) = block.at(r, c);
  }

  // invert column by column
  DenseMatrix pinv(f, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto col = solve_linear(p, basis_vec(f, n, j));
    if (!col) throw InvariantViolation("change of basis is singular");  // unreachable
    for (std::size_t r = 0; r < n; ++r) pinv.at(r, j) = (*col)[r];
  }

  auto column = [&p, &f, n](std::size_t j) {
    Vec v = zero_vec(f, n);
    for (std::size_t r = 0; r < n; ++r) v[r] = p.at(r, j);
    return v;
  };

  std::vector<std::vector<SparseVec>> mult(n, std::vector<SparseVec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mult[i][j] = sparse_from_dense(pinv.apply(s.multiply(column(i), column(j))));

  std::optional<DenseMatrix> diff;
  if (s.differential()) diff = pinv * (*s.differential()) * p;
  return SkewAlgebra::make(f, s.names(), s.degrees(), std::move(mult), std::move(diff));
}

}  // namespace dgalab
