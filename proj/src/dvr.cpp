#include "dgalab/dvr.hpp"

#include "dgalab/errors.hpp"

namespace dgalab {

DvrElt::DvrElt(Field f, unsigned bound) : field_(f), bound_(bound) {
  if (bound == 0) throw InputError("truncation bound must be positive");
  c_.assign(bound, FieldScalar::zero(f));
}

DvrElt DvrElt::constant(Field f, unsigned bound, const FieldScalar& c) {
  DvrElt e(f, bound);
  e.c_[0] = c;
  return e;
}

DvrElt DvrElt::pi_power(Field f, unsigned bound, unsigned k) {
  if (k >= bound) throw GuardViolation("pi power reaches the truncation bound");
  DvrElt e(f, bound);
  e.c_[k] = FieldScalar::one(f);
  return e;
}

bool DvrElt::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

std::optional<unsigned> DvrElt::valuation() const {
  for (unsigned k = 0; k < bound_; ++k)
    if (!c_[k].is_zero()) return k;
  return std::nullopt;
}

void DvrElt::check_compat(const DvrElt& o) const {
  if (!(field_ == o.field_)) throw FieldMismatchError("mixed-field avatar arithmetic");
  if (bound_ != o.bound_) throw InputError("mixed truncation bounds");
}

DvrElt DvrElt::operator+(const DvrElt& o) const {
  check_compat(o);
  DvrElt r(field_, bound_);
  for (unsigned k = 0; k < bound_; ++k) r.c_[k] = c_[k] + o.c_[k];
  return r;
}

DvrElt DvrElt::operator-(const DvrElt& o) const {
  check_compat(o);
  DvrElt r(field_, bound_);
  for (unsigned k = 0; k < bound_; ++k) r.c_[k] = c_[k] - o.c_[k];
  return r;
}

DvrElt DvrElt::operator*(const DvrElt& o) const {
  check_compat(o);
  DvrElt r(field_, bound_);
  // full convolution: overflow coefficients must sum to zero or we refuse
  std::vector<FieldScalar> high(bound_, FieldScalar::zero(field_));
  for (unsigned i = 0; i < bound_; ++i) {
    if (c_[i].is_zero()) continue;
    for (unsigned j = 0; j < bound_; ++j) {
      if (o.c_[j].is_zero()) continue;
      const unsigned t = i + j;
      if (t < bound_) r.c_[t] += c_[i] * o.c_[j];
      else high[t - bound_] += c_[i] * o.c_[j];
    }
  }
  for (const auto& h : high)
    if (!h.is_zero())
      throw GuardViolation("product touched the truncation bound of the avatar");
  return r;
}

DvrElt DvrElt::scaled(const FieldScalar& c) const {
  DvrElt r(field_, bound_);
  for (unsigned k = 0; k < bound_; ++k) r.c_[k] = c_[k] * c;
  return r;
}

bool DvrElt::operator==(const DvrElt& o) const {
  check_compat(o);
  return (*this - o).is_zero();
}

DvrElt DvrElt::divide_by_pi_power(unsigned k) const {
  for (unsigned t = 0; t < k && t < bound_; ++t)
    if (!c_[t].is_zero())
      throw InvariantViolation("exact pi-power division has a remainder");
  DvrElt r(field_, bound_);
  for (unsigned t = k; t < bound_; ++t) r.c_[t - k] = c_[t];
  return r;
}

DvrElt DvrElt::reduce_mod(unsigned k) const {
  DvrElt r(field_, bound_);
  for (unsigned t = 0; t < k && t < bound_; ++t) r.c_[t] = c_[t];
  return r;
}

std::string DvrElt::str() const {
  std::string out;
  for (unsigned k = 0; k < bound_; ++k) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) out += c_[k].str();
    else {
      if (!(c_[k] == FieldScalar::one(field_))) out += c_[k].str() + "*";
      out += "pi";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

SplitWitnessK residue_witness(Field f, unsigned n, const std::vector<unsigned>& exponents,
                              unsigned bound) {
  if (n < 2) throw InputError("relation exponent must be at least 2");
  if (exponents.empty() || exponents.size() > 3)
    throw InputError("need between one and three summands");
  for (unsigned a : exponents)
    if (a == 0 || a >= n)
      throw InputError("summand exponent " + std::to_string(a) +
                       " is outside (0, n): the module has finite projective dimension");
  if (bound == 0) bound = 2 * n;
  if (bound < 2 * n) throw InputError("truncation bound must be at least 2n");

  SplitWitnessK w;
  w.n = n;
  w.bound = bound;
  w.exponents = exponents;
  const std::size_t a = exponents.size();
  w.rank = a;

  const DvrElt relation = DvrElt::pi_power(f, bound, n);

  // minimal cover g: Q^a -> ⊕ Q/(pi^{a_j}) sends e_j to the j-th generator;
  // minimality = invertible mod pi, here the identity matrix
  DenseMatrix cover_res(f, a, a);
  for (std::size_t j = 0; j < a; ++j) cover_res.at(j, j) = FieldScalar::one(f);
  if (rank_of(cover_res) != a)
    throw InvariantViolation("cover is not minimal");

  // kernel term in degree 0 has basis u_j = pi^{a_j} e_j: check each maps
  // to zero in the corresponding cyclic summand
  for (std::size_t j = 0; j < a; ++j) {
    DvrElt uj = DvrElt::pi_power(f, bound, exponents[j]);
    if (!uj.reduce_mod(exponents[j]).is_zero())
      throw InvariantViolation("kernel basis element survives in the quotient");
  }

  // the degree-1 kernel term is all of Q^a; the differential sends v_j to
  // pi^n e_j = pi^{n-a_j} u_j, an exact division
  std::vector<DvrElt> diag;  // entries pi^{n-a_j} of the kernel differential
  for (std::size_t j = 0; j < a; ++j) {
    DvrElt entry = relation.divide_by_pi_power(exponents[j]);
    w.kernel_shifts.push_back(n - exponents[j]);
    diag.push_back(entry);
  }

  // Leibniz check on the kernel: d(s·u_j) = d(s)·u_j, since d(u_j) = 0;
  // both sides are pi^n u_j
  for (std::size_t j = 0; j < a; ++j) {
    DvrElt s_uj = DvrElt::pi_power(f, bound, exponents[j]);  // s·u_j = pi^{a_j} v_j
    DvrElt lhs = s_uj * diag[j];                             // d of that
    if (!(lhs == relation))
      throw InvariantViolation("kernel differential breaks the product rule");
  }

  // reduce mod pi: dbar and the Koszul-class action eta
  w.dbar = DenseMatrix(f, a, a);
  w.eta = DenseMatrix(f, a, a);
  for (std::size_t j = 0; j < a; ++j) {
    w.dbar.at(j, j) = diag[j].residue();
    w.eta.at(j, j) = DvrElt::pi_power(f, bound, exponents[j]).residue();
  }

  // cycles in degree 1, and a cycle outside the eta image
  auto kk = rank_kernel(w.dbar);
  LinearSpan eta_image(f, a);
  for (std::size_t col = 0; col < a; ++col) {
    Vec v = zero_vec(f, a);
    for (std::size_t r = 0; r < a; ++r) v[r] = w.eta.at(r, col);
    eta_image.insert(v);
  }
  std::optional<Vec> chosen;
  for (const Vec& z : kk.kernel)
    if (!eta_image.contains(z)) {
      chosen = z;
      break;
    }
  if (!chosen)
    throw VerificationFailure(
        "every cycle lies in the eta image: the input has finite projective dimension "
        "or the construction is broken");
  w.w1 = *chosen;

  // retraction beta: project onto w1 along the eta image and a completion
  SpanSolver adapted(f, a);
  adapted.add(w.w1);
  for (const Vec& v : eta_image.basis()) adapted.add(v);
  for (std::size_t i = 0; i < a; ++i) {
    Vec e = zero_vec(f, a);
    e[i] = FieldScalar::one(f);
    adapted.add(e);
  }
  w.beta1 = zero_vec(f, a);
  for (std::size_t i = 0; i < a; ++i) {
    Vec e = zero_vec(f, a);
    e[i] = FieldScalar::one(f);
    auto coords = adapted.solve(e);
    if (!coords) throw InvariantViolation("adapted basis does not span");
    w.beta1[i] = (*coords)[0];
  }

  // verification: beta∘alpha = identity, beta kills the eta image (module
  // linearity over the reduced Koszul algebra), and w1 really is a cycle
  FieldScalar pairing = FieldScalar::zero(f);
  for (std::size_t i = 0; i < a; ++i) pairing += w.beta1[i] * w.w1[i];
  bool beta_alpha_identity = pairing == FieldScalar::one(f);

  bool kills_eta = true;
  for (std::size_t col = 0; col < a; ++col) {
    FieldScalar s = FieldScalar::zero(f);
    for (std::size_t r = 0; r < a; ++r) s += w.beta1[r] * w.eta.at(r, col);
    if (!s.is_zero()) kills_eta = false;
  }

  bool w1_cycle = LinearSpan::is_zero_vec(w.dbar.apply(w.w1));

  w.h1_dim = kk.kernel.size();            // nothing above degree 1 to quotient by
  w.h0_dim = a - kk.rank;
  w.verified = beta_alpha_identity && kills_eta && w1_cycle;
  w.summand = w.verified;
  if (!w.verified)
    throw VerificationFailure("retraction identities failed on the reduced kernel complex");
  return w;
}

}  // namespace dgalab
