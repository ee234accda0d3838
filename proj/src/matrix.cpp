#include "dgalab/matrix.hpp"

#include <numeric>

namespace dgalab {

Vec zero_vec(Field f, std::size_t n) { return Vec(n, FieldScalar::zero(f)); }

DenseMatrix::DenseMatrix(Field f, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), field_(f), a_(rows * cols, FieldScalar::zero(f)) {}

DenseMatrix DenseMatrix::identity(Field f, std::size_t n) {
  DenseMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldScalar::one(f);
  return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
  if (field_ != o.field_) throw FieldMismatchError("matrix product across fields");
  if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
  DenseMatrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldScalar& v = at(i, k);
      if (v.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const FieldScalar& w = o.at(k, j);
        if (!w.is_zero()) r.at(i, j) += v * w;
      }
    }
  return r;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const {
  if (field_ != o.field_) throw FieldMismatchError("matrix sum across fields");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum shape mismatch");
  DenseMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& o) const {
  if (field_ != o.field_) throw FieldMismatchError("matrix difference across fields");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix difference shape mismatch");
  DenseMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

DenseMatrix DenseMatrix::scaled(const FieldScalar& c) const {
  DenseMatrix r = *this;
  for (auto& v : r.a_) v *= c;
  return r;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Vec DenseMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector shape mismatch");
  Vec r = zero_vec(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

bool DenseMatrix::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

bool DenseMatrix::operator==(const DenseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

namespace {

// ---- rational path: fraction-free (Bareiss) elimination on an integral copy ----

// Scales each row integral (common denominator); row scaling leaves the
// right kernel and the row rank unchanged.
std::vector<std::vector<BigInt>> integral_rows(const DenseMatrix& m, const Vec* b) {
  std::vector<std::vector<BigInt>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    auto fold = [&l](const BigRat& q) {
      const BigInt& d = boost::multiprecision::denominator(q);
      l = boost::multiprecision::lcm(l, d);
    };
    for (std::size_t j = 0; j < m.cols(); ++j) fold(m.at(i, j).rational());
    if (b) fold((*b)[i].rational());
    rows[i].resize(m.cols() + (b ? 1 : 0));
    auto scale = [&l](const BigRat& q) {
      return boost::multiprecision::numerator(q) * (l / boost::multiprecision::denominator(q));
    };
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = scale(m.at(i, j).rational());
    if (b) rows[i][m.cols()] = scale((*b)[i].rational());
  }
  return rows;
}

// Bareiss echelon, deterministic first-nonzero pivoting (columns left to
// right, first usable row). Returns pivot (row, col) pairs; the matrix is
// left in integer echelon form with exact divisions throughout.
std::vector<std::pair<std::size_t, std::size_t>> bareiss(std::vector<std::vector<BigInt>>& a,
                                                         std::size_t cols) {
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  if (a.empty()) return pivots;
  BigInt prev = 1;
  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < cols && pr < a.size(); ++pc) {
    std::size_t sel = pr;
    while (sel < a.size() && a[sel][pc] == 0) ++sel;
    if (sel == a.size()) continue;
    if (sel != pr) std::swap(a[sel], a[pr]);
    const BigInt piv = a[pr][pc];
    for (std::size_t r = pr + 1; r < a.size(); ++r) {
      // every row below is rescaled, even with zero head, so the division
      // by the previous pivot stays exact at the next step
      const BigInt head = a[r][pc];
      for (std::size_t c = pc + 1; c < a[r].size(); ++c)
        a[r][c] = (a[r][c] * piv - head * a[pr][c]) / prev;
      a[r][pc] = 0;
    }
    prev = piv;
    pivots.emplace_back(pr, pc);
    ++pr;
  }
  return pivots;
}

// Back-substitution: given the integer echelon and a fixed assignment of
// the non-pivot coordinates, produce the exact rational solution of E x = 0.
std::vector<BigRat> back_substitute(const std::vector<std::vector<BigInt>>& e,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& pivots,
                                    std::vector<BigRat> x) {
  for (std::size_t k = pivots.size(); k-- > 0;) {
    auto [r, c] = pivots[k];
    BigRat acc = 0;
    for (std::size_t j = c + 1; j < e[r].size(); ++j)
      if (e[r][j] != 0 && !x[j].is_zero()) acc += BigRat(e[r][j]) * x[j];
    x[c] = -acc / BigRat(e[r][c]);
  }
  return x;
}

// Integer-primitive normalization with positive leading entry.
Vec normalize_q(const std::vector<BigRat>& x, std::size_t n) {
  BigInt l = 1;
  for (std::size_t j = 0; j < n; ++j)
    l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x[j]));
  std::vector<BigInt> v(n);
  BigInt g = 0;
  for (std::size_t j = 0; j < n; ++j) {
    v[j] = boost::multiprecision::numerator(x[j]) *
           (l / boost::multiprecision::denominator(x[j]));
    g = boost::multiprecision::gcd(g, v[j]);
  }
  if (g == 0) g = 1;
  int sign = 0;
  for (std::size_t j = 0; j < n && sign == 0; ++j)
    if (v[j] != 0) sign = v[j] > 0 ? 1 : -1;
  if (sign < 0) g = -g;
  Vec out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
    out.push_back(FieldScalar::from_rational(BigRat(v[j] / g)));
  return out;
}

// ---- F_p path: plain elimination ----

std::uint64_t fp_mul(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t fp_inv(std::uint64_t a, std::uint32_t p) {
  long long t = 0, nt = 1, r = p, nr = static_cast<long long>(a % p);
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

std::vector<std::vector<std::uint64_t>> fp_rows(const DenseMatrix& m, const Vec* b) {
  std::vector<std::vector<std::uint64_t>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows[i].resize(m.cols() + (b ? 1 : 0));
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j).residue();
    if (b) rows[i][m.cols()] = (*b)[i].residue();
  }
  return rows;
}

std::vector<std::pair<std::size_t, std::size_t>> fp_echelon(
    std::vector<std::vector<std::uint64_t>>& a, std::size_t cols, std::uint32_t p) {
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  if (a.empty()) return pivots;
  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < cols && pr < a.size(); ++pc) {
    std::size_t sel = pr;
    while (sel < a.size() && a[sel][pc] == 0) ++sel;
    if (sel == a.size()) continue;
    if (sel != pr) std::swap(a[sel], a[pr]);
    const std::uint64_t inv = fp_inv(a[pr][pc], p);
    for (std::size_t c = pc; c < a[pr].size(); ++c) a[pr][c] = fp_mul(a[pr][c], inv, p);
    for (std::size_t r = pr + 1; r < a.size(); ++r) {
      const std::uint64_t head = a[r][pc];
      if (head == 0) continue;
      for (std::size_t c = pc; c < a[r].size(); ++c) {
        std::uint64_t sub = fp_mul(head, a[pr][c], p);
        a[r][c] = (a[r][c] + p - sub) % p;
      }
    }
    pivots.emplace_back(pr, pc);
    ++pr;
  }
  return pivots;
}

std::vector<std::uint64_t> fp_back_substitute(
    const std::vector<std::vector<std::uint64_t>>& e,
    const std::vector<std::pair<std::size_t, std::size_t>>& pivots,
    std::vector<std::uint64_t> x, std::uint32_t p) {
  for (std::size_t k = pivots.size(); k-- > 0;) {
    auto [r, c] = pivots[k];
    std::uint64_t acc = 0;
    for (std::size_t j = c + 1; j < e[r].size(); ++j)
      if (e[r][j] != 0 && x[j] != 0) acc = (acc + fp_mul(e[r][j], x[j], p)) % p;
    x[c] = (p - acc % p) % p;  // pivot entry is 1
  }
  return x;
}

Vec fp_to_vec(const std::vector<std::uint64_t>& x, std::size_t n, Field f) {
  // scale so the first nonzero coordinate is 1
  std::uint64_t lead = 0;
  for (std::size_t j = 0; j < n && lead == 0; ++j) lead = x[j];
  std::uint64_t s = lead == 0 ? 1 : fp_inv(lead, f.p);
  Vec out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
    out.push_back(FieldScalar::from_int(f, static_cast<long long>(fp_mul(x[j], s, f.p))));
  return out;
}

}  // namespace

RankKernel rank_kernel(const DenseMatrix& m) {
  RankKernel out;
  const std::size_t n = m.cols();
  if (m.field().is_rationals()) {
    auto a = integral_rows(m, nullptr);
    auto pivots = bareiss(a, n);
    out.rank = pivots.size();
    std::vector<bool> is_pivot(n, false);
    for (auto [r, c] : pivots) is_pivot[c] = true;
    for (std::size_t fc = 0; fc < n; ++fc) {
      if (is_pivot[fc]) continue;
      std::vector<BigRat> x(n, BigRat(0));
      x[fc] = 1;
      x = back_substitute(a, pivots, std::move(x));
      out.kernel.push_back(normalize_q(x, n));
    }
  } else {
    auto a = fp_rows(m, nullptr);
    auto pivots = fp_echelon(a, n, m.field().p);
    out.rank = pivots.size();
    std::vector<bool> is_pivot(n, false);
    for (auto [r, c] : pivots) is_pivot[c] = true;
    for (std::size_t fc = 0; fc < n; ++fc) {
      if (is_pivot[fc]) continue;
      std::vector<std::uint64_t> x(n, 0);
      x[fc] = 1;
      x = fp_back_substitute(a, pivots, std::move(x), m.field().p);
      out.kernel.push_back(fp_to_vec(x, n, m.field()));
    }
  }
  return out;
}

std::size_t rank_of(const DenseMatrix& m) {
  if (m.field().is_rationals()) {
    auto a = integral_rows(m, nullptr);
    return bareiss(a, m.cols()).size();
  }
  auto a = fp_rows(m, nullptr);
  return fp_echelon(a, m.cols(), m.field().p).size();
}

std::optional<Vec> solve_linear(const DenseMatrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw InputError("solve_linear shape mismatch");
  for (const auto& v : b)
    if (v.field() != m.field()) throw FieldMismatchError("solve_linear rhs over wrong field");
  const std::size_t n = m.cols();
  if (m.field().is_rationals()) {
    auto a = integral_rows(m, &b);
    auto pivots = bareiss(a, n + 1);
    if (!pivots.empty() && pivots.back().second == n) return std::nullopt;  // pivot in rhs
    std::vector<BigRat> x(n + 1, BigRat(0));
    x[n] = -1;  // encode m*x - b = 0
    x = back_substitute(a, pivots, std::move(x));
    Vec out;
    out.reserve(n);
    for (std::size_t j = 0; j < n; ++j) out.push_back(FieldScalar::from_rational(x[j]));
    return out;
  }
  auto a = fp_rows(m, &b);
  auto pivots = fp_echelon(a, n + 1, m.field().p);
  if (!pivots.empty() && pivots.back().second == n) return std::nullopt;
  std::vector<std::uint64_t> x(n + 1, 0);
  x[n] = m.field().p - 1;  // -1 mod p
  x = fp_back_substitute(a, pivots, std::move(x), m.field().p);
  Vec out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
    out.push_back(FieldScalar::from_int(m.field(), static_cast<long long>(x[j])));
  return out;
}

}  // namespace dgalab
