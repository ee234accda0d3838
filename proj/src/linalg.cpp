#include "dgalab/linalg.hpp"

namespace dgalab {

bool LinearSpan::is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec LinearSpan::reduce(Vec v) const {
  if (v.size() != n_) throw InputError("LinearSpan: vector has wrong length");
  for (const auto& [p, row] : rows_) {
    if (v[p].is_zero()) continue;
    FieldScalar c = v[p];
    for (std::size_t j = 0; j < n_; ++j)
      if (!row[j].is_zero()) v[j] -= c * row[j];
  }
  return v;
}

bool LinearSpan::insert(Vec v) {
  v = reduce(std::move(v));
  std::size_t p = n_;
  for (std::size_t j = 0; j < n_; ++j)
    if (!v[j].is_zero()) { p = j; break; }
  if (p == n_) return false;
  FieldScalar inv = v[p].inverse();
  for (auto& x : v) x *= inv;
  // eliminate the new pivot coordinate from existing rows
  for (auto& [q, row] : rows_) {
    if (row[p].is_zero()) continue;
    FieldScalar c = row[p];
    for (std::size_t j = 0; j < n_; ++j)
      if (!v[j].is_zero()) row[j] -= c * v[j];
  }
  rows_.emplace(p, std::move(v));
  return true;
}

std::vector<Vec> LinearSpan::basis() const {
  std::vector<Vec> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

bool SpanSolver::add(const Vec& v) {
  if (v.size() != n_) throw InputError("SpanSolver: vector has wrong length");
  Vec w = v;
  std::vector<FieldScalar> rec(count_ + 1, FieldScalar::zero(field_));
  rec[count_] = FieldScalar::one(field_);
  ++count_;
  for (auto& [p, entry] : rows_) {
    auto& [row, rrec] = entry;
    if (w[p].is_zero()) continue;
    FieldScalar c = w[p];
    for (std::size_t j = 0; j < n_; ++j)
      if (!row[j].is_zero()) w[j] -= c * row[j];
    for (std::size_t j = 0; j < rrec.size(); ++j)
      if (!rrec[j].is_zero()) rec[j] -= c * rrec[j];
  }
  std::size_t p = n_;
  for (std::size_t j = 0; j < n_; ++j)
    if (!w[j].is_zero()) { p = j; break; }
  if (p == n_) return false;
  FieldScalar inv = w[p].inverse();
  for (auto& x : w) x *= inv;
  for (auto& x : rec) x *= inv;
  rows_.emplace(p, std::make_pair(std::move(w), std::move(rec)));
  return true;
}

std::optional<std::vector<FieldScalar>> SpanSolver::solve(const Vec& v) const {
  if (v.size() != n_) throw InputError("SpanSolver: vector has wrong length");
  Vec w = v;
  std::vector<FieldScalar> coords(count_, FieldScalar::zero(field_));
  for (const auto& [p, entry] : rows_) {
    const auto& [row, rrec] = entry;
    if (w[p].is_zero()) continue;
    FieldScalar c = w[p];
    for (std::size_t j = 0; j < n_; ++j)
      if (!row[j].is_zero()) w[j] -= c * row[j];
    for (std::size_t j = 0; j < rrec.size(); ++j)
      if (!rrec[j].is_zero()) coords[j] += c * rrec[j];
  }
  if (!LinearSpan::is_zero_vec(w)) return std::nullopt;
  return coords;
}

std::size_t sum_dim(const LinearSpan& u, const LinearSpan& w) {
  if (u.ambient() != w.ambient()) throw InputError("subspace sum in different ambients");
  LinearSpan s = u;
  for (const auto& v : w.basis()) s.insert(v);
  return s.dim();
}

std::size_t intersection_dim(const LinearSpan& u, const LinearSpan& w) {
  return u.dim() + w.dim() - sum_dim(u, w);
}

}  // namespace dgalab
