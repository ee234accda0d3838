#include "dgalab/sparse.hpp"

namespace dgalab {

SparseVec sparse_from_dense(const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return out;
}

Vec sparse_to_dense(const SparseVec& v, Field f, std::size_t n) {
  Vec out = zero_vec(f, n);
  for (const auto& [i, c] : v) {
    if (i >= n) throw InputError("sparse index out of range");
    out[i] = c;
  }
  return out;
}

void sparse_axpy(SparseVec& y, const FieldScalar& c, const SparseVec& x) {
  if (c.is_zero() || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, c * x[j].second);
      ++j;
    } else {
      FieldScalar v = y[i].second + c * x[j].second;
      if (!v.is_zero()) out.emplace_back(y[i].first, v);
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

void sparse_scale(SparseVec& v, const FieldScalar& c) {
  if (c.is_zero()) { v.clear(); return; }
  for (auto& [i, x] : v) x *= c;
}

SparseVec SparseEchelon::reduce(SparseVec v) const {
  while (!v.empty()) {
    auto it = cols_.find(v.front().first);
    if (it == cols_.end()) break;
    FieldScalar c = -v.front().second;  // stored pivot entry is 1
    sparse_axpy(v, c, it->second);
  }
  return v;
}

bool SparseEchelon::insert(SparseVec v) {
  // full reduction pass: the front either becomes a new pivot or cancels;
  // entries past the front may still hit pivots, handled lazily on reduce
  while (!v.empty()) {
    auto it = cols_.find(v.front().first);
    if (it == cols_.end()) {
      FieldScalar inv = v.front().second.inverse();
      sparse_scale(v, inv);
      std::uint32_t key = v.front().first;  // read before the move
      cols_.emplace(key, std::move(v));
      return true;
    }
    FieldScalar c = -v.front().second;
    sparse_axpy(v, c, it->second);
  }
  return false;
}

SparseKernel sparse_kernel(std::size_t rows, const std::vector<SparseVec>& cols, Field f,
                           bool want_kernel) {
  SparseKernel out;
  // pivot row -> (column, record over original column indices)
  std::unordered_map<std::uint32_t, std::pair<SparseVec, SparseVec>> piv;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    SparseVec v = cols[j];
    for (const auto& [i, c] : v) {
      (void)c;
      if (i >= rows) throw InputError("sparse column index exceeds row count");
    }
    SparseVec rec;
    if (want_kernel) rec.emplace_back(static_cast<std::uint32_t>(j), FieldScalar::one(f));
    while (!v.empty()) {
      auto it = piv.find(v.front().first);
      if (it == piv.end()) break;
      FieldScalar c = -v.front().second;
      sparse_axpy(v, c, it->second.first);
      if (want_kernel) sparse_axpy(rec, c, it->second.second);
    }
    if (v.empty()) {
      if (want_kernel) out.kernel.push_back(std::move(rec));
      continue;
    }
    FieldScalar inv = v.front().second.inverse();
    sparse_scale(v, inv);
    if (want_kernel) sparse_scale(rec, inv);
    ++out.rank;
    std::uint32_t key = v.front().first;  // read before the move
    piv.emplace(key, std::make_pair(std::move(v), std::move(rec)));
  }
  return out;
}

std::size_t sparse_rank(std::size_t rows, const std::vector<SparseVec>& cols, Field f) {
  return sparse_kernel(rows, cols, f, false).rank;
}

}  // namespace dgalab
