#include "dgalab/koszul.hpp"

#include <algorithm>
#include <map>

namespace dgalab {

namespace {

// sorted j-subsets of {0..e-1} in lexicographic order
std::vector<std::vector<int>> subsets(int e, int j) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if ((int)cur.size() == j) {
      out.push_back(cur);
      return;
    }
    for (int l = next; l < e; ++l) {
      cur.push_back(l);
      self(self, l + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// (-1)^{#inversions} for merging two disjoint sorted subsets
int shuffle_sign(const std::vector<int>& s, const std::vector<int>& t) {
  int inv = 0;
  for (int a : s)
    for (int b : t)
      if (a > b) ++inv;
  return inv % 2 ? -1 : 1;
}

struct KoszulData {
  Algebra::Ptr a;
  int e = 0;
  std::vector<std::vector<std::vector<int>>> sub;       // sub[j] = j-subsets
  std::vector<std::map<std::vector<int>, std::size_t>> rank;  // subset -> position
  std::vector<DenseMatrix> d;  // d[j] : K_j -> K_{j-1}, j = 1..e

  std::size_t space_dim(int j) const { return sub[j].size() * a->dim(); }
};

KoszulData build_koszul(const Algebra::Ptr& a) {
  const auto& gens = a->generators();
  const std::size_t n = a->dim();
  Field f = a->field();

  LinearSpan probe = a->m_power(2);
  for (std::size_t g : gens) {
    Vec v = zero_vec(f, n);
    v[g] = FieldScalar::one(f);
    probe.insert(v);
  }
  if (probe.dim() != n - 1)
    throw InputError("marked generators do not span m/m^2");

  KoszulData k;
  k.a = a;
  k.e = (int)gens.size();
  k.sub.resize(k.e + 1);
  k.rank.resize(k.e + 1);
  for (int j = 0; j <= k.e; ++j) {
    k.sub[j] = subsets(k.e, j);
    for (std::size_t i = 0; i < k.sub[j].size(); ++i) k.rank[j][k.sub[j][i]] = i;
  }

  k.d.reserve(k.e + 1);
  k.d.emplace_back();  // placeholder for j = 0
  for (int j = 1; j <= k.e; ++j) {
    DenseMatrix mat(f, k.space_dim(j - 1), k.space_dim(j));
    for (std::size_t si = 0; si < k.sub[j].size(); ++si) {
      const auto& s = k.sub[j][si];
      for (std::size_t pos = 0; pos < s.size(); ++pos) {
        std::vector<int> rest = s;
        rest.erase(rest.begin() + pos);
        const std::size_t ri = k.rank[j - 1][rest];
        const bool neg = pos % 2;
        for (std::size_t t = 0; t < n; ++t)
          for (const auto& [idx, coef] : a->mult(gens[s[pos]], t))
            mat.at(ri * n + idx, si * n + t) += neg ? -coef : coef;
      }
    }
    k.d.push_back(std::move(mat));
  }
  return k;
}

}  // namespace

std::vector<std::size_t> koszul_homology(const Algebra::Ptr& a) {
  KoszulData k = build_koszul(a);
  std::vector<std::size_t> ranks(k.e + 2, 0);  // ranks[j] = rank d_j, d_0 = d_{e+1} = 0
  for (int j = 1; j <= k.e; ++j) ranks[j] = rank_of(k.d[j]);
  std::vector<std::size_t> dims(k.e + 1);
  for (int j = 0; j <= k.e; ++j) dims[j] = k.space_dim(j) - ranks[j] - ranks[j + 1];
  return dims;
}

SkewAlgebra::Ptr koszul_homology_algebra(const Algebra::Ptr& a) {
  KoszulData k = build_koszul(a);
  const std::size_t n = a->dim();
  Field f = a->field();

  // representatives: complete the boundary span to the cycle space, greedily
  std::vector<std::vector<Vec>> reps(k.e + 1);
  std::vector<SpanSolver> express;  // boundaries first, then representatives
  express.reserve(k.e + 1);
  for (int j = 0; j <= k.e; ++j) {
    std::vector<Vec> cycles;
    if (j == 0) {
      for (std::size_t t = 0; t < n; ++t) {
        Vec v = zero_vec(f, n);
        v[t] = FieldScalar::one(f);
        cycles.push_back(std::move(v));
      }
    } else {
      cycles = rank_kernel(k.d[j]).kernel;
    }
    express.emplace_back(f, k.space_dim(j));
    LinearSpan probe(f, k.space_dim(j));
    if (j < k.e) {
      const DenseMatrix& nxt = k.d[j + 1];
      for (std::size_t c = 0; c < nxt.cols(); ++c) {
        Vec col = zero_vec(f, nxt.rows());
        for (std::size_t r = 0; r < nxt.rows(); ++r) col[r] = nxt.at(r, c);
        probe.insert(col);
        express[j].add(col);
      }
    }
    for (Vec& z : cycles) {
      if (probe.insert(z)) {
        express[j].add(z);
        reps[j].push_back(std::move(z));
      }
    }
  }

  std::vector<std::string> names = {"1"};
  std::vector<int> degrees = {0};
  std::vector<std::pair<int, std::size_t>> where = {{0, 0}};  // (j, index into reps[j])
  if (reps[0].size() != 1) throw InvariantViolation("degree-0 homology is not one line");
  for (int j = 1; j <= k.e; ++j)
    for (std::size_t i = 0; i < reps[j].size(); ++i) {
      names.push_back("h" + std::to_string(j) + "_" + std::to_string(i + 1));
      degrees.push_back(j);
      where.push_back({j, i});
    }
  const std::size_t nh = names.size();

  // product of representatives in the exterior complex, then reduction
  auto wedge = [&](const Vec& u, int ju, const Vec& w, int jw) {
    Vec out = zero_vec(f, k.space_dim(ju + jw));
    for (std::size_t iu = 0; iu < u.size(); ++iu) {
      if (u[iu].is_zero()) continue;
      const auto& s = k.sub[ju][iu / n];
      const std::size_t t = iu % n;
      for (std::size_t iw = 0; iw < w.size(); ++iw) {
        if (w[iw].is_zero()) continue;
        const auto& tt = k.sub[jw][iw / n];
        const std::size_t ss = iw % n;
        std::vector<int> merged(s.size() + tt.size());
        std::merge(s.begin(), s.end(), tt.begin(), tt.end(), merged.begin());
        bool disjoint = std::adjacent_find(merged.begin(), merged.end()) == merged.end();
        if (!disjoint) continue;
        FieldScalar c = u[iu] * w[iw];
        if (shuffle_sign(s, tt) < 0) c = -c;
        const std::size_t block = k.rank[ju + jw][merged] * n;
        for (const auto& [idx, coef] : a->mult(t, ss)) out[block + idx] += c * coef;
      }
    }
    return out;
  };

  std::vector<std::vector<SparseVec>> mult(nh, std::vector<SparseVec>(nh));
  for (std::size_t x = 0; x < nh; ++x)
    for (std::size_t y = 0; y < nh; ++y) {
      const auto [jx, ix] = where[x];
      const auto [jy, iy] = where[y];
      if (jx + jy > k.e) continue;
      Vec prod = wedge(reps[jx][ix], jx, reps[jy][iy], jy);
      auto coords = express[jx + jy].solve(prod);
      if (!coords) throw InvariantViolation("cycle product escaped the cycle space");
      SparseVec entry;
      const std::size_t skip = express[jx + jy].added() - reps[jx + jy].size();
      for (std::size_t i = 0; i < reps[jx + jy].size(); ++i) {
        const FieldScalar& c = (*coords)[skip + i];
        if (c.is_zero()) continue;
        // locate the basis position of rep i in degree jx+jy
        std::size_t basis_idx = 0;
        for (std::size_t b = 0; b < nh; ++b)
          if (where[b] == std::make_pair(jx + jy, i)) basis_idx = b;
        entry.push_back({(std::uint32_t)basis_idx, c});
      }
      std::sort(entry.begin(), entry.end(),
                [](const auto& l, const auto& r) { return l.first < r.first; });
      mult[x][y] = std::move(entry);
    }

  return SkewAlgebra::make(f, std::move(names), std::move(degrees), std::move(mult));
}

bool golod_multiplication(const Algebra::Ptr& a) {
  return koszul_homology_algebra(a)->positive_square().dim() == 0;
}

std::vector<BigInt> golod_series(const Algebra::Ptr& a, std::size_t range) {
  auto dims = koszul_homology(a);
  const std::size_t e = dims.size() - 1;

  std::vector<BigInt> num(range + 1, 0);  // (1+t)^e
  num[0] = 1;
  for (std::size_t i = 1; i <= std::min(range, e); ++i) {
    // binomial recurrence keeps everything integral
    num[i] = num[i - 1] * BigInt(e - i + 1) / BigInt(i);
  }
  std::vector<BigInt> den(range + 1, 0);
  den[0] = 1;
  for (std::size_t j = 1; j <= e; ++j)
    if (j + 1 <= range) den[j + 1] = -BigInt(dims[j]);

  std::vector<BigInt> out(range + 1, 0);
  for (std::size_t i = 0; i <= range; ++i) {
    BigInt v = num[i];
    for (std::size_t t = 1; t <= i; ++t) v -= den[t] * out[i - t];
    out[i] = v;  // den[0] = 1
  }
  return out;
}

}  // namespace dgalab
