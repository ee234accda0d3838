#include <doctest.h>

#include "dgalab/matrix.hpp"
#include "dgalab/sparse.hpp"

using namespace dgalab;

namespace {

// dense cross-check oracle: pack columns into a DenseMatrix and compare
DenseMatrix to_dense(std::size_t rows, const std::vector<SparseVec>& cols, Field f) {
  DenseMatrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) m.at(r, c) = v;
  return m;
}

SparseVec col(Field f, const std::vector<std::pair<std::uint32_t, long long>>& e) {
  SparseVec v;
  for (const auto& [i, x] : e) v.emplace_back(i, FieldScalar::from_int(f, x));
  return v;
}

void check_kernel_annihilates(std::size_t rows, const std::vector<SparseVec>& cols, Field f,
                              const SparseVec& kvec) {
  Vec acc = zero_vec(f, rows);
  for (const auto& [j, c] : kvec)
    for (const auto& [r, v] : cols[j]) acc[r] += c * v;
  for (const auto& e : acc) CHECK(e.is_zero());
}

}  // namespace

TEST_SUITE("sparse") {

TEST_CASE("round trip dense and sparse") {
  Field q = Field::rationals();
  Vec v = zero_vec(q, 5);
  v[1] = FieldScalar::from_int(q, 3);
  v[4] = FieldScalar::from_int(q, -2);
  auto s = sparse_from_dense(v);
  CHECK(s.size() == 2);
  CHECK(sparse_to_dense(s, q, 5) == v);
}

TEST_CASE("axpy merges sorted supports") {
  Field q = Field::rationals();
  auto y = col(q, {{0, 1}, {2, 2}});
  auto x = col(q, {{1, 1}, {2, -1}});
  sparse_axpy(y, FieldScalar::from_int(q, 2), x);
  CHECK(y == col(q, {{0, 1}, {1, 2}}));  // index 2 cancels: 2 + 2*(-1)
}

TEST_CASE("kernel agrees with the dense engine over the rationals") {
  Field q = Field::rationals();
  std::vector<SparseVec> cols = {
      col(q, {{0, 1}, {1, 2}, {2, 1}}),
      col(q, {{0, 2}, {1, 4}, {2, 2}}),   // 2x first
      col(q, {{1, 1}}),
      col(q, {{0, 1}, {2, 1}}),           // = col0 - 2*col2, dependent
  };
  auto sk = sparse_kernel(3, cols, q, true);
  auto dk = rank_kernel(to_dense(3, cols, q));
  CHECK(sk.rank == dk.rank);
  CHECK(sk.kernel.size() == cols.size() - dk.rank);
  for (const auto& kv : sk.kernel) check_kernel_annihilates(3, cols, q, kv);
}

TEST_CASE("kernel agrees with the dense engine over a prime field") {
  Field f7 = Field::prime(7);
  std::vector<SparseVec> cols = {
      col(f7, {{0, 3}, {3, 1}}),
      col(f7, {{1, 2}, {2, 5}}),
      col(f7, {{0, 6}, {3, 2}}),   // = 2 * col0
      col(f7, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}),
      col(f7, {{2, 4}}),
  };
  auto sk = sparse_kernel(4, cols, f7, true);
  CHECK(sk.rank == rank_of(to_dense(4, cols, f7)));
  CHECK(sk.kernel.size() + sk.rank == cols.size());
  for (const auto& kv : sk.kernel) check_kernel_annihilates(4, cols, f7, kv);
}

TEST_CASE("kernel vectors carry coefficient one at their defining column") {
  Field q = Field::rationals();
  std::vector<SparseVec> cols = {
      col(q, {{0, 1}}),
      col(q, {{0, 2}}),
      col(q, {{0, 3}}),
  };
  auto sk = sparse_kernel(1, cols, q, true);
  CHECK(sk.rank == 1);
  REQUIRE(sk.kernel.size() == 2);
  // defining columns are 1 and 2, in order
  CHECK(sk.kernel[0].back().first == 1);
  CHECK(sk.kernel[0].back().second.is_one());
  CHECK(sk.kernel[1].back().first == 2);
  CHECK(sk.kernel[1].back().second.is_one());
}

TEST_CASE("zero columns become singleton kernel vectors") {
  Field q = Field::rationals();
  std::vector<SparseVec> cols = {col(q, {{0, 1}}), {}, col(q, {{1, 1}})};
  auto sk = sparse_kernel(2, cols, q, true);
  CHECK(sk.rank == 2);
  REQUIRE(sk.kernel.size() == 1);
  CHECK(sk.kernel[0] == col(q, {{1, 1}}));
}

TEST_CASE("echelon membership under repeated reduction") {
  Field f5 = Field::prime(5);
  SparseEchelon e(f5);
  CHECK(e.insert(col(f5, {{0, 1}, {2, 3}})));
  CHECK(e.insert(col(f5, {{1, 2}})));
  CHECK_FALSE(e.insert(col(f5, {{0, 2}, {1, 1}, {2, 6}})));
  CHECK(e.dim() == 2);
  CHECK(e.contains(col(f5, {{0, 4}, {2, 12}})));
  CHECK_FALSE(e.contains(col(f5, {{2, 1}})));
}

}
