#include <doctest.h>

#include "dgalab/koszul.hpp"
#include "dgalab/resolution.hpp"
#include "dgalab/torclass.hpp"

using namespace dgalab;

namespace {

Algebra::Ptr monomial_ring(Field f, std::size_t nvars, const std::vector<std::string>& gens) {
  std::vector<Exponents> es;
  for (const auto& g : gens) es.push_back(parse_monomial(nvars, g));
  return Algebra::from_monomial_ideal(f, nvars, es);
}

std::vector<BigInt> to_big(const std::vector<std::size_t>& v) {
  return std::vector<BigInt>(v.begin(), v.end());
}

}  // namespace

TEST_SUITE("koszul") {

TEST_CASE("homology dimensions of small quotients") {
  Field q = Field::rationals();
  CHECK(koszul_homology(monomial_ring(q, 1, {"x1^2"})) == (std::vector<std::size_t>{1, 1}));
  CHECK(koszul_homology(monomial_ring(q, 1, {"x1^5"})) == (std::vector<std::size_t>{1, 1}));
  CHECK(koszul_homology(monomial_ring(q, 2, {"x1^2", "x1*x2", "x2^2"})) ==
        (std::vector<std::size_t>{1, 3, 2}));
  CHECK(koszul_homology(monomial_ring(q, 3, {"x1^2", "x1*x2", "x2^2", "x1*x3", "x2*x3", "x3^2"})) ==
        (std::vector<std::size_t>{1, 6, 8, 3}));
  // complete intersection: binomial pattern from the exterior structure
  CHECK(koszul_homology(monomial_ring(q, 2, {"x1^2", "x2^2"})) ==
        (std::vector<std::size_t>{1, 2, 1}));
  CHECK(koszul_homology(monomial_ring(q, 3, {"x1^2", "x2^2", "x3^2"})) ==
        (std::vector<std::size_t>{1, 3, 3, 1}));
  // a field has no generators: the complex is just k in degree 0
  CHECK(koszul_homology(monomial_ring(q, 1, {"x1"})) == (std::vector<std::size_t>{1}));
  // dimensions are characteristic-sensitive in general but agree here
  CHECK(koszul_homology(monomial_ring(Field::prime(2), 2, {"x1^2", "x1*x2", "x2^2"})) ==
        (std::vector<std::size_t>{1, 3, 2}));
}

TEST_CASE("homology algebra passes the skew audit") {
  Field q = Field::rationals();
  for (auto& a : {monomial_ring(q, 2, {"x1^2", "x1*x2", "x2^2"}),
                  monomial_ring(q, 2, {"x1^2", "x2^2"}),
                  monomial_ring(q, 1, {"x1^3"})}) {
    auto h = koszul_homology_algebra(a);
    auto rep = check_axioms(*h);
    if (!rep.pass()) FAIL("audit failed: " << rep.first_failure);
    CHECK(!h->differential().has_value());
  }
}

TEST_CASE("homology algebra of a codimension-3 complete intersection is the exterior shape") {
  Field q = Field::rationals();
  auto a = monomial_ring(q, 3, {"x1^2", "x2^2", "x3^2"});
  auto h = koszul_homology_algebra(a);
  REQUIRE(check_axioms(*h).pass());
  CHECK(h->degrees() == (std::vector<int>{0, 1, 1, 1, 2, 2, 2, 3}));
  TorClass cl = classify(*h);
  CHECK(cl.tag == TorClass::TE);
  CHECK(cl.m == 3);
  CHECK(cl.c == 1);
  // the top class pairs perfectly with degree 1: rank-3 pairing into H_3
  CHECK(h->positive_square().dim() == 4);
}

TEST_CASE("trivial multiplication detection") {
  Field q = Field::rationals();
  // square of the maximal ideal: all products of positive classes vanish
  CHECK(golod_multiplication(monomial_ring(q, 2, {"x1^2", "x1*x2", "x2^2"})));
  CHECK(golod_multiplication(monomial_ring(q, 1, {"x1^2"})));
  CHECK(golod_multiplication(monomial_ring(q, 1, {"x1^4"})));
  // socle extension of k[x]/(x^3): still trivial multiplication
  auto ext = Algebra::trivial_extension(monomial_ring(q, 1, {"x1^3"}), 1);
  CHECK(golod_multiplication(ext));
  // complete intersections are the opposite extreme
  CHECK(!golod_multiplication(monomial_ring(q, 2, {"x1^2", "x2^2"})));
  CHECK(!golod_multiplication(monomial_ring(q, 3, {"x1^2", "x2^2", "x3^2"})));
}

TEST_CASE("series division is exact: (1+t)^2 = (1 - 3t^2 - 2t^3) * series") {
  Field q = Field::rationals();
  auto a = monomial_ring(q, 2, {"x1^2", "x1*x2", "x2^2"});
  auto s = golod_series(a, 8);
  // multiply back and compare coefficientwise
  std::vector<BigInt> den = {1, 0, -3, -2};
  std::vector<BigInt> prod(9, 0);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < den.size() && j <= i; ++j) prod[i] += den[j] * s[i - j];
  CHECK(prod == (std::vector<BigInt>{1, 2, 1, 0, 0, 0, 0, 0, 0}));
  CHECK(s == (std::vector<BigInt>{1, 2, 4, 8, 16, 32, 64, 128, 256}));
}

TEST_CASE("series matches the resolution engine on rings with trivial products") {
  Field q = Field::rationals();
  for (auto& a : {monomial_ring(q, 2, {"x1^2", "x1*x2", "x2^2"}),
                  monomial_ring(q, 3, {"x1^2", "x1*x2", "x2^2", "x1*x3", "x2*x3", "x3^2"}),
                  monomial_ring(q, 1, {"x1^2"}), monomial_ring(q, 1, {"x1^6"})}) {
    auto series = golod_series(a, 6);
    auto betti = resolve(a->residue_module(), 6).betti;
    CHECK(series == to_big(betti));
  }
}

TEST_CASE("for a complete intersection the series is a strict upper bound") {
  Field q = Field::rationals();
  auto a = monomial_ring(q, 2, {"x1^2", "x2^2"});
  auto series = golod_series(a, 4);
  auto betti = to_big(resolve(a->residue_module(), 4).betti);
  CHECK(series[2] >= betti[2]);
  CHECK(series[3] > betti[3]);  // 5 vs 4: the bound is not attained
  CHECK(betti == (std::vector<BigInt>{1, 2, 3, 4, 5}));
  CHECK(series == (std::vector<BigInt>{1, 2, 3, 5, 8}));
}

TEST_CASE("zero-generator edge: the series of the base field is 1") {
  auto k = monomial_ring(Field::rationals(), 1, {"x1"});
  CHECK(golod_series(k, 5) == (std::vector<BigInt>{1, 0, 0, 0, 0, 0}));
  CHECK(golod_multiplication(k));
}

}  // TEST_SUITE
