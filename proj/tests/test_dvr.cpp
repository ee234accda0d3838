#include <doctest.h>

#include "dgalab/dvr.hpp"
#include "dgalab/errors.hpp"

using namespace dgalab;

TEST_SUITE("dvr") {

TEST_CASE("avatar arithmetic and the truncation guard") {
  Field f = Field::rationals();
  auto one = DvrElt::constant(f, 4, FieldScalar::one(f));
  auto p = DvrElt::pi_power(f, 4, 1);
  auto q = DvrElt::pi_power(f, 4, 2).scaled(FieldScalar::from_int(f, 2));
  auto s = one + q;
  CHECK(s.str() == "1 + 2*pi^2");
  CHECK((p * p).str() == "pi^2");
  CHECK(p.valuation().has_value());
  CHECK(*p.valuation() == 1);
  CHECK_FALSE((p - p).valuation().has_value());

  CHECK_THROWS_AS(DvrElt::pi_power(f, 4, 4), GuardViolation);
  auto cube = DvrElt::pi_power(f, 4, 3);
  CHECK_THROWS_AS(cube * cube, GuardViolation);
  // cancellation at high degree is fine: (pi^3 - pi^3) * pi^3 never
  // materializes a coefficient past the bound
  CHECK(((cube - cube) * cube).is_zero());
}

TEST_CASE("exact division and quotient reduction") {
  Field f = Field::rationals();
  auto v = DvrElt::pi_power(f, 8, 5);
  CHECK(v.divide_by_pi_power(3).str() == "pi^2");
  CHECK_THROWS_AS((DvrElt::pi_power(f, 8, 2)).divide_by_pi_power(3), InvariantViolation);
  auto mixed = DvrElt::constant(f, 8, FieldScalar::one(f)) + DvrElt::pi_power(f, 8, 5);
  CHECK(mixed.reduce_mod(3).str() == "1");
  CHECK(DvrElt::pi_power(f, 8, 2).reduce_mod(2).is_zero());
}

TEST_CASE("mixed bounds and fields are rejected") {
  Field f = Field::rationals();
  auto a = DvrElt::constant(f, 4, FieldScalar::one(f));
  auto b = DvrElt::constant(f, 6, FieldScalar::one(f));
  CHECK_THROWS_AS(a + b, InputError);
  auto c = DvrElt::constant(Field::prime(5), 4, FieldScalar::one(Field::prime(5)));
  CHECK_THROWS_AS(a + c, FieldMismatchError);
}

TEST_CASE("residue witness for the smallest case") {
  Field f = Field::rationals();
  auto w = residue_witness(f, 2, {1});
  CHECK(w.verified);
  CHECK(w.summand);
  CHECK(w.rank == 1);
  CHECK(w.bound == 4);
  REQUIRE(w.kernel_shifts.size() == 1);
  CHECK(w.kernel_shifts[0] == 1);
  CHECK(w.dbar.is_zero());
  CHECK(w.eta.is_zero());
  CHECK(w.w1[0] == FieldScalar::one(f));
  CHECK(w.beta1[0] == FieldScalar::one(f));
  CHECK(w.h1_dim == 1);
  CHECK(w.h0_dim == 1);
}

TEST_CASE("mixed summands") {
  Field f = Field::rationals();
  auto w = residue_witness(f, 4, {1, 3});
  CHECK(w.verified);
  CHECK(w.rank == 2);
  CHECK(w.kernel_shifts == std::vector<unsigned>{3, 1});
  CHECK(w.h1_dim == 2);

  auto w3 = residue_witness(f, 6, {2, 3, 5});
  CHECK(w3.verified);
  CHECK(w3.rank == 3);
  CHECK(w3.kernel_shifts == std::vector<unsigned>{4, 3, 1});
}

TEST_CASE("invalid inputs are rejected") {
  Field f = Field::rationals();
  CHECK_THROWS_WITH_AS(residue_witness(f, 4, {4}),
                       doctest::Contains("finite projective dimension"), InputError);
  CHECK_THROWS_AS(residue_witness(f, 4, {0}), InputError);
  CHECK_THROWS_AS(residue_witness(f, 4, {1, 2, 3, 1}), InputError);
  CHECK_THROWS_AS(residue_witness(f, 4, std::vector<unsigned>{}), InputError);
  CHECK_THROWS_AS(residue_witness(f, 1, {1}), InputError);
  CHECK_THROWS_AS(residue_witness(f, 4, {1}, 7), InputError);  // bound below 2n
}

TEST_CASE("determinism and prime fields") {
  Field f = Field::prime(7);
  auto w1 = residue_witness(f, 5, {2, 4});
  auto w2 = residue_witness(f, 5, {2, 4});
  CHECK(w1.verified);
  CHECK(w1.w1 == w2.w1);
  CHECK(w1.beta1 == w2.beta1);
}

}  // TEST_SUITE
