#include <doctest.h>

#include "dgalab/field.hpp"
#include "dgalab/errors.hpp"

using namespace dgalab;

TEST_SUITE("field") {

TEST_CASE("rational arithmetic stays exact") {
  Field q = Field::rationals();
  auto third = FieldScalar::parse(q, "1/3");
  auto sixth = FieldScalar::parse(q, "1/6");
  CHECK((third + sixth).str() == "1/2");
  CHECK((third - third).is_zero());
  CHECK((third * FieldScalar::from_int(q, 3)).str() == "1");
  CHECK((FieldScalar::from_int(q, -2) / FieldScalar::from_int(q, 4)).str() == "-1/2");
  // iterate small sums; denominators must not drift
  auto acc = FieldScalar::zero(q);
  for (int i = 1; i <= 10; ++i) acc += FieldScalar::one(q) / FieldScalar::from_int(q, i);
  CHECK(acc.str() == "7381/2520");
}

TEST_CASE("prime field arithmetic and inverses") {
  Field f7 = Field::parse("Fp:7");
  auto three = FieldScalar::from_int(f7, 3);
  CHECK((three.inverse() * three).str() == "1");
  CHECK(three.inverse().str() == "5");
  CHECK((FieldScalar::from_int(f7, 6) + FieldScalar::one(f7)).is_zero());
  CHECK(FieldScalar::from_int(f7, -1).str() == "6");
  // parse with a denominator reduces through the inverse
  CHECK(FieldScalar::parse(f7, "3/4").str() == "6");
  // large prime accepted
  Field big = Field::parse("Fp:2147483647");
  auto x = FieldScalar::from_int(big, 1234567);
  CHECK((x * x.inverse()).str() == "1");
}

TEST_CASE("bad fields and bad scalars are rejected") {
  CHECK_THROWS_AS(Field::parse("Fp:4"), InputError);
  CHECK_THROWS_AS(Field::parse("Fp:1"), InputError);
  CHECK_THROWS_AS(Field::parse("Fp:2147483649"), InputError);
  CHECK_THROWS_AS(Field::parse("R"), InputError);
  Field f5 = Field::prime(5);
  CHECK_THROWS_AS(FieldScalar::parse(f5, "1/5"), InputError);  // denominator vanishes
  CHECK_THROWS_AS(FieldScalar::one(f5) / FieldScalar::zero(f5), InputError);
  CHECK_THROWS_AS(FieldScalar::zero(f5).inverse(), InputError);
}

TEST_CASE("mixing fields is a loud error") {
  auto a = FieldScalar::one(Field::rationals());
  auto b = FieldScalar::one(Field::prime(5));
  CHECK_THROWS_AS(a + b, FieldMismatchError);
  CHECK_THROWS_AS(a * b, FieldMismatchError);
  auto c = FieldScalar::one(Field::prime(7));
  CHECK_THROWS_AS(b - c, FieldMismatchError);
}

TEST_CASE("characteristic two behaves") {
  Field f2 = Field::prime(2);
  auto one = FieldScalar::one(f2);
  CHECK((one + one).is_zero());
  CHECK((-one) == one);
}

}
