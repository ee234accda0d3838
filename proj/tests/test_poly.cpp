#include <doctest.h>

#include "dgalab/errors.hpp"
#include "dgalab/poly.hpp"

using namespace dgalab;

TEST_SUITE("poly") {

TEST_CASE("parse, print, arithmetic over the rationals") {
  Field q = Field::rationals();
  auto p = MultiPoly::parse(q, 3, "x1^2*x2 - 3*x3 + 1/2");
  CHECK(p.degree() == 3);
  CHECK(p.str() == "x1^2*x2 - 3*x3 + 1/2");
  auto x1 = MultiPoly::variable(q, 3, 0);
  auto x3 = MultiPoly::variable(q, 3, 2);
  auto r = p + x3.scaled(FieldScalar::from_int(q, 3));
  CHECK(r.str() == "x1^2*x2 + 1/2");
  CHECK((p - p).is_zero());
  CHECK((x1 * x1).str() == "x1^2");
}

TEST_CASE("freshman dream holds only in characteristic two") {
  auto square_sum = [](Field f) {
    auto x = MultiPoly::variable(f, 2, 0);
    auto y = MultiPoly::variable(f, 2, 1);
    auto s = x + y;
    return s * s;
  };
  CHECK(square_sum(Field::prime(2)).str() == "x1^2 + x2^2");
  CHECK(square_sum(Field::rationals()).str() == "x1^2 + 2*x1*x2 + x2^2");
}

TEST_CASE("substitution by zero kills the right terms") {
  Field q = Field::rationals();
  auto p = MultiPoly::parse(q, 2, "x1*x2 + x2^2 - x1^3");
  auto s = p.substitute_zero({0});
  CHECK(s.str() == "x2^2");
  CHECK(p.substitute_zero({0, 1}).is_zero());
}

TEST_CASE("homogeneity detection") {
  Field q = Field::rationals();
  CHECK(MultiPoly::parse(q, 2, "x1^2 + x1*x2").homogeneous_degree() == 2);
  CHECK_FALSE(MultiPoly::parse(q, 2, "x1^2 + x1").homogeneous_degree().has_value());
  CHECK(MultiPoly::parse(q, 2, "0").is_zero());
}

TEST_CASE("monomial parsing and printing") {
  auto e = parse_monomial(3, "x1^2*x3");
  CHECK(e == (Exponents{2, 0, 1}));
  CHECK(monomial_str(e) == "x1^2*x3");
  CHECK(parse_monomial(2, "1") == (Exponents{0, 0}));
  CHECK(monomial_str((Exponents{0, 0})) == "1");
  CHECK_THROWS_AS(parse_monomial(2, "x3"), InputError);
  CHECK_THROWS_AS(parse_monomial(2, "y1"), InputError);
}

TEST_CASE("parse rejects malformed input with position info") {
  Field q = Field::rationals();
  CHECK_THROWS_AS(MultiPoly::parse(q, 2, "x1 +"), InputError);
  CHECK_THROWS_AS(MultiPoly::parse(q, 2, "x0"), InputError);
  CHECK_THROWS_AS(MultiPoly::parse(q, 2, "x3 + 1"), InputError);
  CHECK_THROWS_AS(MultiPoly::parse(q, 2, "x1^"), InputError);
  CHECK_THROWS_AS(MultiPoly::parse(q, 2, "2x1"), InputError);
}

TEST_CASE("coefficients reduce modulo p") {
  Field f3 = Field::prime(3);
  auto p = MultiPoly::parse(f3, 1, "3*x1 + 4");
  CHECK(p.str() == "1");
}

}
