#include <doctest.h>

#include <fstream>

#include "dgalab/io.hpp"
#include "dgalab/koszul.hpp"

using namespace dgalab;

TEST_SUITE("io") {

TEST_CASE("monomial quotient spec round trip") {
  Field f = Field::rationals();
  Json spec = spec_from_descriptor(ExampleDescriptor::power_of_m(2, 2), f);
  CHECK(spec["kind"] == "monomial_quotient");
  CHECK(spec["vars"] == 2);
  CHECK(spec["ideal"] == Json::array({"x1^2", "x1*x2", "x2^2"}));
  auto ring = ring_from_json(spec);
  CHECK(ring->dim() == 3);
  CHECK(ring->embedding_dim() == 2);

  Json hyp = spec_from_descriptor(ExampleDescriptor::hypersurface(4), f);
  CHECK(hyp["ideal"] == Json::array({"x1^4"}));
  CHECK(ring_from_json(hyp)->dim() == 4);
}

TEST_CASE("ring spec rejections") {
  Json spec = {{"field", "Q"}, {"kind", "monomial_quotient"}, {"vars", 1}};
  CHECK_THROWS_WITH_AS(ring_from_json(spec), doctest::Contains("ideal"), InputError);
  spec["ideal"] = Json::array({"x1+x1^2"});
  CHECK_THROWS_WITH_AS(ring_from_json(spec), doctest::Contains("single monomials"), InputError);
  spec["ideal"] = Json::array({"2*x1^2"});
  CHECK_THROWS_WITH_AS(ring_from_json(spec), doctest::Contains("coefficient one"), InputError);
  spec["kind"] = "mystery";
  CHECK_THROWS_WITH_AS(ring_from_json(spec), doctest::Contains("unknown ring kind"), InputError);
}

TEST_CASE("table spec with mirrored products") {
  // k[x]/(x^3): listing x*x = x2 once is enough
  Json spec = {{"field", "Q"},
               {"kind", "table"},
               {"basis", Json::array({"1", "x", "x2"})},
               {"table", Json::array({Json::array({"x", "x", "x2", 1})})}};
  auto ring = ring_from_json(spec);
  CHECK(ring->dim() == 3);
  CHECK(ring->m_power(2).dim() == 1);
  CHECK(ring->m_power(3).dim() == 0);

  Json bad = spec;
  bad["table"] = Json::array({Json::array({"x", "y", "x2", 1})});
  CHECK_THROWS_WITH_AS(ring_from_json(bad), doctest::Contains("unknown basis element"), InputError);
  bad["table"] = Json::array({Json::array({"x", "x", "x2"})});
  CHECK_THROWS_WITH_AS(ring_from_json(bad), doctest::Contains("quadruples"), InputError);
}

TEST_CASE("trivial extension spec") {
  Field f = Field::rationals();
  Json spec = spec_from_descriptor(ExampleDescriptor::trivial_ext(2, 2), f);
  CHECK(spec["kind"] == "trivial_extension");
  CHECK(spec["r"] == 2);
  auto ring = ring_from_json(spec);
  CHECK(ring->dim() == 4);
  CHECK(decompose_maximal_ideal(ring).s == 3);

  spec["base"]["field"] = "Fp:5";
  CHECK_THROWS_WITH_AS(ring_from_json(spec), doctest::Contains("different field"), InputError);
}

TEST_CASE("multiplication class spec keeps the canonical witness") {
  Field f = Field::rationals();
  Json spec = spec_from_descriptor(ExampleDescriptor::codim3(TorClass::te(4, 2)), f);
  CHECK(spec["preferred"] == Json::array({"g1", "g2"}));
  auto s = skew_from_json(spec);
  CHECK(check_axioms(*s).pass());
  CHECK(classify(*s) == TorClass::te(4, 2));
  auto w = socle_split_pair(*s);
  REQUIRE(w.has_value());
  CHECK(w->preferred);
  CHECK(w->u_str == "g1");
  CHECK(w->v_str == "g2");
  CHECK(w->a == 3);
  CHECK(w->b == 3);
}

TEST_CASE("skew spec with only one product order listed") {
  // exterior algebra on e1, e2: list e1*e2, let the loader add e2*e1 = -e1*e2
  Json spec = {{"basis", Json::array({Json{{"name", "1"}, {"degree", 0}},
                                      Json{{"name", "e1"}, {"degree", 1}},
                                      Json{{"name", "e2"}, {"degree", 1}},
                                      Json{{"name", "e12"}, {"degree", 2}}})},
               {"products", Json::array({Json::array({"e1", "e2", "e12", 1})})}};
  auto s = skew_from_json(spec);
  CHECK(s->field().is_rationals());  // default field
  CHECK(check_axioms(*s).pass());
  Vec e1 = zero_vec(s->field(), 4), e2 = zero_vec(s->field(), 4);
  e1[1] = FieldScalar::one(s->field());
  e2[2] = FieldScalar::one(s->field());
  Vec prod = s->multiply(e2, e1);
  CHECK(prod[3] == -FieldScalar::one(s->field()));
}

TEST_CASE("skew spec differential") {
  // d(e) = 1 is a legal degree -1 differential on the unit-plus-e algebra
  Json spec = {{"basis", Json::array({Json{{"name", "1"}, {"degree", 0}},
                                      Json{{"name", "e"}, {"degree", 1}}})},
               {"products", Json::array()},
               {"differential", Json::array({Json::array({"e", "1", 1})})}};
  auto s = skew_from_json(spec);
  REQUIRE(s->differential().has_value());
  CHECK(s->differential()->at(0, 1).is_one());
  CHECK(check_axioms(*s).pass());
}

TEST_CASE("matrix factorization spec") {
  Json spec = {{"field", "Q"},
               {"vars", 1},
               {"f", "x1^4"},
               {"phi", Json::array({Json::array({"x1"})})},
               {"psi", Json::array({Json::array({"x1^3"})})}};
  auto mf = mf_from_json(spec);
  CHECK(mf_validate(mf).pass());

  Json ragged = spec;
  ragged["phi"] = Json::array({Json::array({"x1", "0"}), Json::array({"x1"})});
  CHECK_THROWS_WITH_AS(mf_from_json(ragged), doctest::Contains("equal length"), InputError);
  Json missing = spec;
  missing.erase("psi");
  CHECK_THROWS_WITH_AS(mf_from_json(missing), doctest::Contains("psi"), InputError);
}

TEST_CASE("file loading errors") {
  CHECK_THROWS_WITH_AS(load_json_file("/nonexistent/path.json"), doctest::Contains("cannot read"),
                       InputError);
  const std::string path = "bad_spec.json";
  std::ofstream(path) << "{\"field\": }";
  CHECK_THROWS_WITH_AS(load_json_file(path), doctest::Contains("malformed JSON"), InputError);
}

TEST_CASE("rational coefficients and prime fields") {
  Json spec = {{"field", "Fp:5"},
               {"kind", "table"},
               {"basis", Json::array({"1", "x", "x2"})},
               {"table", Json::array({Json::array({"x", "x", "x2", 3})})}};
  auto ring = ring_from_json(spec);
  CHECK(!ring->field().is_rationals());
  CHECK(ring->dim() == 3);

  Json qspec = {{"field", "Q"},
                {"kind", "table"},
                {"basis", Json::array({"1", "x", "x2"})},
                {"table", Json::array({Json::array({"x", "x", "x2", "1/2"})})}};
  CHECK(ring_from_json(qspec)->dim() == 3);
}

TEST_CASE("decimal arrays carry unbounded integers") {
  BigInt big = 1;
  for (int i = 0; i < 80; ++i) big *= 2;
  CHECK(decimal_array({BigInt(1), big}) == "[1,1208925819614629174706176]");
  CHECK(decimal_array({}) == "[]");
}

TEST_CASE("gallery roster specs all reload") {
  Field f = Field::rationals();
  for (const auto& d : gallery_list()) {
    Json spec = spec_from_descriptor(d, f);
    if (spec.contains("kind")) {
      auto ring = ring_from_json(spec);
      CHECK(ring->dim() == generate(f, d).ring->dim());
    } else {
      auto s = skew_from_json(spec);
      CHECK(check_axioms(*s).pass());
      CHECK(s->dim() == generate(f, d).skew->dim());
    }
  }
}

}  // TEST_SUITE
