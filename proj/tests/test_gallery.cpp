#include <doctest.h>

#include <set>

#include "dgalab/gallery.hpp"
#include "dgalab/koszul.hpp"

using namespace dgalab;

TEST_SUITE("gallery") {

TEST_CASE("square of the maximal ideal") {
  Field f = Field::rationals();
  auto inst = generate(f, ExampleDescriptor::power_of_m(2, 2));
  REQUIRE(inst.ring);
  CHECK(inst.ring->dim() == 3);
  CHECK(inst.ring->embedding_dim() == 2);
  CHECK(inst.label == "power_of_m(2,2)");
  CHECK(inst.golod_tag);    // powers of the maximal ideal kill the products
  CHECK(inst.dagger_tag);   // trivial multiplication leaves the socle classes independent
  CHECK(!inst.skew);

  // the regular-sequence variant is the same avatar by construction
  auto reg = generate(f, ExampleDescriptor::power_of_regseq(2, 2));
  REQUIRE(reg.ring);
  CHECK(reg.ring->dim() == 3);
  CHECK(reg.label == "power_of_regseq(2,2)");
}

TEST_CASE("determinantal avatar") {
  Field f = Field::rationals();
  auto inst = generate(f, ExampleDescriptor::determinantal());
  REQUIRE(inst.skew);
  CHECK(!inst.ring);
  CHECK(inst.skew->degree_indices(0).size() == 1);
  CHECK(inst.skew->degree_indices(1).size() == 3);
  CHECK(inst.skew->degree_indices(2).size() == 2);
  CHECK(inst.skew->positive_square().dim() == 0);
  CHECK(inst.dagger_tag);
  CHECK(inst.label == "determinantal(3)");
  CHECK_THROWS_AS(generate(f, ExampleDescriptor::determinantal(2)), InputError);
}

TEST_CASE("trivial extension splits its socle summand") {
  Field f = Field::rationals();
  auto inst = generate(f, ExampleDescriptor::trivial_ext(3, 2));
  REQUIRE(inst.ring);
  CHECK(inst.ring->dim() == 5);  // 1, x, x^2, and two adjoined socle elements
  CHECK(decompose_maximal_ideal(inst.ring).s == 2);
  CHECK(inst.label == "trivial_ext(3,2)");

  // with base 2 the base variable is itself square-zero, so it joins the summand
  auto flat = generate(f, ExampleDescriptor::trivial_ext(2, 2));
  CHECK(flat.ring->dim() == 4);
  CHECK(decompose_maximal_ideal(flat.ring).s == 3);

  // base 1 collapses to k, so this is two square-zero variables over k
  auto small = generate(f, ExampleDescriptor::trivial_ext(1, 2));
  CHECK(small.ring->dim() == 3);
  CHECK(small.golod_tag);
}

TEST_CASE("codim-3 classes carry the witness tag") {
  Field f = Field::rationals();
  auto te = generate(f, ExampleDescriptor::codim3(TorClass::te(4, 2)));
  REQUIRE(te.skew);
  CHECK(te.dagger_tag);
  CHECK(classify(*te.skew) == TorClass::te(4, 2));
  CHECK(te.label == "codim3(TE,m=4,c=2)");

  auto h = generate(f, ExampleDescriptor::codim3(TorClass::h(4, 2, 1, 1)));
  CHECK(h.dagger_tag);
  CHECK(classify(*h.skew) == TorClass::h(4, 2, 1, 1));
}

TEST_CASE("hypersurface ring") {
  Field f = Field::rationals();
  auto inst = generate(f, ExampleDescriptor::hypersurface(4));
  REQUIRE(inst.ring);
  CHECK(inst.ring->dim() == 4);
  CHECK(inst.ring->embedding_dim() == 1);
  CHECK(inst.golod_tag);
  CHECK(!inst.dagger_tag);  // a single positive homology class cannot pair
  CHECK(inst.label == "hypersurface(4)");
}

TEST_CASE("bounds are enforced") {
  Field f = Field::rationals();
  CHECK_THROWS_AS(generate(f, ExampleDescriptor::power_of_m(5, 2)), InputError);
  CHECK_THROWS_AS(generate(f, ExampleDescriptor::power_of_m(0, 2)), InputError);
  CHECK_THROWS_AS(generate(f, ExampleDescriptor::power_of_m(2, 1)), InputError);
  CHECK_THROWS_AS(generate(f, ExampleDescriptor::power_of_m(2, 5)), InputError);
  CHECK_THROWS_AS(generate(f, ExampleDescriptor::trivial_ext(0, 2)), InputError);
  CHECK_THROWS_AS(generate(f, ExampleDescriptor::trivial_ext(5, 2)), InputError);
  CHECK_THROWS_AS(generate(f, ExampleDescriptor::trivial_ext(2, 0)), InputError);
  CHECK_THROWS_AS(generate(f, ExampleDescriptor::trivial_ext(2, 5)), InputError);
  CHECK_THROWS_AS(generate(f, ExampleDescriptor::hypersurface(1)), InputError);
  CHECK_THROWS_AS(generate(f, ExampleDescriptor::hypersurface(9)), InputError);
}

TEST_CASE("roster generates with unique labels") {
  Field f = Field::rationals();
  auto list = gallery_list();
  CHECK(list.size() == 16);
  std::set<std::string> labels;
  for (const auto& d : list) {
    auto inst = generate(f, d);
    CHECK((inst.ring != nullptr) != (inst.skew != nullptr));
    labels.insert(inst.label);
    if (d.family == Family::CODIM3_CLASS) CHECK(inst.dagger_tag);
  }
  CHECK(labels.size() == list.size());
}

TEST_CASE("corpus starts with k, m, A and filters to deep resolutions") {
  Field f = Field::rationals();
  auto ring = generate(f, ExampleDescriptor::trivial_ext(1, 2)).ring;
  auto mods = corpus(ring, 7, 4);
  REQUIRE(mods.size() == 7);
  CHECK(mods[0]->dim() == 1);
  CHECK(mods[1]->dim() == 2);
  CHECK(mods[2]->dim() == 3);
  for (std::size_t i = 3; i < mods.size(); ++i) {
    CHECK(mods[i]->dim() > 0);
    CHECK(resolve(mods[i], 12).betti[12] > 0);
  }
}

TEST_CASE("corpus is deterministic in the seed") {
  Field f = Field::rationals();
  auto ring = generate(f, ExampleDescriptor::trivial_ext(1, 2)).ring;
  auto a = corpus(ring, 11, 3);
  auto b = corpus(ring, 11, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i]->dim() == b[i]->dim());
    CHECK(resolve(a[i], 6).betti == resolve(b[i], 6).betti);
  }
}

TEST_CASE("corpus count cap") {
  Field f = Field::rationals();
  auto ring = generate(f, ExampleDescriptor::trivial_ext(1, 2)).ring;
  CHECK_THROWS_WITH_AS(corpus(ring, 1, 17), doctest::Contains("cap"), InputError);
}

TEST_CASE("prime field gallery") {
  Field f = Field::prime(5);
  auto inst = generate(f, ExampleDescriptor::power_of_m(2, 3));
  REQUIRE(inst.ring);
  CHECK(inst.ring->dim() == 6);  // 1, x, y, x^2, xy, y^2
  CHECK(inst.golod_tag);
}

}  // TEST_SUITE
