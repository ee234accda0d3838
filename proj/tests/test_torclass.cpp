#include <doctest.h>

#include "dgalab/torclass.hpp"

using namespace dgalab;

namespace {

SparseVec one_at(Field f, std::size_t i) { return {{(std::uint32_t)i, FieldScalar::one(f)}}; }

Vec unit_vec(Field f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = FieldScalar::one(f);
  return v;
}

}  // namespace

TEST_SUITE("torclass") {

TEST_CASE("every in-range table passes the audit and classifies back") {
  Field f = Field::rationals();
  for (std::size_t m = 4; m <= 6; ++m)
    for (std::size_t c = 2; c <= 4; ++c) {
      std::vector<TorClass> classes = {TorClass::te(m, c), TorClass::b(m, c)};
      for (std::size_t r = 2; r <= m; ++r) classes.push_back(TorClass::g(m, c, r));
      for (std::size_t p = 0; p + 1 <= m; ++p)
        for (std::size_t q = 0; q <= c; ++q) classes.push_back(TorClass::h(m, c, p, q));
      for (const auto& cl : classes) {
        auto s = build_class(cl, f);
        CHECK(check_axioms(*s).pass());
        CHECK(s->dim() == 2 * m + 2 * c);
        TorClass back = classify(*s);
        if (back != cl) FAIL("classify round trip broke at " << cl.str() << " m=" << m
                                                             << " c=" << c);
      }
    }
}

TEST_CASE("classification is blind to the basis") {
  std::vector<TorClass> sample = {TorClass::te(4, 2), TorClass::b(5, 3), TorClass::g(4, 3, 3),
                                  TorClass::h(5, 2, 2, 1), TorClass::h(4, 2, 0, 2)};
  for (Field f : {Field::rationals(), Field::prime(7)})
    for (const auto& cl : sample) {
      auto s = build_class(cl, f);
      for (std::uint64_t seed : {3ull, 11ull}) {
        auto moved = conjugate_graded(*s, seed);
        CHECK(check_axioms(*moved).pass());
        TorClass back = classify(*moved);
        if (back != cl)
          FAIL("conjugated " << cl.str() << " came back as " << back.str() << " (seed " << seed
                             << ", field " << f.str() << ")");
      }
    }
}

TEST_CASE("builder bounds") {
  Field f = Field::rationals();
  CHECK_THROWS_WITH_AS(build_class(TorClass::te(3, 2), f), doctest::Contains("override"),
                       InputError);
  auto small = build_class(TorClass::te(3, 2), f, true);
  CHECK(classify(*small).tag == TorClass::TE);
  CHECK_THROWS_AS(build_class(TorClass::te(2, 2), f, true), InputError);
  CHECK_THROWS_AS(build_class(TorClass::te(4, 1), f), InputError);
  CHECK_THROWS_AS(build_class(TorClass::g(4, 2, 1), f), InputError);
  CHECK_THROWS_AS(build_class(TorClass::g(4, 2, 5), f), InputError);
  CHECK_THROWS_AS(build_class(TorClass::h(4, 2, 4, 0), f), InputError);  // e_5 missing
  CHECK_THROWS_AS(build_class(TorClass::h(4, 2, 1, 3), f), InputError);  // q > c
  CHECK_THROWS_AS(build_class(TorClass{}, f), InputError);
}

TEST_CASE("canonical split pairs per class") {
  Field f = Field::rationals();

  auto te = socle_split_pair(*build_class(TorClass::te(4, 2), f));
  REQUIRE(te.has_value());
  CHECK(te->preferred);
  CHECK(te->u_str == "g1");
  CHECK(te->v_str == "g2");
  CHECK(te->a == 3);
  CHECK(te->b == 3);

  auto b = socle_split_pair(*build_class(TorClass::b(4, 2), f));
  REQUIRE(b.has_value());
  CHECK(b->preferred);
  CHECK(b->u_str == "f5");  // top f-generator, clear of the square
  CHECK(b->v_str == "g2");

  auto g = socle_split_pair(*build_class(TorClass::g(4, 2, 2), f));
  REQUIRE(g.has_value());
  CHECK(g->preferred);
  CHECK(g->u_str == "g2");
  CHECK(g->v_str == "f5");

  auto h = socle_split_pair(*build_class(TorClass::h(4, 2, 1, 1), f));
  REQUIRE(h.has_value());
  CHECK(h->preferred);
  CHECK(h->u_str == "e4");
  CHECK(h->v_str == "f5");

  // p = m-1 blocks the e-rule but q <= c-1 still leaves the g-rule
  auto h2 = socle_split_pair(*build_class(TorClass::h(4, 2, 3, 1), f));
  REQUIRE(h2.has_value());
  CHECK(h2->preferred);
  CHECK(h2->u_str == "g2");
  CHECK(h2->v_str == "f5");
}

TEST_CASE("the degree-2 product f3 = e1*e2 is not a split witness for class B") {
  Field f = Field::rationals();
  auto s = build_class(TorClass::b(4, 2), f);
  // f3 is e1*e2, so it sits inside the square of the augmentation ideal and
  // no projection onto it can be multiplication-linear
  SocleWitness fake;
  fake.u = unit_vec(f, s->dim(), 4 + 3);  // f3
  fake.v = unit_vec(f, s->dim(), 4 + 5 + 2);  // g2
  fake.a = 2;
  fake.b = 3;
  CHECK_THROWS_WITH_AS(split_witness(*s, fake),
                       doctest::Contains("square of the augmentation ideal"), InputError);

  // while the corrected pair passes the full verification
  auto w = socle_split_pair(*s);
  REQUIRE(w.has_value());
  auto chk = split_witness(*s, *w);
  CHECK(chk.pairs_checked == (s->dim() - 1) * (s->dim() - 1));
}

TEST_CASE("the extreme H corner has no split pair at all") {
  Field f = Field::rationals();
  auto s = build_class(TorClass::h(4, 2, 3, 2), f);  // p = m-1, q = c
  CHECK(check_axioms(*s).pass());
  CHECK(!socle_split_pair(*s).has_value());
}

TEST_CASE("split witness verifies for each class") {
  Field f = Field::rationals();
  for (const auto& cl : {TorClass::te(4, 3), TorClass::b(4, 3), TorClass::g(4, 3, 3),
                         TorClass::h(4, 3, 2, 1)}) {
    auto s = build_class(cl, f);
    auto w = socle_split_pair(*s);
    REQUIRE(w.has_value());
    auto chk = split_witness(*s, *w);
    CHECK(chk.sigma.apply(w->u) == w->u);
    CHECK(chk.pairs_checked == (s->dim() - 1) * (s->dim() - 1));
  }
}

TEST_CASE("trivial multiplication equals the (0,0) corner of H") {
  Field f = Field::rationals();
  auto s = build_class(TorClass::h(4, 2, 0, 0), f);
  CHECK(s->positive_square().dim() == 0);
  TorClass back = classify(*s);
  CHECK(back.tag == TorClass::TRIVIAL);
  CHECK(back == TorClass::h(4, 2, 0, 0));
  CHECK(back == TorClass{TorClass::TRIVIAL, 4, 2, 0, 0, 0});
  // and the explicit TRIVIAL tag builds the same shape
  auto t = build_class(TorClass{TorClass::TRIVIAL, 4, 2, 0, 0, 0}, f);
  CHECK(classify(*t) == back);
}

TEST_CASE("full exterior shape on three letters lands in TE") {
  // basis 1, e1..e3, f1..f3 (the 2-forms), g (the volume form)
  Field f = Field::rationals();
  const std::size_t n = 8;
  std::vector<std::string> names = {"1", "e1", "e2", "e3", "f1", "f2", "f3", "g"};
  std::vector<int> degrees = {0, 1, 1, 1, 2, 2, 2, 3};
  std::vector<std::vector<SparseVec>> mult(n, std::vector<SparseVec>(n));
  for (std::size_t j = 0; j < n; ++j) {
    mult[0][j] = one_at(f, j);
    if (j) mult[j][0] = one_at(f, j);
  }
  auto put = [&](std::size_t i, std::size_t j, std::size_t k, int sign) {
    mult[i][j] = {{(std::uint32_t)k, FieldScalar::from_int(f, sign)}};
  };
  // f1 = e2e3, f2 = e3e1, f3 = e1e2
  put(2, 3, 4, 1); put(3, 2, 4, -1);
  put(3, 1, 5, 1); put(1, 3, 5, -1);
  put(1, 2, 6, 1); put(2, 1, 6, -1);
  // e_i * f_i = g (cyclic, all positive), f_i * e_i = g
  put(1, 4, 7, 1); put(4, 1, 7, 1);
  put(2, 5, 7, 1); put(5, 2, 7, 1);
  put(3, 6, 7, 1); put(6, 3, 7, 1);
  auto s = SkewAlgebra::make(f, names, degrees, mult);
  REQUIRE(check_axioms(*s).pass());
  TorClass got = classify(*s);
  CHECK(got.tag == TorClass::TE);
  CHECK(got.m == 3);
  CHECK(got.c == 1);
}

TEST_CASE("tags print compactly") {
  CHECK(TorClass::te(4, 2).str() == "TE");
  CHECK(TorClass::g(5, 2, 3).str() == "G(3)");
  CHECK(TorClass::h(4, 2, 1, 2).str() == "H(1,2)");
  CHECK(TorClass{}.str() == "UNCLASSIFIED");
}

}  // TEST_SUITE
