#include "oracles.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/subsets.hpp"

#include <doctest.h>

using namespace ringlab;

TEST_CASE("Z/n and GF(q) unit counts match Euler phi and field size") {
  auto phi = [](std::size_t n) {
    std::size_t c = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      std::size_t a = k, b = n;
      while (b) a = std::exchange(b, a % b);
      c += a == 1;
    }
    return c;
  };
  for (std::size_t n : {2, 8, 12, 30, 64}) {
    RingPtr r = build_zmod(n);
    CHECK(oracle::units(*r).size() == phi(n));
    CHECK(units(*r).units.count() == phi(n));
  }
  CHECK(units(*build_zmod(8)).units.elements() == std::vector<Elem>{1, 3, 5, 7});
  for (std::size_t q : {2, 3, 4, 5, 7, 8, 9}) {
    RingPtr f = build_gf(q);
    CHECK(f->order() == q);
    CHECK(oracle::units(*f).size() == q - 1);
    CHECK(oracle::center(*f).size() == q);
  }
  CHECK_THROWS_AS(build_gf(6), RingError);
}

TEST_CASE("triangular and matrix radicals") {
  RingPtr f2 = build_zmod(2);
  RingPtr m = build_matrix(f2, 2);
  CHECK(oracle::jacobson(*m) == oracle::Set{m->zero()});
  RingPtr t = build_triangular(f2, 2);
  CHECK(t->order() == 8);
  auto jt = oracle::jacobson(*t);
  CHECK(jt.size() == 2);
  for (Elem j : jt) CHECK(t->mul(j, j) == t->zero());
}

TEST_CASE("products split J# componentwise") {
  RingPtr z4 = build_zmod(4), m = build_matrix(build_zmod(2), 2);
  RingPtr p = build_product({z4, m});
  CHECK(p->order() == 64);
  auto js = oracle::jsharp(*p, oracle::jacobson(*p));
  auto j1 = oracle::jsharp(*z4, oracle::jacobson(*z4));
  auto j2 = oracle::jsharp(*m, oracle::jacobson(*m));
  CHECK(js.size() == j1.size() * j2.size());
  for (Elem a : j1) {
    for (Elem b : j2) CHECK(js.count(static_cast<Elem>(a + 4 * b)));
  }
}

TEST_CASE("ideal closure") {
  RingPtr z8 = build_zmod(8);
  CHECK(ideal_closure(*z8, ElemSet(8, {2}), Side::TwoSided).elements() == std::vector<Elem>{0, 2, 4, 6});
  RingPtr f2 = build_zmod(2);
  RingPtr m = build_matrix(f2, 2);
  ElemSet e12(16, {matrix_unit(*f2, 2, 0, 1)});
  CHECK(ideal_closure(*m, e12, Side::TwoSided).count() == 16);
  ElemSet left = ideal_closure(*m, e12, Side::Left);
  CHECK(left.count() == 4);
  // Left ideal generated by E12: matrices supported in the second column.
  left.for_each([&](Elem x) { CHECK(m->label(x).substr(0, 4) == "[[0,"); });
}

TEST_CASE("quotients") {
  RingPtr z8 = build_zmod(8);
  RingPtr q = build_quotient(z8, ElemSet(8, {0, 4}));
  CHECK(q->order() == 4);
  CHECK(q->mul(2, 2) == 0);
  CHECK_THROWS_AS(build_quotient(z8, ElemSet(8, {0, 3})), RingError);
  try {
    build_quotient(z8, ElemSet::full(8));
    FAIL("expected ImproperIdeal");
  } catch (const RingError& e) {
    CHECK(e.code() == ErrorCode::ImproperIdeal);
  }
}

TEST_CASE("corners") {
  RingPtr f2 = build_zmod(2);
  RingPtr m = build_matrix(f2, 2);
  CHECK(build_corner(m, m->one())->order() == 16);
  RingPtr c = build_corner(m, matrix_unit(*f2, 2, 0, 0));
  CHECK(c->order() == 2);
  RingPtr t = build_triangular(f2, 2);
  CHECK(build_corner(t, 1)->order() == 2);  // first stored entry: E11
  try {
    build_corner(m, matrix_unit(*f2, 2, 0, 1));
    FAIL("expected NotIdempotent");
  } catch (const RingError& e) {
    CHECK(e.code() == ErrorCode::NotIdempotent);
  }
  try {
    build_corner(m, m->zero());
    FAIL("expected ZeroCorner");
  } catch (const RingError& e) {
    CHECK(e.code() == ErrorCode::ZeroCorner);
  }
}

TEST_CASE("trivial extension units are U(R) x R") {
  RingPtr z4 = build_zmod(4);
  RingPtr t = build_trivial_extension(z4);
  CHECK(t->order() == 16);
  auto u = oracle::units(*t);
  CHECK(u.size() == 8);
  for (Elem x : u) CHECK((x / 4) % 2 == 1);
}

TEST_CASE("group rings") {
  RingPtr f2c2 = build_group_ring(build_zmod(2), cyclic_group(2));
  CHECK(f2c2->order() == 4);
  CHECK(oracle::units(*f2c2) == oracle::Set{1, 2});
  CHECK(oracle::jacobson(*f2c2) == oracle::Set{0, 3});
  CHECK(augmentation_ideal(*f2c2).elements() == std::vector<Elem>{0, 3});
  RingPtr z4c2 = build_group_ring(build_zmod(4), cyclic_group(2));
  CHECK(augmentation_ideal(*z4c2).count() == 4);
  for (Elem g = 0; g < 2; ++g) CHECK(augmentation(*z4c2, group_ring_basis(*z4c2, g)) == 1);
  CHECK(augmentation(*z4c2, z4c2->one()) == 1);
  CHECK_THROWS_AS(augmentation_ideal(*build_zmod(4)), RingError);

  // F2[C3] against explicit cyclic convolution.
  RingPtr f2c3 = build_group_ring(build_zmod(2), cyclic_group(3));
  for (Elem a = 0; a < 8; ++a) {
    for (Elem b = 0; b < 8; ++b) {
      unsigned c = 0;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          if ((a >> i & 1) && (b >> j & 1)) c ^= 1u << ((i + j) % 3);
        }
      }
      REQUIRE(f2c3->mul(a, b) == c);
    }
  }
}

TEST_CASE("groups") {
  CHECK(quaternion_group()->exponent == 4);
  CHECK(dihedral_group(4)->order == 8);
  CHECK(symmetric_group(3)->order == 6);
  CHECK(symmetric_group(3)->is_2group() == false);
  CHECK(direct_product({cyclic_group(2), cyclic_group(2)})->exponent == 2);
  CHECK(cyclic_group(9)->prime_base() == 3);
  CHECK(cyclic_group(6)->prime_base() == 0);
  CHECK(cyclic_group(4)->is_2group());
  CHECK_THROWS_AS(validate_group(2, {0, 1, 1, 1}, 0), RingError);
}

TEST_CASE("truncated skew polynomials") {
  RingPtr f4 = build_gf(4);
  CHECK(build_truncated_skew_poly(f4, identity_endomorphism(f4), 1)->order() == 4);
  Endomorphism fr = frobenius(f4);
  RingPtr s = build_truncated_skew_poly(f4, fr, 2);
  CHECK(s->order() == 16);
  // x * a = a^2 * x, with x at index 4 and a at index < 4.
  for (Elem a = 0; a < 4; ++a) CHECK(s->mul(4, a) == s->mul(f4->mul(a, a), 4));
  CHECK_FALSE(check_alpha_compatible(*f4, fr).has_value());
  CHECK_FALSE(check_alpha_compatible(*f4, identity_endomorphism(f4)).has_value());
  CHECK_THROWS_AS(frobenius(build_zmod(4)), RingError);
}

TEST_CASE("swap on F2 x F2 is not alpha-compatible") {
  RingPtr f2 = build_zmod(2);
  RingPtr p = build_product({f2, f2});
  Endomorphism swap = validate_endomorphism(p, {0, 2, 1, 3});
  auto w = check_alpha_compatible(*p, swap);
  REQUIRE(w.has_value());
  // ab = (1,0) != 0 while a alpha(b) = (1,0)(0,1) = 0.
  CHECK(w->a == 1);
  CHECK(w->b == 1);
  CHECK_THROWS_AS(validate_endomorphism(p, {0, 1, 1, 3}), RingError);
}
