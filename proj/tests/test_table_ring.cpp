#include "oracles.hpp"
#include "ringlab/constructions.hpp"

#include <doctest.h>

using namespace ringlab;

namespace {

RawTables zmod_tables(std::size_t n) {
  RawTables t;
  t.order = n;
  t.zero = 0;
  t.one = n > 1 ? 1 : 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t.add.push_back(static_cast<Elem>((a + b) % n));
      t.mul.push_back(static_cast<Elem>((a * b) % n));
    }
  }
  return t;
}

}  // namespace

TEST_CASE("hand-written Z/2 tables validate") {
  RingPtr r = validate_ring(zmod_tables(2));
  CHECK(r->order() == 2);
  CHECK(r->add(1, 1) == 0);
  CHECK(r->mul(1, 1) == 1);
}

TEST_CASE("corrupting one product of Z/4 is caught") {
  RawTables t = zmod_tables(4);
  t.mul[2 * 4 + 2] = 1;  // 2*2 := 1
  try {
    validate_ring(t);
    FAIL("expected InvalidRing");
  } catch (const InvalidRing& e) {
    CHECK((e.has(Axiom::NonDistributive) || e.has(Axiom::NonAssociative)));
    CHECK(e.code() == ErrorCode::InvalidRing);
  }
}

TEST_CASE("the zero ring is rejected") {
  try {
    validate_ring(zmod_tables(1));
    FAIL("expected InvalidRing");
  } catch (const InvalidRing& e) {
    CHECK(e.has(Axiom::ZeroRing));
  }
}

TEST_CASE("a non-square table is a shape error") {
  RawTables t = zmod_tables(3);
  t.mul.pop_back();
  CHECK_THROWS_AS(validate_ring(t), InvalidRing);
}

TEST_CASE("Z/8 arithmetic") {
  RingPtr r = build_zmod(8);
  CHECK(elem_add(*r, 3, 7) == 2);
  CHECK(elem_mul(*r, 3, 3) == 1);
  CHECK(elem_pow(*r, 2, 3) == 0);
  CHECK(elem_sub(*r, 1, 3) == 6);
  CHECK(elem_neg(*r, 5) == 3);
  CHECK_THROWS_AS(elem_add(*r, 8, 1), RingError);
  for (Elem a = 0; a < 8; ++a) CHECK(elem_pow(*r, r->one(), a) == r->one());
}

TEST_CASE("Z/n tables agree with modular arithmetic") {
  for (std::size_t n : {2, 3, 6, 12, 31, 64}) {
    RingPtr r = build_zmod(n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        REQUIRE(r->add(a, b) == (a + b) % n);
        REQUIRE(r->mul(a, b) == (a * b) % n);
      }
    }
  }
}

TEST_CASE("M2(F2) matrix units and powers") {
  RingPtr base = build_zmod(2);
  RingPtr m = build_matrix(base, 2);
  Elem e11 = matrix_unit(*base, 2, 0, 0), e12 = matrix_unit(*base, 2, 0, 1), e21 = matrix_unit(*base, 2, 1, 0);
  CHECK(m->mul(e12, e21) == e11);
  Elem ones = matrix_index(*base, 2, {1, 1, 1, 1});
  CHECK(elem_pow(*m, ones, 2) == m->zero());
  CHECK(m->label(ones) == "[[1,1],[1,1]]");
}

TEST_CASE("M2(Z/4) tables agree with explicit matrix products") {
  RingPtr base = build_zmod(4);
  RingPtr m = build_matrix(base, 2);
  REQUIRE(m->order() == 256);
  for (Elem a = 0; a < 256; a += 7) {
    for (Elem b = 0; b < 256; b += 3) {
      oracle::Mat2 x{a % 4, a / 4 % 4, a / 16 % 4, a / 64}, y{b % 4, b / 4 % 4, b / 16 % 4, b / 64};
      oracle::Mat2 p = oracle::mat_mul(x, y, 4);
      REQUIRE(m->mul(a, b) == matrix_index(*base, 2, {p[0], p[1], p[2], p[3]}));
    }
  }
}

TEST_CASE("power orbits") {
  RingPtr r = build_zmod(8);
  auto o = r->power_orbit(2);
  CHECK(o.powers == std::vector<Elem>{2, 4, 0});
  CHECK(o.cycle_start == 2);
  auto c = r->power_orbit(3);
  CHECK(c.powers == std::vector<Elem>{3, 1});
  CHECK(c.cycle_start == 0);

  RingPtr base = build_zmod(2);
  RingPtr m = build_matrix(base, 2);
  Elem w = matrix_index(*base, 2, {0, 1, 1, 1});
  auto mo = m->power_orbit(w);
  CHECK(mo.powers.size() == 3);
  CHECK(mo.cycle_start == 0);
  CHECK(mo.powers[2] == m->one());
}

TEST_CASE("table checksums separate different rings") {
  RingPtr a = build_zmod(8), b = build_zmod(8), c = build_zmod(4);
  CHECK(a->add_checksum() == b->add_checksum());
  CHECK(a->mul_checksum() == b->mul_checksum());
  CHECK(a->same_tables(*b));
  CHECK(a->mul_checksum() != c->mul_checksum());
}

TEST_CASE("order caps") {
  CHECK_THROWS_AS(build_zmod(100, Limits{64}), RingError);
  CHECK_NOTHROW(build_zmod(64, Limits{64}));
  try {
    build_matrix(build_zmod(4), 3);
    FAIL("expected OutOfCap");
  } catch (const RingError& e) {
    CHECK(e.code() == ErrorCode::OutOfCap);
  }
}

TEST_CASE("fnv1a64 reference vectors") {
  CHECK(fnv1a64("", 0) == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a", 1) == 0xaf63dc4c8601ec8cULL);
  CHECK(hex64(0xabcULL) == "0000000000000abc");
}
