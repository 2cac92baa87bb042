#include "oracles.hpp"
#include "ringlab/ringexpr.hpp"
#include "ringlab/subsets.hpp"

#include <doctest.h>

using namespace ringlab;

namespace {

RingPtr ring(const char* text) { return compile(parse(text)); }

oracle::Set as_set(const ElemSet& s) {
  auto v = s.elements();
  return {v.begin(), v.end()};
}

std::vector<std::string> labels(const TableRing& r, const ElemSet& s) {
  std::vector<std::string> out;
  s.for_each([&](Elem x) { out.push_back(r.label(x)); });
  return out;
}

}  // namespace

TEST_CASE("bundle agrees with brute-force oracles on small rings") {
  for (const char* text : {"z(2)", "z(8)", "z(12)", "gf(4)", "m(2,z(2))", "t(2,z(2))", "t(2,z(4))", "triv(z(4))",
                           "prod(z(2),gf(4))", "group(z(2),c(4))", "group(z(2),s(3))", "group(z(3),c(3))",
                           "skew(gf(4),frob,2)", "quot(z(8),[4])", "corner(m(2,z(2)),1)", "poly(z(4),2)"}) {
    CAPTURE(text);
    RingPtr r = ring(text);
    InvariantBundle b = compute_bundle(*r);
    CHECK(as_set(b.units) == oracle::units(*r));
    auto j = oracle::jacobson(*r);
    CHECK(as_set(b.jacobson) == j);
    CHECK(as_set(b.jsharp) == oracle::jsharp(*r, j));
    CHECK(as_set(b.nilpotents) == oracle::nilpotents(*r));
    CHECK(as_set(b.idempotents) == oracle::idempotents(*r));
    CHECK(as_set(b.center) == oracle::center(*r));
    b.units.for_each([&](Elem u) {
      CHECK(r->mul(u, b.inverse[u]) == r->one());
      CHECK(r->mul(b.inverse[u], u) == r->one());
    });
    CHECK_NOTHROW(assert_bundle_invariants(*r, b));
  }
}

TEST_CASE("unit groups") {
  CHECK(units(*ring("m(2,z(2))")).units.count() == 6);
  auto z8 = units(*ring("z(8)"));
  for (Elem u : {1u, 3u, 5u, 7u}) CHECK(z8.inverse[u] == u);
  CHECK(z8.inverse[2] == kNoInverse);
  RingPtr g = ring("group(z(2),c(2))");
  CHECK(labels(*g, units(*g).units) == std::vector<std::string>{"1", "g"});
}

TEST_CASE("idempotents, nilpotents and center") {
  CHECK(idempotents(*ring("z(12)")).elements() == std::vector<Elem>{0, 1, 4, 9});
  RingPtr m = ring("m(2,z(2))");
  CHECK(labels(*m, nilpotents(*m)) ==
        std::vector<std::string>{"[[0,0],[0,0]]", "[[0,1],[0,0]]", "[[0,0],[1,0]]", "[[1,1],[1,1]]"});
  CHECK(labels(*m, center(*m)) == std::vector<std::string>{"[[0,0],[0,0]]", "[[1,0],[0,1]]"});
}

TEST_CASE("Jacobson radical and J#") {
  RingPtr z8 = ring("z(8)");
  InvariantBundle b8 = compute_bundle(*z8);
  CHECK(b8.jacobson.elements() == std::vector<Elem>{0, 2, 4, 6});
  CHECK(b8.jsharp.elements() == std::vector<Elem>{0, 2, 4, 6});

  RingPtr m = ring("m(2,z(2))");
  InvariantBundle bm = compute_bundle(*m);
  CHECK(bm.jacobson.count() == 1);
  CHECK(labels(*m, bm.jsharp) ==
        std::vector<std::string>{"[[0,0],[0,0]]", "[[0,1],[0,0]]", "[[0,0],[1,0]]", "[[1,1],[1,1]]"});

  RingPtr t = ring("t(2,z(2))");
  CHECK(labels(*t, compute_bundle(*t).jacobson) == std::vector<std::string>{"[[0,0],[0,0]]", "[[0,1],[0,0]]"});

  CHECK(compute_bundle(*ring("prod(z(2),z(2))")).jsharp.count() == 1);
}

TEST_CASE("prime radical") {
  CHECK(prime_radical(*ring("z(8)")).elements() == std::vector<Elem>{0, 2, 4, 6});
  CHECK(prime_radical(*ring("m(2,z(2))")).count() == 1);
  RingPtr t = ring("t(2,z(2))");
  CHECK(labels(*t, prime_radical(*t)) == std::vector<std::string>{"[[0,0],[0,0]]", "[[0,1],[0,0]]"});
}

TEST_CASE("deep oracles agree with the fast radicals") {
  for (const char* text : {"z(8)", "z(12)", "m(2,z(2))", "t(2,z(2))", "group(z(2),c(2)xc(2))", "triv(z(2))"}) {
    CAPTURE(text);
    RingPtr r = ring(text);
    InvariantBundle b = compute_bundle(*r);
    CHECK(jacobson_by_maximal_left_ideals(*r) == b.jacobson);
    CHECK(prime_radical_by_prime_ideals(*r) == b.prime_radical);
  }
}

TEST_CASE("two-sided ideal test") {
  RingPtr z8 = ring("z(8)");
  CHECK_FALSE(is_two_sided_ideal(*z8, ElemSet(8, {0, 2, 4, 6})).has_value());
  CHECK_FALSE(is_two_sided_ideal(*z8, ElemSet(8, {0})).has_value());
  RingPtr m = ring("m(2,z(2))");
  InvariantBundle b = compute_bundle(*m);
  auto v = is_two_sided_ideal(*m, b.jsharp);
  REQUIRE(v.has_value());
  // Some sum of two J# elements escapes J#; E12 + E21 is a unit.
  CHECK(b.units.contains(matrix_index(*ring("z(2)"), 2, {0, 1, 1, 0})));
}

TEST_CASE("nilpotency index") {
  RingPtr z8 = ring("z(8)");
  CHECK(nilpotency_index(*z8, ElemSet(8, {0, 2, 4, 6})) == 3u);
  CHECK_FALSE(nilpotency_index(*z8, ElemSet(8, {0, 1})).has_value());
}
