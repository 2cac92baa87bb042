#include "oracles.hpp"
#include "ringlab/analysis.hpp"
#include "ringlab/ringexpr.hpp"

#include <doctest.h>

using namespace ringlab;

namespace {

Analysis analysis(const char* text) { return Analysis(compile(parse(text))); }

}  // namespace

TEST_CASE("UJ# on Z/n matches the oracle and the power-of-two rule") {
  for (std::size_t n = 2; n <= 40; ++n) {
    CAPTURE(n);
    RingPtr r = build_zmod(n);
    Analysis a(r);
    CHECK(a.holds(Pred::UJsharp) == oracle::ujsharp(*r));
    CHECK(a.holds(Pred::UJsharp) == oracle::is_power_of_two(n));
  }
}

TEST_CASE("UJ# witnesses") {
  Analysis z12 = analysis("z(12)");
  const Verdict& v = z12.verdict(Pred::UJsharp);
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.witness.size() >= 1);
  Elem u = v.witness[0];
  CHECK(z12.bundle().units.contains(u));
  CHECK_FALSE(z12.bundle().jsharp.contains(z12.ring().sub(u, 1)));

  Analysis m = analysis("m(2,z(2))");
  const Verdict& mv = m.verdict(Pred::UJsharp);
  REQUIRE_FALSE(mv.holds);
  CHECK(m.bundle().units.contains(mv.witness[0]));
}

TEST_CASE("UJ, UU and UJ# agree on small finite rings") {
  for (const char* text : {"z(8)", "prod(z(2),z(2))", "gf(4)", "m(2,z(2))", "t(2,z(2))", "group(z(2),q8)"}) {
    CAPTURE(text);
    Analysis a = analysis(text);
    CHECK(a.holds(Pred::UJ) == a.holds(Pred::UJsharp));
    CHECK(a.holds(Pred::UU) == a.holds(Pred::UJsharp));
    CHECK(a.holds(Pred::UJsharp) == oracle::ujsharp(a.ring()));
  }
  CHECK(analysis("z(8)").holds(Pred::UJ));
  CHECK(analysis("prod(z(2),z(2))").holds(Pred::UU));
  Analysis f4 = analysis("gf(4)");
  CHECK_FALSE(f4.holds(Pred::UJ));
  CHECK_FALSE(f4.holds(Pred::UU));
}

TEST_CASE("structural predicates") {
  CHECK(analysis("prod(z(2),z(2))").holds(Pred::Boolean));
  CHECK(analysis("group(z(2),c(2))").holds(Pred::Local));
  CHECK_FALSE(analysis("z(6)").holds(Pred::Local));
  CHECK(analysis("gf(9)").holds(Pred::Division));
  CHECK(analysis("m(2,z(2))").holds(Pred::Regular));
  Analysis z4 = analysis("z(4)");
  CHECK_FALSE(z4.holds(Pred::Regular));
  CHECK(z4.holds(Pred::Exchange));
  CHECK(analysis("group(z(2),c(2))").semiboolean());
  CHECK(analysis("z(8)").holds(Pred::DedekindFinite));
  CHECK(analysis("m(2,z(2))").holds(Pred::DedekindFinite));
  CHECK(analysis("z(8)").holds(Pred::TwoPrimal));
  CHECK_FALSE(analysis("m(2,z(2))").holds(Pred::TwoPrimal));
  CHECK(analysis("t(2,z(2))").holds(Pred::TwoPrimal));
  CHECK_FALSE(analysis("t(2,z(2))").holds(Pred::Commutative));
  CHECK(analysis("gf(8)").holds(Pred::Reduced));
}

TEST_CASE("every small ring is semi-potent and lifts idempotents mod J") {
  for (const char* text : {"z(8)", "z(12)", "m(2,z(2))", "t(2,z(2))", "t(3,z(2))", "triv(z(4))", "group(z(3),c(4))"}) {
    CAPTURE(text);
    Analysis a = analysis(text);
    CHECK(a.holds(Pred::Semipotent));
    CHECK(a.holds(Pred::LiftsModJ));
  }
}

TEST_CASE("clean family") {
  Analysis z8 = analysis("z(8)");
  const CleanProfile& c8 = z8.clean();
  CHECK(c8.clean.holds);
  CHECK(c8.strongly_clean.holds);
  CHECK(c8.uniquely_clean.holds);
  CHECK(c8.strongly_nil_clean.holds);

  Analysis m = analysis("m(2,z(2))");
  const CleanProfile& cm = m.clean();
  CHECK(cm.clean.holds);
  CHECK_FALSE(cm.uniquely_clean.holds);
  CHECK(cm.jsharp_clean.holds);

  CHECK(analysis("prod(z(2),z(2))").clean().strongly_nil_clean.holds);
}

TEST_CASE("clean decomposition counts against brute force") {
  Analysis a = analysis("t(2,z(2))");
  const TableRing& r = a.ring();
  auto u = oracle::units(r);
  auto id = oracle::idempotents(r);
  for (Elem x = 0; x < r.order(); ++x) {
    std::size_t n = 0;
    for (Elem e : id) n += u.count(oracle::sub(r, x, e));
    CHECK(a.clean().elements[x].clean_decompositions == n);
    CHECK(a.clean().elements[x].clean == (n > 0));
  }
}

TEST_CASE("radical quotient") {
  Analysis z12 = analysis("z(12)");
  CHECK(z12.radical_quotient().ring().order() == 6);
  CHECK_FALSE(z12.radical_quotient().holds(Pred::Boolean));
  CHECK(analysis("z(8)").radical_quotient().ring().order() == 2);
}
