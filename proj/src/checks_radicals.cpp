// Checks on J, J#, Nil and Nil* themselves.

#include "checks.hpp"

namespace ringlab::detail {

namespace {

constexpr std::size_t kDeepOracleMaxOrder = 64;

CheckResult l12_1(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  const auto& js = a.bundle().jsharp;
  for (Elem x : js.elements())
    for (Elem y = 0; y < r.order(); ++y) {
      if (r.mul(x, y) == r.mul(y, x) && !js.contains(r.mul(x, y))) {
        return CheckResult::fail(r, {x, y}, "a in J#, ab = ba, but ab not in J#");
      }
    }
  return CheckResult::pass();
}

CheckResult l12_2(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  const auto& js = a.bundle().jsharp;
  for (Elem x = 0; x < r.order(); ++x) {
    // Every positive power of x appears in its orbit.
    for (Elem p : r.power_orbit(x).powers) {
      if (js.contains(p) != js.contains(x)) return CheckResult::fail(r, {x, p}, "a^n and a disagree on membership in J#");
    }
  }
  return CheckResult::pass();
}

CheckResult l12_3(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  for (Elem x : a.bundle().jsharp.elements()) {
    if (!a.bundle().units.contains(r.sub(r.one(), x))) return CheckResult::fail(r, {x}, "a in J# but 1 - a is not a unit");
  }
  return CheckResult::pass();
}

CheckResult l12_4(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  const auto& b = a.bundle();
  ElemSet bad = (b.jsharp & b.center) - b.jacobson;
  if (!bad.empty()) return CheckResult::fail(r, {bad.first()}, "central element of J# outside J");
  return CheckResult::pass();
}

CheckResult l12_5(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  const auto& ideals = a.ideals_in_jacobson();
  if (ideals.empty()) return CheckResult::skip("J(R) = 0, so the only ideal inside J is zero");
  for (const ElemSet& ideal : ideals) {
    RingPtr q = build_quotient(a.ptr(), ideal);
    const auto& proj = q->construction().map;
    InvariantBundle qb = compute_bundle(*q);
    ElemSet image(q->order());
    a.bundle().jsharp.for_each([&](Elem x) { image.insert(proj[x]); });
    if (!(image == qb.jsharp)) {
      ElemSet diff = (image - qb.jsharp) | (qb.jsharp - image);
      Elem coset = diff.first();
      return CheckResult::fail(r, ideal.elements(),
                               "for this ideal I, J#(R/I) and J#(R)/I differ at coset " + q->label(coset));
    }
  }
  return CheckResult::pass();
}

CheckResult l12_6(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  const Construction& c = r.construction();
  if (c.kind != ConstructionKind::Product) return CheckResult::skip("not built as a direct product");
  std::vector<std::size_t> radices;
  for (const auto& f : c.bases) radices.push_back(f->order());
  std::vector<const ElemSet*> factor_js;
  for (std::size_t i = 0; i < c.bases.size(); ++i) factor_js.push_back(&a.base(i).bundle().jsharp);
  for (Elem x = 0; x < r.order(); ++x) {
    auto d = digits(x, radices);
    bool all = true;
    for (std::size_t i = 0; i < d.size(); ++i) all = all && factor_js[i]->contains(d[i]);
    if (all != a.bundle().jsharp.contains(x)) {
      return CheckResult::fail(r, {x}, "membership in J# differs from componentwise membership");
    }
  }
  return CheckResult::pass();
}

CheckResult l12_7(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  const auto& js = a.bundle().jsharp;
  for (Elem x = 0; x < r.order(); ++x)
    for (Elem y = 0; y < r.order(); ++y) {
      if (js.contains(r.mul(x, y)) && !js.contains(r.mul(y, x))) {
        return CheckResult::fail(r, {x, y}, "ab in J# but ba not in J#");
      }
    }
  return CheckResult::pass();
}

CheckResult l12_8(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  const auto& b = a.bundle();
  for (Elem q : b.nilpotents.elements())
    for (Elem j : b.jacobson.elements()) {
      if (!b.jsharp.contains(r.add(q, j))) return CheckResult::fail(r, {q, j}, "q + j not in J#");
    }
  return CheckResult::pass();
}

bool is_m2_over_f2(const TableRing& r) {
  const Construction& c = r.construction();
  return c.kind == ConstructionKind::Matrix && c.param == 2 && c.bases.size() == 1 &&
         c.bases[0]->construction().kind == ConstructionKind::Zmod && c.bases[0]->order() == 2;
}

CheckResult x13(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  if (!is_m2_over_f2(r)) return CheckResult::skip("only about M2(F2)");
  const TableRing& f2 = *r.construction().bases[0];
  ElemSet expected(r.order());
  expected.insert(r.zero());
  expected.insert(matrix_unit(f2, 2, 0, 1));
  expected.insert(matrix_unit(f2, 2, 1, 0));
  expected.insert(matrix_index(f2, 2, {1, 1, 1, 1}));
  ElemSet published(r.order());
  published.insert(r.zero());
  published.insert(matrix_unit(f2, 2, 0, 1));
  published.insert(matrix_unit(f2, 2, 1, 0));
  const ElemSet& js = a.bundle().jsharp;
  if (!(js == expected)) return CheckResult::fail(r, js.elements(), "computed J# is not the audited 4-element set");
  CheckResult res = CheckResult::pass();
  ElemSet extra = js - published;
  res.note = "J#(M2(F2)) has " + std::to_string(js.count()) + " elements " + render_set(r, js) +
             "; the published list has 3 and omits " + render_set(r, extra) + ", which squares to 0";
  return res;
}

CheckResult p38(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  const auto& b = a.bundle();
  ElemSet idem = b.jsharp & b.idempotents;
  idem.erase(r.zero());
  if (!idem.empty()) return CheckResult::fail(r, {idem.first()}, "nonzero idempotent in J#");
  ElemSet unit = b.jsharp & b.units;
  if (!unit.empty()) return CheckResult::fail(r, {unit.first()}, "unit in J#");
  return CheckResult::pass();
}

CheckResult p37(Analysis& a, const CheckContext&) {
  const auto& b = a.bundle();
  bool covers = (b.units | b.jsharp) == ElemSet::full(a.ring().order());
  return equivalent({{"R is local", a.holds(Pred::Local)}, {"R = U(R) u J#(R)", covers}});
}

CheckResult closeprod(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  const auto& b = a.bundle();
  auto js = b.jsharp.elements();
  for (Elem x : js)
    for (Elem j : b.jacobson.elements()) {
      if (!b.jsharp.contains(r.add(x, j))) return CheckResult::fail(r, {x, j}, "a in J#, b in J, a + b not in J#");
    }
  for (Elem x : js)
    for (Elem y : js) {
      if (b.center.contains(y) && !b.jsharp.contains(r.add(x, y))) {
        return CheckResult::fail(r, {x, y}, "a, b in J#, b central, a + b not in J#");
      }
    }
  return CheckResult::pass();
}

CheckResult equ_uq(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  const auto& b = a.bundle();
  ElemSet sums(r.order());
  auto central_units = (b.units & b.center).elements();
  b.units.for_each([&](Elem u) {
    for (Elem v : central_units) sums.insert(r.add(u, v));
  });
  // J# inside U + (U n Z) is claimed for every ring.
  ElemSet missing = b.jsharp - sums;
  if (!missing.empty()) {
    return CheckResult::fail(r, {missing.first()}, "containment J# in U + (U n Z) fails at this element");
  }
  bool reverse = sums.subset_of(b.jsharp);
  auto res = equivalent({{"R is UJ#", a.holds(Pred::UJsharp)}, {"U + (U n Z) is inside J#", reverse}});
  if (res.status == Status::Fail && !reverse) {
    ElemSet extra = sums - b.jsharp;
    res.witness->elements = {extra.first()};
    res.witness->text = render_elements(r, {extra.first()}) + ": " + res.reason;
  }
  return res;
}

CheckResult collapse(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  const auto& b = a.bundle();
  if (is_two_sided_ideal(r, b.jacobson)) return CheckResult::fail(r, {}, "J is not a two-sided ideal");
  if (!a.jacobson_nilpotency()) return CheckResult::fail(r, b.jacobson.elements(), "J is not nilpotent");
  if (!(b.jsharp == b.nilpotents)) {
    ElemSet diff = b.jsharp - b.nilpotents;
    return CheckResult::fail(r, {diff.first()}, "element of J# that is not nilpotent");
  }
  return equivalent({{"UJ#", a.holds(Pred::UJsharp)}, {"UJ", a.holds(Pred::UJ)}, {"UU", a.holds(Pred::UU)}});
}

CheckResult c27(Analysis& a, const CheckContext&) {
  return equivalent({{"UJ#", a.holds(Pred::UJsharp)}, {"UJ", a.holds(Pred::UJ)}, {"UU", a.holds(Pred::UU)}});
}

CheckResult two_primal(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  const auto& b = a.bundle();
  if (auto v = is_two_sided_ideal(r, b.prime_radical)) {
    return CheckResult::fail(r, {v->a, v->b}, std::string("Nil* is not an ideal: ") + v->reason);
  }
  if (!b.prime_radical.subset_of(b.nilpotents)) {
    return CheckResult::fail(r, {(b.prime_radical - b.nilpotents).first()}, "Nil* contains a non-nilpotent");
  }
  bool reduced_or_comm = a.holds(Pred::Reduced) || a.holds(Pred::Commutative);
  return implies({"R is reduced or commutative", reduced_or_comm}, {"R is 2-primal", a.holds(Pred::TwoPrimal)});
}

CheckResult deep(Analysis& a, const CheckContext& ctx) {
  const TableRing& r = a.ring();
  if (!ctx.deep_oracle) return CheckResult::skip("deep oracle not requested");
  if (r.order() > kDeepOracleMaxOrder) {
    return CheckResult::skip("order above the deep-oracle limit of " + std::to_string(kDeepOracleMaxOrder));
  }
  ElemSet j = jacobson_by_maximal_left_ideals(r);
  if (!(j == a.bundle().jacobson)) {
    return CheckResult::fail(r, j.elements(), "unit criterion and maximal left ideals disagree on J");
  }
  ElemSet p = prime_radical_by_prime_ideals(r);
  if (!(p == a.bundle().prime_radical)) {
    return CheckResult::fail(r, p.elements(), "strongly nilpotent elements and prime ideals disagree on Nil*");
  }
  return CheckResult::pass();
}

}  // namespace

void register_radical_checks(CheckList& l) {
  l.add("L1.2.1", "If a is in J# and ab = ba then ab is in J#.", "all rings", l12_1);
  l.add("L1.2.2", "a^n is in J# exactly when a is in J#.", "all rings", l12_2);
  l.add("L1.2.3", "If a is in J# then 1 - a is a unit.", "all rings", l12_3);
  l.add("L1.2.4", "Central elements of J# lie in J.", "all rings", l12_4);
  l.add("L1.2.5", "For an ideal I inside J, J#(R/I) = J#(R)/I.", "rings with J != 0; ideals J and principal ideals in J",
        l12_5);
  l.add("L1.2.6", "J# of a direct product is the product of the factors' J#.", "direct products", l12_6);
  l.add("L1.2.7", "If ab is in J# then ba is in J#.", "all rings", l12_7);
  l.add("L1.2.8", "Nil(R) + J(R) is inside J#(R).", "all rings", l12_8);
  l.informational("X-1.3", "J#(M2(F2)) is listed as three matrices; the computed set is audited against it.",
                  "M2(F2)", x13);
  l.add("P3.8", "J# meets Id(R) only in 0 and contains no unit.", "all rings", p38);
  l.add("P3.7", "R is local exactly when R = U(R) u J#(R).", "all rings", p37);
  l.add("L-closeprod", "J# + J is inside J#, and J# + (J# n Z) is inside J#.", "all rings", closeprod);
  l.add("L-equUQ", "J# is inside U + (U n Z) always, and the reverse containment holds exactly for UJ# rings.",
        "all rings", equ_uq);
  l.add("F-collapse", "In a finite ring J is a nilpotent ideal, J# = Nil, and UJ#, UJ, UU coincide.", "all rings",
        collapse);
  l.add("C2.7", "For Artinian rings UJ#, UJ and UU are equivalent.", "all finite rings", c27);
  l.add("D-2primal", "Nil* is a nil ideal; reduced and commutative rings are 2-primal.", "all rings", two_primal);
  l.add("O-deep", "J equals the intersection of maximal left ideals and Nil* the intersection of prime ideals.",
        "rings up to the deep-oracle order limit, with --deep-oracle", deep);
}

}  // namespace ringlab::detail
