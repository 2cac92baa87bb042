// Ring-class characterisations: UJ# against UU, UJ, Boolean, clean and friends.

#include "checks.hpp"

namespace ringlab::detail {

namespace {

bool j_is_nil(Analysis& a) { return a.bundle().jacobson.subset_of(a.bundle().nilpotents); }

CheckResult t_m(Analysis& a, const CheckContext&) {
  return equivalent({{"R is UJ#", a.holds(Pred::UJsharp)}, {"R/J is UU", a.radical_quotient().holds(Pred::UU)}});
}

CheckResult c_m1(Analysis& a, const CheckContext&) {
  if (a.bundle().jacobson.count() != 1) return CheckResult::skip("J(R) != 0");
  return equivalent({{"R is UJ#", a.holds(Pred::UJsharp)}, {"R is UU", a.holds(Pred::UU)}});
}

CheckResult c_nil(Analysis& a, const CheckContext&) {
  if (!j_is_nil(a)) return CheckResult::skip("J(R) is not nil");
  return equivalent({{"R is UJ#", a.holds(Pred::UJsharp)}, {"R is UU", a.holds(Pred::UU)}});
}

CheckResult e_final(Analysis& a, const CheckContext&) {
  auto r = implies({"R is UJ", a.holds(Pred::UJ)}, {"R is UJ#", a.holds(Pred::UJsharp)});
  if (r.status == Status::Fail) return r;
  return implies({"R is UU", a.holds(Pred::UU)}, {"R is UJ#", a.holds(Pred::UJsharp)});
}

CheckResult semipotent(Analysis& a, const CheckContext&) {
  return from_verdict(a.ring(), a.verdict(Pred::Semipotent), "finite ring is not semi-potent");
}

CheckResult t24(Analysis& a, const CheckContext&) {
  if (!a.holds(Pred::Semipotent)) return CheckResult::skip("R is not semi-potent");
  return equivalent({{"R is UJ#", a.holds(Pred::UJsharp)},
                     {"R/J is Boolean", a.radical_quotient().holds(Pred::Boolean)},
                     {"R is UJ", a.holds(Pred::UJ)}});
}

CheckResult c25(Analysis& a, const CheckContext&) {
  if (!a.holds(Pred::Regular)) return CheckResult::skip("R is not regular");
  if (a.bundle().jacobson.count() != 1) return CheckResult::fail(a.ring(), a.bundle().jacobson.elements(), "regular ring with J != 0");
  return equivalent({{"UJ#", a.holds(Pred::UJsharp)},
                     {"UJ", a.holds(Pred::UJ)},
                     {"UU", a.holds(Pred::UU)},
                     {"Boolean", a.holds(Pred::Boolean)}});
}

CheckResult t316(Analysis& a, const CheckContext&) {
  bool uj = a.holds(Pred::UJsharp);
  return equivalent({{"semi-regular UJ#", a.semiregular() && uj},
                     {"exchange UJ#", a.holds(Pred::Exchange) && uj},
                     {"semi-Boolean", a.semiboolean()}});
}

CheckResult c317(Analysis& a, const CheckContext&) {
  if (!a.holds(Pred::UJsharp)) return CheckResult::skip("R is not UJ#");
  return equivalent({{"semi-regular", a.semiregular()},
                     {"exchange", a.holds(Pred::Exchange)},
                     {"clean", a.clean().clean.holds}});
}

CheckResult c318(Analysis& a, const CheckContext&) {
  bool base = a.holds(Pred::UJsharp) && j_is_nil(a);
  return equivalent({{"semi-regular UJ# with J nil", a.semiregular() && base},
                     {"exchange UJ# with J nil", a.holds(Pred::Exchange) && base},
                     {"strongly nil-clean", a.clean().strongly_nil_clean.holds}});
}

CheckResult p_clean(Analysis& a, const CheckContext&) {
  if (!a.holds(Pred::UJsharp)) return CheckResult::skip("R is not UJ#");
  const TableRing& r = a.ring();
  const auto& elems = a.clean().elements;
  for (Elem x = 0; x < r.order(); ++x) {
    if (elems[x].clean != elems[x].jsharp_clean) return CheckResult::fail(r, {x}, "clean and J#-clean disagree");
    if (elems[x].strongly_clean != elems[x].strongly_jsharp_clean) {
      return CheckResult::fail(r, {x}, "strongly clean and strongly J#-clean disagree");
    }
  }
  return CheckResult::pass();
}

CheckResult c_imp(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  const auto& b = a.bundle();
  const auto& elems = a.clean().elements;
  bool clean_sj = true;
  for (Elem x = 0; x < r.order() && clean_sj; ++x) clean_sj = !elems[x].clean || elems[x].strongly_jsharp_clean;
  auto central_idem = (b.idempotents & b.center).elements();
  bool units_split = true;
  b.units.for_each([&](Elem u) {
    bool found = false;
    for (Elem e : central_idem) found = found || b.jsharp.contains(r.sub(u, e));
    units_split = units_split && found;
  });
  return equivalent({{"R is UJ#", a.holds(Pred::UJsharp)},
                     {"every clean element is strongly J#-clean", clean_sj},
                     {"every unit is a central idempotent plus an element of J#", units_split}});
}

CheckResult c_cor1(Analysis& a, const CheckContext&) {
  return implies({"R is strongly J#-clean", a.clean().strongly_jsharp_clean.holds}, {"R is UJ#", a.holds(Pred::UJsharp)});
}

CheckResult c16(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  bool uj = a.holds(Pred::UJsharp);
  bool clean = a.clean().clean.holds;
  bool jclean = a.clean().jsharp_clean.holds;
  auto res = equivalent({{"(1) clean UJ#", clean && uj}, {"(2) J#-clean UJ#", jclean && uj}, {"(3) J#-clean", jclean}});
  if (res.status == Status::Fail && jclean && !uj) {
    const Verdict& v = a.verdict(Pred::UJsharp);
    res = CheckResult::fail(r, v.witness, "(3) => (1) fails: R is J#-clean but not UJ# (" + v.reason + ")");
  }
  return res;
}

CheckResult l_cor2(Analysis& a, const CheckContext&) {
  return implies({"R is strongly J#-clean", a.clean().strongly_jsharp_clean.holds},
                 {"R is strongly clean", a.clean().strongly_clean.holds});
}

CheckResult c_sjc(Analysis& a, const CheckContext&) {
  return equivalent({{"R is strongly J#-clean", a.clean().strongly_jsharp_clean.holds},
                     {"R is UJ# and strongly clean", a.holds(Pred::UJsharp) && a.clean().strongly_clean.holds}});
}

CheckResult l_div(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  bool uj = a.holds(Pred::UJsharp);
  Analysis& q = a.radical_quotient();
  if (a.holds(Pred::Division)) {
    auto res = equivalent({{"division ring is UJ#", uj}, {"R is F2", r.order() == 2}});
    if (res.status == Status::Fail) return res;
  }
  if (a.holds(Pred::Local)) {
    auto res = equivalent({{"local ring is UJ#", uj}, {"R/J is F2", q.ring().order() == 2}});
    if (res.status == Status::Fail) return res;
  }
  if (a.bundle().jacobson.count() == 1) {
    // A finite Boolean ring is a product of copies of F2.
    auto res = equivalent({{"semisimple ring is UJ#", uj}, {"R is a product of copies of F2", a.holds(Pred::Boolean)}});
    if (res.status == Status::Fail) return res;
  }
  return equivalent({{"semilocal ring is UJ#", uj}, {"R/J is a product of copies of F2", q.holds(Pred::Boolean)}});
}

CheckResult c_uclean(Analysis& a, const CheckContext&) {
  if (!a.holds(Pred::Local)) return CheckResult::skip("R is not local");
  return equivalent({{"R is UJ#", a.holds(Pred::UJsharp)}, {"R is uniquely clean", a.clean().uniquely_clean.holds}});
}

CheckResult l_2inj(Analysis& a, const CheckContext&) {
  if (!a.holds(Pred::UJsharp)) return CheckResult::skip("R is not UJ#");
  const TableRing& r = a.ring();
  const auto& b = a.bundle();
  Elem two = r.integer(2);
  if (!b.jsharp.contains(two)) return CheckResult::fail(r, {two}, "2 not in J#");
  if (!b.jacobson.contains(two)) return CheckResult::fail(r, {two}, "2 not in J");
  auto js = b.jsharp.elements();
  bool add_closed = true, mul_closed = true;
  for (Elem x : js)
    for (Elem y : js) {
      add_closed = add_closed && b.jsharp.contains(r.add(x, y));
      mul_closed = mul_closed && b.jsharp.contains(r.mul(x, y));
    }
  bool neg_closed = true;
  for (Elem x : js) neg_closed = neg_closed && b.jsharp.contains(r.neg(x));
  return equivalent({{"J# closed under addition", add_closed},
                     {"J# is a subring", add_closed && mul_closed && neg_closed}});
}

CheckResult l_dedekind(Analysis& a, const CheckContext&) {
  if (!a.holds(Pred::UJsharp)) return CheckResult::skip("R is not UJ#");
  return from_verdict(a.ring(), a.verdict(Pred::DedekindFinite), "UJ# ring that is not Dedekind-finite");
}

CheckResult c_1ab(Analysis& a, const CheckContext&) {
  if (!a.holds(Pred::UJsharp)) return CheckResult::skip("R is not UJ#");
  const TableRing& r = a.ring();
  const auto& js = a.bundle().jsharp;
  for (Elem x = 0; x < r.order(); ++x)
    for (Elem y = 0; y < r.order(); ++y) {
      if (js.contains(r.sub(r.one(), r.mul(x, y))) != js.contains(r.sub(r.one(), r.mul(y, x)))) {
        return CheckResult::fail(r, {x, y}, "1 - ab and 1 - ba disagree on membership in J#");
      }
    }
  return CheckResult::pass();
}

// Units u1, u2 of `r` with u1 + u2 = target.
std::optional<std::pair<Elem, Elem>> units_summing_to(const TableRing& r, const ElemSet& units, Elem target) {
  for (Elem u : units.elements()) {
    Elem rest = r.sub(target, u);
    if (units.contains(rest)) return std::make_pair(u, rest);
  }
  return std::nullopt;
}

CheckResult p22(Analysis& a, const CheckContext&) {
  if (!a.holds(Pred::UJsharp)) return CheckResult::skip("R is not UJ#");
  const TableRing& r = a.ring();
  if (auto p = units_summing_to(r, a.bundle().units, r.one())) {
    return CheckResult::fail(r, {p->first, p->second}, "two units of R sum to 1");
  }
  Analysis& q = a.radical_quotient();
  if (auto p = units_summing_to(q.ring(), q.bundle().units, q.ring().one())) {
    return CheckResult::fail(r, {}, "units " + render_elements(q.ring(), {p->first, p->second}) + " of R/J sum to 1");
  }
  return CheckResult::pass();
}

CheckResult p23(Analysis& a, const CheckContext&) {
  if (!a.holds(Pred::UJsharp)) return CheckResult::skip("R is not UJ#");
  if (!a.potent()) return CheckResult::skip("R is not potent");
  const TableRing& r = a.ring();
  Analysis& q = a.radical_quotient();
  for (Elem e : q.bundle().idempotents.elements()) {
    if (e == q.ring().zero()) continue;
    RingPtr corner = build_corner(q.ptr(), e);
    UnitGroup cu = units(*corner);
    if (auto p = units_summing_to(*corner, cu.units, corner->one())) {
      return CheckResult::fail(r, {}, "in the corner of R/J at " + q.ring().label(e) + ", units " +
                                          render_elements(*corner, {p->first, p->second}) + " sum to e");
    }
  }
  return CheckResult::pass();
}

CheckResult c_zn(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  if (r.construction().kind != ConstructionKind::Zmod) return CheckResult::skip("not built as Z/n");
  return equivalent({{"Z/n is UJ#", a.holds(Pred::UJsharp)}, {"n is a power of 2", is_power_of_two(r.order())}});
}

}  // namespace

void register_class_checks(CheckList& l) {
  l.add("T-m", "R is UJ# exactly when R/J(R) is UU.", "all rings", t_m);
  l.add("C-m1", "When J(R) = 0, R is UJ# exactly when R is UU.", "rings with J = 0", c_m1);
  l.add("C-nil", "When J(R) is nil, R is UJ# exactly when R is UU.", "rings with J nil", c_nil);
  l.add("E-final", "UJ rings and UU rings are UJ#.", "all rings", e_final);
  l.add("S-semipotent", "Finite rings are semi-potent (principal one-sided ideal scan).", "all finite rings", semipotent);
  l.add("T2.4", "For semi-potent R: UJ#, R/J Boolean, and UJ are equivalent.", "semi-potent rings", t24);
  l.add("C2.5", "For regular R: UJ#, UJ, UU and Boolean are equivalent.", "regular rings", c25);
  l.add("T3.16", "Semi-regular UJ#, exchange UJ#, and semi-Boolean are equivalent.", "all rings", t316);
  l.add("C3.17", "For UJ# rings: semi-regular, exchange and clean are equivalent.", "UJ# rings", c317);
  l.add("C3.18", "Semi-regular UJ# with J nil, exchange UJ# with J nil, and strongly nil-clean are equivalent.",
        "all rings", c318);
  l.add("P-clean", "In a UJ# ring an element is clean iff J#-clean, and strongly clean iff strongly J#-clean.",
        "UJ# rings", p_clean);
  l.add("C-imp",
        "UJ#; every clean element strongly J#-clean; every unit a central idempotent plus J#: all equivalent.",
        "all rings", c_imp);
  l.add("C-cor1", "Strongly J#-clean rings are UJ#.", "strongly J#-clean rings", c_cor1);
  l.add("C1.6", "Clean UJ#, J#-clean UJ#, and J#-clean are equivalent.", "all rings", c16);
  l.add("L-cor2", "Strongly J#-clean rings are strongly clean.", "strongly J#-clean rings", l_cor2);
  l.add("C-sjc", "R is strongly J#-clean exactly when it is UJ# and strongly clean.", "all rings", c_sjc);
  l.add("L-div",
        "UJ# division rings are F2; UJ# local rings have R/J = F2; UJ# semisimple rings are powers of F2; "
        "UJ# semilocal rings have R/J a power of F2 (each as an iff).",
        "division, local, semisimple and semilocal rings", l_div);
  l.add("C-uclean", "A local ring is UJ# exactly when it is uniquely clean.", "local rings", c_uclean);
  l.add("L-2inJ", "In a UJ# ring 2 lies in J, and J# is additively closed exactly when it is a subring.", "UJ# rings",
        l_2inj);
  l.add("L-dedekind", "UJ# rings are Dedekind-finite.", "UJ# rings", l_dedekind);
  l.add("C-1ab", "In a UJ# ring 1 - ab is in J# exactly when 1 - ba is.", "UJ# rings", c_1ab);
  l.add("P2.2", "In a UJ# ring no two units sum to 1, in R and in R/J.", "UJ# rings", p22);
  l.add("P2.3", "In a potent UJ# ring no two units of a corner of R/J sum to its identity.", "potent UJ# rings", p23);
  l.add("C-zn", "Z/n is UJ# exactly when n is a power of 2.", "rings built as Z/n", c_zn);
}

}  // namespace ringlab::detail
