// Group rings RG over finite groups.

#include "checks.hpp"

namespace ringlab::detail {

namespace {

bool is_group_ring(const TableRing& r) { return r.construction().kind == ConstructionKind::GroupRing; }

const GroupTable& group_of(const TableRing& r) { return *r.construction().group; }

bool three_in_jsharp(Analysis& base) { return base.bundle().jsharp.contains(base.ring().integer(3)); }

// "RG is UJ# implies the conclusion", tested directly when RG is UJ# and
// through the contrapositive when the conclusion fails. Only the vacuous
// combination skips.
CheckResult conclusion_of_ujsharp(Analysis& a, bool conclusion, const std::string& what) {
  bool uj = a.holds(Pred::UJsharp);
  if (uj && !conclusion) return CheckResult::fail(a.ring(), {}, "RG is UJ# but " + what + " fails");
  if (!uj && conclusion) return CheckResult::skip("RG is not UJ# and " + what + " holds; nothing is exercised");
  return CheckResult::pass();
}

CheckResult g_seq(Analysis& a, const CheckContext&) {
  if (!a.holds(Pred::UJsharp)) return CheckResult::skip("R is not UJ#");
  const TableRing& r = a.ring();
  const auto& b = a.bundle();
  const std::size_t limit = 2 * r.order();
  for (Elem u : b.units.elements()) {
    Elem g = r.one();
    Elem power = r.one();
    for (std::size_t n = 1; n <= limit; ++n) {
      power = r.mul(power, u);
      g = r.add(g, power);
      bool ok = n % 2 == 0 ? b.units.contains(g) : b.jsharp.contains(g);
      if (!ok) {
        return CheckResult::fail(r, {u, g}, "g_" + std::to_string(n) + " is not in " + (n % 2 == 0 ? "U" : "J#"));
      }
    }
  }
  return CheckResult::pass();
}

ElemSet support_in(const TableRing& rg, const std::vector<bool>& allowed, const ElemSet* coefficients) {
  const TableRing& base = *rg.construction().bases[0];
  std::vector<std::size_t> radices(group_of(rg).order, base.order());
  ElemSet out(rg.order());
  for (Elem x = 0; x < rg.order(); ++x) {
    auto d = digits(x, radices);
    bool inside = true;
    for (std::size_t g = 0; g < d.size() && inside; ++g) {
      inside = allowed[g] ? (!coefficients || coefficients->contains(d[g])) : d[g] == base.zero();
    }
    if (inside) out.insert(x);
  }
  return out;
}

CheckResult g_extle(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  if (!is_group_ring(r)) return CheckResult::skip("not a group ring");
  const GroupTable& g = group_of(r);
  const auto& j = a.bundle().jacobson;
  for (Elem h = 0; h < g.order; ++h) {
    std::vector<bool> in_h(g.order, false);
    Elem x = g.identity;
    do {
      in_h[x] = true;
      x = g.mul(x, h);
    } while (x != g.identity);
    RingPtr rh = build_subring(a.ptr(), support_in(r, in_h, nullptr));
    InvariantBundle hb = compute_bundle(*rh);
    const auto& emb = rh->construction().map;
    for (Elem y = 0; y < rh->order(); ++y) {
      if (j.contains(emb[y]) && !hb.jacobson.contains(y)) {
        return CheckResult::fail(r, {emb[y]}, "in J(RG) n R<" + g.names[h] + "> but not in J(R<" + g.names[h] + ">)");
      }
    }
  }
  Analysis& base = a.base();
  for (Elem s = 0; s < base.ring().order(); ++s) {
    Elem e = group_ring_scalar(r, s);
    if (base.bundle().jacobson.contains(s) != j.contains(e)) {
      return CheckResult::fail(r, {e}, "J(R) and J(RG) n R disagree at this scalar");
    }
  }
  std::vector<bool> all(g.order, true);
  ElemSet jg = support_in(r, all, &base.bundle().jacobson);
  if (!jg.subset_of(j)) return CheckResult::fail(r, {(jg - j).first()}, "element of J(R)G outside J(RG)");
  return CheckResult::pass();
}

CheckResult g_2grp(Analysis& a, const CheckContext&) {
  if (!is_group_ring(a.ring())) return CheckResult::skip("not a group ring");
  bool conclusion = a.base().holds(Pred::UJsharp) && group_of(a.ring()).is_2group();
  return conclusion_of_ujsharp(a, conclusion, "'R is UJ# and G is a 2-group'");
}

CheckResult g_delta(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  if (!is_group_ring(r)) return CheckResult::skip("not a group ring");
  if (!group_of(r).is_2group()) return CheckResult::skip("G is not a 2-group");
  if (!a.base().holds(Pred::UJsharp)) return CheckResult::skip("R is not UJ#");
  ElemSet delta = augmentation_ideal(r);
  if (!delta.subset_of(a.bundle().jacobson)) {
    return CheckResult::fail(r, {(delta - a.bundle().jacobson).first()}, "element of the augmentation ideal outside J(RG)");
  }
  return CheckResult::pass();
}

CheckResult g_lf(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  if (!is_group_ring(r)) return CheckResult::skip("not a group ring");
  if (!group_of(r).is_2group()) return CheckResult::skip("G is not a 2-group");
  return equivalent({{"RG is UJ#", a.holds(Pred::UJsharp)}, {"R is UJ#", a.base().holds(Pred::UJsharp)}});
}

CheckResult g_art(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  if (!is_group_ring(r)) return CheckResult::skip("not a group ring");
  Analysis& base = a.base();
  RingPtr q = build_quotient(base.ptr(), base.bundle().jacobson);
  RingPtr qg = build_group_ring(q, r.construction().group, Limits{kMaxSupportedOrder});
  InvariantBundle qb = compute_bundle(*qg);
  return equivalent({{"RG is UJ#", a.holds(Pred::UJsharp)}, {"(R/J)G is UJ#", is_ujsharp(*qg, qb).holds}});
}

CheckResult g_exp2(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  if (!is_group_ring(r)) return CheckResult::skip("not a group ring");
  if (!group_of(r).is_2group()) return CheckResult::skip("G is not a 2-group");
  if (!three_in_jsharp(a.base())) return CheckResult::skip("3 is not in J#(R)");
  return conclusion_of_ujsharp(a, group_of(r).exponent <= 2, "'G has exponent 2'");
}

CheckResult g_3grp(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  if (!is_group_ring(r)) return CheckResult::skip("not a group ring");
  const GroupTable& g = group_of(r);
  std::size_t p = g.prime_base();
  if (p == 0 || p == 2) return CheckResult::skip("G is not a p-group for an odd prime p");
  if (!three_in_jsharp(a.base())) return CheckResult::skip("3 is not in J#(R)");
  return conclusion_of_ujsharp(a, g.is_p_group(3), "'G is a 3-group'");
}

}  // namespace

void register_group_checks(CheckList& l) {
  l.add("G-seq", "In a UJ# ring, for a unit a, 1 + a + ... + a^n is a unit for even n and in J# for odd n.",
        "UJ# rings; n up to twice the order", g_seq);
  l.add("G-extle", "J(RG) n RH is inside J(RH); J(R) = J(RG) n R; J(R)G is inside J(RG).",
        "group rings; H ranges over the cyclic subgroups", g_extle);
  l.doc_only("G-torsion", "If RG is UJ# then G is torsion.", "every finite group is torsion");
  l.add("G-2grp", "If RG is UJ# then R is UJ# and G is a 2-group.", "group rings", g_2grp);
  l.add("G-delta", "For a UJ# ring R and a 2-group G, the augmentation ideal lies in J(RG).",
        "group rings of 2-groups over UJ# rings", g_delta);
  l.add("G-lf", "For a (locally finite) 2-group G, RG is UJ# exactly when R is.", "group rings of 2-groups", g_lf);
  l.add("G-art", "For Artinian R, RG is UJ# exactly when (R/J(R))G is.", "group rings", g_art);
  l.add("G-exp2", "If RG is UJ#, 3 is in J#(R) and G is a 2-group, then G has exponent 2.",
        "group rings of 2-groups with 3 in J#(R)", g_exp2);
  l.add("G-3grp", "If RG is UJ#, 3 is in J#(R) and G is a p-group for an odd prime p, then G is a 3-group.",
        "group rings of odd p-groups with 3 in J#(R)", g_3grp);
}

}  // namespace ringlab::detail
