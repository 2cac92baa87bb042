// Checks that compare a ring with rings built from it: subrings, corners,
// quotients, products, matrix and triangular rings, truncated polynomials.

#include "checks.hpp"

#include <array>

namespace ringlab::detail {

namespace {

constexpr std::size_t kMatrixUnitMultiplicativityLimit = 256;

bool ujsharp_of(const RingPtr& r) {
  InvariantBundle b = compute_bundle(*r);
  return is_ujsharp(*r, b).holds;
}

ElemSet embed(const TableRing& r, const TableRing& sub, const ElemSet& s) {
  ElemSet out(r.order());
  const auto& map = sub.construction().map;
  s.for_each([&](Elem x) { out.insert(map[x]); });
  return out;
}

CheckResult p34(Analysis& a, const CheckContext&) {
  if (!a.holds(Pred::UJsharp)) return CheckResult::skip("R is not UJ#");
  RingPtr z = build_subring(a.ptr(), a.bundle().center);
  InvariantBundle zb = compute_bundle(*z);
  Verdict v = is_ujsharp(*z, zb);
  if (!v) return CheckResult::fail(a.ring(), {z->construction().map[v.witness.at(0)]}, "the center is not UJ#: " + v.reason);
  return CheckResult::pass();
}

ElemSet group_ring_support_subring(const TableRing& rg, const ElemSet& subgroup) {
  const Construction& c = rg.construction();
  const TableRing& base = *c.bases[0];
  std::vector<std::size_t> radices(c.group->order, base.order());
  ElemSet out(rg.order());
  for (Elem x = 0; x < rg.order(); ++x) {
    auto d = digits(x, radices);
    bool inside = true;
    for (std::size_t g = 0; g < d.size() && inside; ++g) inside = subgroup.contains(static_cast<Elem>(g)) || d[g] == base.zero();
    if (inside) out.insert(x);
  }
  return out;
}

ElemSet cyclic_subgroup(const GroupTable& g, Elem gen) {
  ElemSet s(g.order);
  Elem x = g.identity;
  do {
    s.insert(x);
    x = g.mul(x, gen);
  } while (x != g.identity);
  return s;
}

CheckResult c_subring(Analysis& a, const CheckContext&) {
  if (!a.holds(Pred::UJsharp)) return CheckResult::skip("R is not UJ#");
  const TableRing& r = a.ring();
  std::vector<std::pair<std::string, ElemSet>> candidates;
  ElemSet prime(r.order());
  Elem m = r.zero();
  do {
    prime.insert(m);
    m = r.add(m, r.one());
  } while (m != r.zero());
  candidates.emplace_back("prime subring", prime);
  candidates.emplace_back("center", a.bundle().center);
  const Construction& c = r.construction();
  if (c.kind == ConstructionKind::GroupRing) {
    const GroupTable& g = *c.group;
    ElemSet trivial(g.order);
    trivial.insert(g.identity);
    candidates.emplace_back("coefficient ring", group_ring_support_subring(r, trivial));
    for (Elem h = 0; h < g.order; ++h) {
      candidates.emplace_back("R<" + g.names[h] + ">", group_ring_support_subring(r, cyclic_subgroup(g, h)));
    }
  }
  for (const auto& [name, members] : candidates) {
    RingPtr s = build_subring(a.ptr(), members);
    InvariantBundle sb = compute_bundle(*s);
    ElemSet su = embed(r, *s, sb.units);
    if (!(su == (a.bundle().units & members))) {
      return CheckResult::fail(r, {}, name + " is not rationally closed");
    }
    Verdict v = is_ujsharp(*s, sb);
    if (!v) return CheckResult::fail(r, {s->construction().map[v.witness.at(0)]}, name + " is not UJ#: " + v.reason);
  }
  return CheckResult::pass();
}

CheckResult l_product(Analysis& a, const CheckContext&) {
  const Construction& c = a.ring().construction();
  if (c.kind != ConstructionKind::Product) return CheckResult::skip("not built as a direct product");
  bool all = true;
  for (std::size_t i = 0; i < c.bases.size(); ++i) all = all && a.base(i).holds(Pred::UJsharp);
  return equivalent({{"the product is UJ#", a.holds(Pred::UJsharp)}, {"every factor is UJ#", all}});
}

CheckResult l15(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  const auto& js = a.bundle().jsharp;
  for (Elem e : a.bundle().idempotents.elements()) {
    if (e == r.zero()) continue;
    RingPtr corner = build_corner(a.ptr(), e);
    InvariantBundle cb = compute_bundle(*corner);
    ElemSet corner_js = embed(r, *corner, cb.jsharp);
    ElemSet ere = embed(r, *corner, ElemSet::full(corner->order()));
    ElemSet meet = ere & js;
    if (!(corner_js == meet)) {
      Elem w = ((corner_js - meet) | (meet - corner_js)).first();
      return CheckResult::fail(r, {e, w}, "J#(eRe) differs from eRe n J#(R)");
    }
    for (Elem x : js.elements()) {
      Elem exe = r.mul(r.mul(e, x), e);
      if (!meet.contains(exe)) {
        return CheckResult::fail(r, {e, x, exe},
                                 "e J#(R) e is not inside eRe n J#(R): x in J# but exe is not in J#");
      }
    }
  }
  return CheckResult::pass();
}

CheckResult l_corner(Analysis& a, const CheckContext&) {
  if (!a.holds(Pred::UJsharp)) return CheckResult::skip("R is not UJ#");
  const TableRing& r = a.ring();
  for (Elem e : a.bundle().idempotents.elements()) {
    if (e == r.zero()) continue;
    if (!ujsharp_of(build_corner(a.ptr(), e))) return CheckResult::fail(r, {e}, "the corner eRe is not UJ#");
  }
  return CheckResult::pass();
}

CheckResult t35(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  const auto& ideals = a.ideals_in_jacobson();
  if (ideals.empty()) return CheckResult::skip("J(R) = 0");
  bool uj = a.holds(Pred::UJsharp);
  for (const ElemSet& ideal : ideals) {
    bool q = ujsharp_of(build_quotient(a.ptr(), ideal));
    if (q != uj) {
      return CheckResult::fail(r, ideal.elements(),
                               "R is " + std::string(uj ? "" : "not ") + "UJ# but R/I is " + (q ? "" : "not ") + "UJ#");
    }
  }
  return CheckResult::pass();
}

CheckResult l_matrix(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  const Construction& c = r.construction();
  if (c.kind != ConstructionKind::Matrix || c.param < 2) return CheckResult::skip("not a matrix ring of size >= 2");
  const TableRing& s = *c.bases[0];
  const std::size_t k = c.param;
  std::vector<Elem> entries(k * k, s.zero());
  for (std::size_t i = 2; i < k; ++i) entries[i * k + i] = s.one();
  entries[0 * k + 1] = s.one();
  entries[1 * k + 0] = s.one();
  entries[1 * k + 1] = s.one();
  Elem w = matrix_index(s, k, entries);
  const auto& b = a.bundle();
  if (!b.units.contains(w)) return CheckResult::fail(r, {w}, "the witness matrix is not a unit");
  Elem w1 = r.sub(w, r.one());
  if (b.jsharp.contains(w1)) return CheckResult::fail(r, {w}, "the witness satisfies u - 1 in J#");
  if (k == 2 && !b.units.contains(r.sub(r.one(), w))) return CheckResult::fail(r, {w}, "I - U is not a unit");
  if (a.holds(Pred::UJsharp)) return CheckResult::fail(r, {w}, "matrix ring is UJ#");
  return CheckResult::pass();
}

struct MatrixUnits {
  Elem e11, e12, e21, e22;
};

std::optional<MatrixUnits> find_matrix_units(const TableRing& r) {
  std::vector<Elem> square_zero;
  for (Elem x = 0; x < r.order(); ++x) {
    if (x != r.zero() && r.mul(x, x) == r.zero()) square_zero.push_back(x);
  }
  auto idem = [&](Elem e) { return e != r.zero() && r.mul(e, e) == e; };
  for (Elem p : square_zero)
    for (Elem q : square_zero) {
      Elem e11 = r.mul(p, q), e22 = r.mul(q, p);
      if (!idem(e11) || !idem(e22)) continue;
      if (r.mul(e11, e22) != r.zero() || r.mul(e22, e11) != r.zero()) continue;
      if (r.mul(e11, p) != p || r.mul(p, e22) != p || r.mul(e22, q) != q || r.mul(q, e11) != q) continue;
      return MatrixUnits{e11, p, q, e22};
    }
  return std::nullopt;
}

CheckResult l_matunits(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  auto mu = find_matrix_units(r);
  if (!mu) return CheckResult::skip("no system of 2x2 matrix units");
  const Elem u[2][2] = {{mu->e11, mu->e12}, {mu->e21, mu->e22}};
  std::vector<Elem> w = {mu->e11, mu->e12, mu->e21, mu->e22};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) {
          Elem expect = j == s ? u[i][t] : r.zero();
          if (r.mul(u[i][j], u[s][t]) != expect) return CheckResult::fail(r, w, "matrix unit relations fail");
        }
  Elem e = r.add(mu->e11, mu->e22);
  if (r.mul(e, e) != e) return CheckResult::fail(r, w, "e11 + e22 is not idempotent");
  RingPtr corner = build_corner(a.ptr(), e);
  const auto& emb = corner->construction().map;
  std::vector<Elem> scalars;
  for (Elem x : emb) {
    bool commutes = true;
    for (Elem m : w) commutes = commutes && r.mul(x, m) == r.mul(m, x);
    if (commutes) scalars.push_back(x);
  }
  // (s11, s12, s21, s22) -> sum s_ij e_ij must be a bijection S^4 -> eRe.
  const std::size_t ns = scalars.size();
  if (ns * ns * ns * ns != corner->order()) {
    return CheckResult::fail(r, w, "|eRe| = " + std::to_string(corner->order()) + " is not |S|^4 for |S| = " + std::to_string(ns));
  }
  ElemSet image(r.order());
  std::vector<std::array<Elem, 4>> by_elem(r.order());
  for (Elem s0 : scalars)
    for (Elem s1 : scalars)
      for (Elem s2 : scalars)
        for (Elem s3 : scalars) {
          Elem x = r.add(r.add(r.mul(s0, mu->e11), r.mul(s1, mu->e12)), r.add(r.mul(s2, mu->e21), r.mul(s3, mu->e22)));
          if (image.contains(x)) return CheckResult::fail(r, w, "eRe -> M2(S) coordinates are not unique");
          image.insert(x);
          by_elem[x] = {s0, s1, s2, s3};
        }
  if (corner->order() <= kMatrixUnitMultiplicativityLimit) {
    std::vector<Elem> elems = image.elements();
    for (Elem x : elems)
      for (Elem y : elems) {
        const auto& p = by_elem[x];
        const auto& q = by_elem[y];
        const auto& pq = by_elem[r.mul(x, y)];
        auto dot = [&](Elem a0, Elem b0, Elem a1, Elem b1) { return r.add(r.mul(a0, b0), r.mul(a1, b1)); };
        std::array<Elem, 4> expect = {dot(p[0], q[0], p[1], q[2]), dot(p[0], q[1], p[1], q[3]),
                                      dot(p[2], q[0], p[3], q[2]), dot(p[2], q[1], p[3], q[3])};
        if (expect != pq) return CheckResult::fail(r, {x, y}, "coordinates do not multiply as 2x2 matrices");
      }
  }
  if (ujsharp_of(corner)) return CheckResult::fail(r, w, "the corner eRe = M2(S) is UJ#");
  return CheckResult::pass();
}

Elem poly_x(const TableRing& r) {
  const TableRing& base = *r.construction().bases[0];
  std::size_t k = r.construction().param;
  std::size_t x = 0;
  for (std::size_t i = k; i-- > 0;) x = x * base.order() + (i == 1 ? base.one() : base.zero());
  return static_cast<Elem>(x);
}

CheckResult p32(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  const Construction& c = r.construction();
  if (c.kind != ConstructionKind::SkewPoly) return CheckResult::skip("not a truncated skew polynomial ring");
  if (c.param >= 2) {
    ElemSet gen(r.order());
    gen.insert(poly_x(r));
    ElemSet xi = ideal_closure(r, gen, Side::TwoSided);
    if (!xi.subset_of(a.bundle().jacobson)) return CheckResult::fail(r, {poly_x(r)}, "the ideal (x) is not inside J");
  }
  return equivalent({{"R[x;a]/(x^k) is UJ#", a.holds(Pred::UJsharp)}, {"R is UJ#", a.base().holds(Pred::UJsharp)}});
}

CheckResult pt1(Analysis& a, const CheckContext&) {
  if (a.ring().construction().kind != ConstructionKind::TrivialExtension) return CheckResult::skip("not a trivial extension");
  return equivalent({{"T(R,R) is UJ#", a.holds(Pred::UJsharp)}, {"R is UJ#", a.base().holds(Pred::UJsharp)}});
}

CheckResult pt2(Analysis& a, const CheckContext&) {
  const Construction& c = a.ring().construction();
  if (c.kind != ConstructionKind::Triangular || c.param != 2) return CheckResult::skip("not a 2x2 triangular ring");
  bool base = a.base().holds(Pred::UJsharp);
  return equivalent({{"[[R,R],[0,R]] is UJ#", a.holds(Pred::UJsharp)}, {"both diagonal rings are UJ#", base && base}});
}

CheckResult pt3(Analysis& a, const CheckContext&) {
  if (a.ring().construction().kind != ConstructionKind::Triangular) return CheckResult::skip("not a triangular matrix ring");
  return equivalent({{"T_n(R) is UJ#", a.holds(Pred::UJsharp)}, {"R is UJ#", a.base().holds(Pred::UJsharp)}});
}

CheckResult d_alpha(Analysis& a, const CheckContext&) {
  const TableRing& r = a.ring();
  const Construction& c = r.construction();
  if (c.kind != ConstructionKind::SkewPoly) return CheckResult::skip("not a truncated skew polynomial ring");
  Analysis& base = a.base();
  if (!base.holds(Pred::TwoPrimal)) return CheckResult::skip("base ring is not 2-primal");
  Endomorphism alpha{c.bases[0], c.map};
  if (check_alpha_compatible(base.ring(), alpha)) return CheckResult::skip("base ring is not alpha-compatible");
  const auto& b = a.bundle();
  if (!(b.jsharp == b.prime_radical)) {
    ElemSet diff = b.jsharp - b.prime_radical;
    return CheckResult::fail(r, {diff.first()}, "element of J# outside Nil*");
  }
  return CheckResult::pass();
}

}  // namespace

void register_construction_checks(CheckList& l) {
  l.add("P3.4", "The center of a UJ# ring is UJ#.", "UJ# rings", p34);
  l.add("C-subring", "Rationally closed subrings of a UJ# ring are UJ#.",
        "UJ# rings; prime subring, center, and for group rings R and each R<g>", c_subring);
  l.add("L-product", "A direct product is UJ# exactly when every factor is.", "direct products", l_product);
  l.add("L1.5", "For an idempotent e: J#(eRe) = eRe n J#(R) = e J#(R) e.", "all rings; every nonzero idempotent", l15);
  l.add("L-corner", "Corners eRe of a UJ# ring are UJ#.", "UJ# rings; every nonzero idempotent", l_corner);
  l.add("T3.5", "For an ideal I inside J, R is UJ# exactly when R/I is.",
        "rings with J != 0; ideals J and principal ideals in J", t35);
  l.add("L-matrix", "M_n(S) for n >= 2 is not UJ#, witnessed by the unit [[0,1],[1,1]].",
        "matrix rings of size >= 2", l_matrix);
  l.add("L-matunits", "A system of 2x2 matrix units gives e = e11 + e22 with eRe = M2(S), S the centralizer.",
        "rings with a system of 2x2 matrix units", l_matunits);
  l.add("P3.2", "Truncated proxy: R[x;a]/(x^k) is UJ# exactly when R is, since (x) lies in J.",
        "truncated skew polynomial rings", p32);
  l.add("PT-1", "T(R,R) is UJ# exactly when R is.", "trivial extensions", pt1);
  l.add("PT-2", "The triangular ring [[R,N],[0,S]] is UJ# exactly when R and S are (case R = S = N).",
        "2x2 triangular rings", pt2);
  l.add("PT-3", "T_n(R) is UJ# exactly when R is.", "triangular matrix rings", pt3);
  l.add("D-alpha", "Truncated proxy: over a 2-primal alpha-compatible base, J# of R[x;a]/(x^k) equals its Nil*.",
        "truncated skew polynomial rings over 2-primal alpha-compatible bases", d_alpha);
}

}  // namespace ringlab::detail
