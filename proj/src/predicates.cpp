#include "ringlab/predicates.hpp"

namespace ringlab {

namespace {

// Every unit u satisfies u - 1 in `target`.
Verdict units_within_one_plus(const TableRing& r, const InvariantBundle& b, const ElemSet& target, const char* name) {
  for (Elem u : b.units.elements()) {
    if (!target.contains(r.sub(u, r.one()))) {
      return Verdict::no({u}, std::string("u - 1 is not in ") + name);
    }
  }
  return Verdict::yes();
}

}  // namespace

Verdict is_ujsharp(const TableRing& r, const InvariantBundle& b) { return units_within_one_plus(r, b, b.jsharp, "J#"); }
Verdict is_uj(const TableRing& r, const InvariantBundle& b) { return units_within_one_plus(r, b, b.jacobson, "J"); }
Verdict is_uu(const TableRing& r, const InvariantBundle& b) { return units_within_one_plus(r, b, b.nilpotents, "Nil"); }

Verdict one_plus_within_units(const TableRing& r, const InvariantBundle& b, const ElemSet& s) {
  for (Elem x : s.elements()) {
    if (!b.units.contains(r.add(r.one(), x))) return Verdict::no({x}, "1 + x is not a unit");
  }
  return Verdict::yes();
}

Verdict is_boolean(const TableRing& r, const InvariantBundle& b) {
  ElemSet non = ElemSet::full(r.order()) - b.idempotents;
  if (!non.empty()) return Verdict::no({non.first()}, "a^2 != a");
  return Verdict::yes();
}

Verdict is_local(const TableRing& r, const InvariantBundle& b) {
  ElemSet nonunits = b.units.complement();
  if (nonunits == b.jacobson) return Verdict::yes();
  ElemSet diff = nonunits - b.jacobson;
  (void)r;
  return Verdict::no({diff.first()}, "nonunit outside J");
}

Verdict is_division(const TableRing& r, const InvariantBundle& b) {
  ElemSet nonzero = ElemSet::full(r.order());
  nonzero.erase(r.zero());
  ElemSet diff = nonzero - b.units;
  if (diff.empty()) return Verdict::yes();
  return Verdict::no({diff.first()}, "nonzero nonunit");
}

Verdict is_reduced(const TableRing& r, const InvariantBundle& b) {
  ElemSet nz = b.nilpotents;
  nz.erase(r.zero());
  if (nz.empty()) return Verdict::yes();
  return Verdict::no({nz.first()}, "nonzero nilpotent");
}

Verdict is_commutative(const TableRing& r, const InvariantBundle& b) {
  ElemSet off = b.center.complement();
  if (off.empty()) return Verdict::yes();
  (void)r;
  return Verdict::no({off.first()}, "noncentral element");
}

ElemSet right_multiples(const TableRing& r, Elem a) {
  ElemSet s(r.order());
  for (Elem x = 0; x < r.order(); ++x) s.insert(r.mul(a, x));
  return s;
}

ElemSet left_multiples(const TableRing& r, Elem a) {
  ElemSet s(r.order());
  for (Elem x = 0; x < r.order(); ++x) s.insert(r.mul(x, a));
  return s;
}

Verdict is_semipotent(const TableRing& r, const InvariantBundle& b) {
  ElemSet nonzero_idem = b.idempotents;
  nonzero_idem.erase(r.zero());
  for (Elem a = 0; a < r.order(); ++a) {
    if (b.jacobson.contains(a)) continue;
    if (!left_multiples(r, a).intersects(nonzero_idem)) return Verdict::no({a}, "Ra has no nonzero idempotent");
    if (!right_multiples(r, a).intersects(nonzero_idem)) return Verdict::no({a}, "aR has no nonzero idempotent");
  }
  return Verdict::yes();
}

Verdict idempotents_lift(const TableRing& r, const InvariantBundle& b, const TableRing& q, const InvariantBundle& qb) {
  const Construction& c = q.construction();
  if (c.kind != ConstructionKind::Quotient || c.bases.empty() || c.bases[0]->order() != r.order()) {
    throw RingError(ErrorCode::NotAnIdeal, "idempotent lifting needs a quotient of this ring");
  }
  ElemSet lifted(q.order());
  b.idempotents.for_each([&](Elem e) { lifted.insert(c.map[e]); });
  ElemSet missing = qb.idempotents - lifted;
  if (missing.empty()) return Verdict::yes();
  return Verdict::no({missing.first()}, "idempotent coset without idempotent preimage");
}

Verdict is_regular(const TableRing& r, const InvariantBundle&) {
  for (Elem a = 0; a < r.order(); ++a) {
    bool found = false;
    for (Elem x = 0; x < r.order() && !found; ++x) found = r.mul(r.mul(a, x), a) == a;
    if (!found) return Verdict::no({a}, "no x with axa = a");
  }
  return Verdict::yes();
}

Verdict is_exchange(const TableRing& r, const InvariantBundle& b) {
  auto idem = b.idempotents.elements();
  for (Elem a = 0; a < r.order(); ++a) {
    ElemSet ar = right_multiples(r, a);
    ElemSet one_minus_ar = right_multiples(r, r.sub(r.one(), a));
    bool found = false;
    for (Elem e : idem) {
      if (ar.contains(e) && one_minus_ar.contains(r.sub(r.one(), e))) {
        found = true;
        break;
      }
    }
    if (!found) return Verdict::no({a}, "no idempotent e in aR with 1-e in (1-a)R");
  }
  return Verdict::yes();
}

Verdict is_dedekind_finite(const TableRing& r, const InvariantBundle&) {
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem c = 0; c < r.order(); ++c) {
      if (r.mul(a, c) == r.one() && r.mul(c, a) != r.one()) return Verdict::no({a, c}, "ab = 1 but ba != 1");
    }
  return Verdict::yes();
}

Verdict is_2primal(const TableRing& r, const InvariantBundle& b) {
  if (b.nilpotents == b.prime_radical) return Verdict::yes();
  (void)r;
  ElemSet diff = b.nilpotents - b.prime_radical;
  return Verdict::no({diff.first()}, "nilpotent outside the prime radical");
}

CleanProfile clean_family(const TableRing& r, const InvariantBundle& b) {
  CleanProfile p;
  p.elements.resize(r.order());
  auto idem = b.idempotents.elements();
  for (Elem a = 0; a < r.order(); ++a) {
    ElementCleanness& c = p.elements[a];
    for (Elem e : idem) {
      Elem w = r.sub(a, e);
      bool commutes = r.mul(e, a) == r.mul(a, e);
      if (b.units.contains(w)) {
        c.clean = true;
        ++c.clean_decompositions;
        if (commutes) c.strongly_clean = true;
      }
      if (b.jsharp.contains(w)) {
        c.jsharp_clean = true;
        if (commutes) c.strongly_jsharp_clean = true;
      }
      if (commutes && b.nilpotents.contains(w)) c.strongly_nil_clean = true;
    }
  }
  auto ring_level = [&](auto flag, const char* what) {
    for (Elem a = 0; a < r.order(); ++a) {
      if (!flag(p.elements[a])) return Verdict::no({a}, what);
    }
    return Verdict::yes();
  };
  p.clean = ring_level([](const ElementCleanness& c) { return c.clean; }, "element is not clean");
  p.strongly_clean = ring_level([](const ElementCleanness& c) { return c.strongly_clean; }, "element is not strongly clean");
  p.jsharp_clean = ring_level([](const ElementCleanness& c) { return c.jsharp_clean; }, "element is not J#-clean");
  p.strongly_jsharp_clean =
      ring_level([](const ElementCleanness& c) { return c.strongly_jsharp_clean; }, "element is not strongly J#-clean");
  p.strongly_nil_clean =
      ring_level([](const ElementCleanness& c) { return c.strongly_nil_clean; }, "element is not strongly nil-clean");
  p.uniquely_clean = ring_level([](const ElementCleanness& c) { return c.clean_decompositions == 1; },
                                "element does not have exactly one clean decomposition");
  return p;
}

}  // namespace ringlab
