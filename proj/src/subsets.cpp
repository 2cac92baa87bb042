#include "ringlab/subsets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ringlab {

UnitGroup units(const TableRing& r) {
  const std::size_t n = r.order();
  UnitGroup g{ElemSet(n), std::vector<Elem>(n, kNoInverse)};
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (r.mul(a, b) == r.one() && r.mul(b, a) == r.one()) {
        g.units.insert(a);
        g.inverse[a] = b;
        break;
      }
    }
  }
  return g;
}

ElemSet idempotents(const TableRing& r) {
  ElemSet s(r.order());
  for (Elem a = 0; a < r.order(); ++a) {
    if (r.mul(a, a) == a) s.insert(a);
  }
  return s;
}

ElemSet nilpotents(const TableRing& r) {
  ElemSet s(r.order());
  for (Elem a = 0; a < r.order(); ++a) {
    auto orbit = r.power_orbit(a);
    if (std::find(orbit.powers.begin(), orbit.powers.end(), r.zero()) != orbit.powers.end()) s.insert(a);
  }
  return s;
}

ElemSet center(const TableRing& r) {
  ElemSet s(r.order());
  for (Elem a = 0; a < r.order(); ++a) {
    bool central = true;
    for (Elem x = 0; x < r.order() && central; ++x) central = r.mul(a, x) == r.mul(x, a);
    if (central) s.insert(a);
  }
  return s;
}

ElemSet jacobson_radical(const TableRing& r, const ElemSet& unit_set) {
  ElemSet s(r.order());
  for (Elem j = 0; j < r.order(); ++j) {
    bool in = true;
    for (Elem x = 0; x < r.order() && in; ++x) in = unit_set.contains(r.sub(r.one(), r.mul(x, j)));
    if (in) s.insert(j);
  }
  return s;
}

ElemSet jsharp(const TableRing& r, const ElemSet& jacobson) {
  ElemSet s(r.order());
  for (Elem z = 0; z < r.order(); ++z) {
    // J is an ideal, so once a power lands in J every later one does; the
    // orbit up to its first repeat covers every exponent.
    auto orbit = r.power_orbit(z);
    for (Elem p : orbit.powers) {
      if (jacobson.contains(p)) {
        s.insert(z);
        break;
      }
    }
  }
  return s;
}

ElemSet prime_radical(const TableRing& r) {
  const std::size_t n = r.order();
  constexpr std::uint32_t kUnvisited = UINT32_MAX;
  auto next = [&](Elem v, Elem x) { return r.mul(r.mul(v, x), v); };

  std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<char> comp_reaches_bad;
  std::vector<Elem> stack;
  struct Frame {
    Elem v;
    Elem x;
  };
  std::vector<Frame> frames;
  std::uint32_t counter = 0;

  for (Elem root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const Elem v = f.v;
      if (f.x < n) {
        Elem w = next(v, f.x++);
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        const auto id = static_cast<std::uint32_t>(comp_reaches_bad.size());
        std::vector<Elem> members;
        Elem w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = id;
          members.push_back(w);
        } while (w != v);
        bool reaches = members.size() > 1;
        for (Elem m : members) {
          for (Elem x = 0; x < n && !reaches; ++x) {
            Elem t = next(m, x);
            if (t == m && m != r.zero()) reaches = true;
            else if (comp[t] != kUnvisited && comp[t] != id && comp_reaches_bad[comp[t]]) reaches = true;
          }
          if (reaches) break;
        }
        comp_reaches_bad.push_back(reaches ? 1 : 0);
      }
      frames.pop_back();
      if (!frames.empty()) {
        Elem parent = frames.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  ElemSet s(n);
  for (Elem a = 0; a < n; ++a) {
    if (!comp_reaches_bad[comp[a]]) s.insert(a);
  }
  return s;
}

InvariantBundle compute_bundle(const TableRing& r) {
  InvariantBundle b;
  auto u = units(r);
  b.units = std::move(u.units);
  b.inverse = std::move(u.inverse);
  b.idempotents = idempotents(r);
  b.nilpotents = nilpotents(r);
  b.center = center(r);
  b.jacobson = jacobson_radical(r, b.units);
  b.jsharp = jsharp(r, b.jacobson);
  b.prime_radical = prime_radical(r);
  return b;
}

void assert_bundle_invariants(const TableRing& r, const InvariantBundle& b) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("bundle invariant violated: ") + what);
  };
  require(b.units.contains(r.one()), "1 is a unit");
  require(b.idempotents.contains(r.zero()) && b.idempotents.contains(r.one()), "0 and 1 are idempotent");
  for (const ElemSet* s : {&b.nilpotents, &b.jacobson, &b.jsharp, &b.prime_radical}) {
    require(s->contains(r.zero()), "0 lies in every radical-like set");
  }
  require(b.jacobson.subset_of(b.jsharp), "J subset of J#");
  require(b.nilpotents.subset_of(b.jsharp), "Nil subset of J#");
  require(b.prime_radical.subset_of(b.nilpotents), "Nil* subset of Nil");
  bool one_plus_j = true;
  b.jacobson.for_each([&](Elem j) { one_plus_j = one_plus_j && b.units.contains(r.add(r.one(), j)); });
  require(one_plus_j, "1 + J subset of U");
  require(!is_two_sided_ideal(r, b.jacobson).has_value(), "J is a two-sided ideal");
  b.units.for_each([&](Elem u) {
    require(b.inverse[u] != kNoInverse && r.mul(u, b.inverse[u]) == r.one(), "inverse map is total on units");
  });
}

std::optional<IdealViolation> is_two_sided_ideal(const TableRing& r, const ElemSet& s) {
  return ideal_violation(r, s, Side::TwoSided);
}

Elem augmentation(const TableRing& rg, Elem x) {
  const Construction& c = rg.construction();
  if (c.kind != ConstructionKind::GroupRing) throw RingError(ErrorCode::NotAGroupRing, "augmentation needs a group ring");
  const TableRing& base = *c.bases[0];
  rg.checked(x);
  Elem sum = base.zero();
  std::size_t v = x;
  for (std::size_t g = 0; g < c.group->order; ++g) {
    sum = base.add(sum, static_cast<Elem>(v % base.order()));
    v /= base.order();
  }
  return sum;
}

ElemSet augmentation_ideal(const TableRing& rg) {
  const Construction& c = rg.construction();
  if (c.kind != ConstructionKind::GroupRing) throw RingError(ErrorCode::NotAGroupRing, "augmentation ideal needs a group ring");
  ElemSet s(rg.order());
  for (Elem x = 0; x < rg.order(); ++x) {
    if (augmentation(rg, x) == c.bases[0]->zero()) s.insert(x);
  }
  return s;
}

std::optional<std::size_t> nilpotency_index(const TableRing& r, const ElemSet& ideal) {
  ElemSet zero(r.order(), {r.zero()});
  ElemSet power = ideal;
  std::size_t k = 1;
  auto ideal_members = ideal.elements();
  while (!(power == zero)) {
    ElemSet products(r.order());
    power.for_each([&](Elem p) {
      for (Elem i : ideal_members) products.insert(r.mul(p, i));
    });
    ElemSet next = ideal_closure(r, products, Side::TwoSided);
    if (next == power) return std::nullopt;
    power = std::move(next);
    ++k;
  }
  return k;
}

namespace {

struct BlockLess {
  bool operator()(const ElemSet& a, const ElemSet& b) const { return a.blocks() < b.blocks(); }
};

}  // namespace

std::vector<ElemSet> enumerate_ideals(const TableRing& r, Side side) {
  std::set<ElemSet, BlockLess> seen;
  std::vector<ElemSet> work;
  ElemSet zero = ideal_closure(r, ElemSet(r.order()), side);
  seen.insert(zero);
  work.push_back(zero);
  while (!work.empty()) {
    ElemSet cur = std::move(work.back());
    work.pop_back();
    for (Elem a = 0; a < r.order(); ++a) {
      if (cur.contains(a)) continue;
      ElemSet gens = cur;
      gens.insert(a);
      ElemSet bigger = ideal_closure(r, gens, side);
      if (seen.insert(bigger).second) work.push_back(bigger);
    }
  }
  return {seen.begin(), seen.end()};
}

ElemSet jacobson_by_maximal_left_ideals(const TableRing& r) {
  auto all = enumerate_ideals(r, Side::Left);
  std::vector<ElemSet> proper;
  for (auto& i : all) {
    if (!i.contains(r.one())) proper.push_back(i);
  }
  ElemSet result = ElemSet::full(r.order());
  for (const auto& i : proper) {
    bool maximal = std::none_of(proper.begin(), proper.end(),
                                [&](const ElemSet& j) { return !(j == i) && i.subset_of(j); });
    if (maximal) result &= i;
  }
  return result;
}

ElemSet prime_radical_by_prime_ideals(const TableRing& r) {
  auto all = enumerate_ideals(r, Side::TwoSided);
  ElemSet result = ElemSet::full(r.order());
  for (const auto& p : all) {
    if (p.contains(r.one())) continue;
    bool prime = true;
    for (Elem a = 0; a < r.order() && prime; ++a) {
      if (p.contains(a)) continue;
      for (Elem b = 0; b < r.order() && prime; ++b) {
        if (p.contains(b)) continue;
        bool escapes = false;
        for (Elem x = 0; x < r.order() && !escapes; ++x) escapes = !p.contains(r.mul(r.mul(a, x), b));
        prime = escapes;
      }
    }
    if (prime) result &= p;
  }
  return result;
}

}  // namespace ringlab
