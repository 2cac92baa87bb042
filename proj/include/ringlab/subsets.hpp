#pragma once

#include "ringlab/constructions.hpp"
#include "ringlab/table_ring.hpp"

#include <optional>
#include <vector>

namespace ringlab {

inline constexpr Elem kNoInverse = UINT32_MAX;

/// The structural subsets of one ring, computed once and then read-only.
struct InvariantBundle {
  ElemSet units;
  std::vector<Elem> inverse;  // kNoInverse off the units
  ElemSet idempotents;
  ElemSet nilpotents;
  ElemSet center;
  ElemSet jacobson;
  ElemSet jsharp;
  ElemSet prime_radical;
};

struct UnitGroup {
  ElemSet units;
  std::vector<Elem> inverse;
};

UnitGroup units(const TableRing& r);
ElemSet idempotents(const TableRing& r);
ElemSet nilpotents(const TableRing& r);
ElemSet center(const TableRing& r);
/// j is in J(R) iff 1 - rj is a unit for every r.
ElemSet jacobson_radical(const TableRing& r, const ElemSet& units);
/// z is in J#(R) iff some power of z lies in J(R).
ElemSet jsharp(const TableRing& r, const ElemSet& jacobson);
/// The strongly nilpotent elements: a is in Nil*(R) iff no path a -> ara -> ...
/// (over all choices of r) reaches a nonzero element lying on a cycle.
ElemSet prime_radical(const TableRing& r);

InvariantBundle compute_bundle(const TableRing& r);

/// Throws std::logic_error when a bundle invariant fails (e.g. J not an ideal).
void assert_bundle_invariants(const TableRing& r, const InvariantBundle& b);

std::optional<IdealViolation> is_two_sided_ideal(const TableRing& r, const ElemSet& s);

/// eps(sum a_g g) = sum a_g, as an element of the base ring.
Elem augmentation(const TableRing& group_ring, Elem x);
/// Kernel of the augmentation map.
ElemSet augmentation_ideal(const TableRing& group_ring);

/// Smallest k with I^k = 0 (ideal power), or nullopt if the powers stabilise
/// at a nonzero ideal.
std::optional<std::size_t> nilpotency_index(const TableRing& r, const ElemSet& ideal);

/// Every ideal of the given side, by closure search from {0}.
std::vector<ElemSet> enumerate_ideals(const TableRing& r, Side side);
/// Intersection of all maximal left ideals.
ElemSet jacobson_by_maximal_left_ideals(const TableRing& r);
/// Intersection of all prime two-sided ideals.
ElemSet prime_radical_by_prime_ideals(const TableRing& r);

}  // namespace ringlab
