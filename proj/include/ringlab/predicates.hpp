#pragma once

#include "ringlab/subsets.hpp"

#include <string>
#include <vector>

namespace ringlab {

/// Outcome of a ring-class test. A false verdict carries the elements that
/// violate the defining condition; some true verdicts carry a realising element.
struct Verdict {
  bool holds = true;
  std::vector<Elem> witness;
  std::string reason;

  explicit operator bool() const { return holds; }
  static Verdict yes() { return {}; }
  static Verdict no(std::vector<Elem> witness, std::string reason) { return {false, std::move(witness), std::move(reason)}; }
};

/// Every unit u has u - 1 in J#(R).
Verdict is_ujsharp(const TableRing& r, const InvariantBundle& b);
/// Every unit u has u - 1 in J(R).
Verdict is_uj(const TableRing& r, const InvariantBundle& b);
/// Every unit u has u - 1 nilpotent.
Verdict is_uu(const TableRing& r, const InvariantBundle& b);
/// 1 + s is a unit for every s in `s`; used for the automatic reverse containments.
Verdict one_plus_within_units(const TableRing& r, const InvariantBundle& b, const ElemSet& s);

Verdict is_boolean(const TableRing& r, const InvariantBundle& b);
/// The nonunits are exactly J(R).
Verdict is_local(const TableRing& r, const InvariantBundle& b);
Verdict is_division(const TableRing& r, const InvariantBundle& b);
Verdict is_reduced(const TableRing& r, const InvariantBundle& b);
Verdict is_commutative(const TableRing& r, const InvariantBundle& b);

/// Every principal one-sided ideal Ra, aR with a outside J holds a nonzero idempotent.
Verdict is_semipotent(const TableRing& r, const InvariantBundle& b);
/// Every idempotent of R/I is the image of an idempotent of R. `quotient` must
/// be built by build_quotient, whose projection is its construction map.
Verdict idempotents_lift(const TableRing& r, const InvariantBundle& b, const TableRing& quotient,
                         const InvariantBundle& quotient_bundle);

Verdict is_regular(const TableRing& r, const InvariantBundle& b);
/// For each a some idempotent e lies in aR with 1 - e in (1 - a)R.
Verdict is_exchange(const TableRing& r, const InvariantBundle& b);
Verdict is_dedekind_finite(const TableRing& r, const InvariantBundle& b);
/// Nil(R) = Nil*(R).
Verdict is_2primal(const TableRing& r, const InvariantBundle& b);

struct ElementCleanness {
  bool clean = false;                  // a = e + u
  bool strongly_clean = false;         // ... with ea = ae
  bool jsharp_clean = false;           // a = e + j, j in J#
  bool strongly_jsharp_clean = false;  // ... with ea = ae
  bool strongly_nil_clean = false;     // a = e + q, q nilpotent, ea = ae
  std::size_t clean_decompositions = 0;
};

struct CleanProfile {
  std::vector<ElementCleanness> elements;
  Verdict clean, strongly_clean, jsharp_clean, strongly_jsharp_clean, strongly_nil_clean, uniquely_clean;
};

CleanProfile clean_family(const TableRing& r, const InvariantBundle& b);

/// Principal one-sided ideals as sets: aR and Ra.
ElemSet right_multiples(const TableRing& r, Elem a);
ElemSet left_multiples(const TableRing& r, Elem a);

}  // namespace ringlab
