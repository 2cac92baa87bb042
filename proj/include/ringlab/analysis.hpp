#pragma once

#include "ringlab/predicates.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace ringlab {

enum class Pred {
  UJsharp,
  UJ,
  UU,
  Boolean,
  Local,
  Division,
  Reduced,
  Commutative,
  Semipotent,
  Regular,
  Exchange,
  DedekindFinite,
  TwoPrimal,
  LiftsModJ,
};

const char* pred_name(Pred p);

/// Lazily computed facts about one ring. Not thread-safe; a harness worker
/// owns each instance for the duration of a ring's checks.
class Analysis {
 public:
  explicit Analysis(RingPtr ring, std::optional<InvariantBundle> bundle = std::nullopt);

  const TableRing& ring() const { return *ring_; }
  const RingPtr& ptr() const { return ring_; }
  const InvariantBundle& bundle() const { return bundle_; }

  const Verdict& verdict(Pred p);
  bool holds(Pred p) { return verdict(p).holds; }

  const CleanProfile& clean();

  /// R/J(R); its construction map projects R onto it.
  Analysis& radical_quotient();
  /// Analysis of construction().bases[i].
  Analysis& base(std::size_t i = 0);

  /// Semi-regular: R/J regular and idempotents lift modulo J.
  bool semiregular();
  /// Semi-Boolean: R/J Boolean and idempotents lift modulo J.
  bool semiboolean();
  /// Potent: semi-potent and idempotents lift modulo J.
  bool potent();

  /// Smallest k with J^k = 0, if J is nilpotent.
  std::optional<std::size_t> jacobson_nilpotency();

  /// Nonzero ideals inside J: J itself and the distinct principal ideals of
  /// its elements, at most `cap` of them, in increasing order of generator.
  const std::vector<ElemSet>& ideals_in_jacobson(std::size_t cap = 12);

  /// The image of `s` under the projection R -> R/J.
  ElemSet project_to_radical_quotient(const ElemSet& s);

 private:
  RingPtr ring_;
  InvariantBundle bundle_;
  std::map<Pred, Verdict> verdicts_;
  std::optional<CleanProfile> clean_;
  std::unique_ptr<Analysis> quotient_;
  std::vector<std::unique_ptr<Analysis>> bases_;
  std::optional<std::optional<std::size_t>> nilpotency_;
  std::optional<std::vector<ElemSet>> ideals_;
};

/// `members` rendered with the ring's element labels, e.g. "[[0,1],[1,1]], 3".
std::string render_elements(const TableRing& r, const std::vector<Elem>& members);
std::string render_set(const TableRing& r, const ElemSet& s);

}  // namespace ringlab
