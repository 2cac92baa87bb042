#pragma once

#include "ringlab/elem_set.hpp"
#include "ringlab/error.hpp"

#include <cassert>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ringlab {

class TableRing;
struct GroupTable;
using RingPtr = std::shared_ptr<const TableRing>;

/// Hard ceiling imposed by the 16-bit table storage.
inline constexpr std::size_t kMaxSupportedOrder = 65536;
inline constexpr std::size_t kDefaultMaxOrder = 4096;
/// Orders up to this bound are validated over every triple.
inline constexpr std::size_t kExhaustiveValidationLimit = 64;

struct Limits {
  std::size_t max_order = kDefaultMaxOrder;
};

enum class ConstructionKind {
  Raw,
  Zmod,
  Galois,
  Matrix,
  Triangular,
  Product,
  Quotient,
  Corner,
  TrivialExtension,
  GroupRing,
  SkewPoly,
  Subring,
};

/// How a ring was built. Checks that reason about a construction (group-ring
/// augmentation, product factors, the base of a matrix ring) read this.
struct Construction {
  ConstructionKind kind = ConstructionKind::Raw;
  /// Product: the factors. Every other derived kind: the single base ring.
  std::vector<RingPtr> bases;
  std::shared_ptr<const GroupTable> group;
  /// Zmod: n. Galois: q. Matrix/Triangular/SkewPoly: k.
  std::size_t param = 0;
  /// Quotient: projection base -> this. Corner/Subring: embedding this -> base.
  /// SkewPoly: the endomorphism of the base.
  std::vector<Elem> map;
  bool alpha_is_identity = true;
};

/// Unvalidated operation tables as produced by a builder or read from input.
struct RawTables {
  std::size_t order = 0;
  std::vector<Elem> add;
  std::vector<Elem> mul;
  Elem zero = 0;
  Elem one = 0;
};

enum class Axiom {
  TableShape,
  NotAbelianGroup,
  NoIdentity,
  NonAssociative,
  NonDistributive,
  ZeroRing,
};

struct AxiomViolation {
  Axiom axiom;
  Elem a = 0, b = 0, c = 0;
  std::string detail;
};

std::string to_string(const AxiomViolation& v);

/// Thrown by validate_ring; carries the first witness for each violated axiom.
class InvalidRing : public RingError {
 public:
  explicit InvalidRing(std::vector<AxiomViolation> violations);
  const std::vector<AxiomViolation>& violations() const { return violations_; }
  bool has(Axiom a) const;

 private:
  std::vector<AxiomViolation> violations_;
};

struct PowerOrbit {
  /// a^1, a^2, ... up to (not including) the first repeated power.
  std::vector<Elem> powers;
  /// Index into `powers` where the cycle re-enters: a^(powers.size()+1) == powers[cycle_start].
  std::size_t cycle_start = 0;
};

/// A finite unital ring given by dense addition and multiplication tables.
/// Immutable after construction; element identity is the table index.
class TableRing {
 public:
  std::size_t order() const { return order_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }

  Elem add(Elem a, Elem b) const {
    assert(a < order_ && b < order_);
    return add_[static_cast<std::size_t>(a) * order_ + b];
  }
  Elem mul(Elem a, Elem b) const {
    assert(a < order_ && b < order_);
    return mul_[static_cast<std::size_t>(a) * order_ + b];
  }
  Elem neg(Elem a) const {
    assert(a < order_);
    return neg_[a];
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  /// Repeated squaring; a^0 = 1.
  Elem pow(Elem a, std::uint64_t k) const;
  PowerOrbit power_orbit(Elem a) const;
  /// The image of the integer m under Z -> R.
  Elem integer(long long m) const;

  const std::string& label(Elem a) const { return labels_.at(a); }
  const Construction& construction() const { return construction_; }
  bool sampled_validation() const { return sampled_; }

  std::uint64_t add_checksum() const;
  std::uint64_t mul_checksum() const;
  bool same_tables(const TableRing& other) const;

  /// Throws IndexOutOfRange unless a < order().
  Elem checked(std::size_t a) const;

 private:
  friend RingPtr validate_ring(RawTables, std::vector<std::string>, Construction);

  std::size_t order_ = 0;
  Elem zero_ = 0;
  Elem one_ = 0;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::string> labels_;
  Construction construction_;
  bool sampled_ = false;
};

/// Checks the ring axioms and returns an immutable ring, or throws InvalidRing.
/// Orders up to kExhaustiveValidationLimit are checked over all triples; larger
/// orders check identities and inverses fully and a fixed-seed sample of triples.
RingPtr validate_ring(RawTables tables, std::vector<std::string> labels = {}, Construction construction = {});

// Bounds-checked element arithmetic.
Elem elem_add(const TableRing& r, Elem a, Elem b);
Elem elem_mul(const TableRing& r, Elem a, Elem b);
Elem elem_neg(const TableRing& r, Elem a);
Elem elem_sub(const TableRing& r, Elem a, Elem b);
Elem elem_pow(const TableRing& r, Elem a, std::uint64_t k);

/// FNV-1a, 64-bit.
std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t v);

}  // namespace ringlab
