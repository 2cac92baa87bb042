#pragma once

// Construction DSL.
//
//   ring   := "z(" INT ")" | "gf(" INT ")"
//           | "m(" INT "," ring ")" | "t(" INT "," ring ")"
//           | "prod(" ring {"," ring} ")"
//           | "quot(" ring ",[" INT {"," INT} "])"
//           | "corner(" ring "," INT ")"
//           | "triv(" ring ")"
//           | "group(" ring "," grp ")"
//           | "poly(" ring "," INT ")"
//           | "skew(" ring "," endo "," INT ")"
//   grp    := gatom {"x" gatom}
//   gatom  := "c(" INT ")" | "d(" INT ")" | "q8" | "s(" INT ")" | "@" FILE
//   endo   := "id" | "frob" | "@" FILE
//
// Keywords are case-insensitive and whitespace between tokens is ignored.
// The canonical form is lowercase with no whitespace, except one space
// after a group file name that is followed by "x". FILE runs up to ',', ')'
// or whitespace, and file names keep their case.

#include "ringlab/constructions.hpp"
#include "ringlab/group.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ringlab {

inline constexpr std::size_t kMaxExprLength = 4096;

enum class GroupKind { Cyclic, Dihedral, Quaternion, Symmetric, File, Product };

struct GroupExpr {
  GroupKind kind = GroupKind::Cyclic;
  std::size_t n = 0;
  std::string file;
  std::vector<GroupExpr> factors;  // Product only, each an atom

  bool operator==(const GroupExpr&) const = default;
};

enum class EndoKind { Identity, Frobenius, File };

struct EndoExpr {
  EndoKind kind = EndoKind::Identity;
  std::string file;

  bool operator==(const EndoExpr&) const = default;
};

enum class RingKind { Zmod, Galois, Matrix, Triangular, Product, Quotient, Corner, Trivial, GroupRing, Poly, Skew };

struct RingExpr {
  RingKind kind = RingKind::Zmod;
  /// z: n, gf: q, m/t/poly/skew: k, corner: element index.
  std::size_t n = 0;
  /// quot: generator indices.
  std::vector<std::size_t> indices;
  std::vector<RingExpr> children;
  std::optional<GroupExpr> group;
  EndoExpr endo;

  bool operator==(const RingExpr&) const = default;
};

/// Throws SyntaxError (offset + expected tokens) or RangeError.
RingExpr parse(std::string_view text);
GroupExpr parse_group(std::string_view text);

std::string print_canonical(const RingExpr& expr);
std::string print_canonical(const GroupExpr& expr);

/// Stable digest of the canonical text: FNV-1a 64-bit, lowercase hex.
std::string canonical_hash(const RingExpr& expr);

struct CompileOptions {
  Limits limits;
};

/// Builds the ring. Element references (quot generators, corner idempotent)
/// are checked against the compiled child; bad ones raise BadElementRef.
RingPtr compile(const RingExpr& expr, const CompileOptions& options = {});
GroupPtr build_group(const GroupExpr& expr);

}  // namespace ringlab
