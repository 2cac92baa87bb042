#pragma once

// Builders that compile standard ring constructions to validated table rings.
//
// Element encodings (all digit encodings are little-endian: the first stored
// coordinate is the least significant digit):
//   z(n)          residue r has index r.
//   gf(q)         q = p^m; a_0 + a_1 a + ... has index a_0 + a_1 p + ...,
//                 modulus x^2+x+1 (q=4), x^3+x+1 (q=8), x^2+2x+2 (q=9).
//   m(k,R)        entry (i,j) is digit i*k+j in base |R|.
//   t(k,R)        stored entries (i<=j) in row-major order as base-|R| digits.
//   prod(R1,...)  mixed radix, R1 least significant.
//   quot(R,I)     the coset of x is numbered by rank of its smallest member.
//   corner(R,e)   elements exe ordered by their index in R.
//   triv(R)       (r,m) has index r*|R| + m.
//   group(R,G)    f : G -> R has index sum f(g) |R|^g over group indices g.
//   skew(R,a,k)   a_0 + a_1 x + ... + a_{k-1} x^{k-1} has digits a_0, a_1, ...

#include "ringlab/group.hpp"
#include "ringlab/table_ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ringlab {

/// A validated ring endomorphism, stored as its image table.
struct Endomorphism {
  RingPtr ring;
  std::vector<Elem> map;
  bool is_identity() const;
};

Endomorphism validate_endomorphism(RingPtr ring, std::vector<Elem> map);
Endomorphism identity_endomorphism(RingPtr ring);
/// x -> x^p on a Galois field of characteristic p.
Endomorphism frobenius(RingPtr field);
/// `order n` then n lines `i -> j`.
Endomorphism read_endomorphism_file(RingPtr ring, const std::string& path);

RingPtr build_zmod(std::size_t n, const Limits& limits = {});
/// q in {2, 3, 4, 5, 7, 8, 9}.
RingPtr build_gf(std::size_t q, const Limits& limits = {});
RingPtr build_matrix(const RingPtr& base, std::size_t k, const Limits& limits = {});
RingPtr build_triangular(const RingPtr& base, std::size_t k, const Limits& limits = {});
RingPtr build_product(const std::vector<RingPtr>& factors, const Limits& limits = {});
RingPtr build_trivial_extension(const RingPtr& base, const Limits& limits = {});
RingPtr build_group_ring(const RingPtr& base, const GroupPtr& group, const Limits& limits = {});
/// R[x; alpha] / (x^k), with x r = alpha(r) x.
RingPtr build_truncated_skew_poly(const RingPtr& base, const Endomorphism& alpha, std::size_t k,
                                  const Limits& limits = {});

enum class Side { Left, Right, TwoSided };

/// Smallest additive subgroup containing `gens` that is closed under the
/// requested multiplications.
ElemSet ideal_closure(const TableRing& r, const ElemSet& gens, Side side);

struct IdealViolation {
  Elem a = 0, b = 0;
  std::string reason;
};
/// nullopt when `s` is an ideal of the given side, else a witness pair.
std::optional<IdealViolation> ideal_violation(const TableRing& r, const ElemSet& s, Side side);

/// R/I. The projection R -> R/I is construction().map of the result.
RingPtr build_quotient(const RingPtr& base, const ElemSet& ideal);
/// eRe with identity e. The embedding eRe -> R is construction().map.
RingPtr build_corner(const RingPtr& base, Elem e);
/// The subring on a set closed under +, -, * and containing 0 and 1.
RingPtr build_subring(const RingPtr& base, const ElemSet& members);

struct CompatibilityWitness {
  Elem a = 0, b = 0;
};
/// nullopt when ab = 0 <=> a alpha(b) = 0 for all a, b.
std::optional<CompatibilityWitness> check_alpha_compatible(const TableRing& r, const Endomorphism& alpha);

/// Index of the k x k matrix with the given entries (row-major) in build_matrix's encoding.
Elem matrix_index(const TableRing& base, std::size_t k, const std::vector<Elem>& entries);
/// Index of the matrix unit E_ij (0-based) in build_matrix's encoding.
Elem matrix_unit(const TableRing& base, std::size_t k, std::size_t i, std::size_t j);
/// Index of r*1_G in a group ring.
Elem group_ring_scalar(const TableRing& group_ring, Elem r);
/// Index of 1_R * g in a group ring.
Elem group_ring_basis(const TableRing& group_ring, Elem g);

}  // namespace ringlab
