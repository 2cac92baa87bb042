#pragma once

#include "ringlab/elem_set.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ringlab {

/// Largest group accepted by the catalogue builders.
inline constexpr std::size_t kMaxGroupOrder = 64;

/// A finite group as a Cayley table over indices 0..order-1.
struct GroupTable {
  std::size_t order = 0;
  std::vector<Elem> op;  // row-major, op[a*order+b] = a*b
  Elem identity = 0;
  std::vector<std::string> names;
  std::vector<Elem> inverse;
  std::vector<std::size_t> element_order;
  std::size_t exponent = 1;

  Elem mul(Elem a, Elem b) const { return op[static_cast<std::size_t>(a) * order + b]; }
  bool is_2group() const;
  /// p when order = p^k with k >= 1, 1 for the trivial group, 0 otherwise.
  std::size_t prime_base() const;
  /// Every element order divides a power of p.
  bool is_p_group(std::size_t p) const;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Checks group axioms, fills inverses, element orders and exponent.
/// Throws RingError(InvalidGroup) with a witness on failure.
GroupPtr validate_group(std::size_t order, std::vector<Elem> op, Elem identity, std::vector<std::string> names = {});

/// C(n): element i is g^i.
GroupPtr cyclic_group(std::size_t n);
/// D(n) of order 2n: index i + n*j is r^i s^j with s r s = r^-1.
GroupPtr dihedral_group(std::size_t n);
/// Q8 in the order 1, i, j, k, -1, -i, -j, -k.
GroupPtr quaternion_group();
/// S(n), n <= 4: permutations of {1..n} in lexicographic one-line order,
/// product (st)(x) = s(t(x)).
GroupPtr symmetric_group(std::size_t n);
/// Mixed radix, first factor least significant.
GroupPtr direct_product(const std::vector<GroupPtr>& factors);
/// `order n`, `identity i`, then n rows of n indices.
GroupPtr read_group_file(const std::string& path);

}  // namespace ringlab
