#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace ringlab {

using Elem = std::uint32_t;

/// A subset of the elements {0, ..., order-1} of one ring.
///
/// Two sets compare equal only when they live in a universe of the same size
/// and hold the same members; mixing sets of different rings in set algebra
/// throws std::invalid_argument.
class ElemSet {
 public:
  using Block = std::uint64_t;

  ElemSet() = default;
  explicit ElemSet(std::size_t universe) : bits_(universe) {}
  ElemSet(std::size_t universe, std::initializer_list<Elem> members) : bits_(universe) {
    for (Elem e : members) insert(e);
  }

  static ElemSet full(std::size_t universe) {
    ElemSet s(universe);
    s.bits_.set();
    return s;
  }

  static ElemSet from_elements(std::size_t universe, std::span<const Elem> members) {
    ElemSet s(universe);
    for (Elem e : members) s.insert(e);
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(Elem e) const { return e < bits_.size() && bits_.test(e); }

  void insert(Elem e) {
    if (e >= bits_.size()) throw std::out_of_range("ElemSet: element outside universe");
    bits_.set(e);
  }
  void erase(Elem e) {
    if (e < bits_.size()) bits_.reset(e);
  }

  bool subset_of(const ElemSet& other) const {
    same_universe(other);
    return bits_.is_subset_of(other.bits_);
  }
  bool intersects(const ElemSet& other) const {
    same_universe(other);
    return bits_.intersects(other.bits_);
  }

  ElemSet& operator|=(const ElemSet& o) { same_universe(o); bits_ |= o.bits_; return *this; }
  ElemSet& operator&=(const ElemSet& o) { same_universe(o); bits_ &= o.bits_; return *this; }
  ElemSet& operator-=(const ElemSet& o) { same_universe(o); bits_ -= o.bits_; return *this; }

  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }
  friend ElemSet operator-(ElemSet a, const ElemSet& b) { return a -= b; }

  ElemSet complement() const {
    ElemSet s = *this;
    s.bits_.flip();
    return s;
  }

  friend bool operator==(const ElemSet& a, const ElemSet& b) { return a.bits_ == b.bits_; }

  /// Smallest member, or universe() when empty.
  Elem first() const {
    auto p = bits_.find_first();
    return p == boost::dynamic_bitset<Block>::npos ? static_cast<Elem>(bits_.size()) : static_cast<Elem>(p);
  }

  template <typename F>
  void for_each(F&& f) const {
    for (auto p = bits_.find_first(); p != boost::dynamic_bitset<Block>::npos; p = bits_.find_next(p)) {
      f(static_cast<Elem>(p));
    }
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(count());
    for_each([&](Elem e) { out.push_back(e); });
    return out;
  }

  std::vector<Block> blocks() const {
    std::vector<Block> out(bits_.num_blocks());
    boost::to_block_range(bits_, out.begin());
    return out;
  }

  static ElemSet from_blocks(std::size_t universe, std::span<const Block> blocks) {
    ElemSet s;
    s.bits_.append(blocks.begin(), blocks.end());
    s.bits_.resize(universe);
    return s;
  }

 private:
  void same_universe(const ElemSet& o) const {
    if (o.bits_.size() != bits_.size()) throw std::invalid_argument("ElemSet: sets belong to different rings");
  }

  boost::dynamic_bitset<Block> bits_;
};

}  // namespace ringlab
