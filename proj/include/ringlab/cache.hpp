#pragma once

// Persistent store of invariant bundles keyed by canonical ring text.
//
// One file per ring, named <canonical_hash>.v<format>.bin, little-endian:
//   "RLBC" u32 format | u32 len, canonical text | u32 order
//   u64 add checksum | u64 mul checksum
//   7 x (u32 block count, u64 blocks) for U, Id, Nil, Z, J, J#, Nil*
//   order x u32 inverse (0xffffffff off the units)
// Anything unexpected, including a checksum or text mismatch, is a miss.

#include "ringlab/subsets.hpp"

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

namespace ringlab {

class Cache {
 public:
  static constexpr std::uint32_t kFormatVersion = 1;

  explicit Cache(std::filesystem::path dir);
  /// RINGLAB_CACHE, else $XDG_CACHE_HOME/ringlab, else ~/.cache/ringlab.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<InvariantBundle> load(const std::string& canonical_text, const TableRing& ring) const;
  /// Best effort: returns false if the entry could not be written.
  bool store(const std::string& canonical_text, const TableRing& ring, const InvariantBundle& bundle);

  struct Stats {
    std::size_t entries = 0;
    std::uintmax_t bytes = 0;
  };
  /// Throws RingError(Io).
  Stats stats() const;
  /// Removes every entry; returns how many. Throws RingError(Io).
  std::size_t clear();

 private:
  std::filesystem::path entry_path(const std::string& canonical_text) const;

  std::filesystem::path dir_;
  mutable std::mutex mutex_;
};

}  // namespace ringlab
