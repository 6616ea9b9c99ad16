#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hetcache/model.hpp"

namespace hetcache {

// Realized cache contents: which bit positions of each file every user holds.
// Placement is public knowledge shared by server and decoders; only the bit
// values inside a cache are private to a user.
struct Placement {
  // cached[user][file] = sorted bit positions, 0-based, exactly
  // round(M_k*F/N) of them.
  std::vector<std::vector<std::vector<std::uint32_t>>> cached;

  std::span<const std::uint32_t> positions(int user, int file) const {
    return cached[user][file];
  }
};

// Bits of each file a user must cache per file: round(M_k*F/N), halves up.
std::int64_t cached_bits_per_file(const SystemConfig& config, int user);

// Each user caches a uniformly random exact-count subset of every file's
// bits, independently across (user, file). Sub-streams are derived from the
// master seed per (user, file), so the result does not depend on iteration
// order.
Placement place_random(const SystemConfig& config, std::uint64_t seed);

// For every file, the partition of [0:F) by the exact set of users caching
// each bit. Only sets that own at least one bit are materialized, plus the
// uncached set (mask 0) which is always present.
struct SubfilePartition {
  // by_file[file]: user mask -> sorted bit positions.
  std::vector<std::map<std::uint32_t, std::vector<std::uint32_t>>> by_file;

  std::span<const std::uint32_t> bits(int file, std::uint32_t mask) const;
  std::size_t size_of(int file, std::uint32_t mask) const { return bits(file, mask).size(); }
};

SubfilePartition partition_subfiles(const SystemConfig& config, const Placement& placement);

// Expected fraction of a file exclusively cached by the users in `mask`:
// prod_{k in mask} M_k/N * prod_{k not in mask} (1 - M_k/N).
Rational expected_subfile_fraction(const SystemConfig& config, std::uint32_t mask);

// Debug dump: one line per (user, file) with the cached positions as 1-based
// ranges, e.g. "user 1 file 2: 1-5,7,9-12".
std::string dump_placement(const Placement& placement);

}  // namespace hetcache
