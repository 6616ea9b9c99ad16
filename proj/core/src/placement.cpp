#include "hetcache/placement.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hetcache/rng.hpp"

namespace hetcache {

namespace {
constexpr std::uint64_t kPlacementStream = 0x91ace;
}

std::int64_t cached_bits_per_file(const SystemConfig& config, int user) {
  Rational q = config.cache_capacities[user] * config.file_size_bits / config.num_files;
  return round_half_up(q);
}

Placement place_random(const SystemConfig& config, std::uint64_t seed) {
  const auto F = static_cast<std::uint32_t>(config.file_size_bits);
  Placement placement;
  placement.cached.resize(config.num_users);

  std::vector<std::uint32_t> pool(F);
  for (int k = 0; k < config.num_users; ++k) {
    placement.cached[k].resize(config.num_files);
    const auto want = static_cast<std::uint32_t>(cached_bits_per_file(config, k));
    for (int i = 0; i < config.num_files; ++i) {
      auto& slot = placement.cached[k][i];
      if (want == 0) continue;
      if (want == F) {
        slot.resize(F);
        std::iota(slot.begin(), slot.end(), 0u);
        continue;
      }
      // Partial Fisher-Yates: the first `want` entries end up a uniform
      // sample without replacement.
      std::mt19937_64 rng(derive_seed(seed, kPlacementStream,
                                      static_cast<std::uint64_t>(k) << 32 | static_cast<std::uint32_t>(i)));
      std::iota(pool.begin(), pool.end(), 0u);
      for (std::uint32_t j = 0; j < want; ++j) {
        const auto pick = j + static_cast<std::uint32_t>(bounded(rng, F - j));
        std::swap(pool[j], pool[pick]);
      }
      slot.assign(pool.begin(), pool.begin() + want);
      std::sort(slot.begin(), slot.end());
    }
  }
  return placement;
}

std::span<const std::uint32_t> SubfilePartition::bits(int file, std::uint32_t mask) const {
  const auto& m = by_file[file];
  auto it = m.find(mask);
  if (it == m.end()) return {};
  return it->second;
}

SubfilePartition partition_subfiles(const SystemConfig& config, const Placement& placement) {
  if (config.num_users > 31)
    throw std::invalid_argument("bit-level partitioning supports at most 31 users");
  const auto F = static_cast<std::size_t>(config.file_size_bits);

  SubfilePartition partition;
  partition.by_file.resize(config.num_files);

  std::vector<std::uint32_t> owner(F);
  for (int i = 0; i < config.num_files; ++i) {
    std::fill(owner.begin(), owner.end(), 0u);
    for (int k = 0; k < config.num_users; ++k)
      for (std::uint32_t b : placement.positions(k, i)) owner[b] |= 1u << k;

    auto& subfiles = partition.by_file[i];
    subfiles[0];  // the uncached subfile always exists, possibly empty
    for (std::uint32_t b = 0; b < F; ++b)
      subfiles[owner[b]].push_back(b);
  }
  return partition;
}

Rational expected_subfile_fraction(const SystemConfig& config, std::uint32_t mask) {
  Rational fraction(1);
  for (int k = 0; k < config.num_users; ++k) {
    Rational p = config.cache_capacities[k] / config.num_files;
    fraction *= (mask >> k) & 1u ? p : Rational(1) - p;
  }
  return fraction;
}

std::string dump_placement(const Placement& placement) {
  std::string out;
  for (std::size_t k = 0; k < placement.cached.size(); ++k) {
    for (std::size_t i = 0; i < placement.cached[k].size(); ++i) {
      out += "user " + std::to_string(k + 1) + " file " + std::to_string(i + 1) + ": ";
      const auto& bits = placement.cached[k][i];
      if (bits.empty()) {
        out += "-\n";
        continue;
      }
      std::size_t run = 0;
      bool first = true;
      while (run < bits.size()) {
        std::size_t end = run;
        while (end + 1 < bits.size() && bits[end + 1] == bits[end] + 1) ++end;
        if (!first) out += ',';
        out += std::to_string(bits[run] + 1);
        if (end > run) out += "-" + std::to_string(bits[end] + 1);
        first = false;
        run = end + 1;
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace hetcache
