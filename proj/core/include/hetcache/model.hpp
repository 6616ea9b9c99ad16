#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hetcache/bitvec.hpp"
#include "hetcache/rational.hpp"

namespace hetcache {

// A problem instance: N files of F bits each, K users, per-user cache
// capacity in units of files. Users and files are 0-based internally and
// 1-based in every external interface.
struct SystemConfig {
  int num_files = 0;                        // N
  std::int64_t file_size_bits = 0;          // F
  int num_users = 0;                        // K
  std::vector<Rational> cache_capacities;   // size K, each in [0, N]

  bool operator==(const SystemConfig&) const = default;
};

// Every violated constraint, one message each; empty means valid.
std::vector<std::string> validate_config(const SystemConfig& config);

// Returns the config unchanged or throws std::invalid_argument listing all
// violations.
SystemConfig require_valid(SystemConfig config);

// Requested file per user, 0-based.
struct Demand {
  std::vector<int> requests;

  bool operator==(const Demand&) const = default;
};

std::vector<std::string> validate_demand(const SystemConfig& config, const Demand& demand);

// "1,2,1,2" with 1-based file indices.
Demand parse_demand(std::string_view text);
std::string format_demand(const Demand& demand);

// Identifies the bits of one file cached by exactly one set of users.
// `cached_by` is a bitmask over users (bit k set = user k); 0 is the
// uncached part of the file.
struct SubfileLabel {
  int file = 0;
  std::uint32_t cached_by = 0;

  auto operator<=>(const SubfileLabel&) const = default;
};

std::string format_label(const SubfileLabel& label);  // "2:{1,3}", 1-based

struct Library {
  std::vector<BitVec> files;
};

// N pseudo-random F-bit files; a pure function of (config, seed).
Library generate_library(const SystemConfig& config, std::uint64_t seed);

// Plain-text key/value document: N=, F=, K=, mu=.
std::string serialize_config(const SystemConfig& config);
SystemConfig parse_config(std::string_view text);

}  // namespace hetcache
