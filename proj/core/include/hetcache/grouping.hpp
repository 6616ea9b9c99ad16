#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hetcache/model.hpp"

namespace hetcache {

// Users relabeled into demand groups: group i holds the users requesting
// file i, ordered by non-decreasing cache capacity (ties by original index).
// New labels run over group 1's users first, then group 2's, and so on, so
// relabeled demands are the canonical non-decreasing staircase.
struct Grouping {
  std::vector<std::vector<int>> groups;  // per file, original user indices
  std::vector<int> boundaries;           // S_0..S_N, cumulative group sizes
  std::vector<int> relabel;              // new label -> original user
  std::vector<int> relabeled_demand;     // new label -> requested file

  int group_size(int file) const { return boundaries[file + 1] - boundaries[file]; }
  int group_begin(int file) const { return boundaries[file]; }   // first new label
  int group_end(int file) const { return boundaries[file + 1]; } // one past last
};

Grouping group_users(const SystemConfig& config, const Demand& demand);

// A demand that maximizes the delivery rate. For N < K the N users with the
// smallest caches get distinct files (ties broken by lower index), and the
// remaining users are assigned files round-robin in ascending-capacity
// order. For N >= K every user gets a distinct file.
Demand worst_case_demand(const SystemConfig& config);

// Streams all N^K demand vectors exactly once (odometer order).
class DemandEnumerator {
 public:
  explicit DemandEnumerator(const SystemConfig& config, std::uint64_t cap = 1'000'000);

  std::uint64_t total() const { return total_; }
  std::optional<Demand> next();

 private:
  int num_files_;
  int num_users_;
  std::uint64_t total_;
  std::uint64_t emitted_ = 0;
  std::vector<int> current_;
};

}  // namespace hetcache
