#include "hetcache/grouping.hpp"

#include <algorithm>
#include <stdexcept>

namespace hetcache {

Grouping group_users(const SystemConfig& config, const Demand& demand) {
  auto errors = validate_demand(config, demand);
  if (!errors.empty()) throw std::invalid_argument("group_users: " + errors.front());

  Grouping g;
  g.groups.assign(config.num_files, {});
  for (int k = 0; k < config.num_users; ++k)
    g.groups[demand.requests[k]].push_back(k);

  for (auto& group : g.groups) {
    std::stable_sort(group.begin(), group.end(), [&](int a, int b) {
      return config.cache_capacities[a] < config.cache_capacities[b];
    });
  }

  g.boundaries.assign(config.num_files + 1, 0);
  for (int i = 0; i < config.num_files; ++i) {
    g.boundaries[i + 1] = g.boundaries[i] + static_cast<int>(g.groups[i].size());
    for (int user : g.groups[i]) {
      g.relabel.push_back(user);
      g.relabeled_demand.push_back(i);
    }
  }
  return g;
}

namespace {

// Users ordered by (capacity, index) ascending.
std::vector<int> users_by_capacity(const SystemConfig& config) {
  std::vector<int> order(config.num_users);
  for (int k = 0; k < config.num_users; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return config.cache_capacities[a] < config.cache_capacities[b];
  });
  return order;
}

}  // namespace

Demand worst_case_demand(const SystemConfig& config) {
  const int N = config.num_files;
  const int K = config.num_users;
  const auto order = users_by_capacity(config);

  Demand d;
  d.requests.assign(K, 0);
  if (N >= K) {
    for (int pos = 0; pos < K; ++pos) d.requests[order[pos]] = pos;
    return d;
  }
  for (int pos = 0; pos < K; ++pos) d.requests[order[pos]] = pos % N;
  return d;
}

DemandEnumerator::DemandEnumerator(const SystemConfig& config, std::uint64_t cap)
    : num_files_(config.num_files), num_users_(config.num_users) {
  std::uint64_t total = 1;
  for (int k = 0; k < num_users_; ++k) {
    if (total > cap / static_cast<std::uint64_t>(num_files_))
      throw std::length_error("demand enumeration exceeds cap");
    total *= static_cast<std::uint64_t>(num_files_);
  }
  if (total > cap) throw std::length_error("demand enumeration exceeds cap");
  total_ = total;
  current_.assign(num_users_, 0);
}

std::optional<Demand> DemandEnumerator::next() {
  if (emitted_ == total_) return std::nullopt;
  Demand d;
  d.requests = current_;
  ++emitted_;
  for (int k = num_users_ - 1; k >= 0; --k) {
    if (++current_[k] < num_files_) break;
    current_[k] = 0;
  }
  return d;
}

}  // namespace hetcache
