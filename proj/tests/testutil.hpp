#pragma once

#include <random>
#include <vector>

#include "hetcache/model.hpp"
#include "hetcache/rng.hpp"

namespace hetcache::testutil {

// Capacities as multiples of N/denominator, so placement sizes divide
// power-of-two file sizes and rounding never engages.
inline SystemConfig random_config(std::mt19937_64& rng, int num_files, int num_users,
                                  std::int64_t file_size_bits, int denominator = 16) {
  SystemConfig config;
  config.num_files = num_files;
  config.num_users = num_users;
  config.file_size_bits = file_size_bits;
  for (int k = 0; k < num_users; ++k)
    config.cache_capacities.push_back(
        make_rational(num_files, denominator) *
        static_cast<long>(bounded(rng, static_cast<std::uint64_t>(denominator) + 1)));
  return config;
}

inline SystemConfig example1_config(std::int64_t file_size_bits) {
  SystemConfig config;
  config.num_files = 2;
  config.num_users = 4;
  config.file_size_bits = file_size_bits;
  config.cache_capacities = {make_rational(1, 8), make_rational(1, 4),
                             make_rational(1, 2), Rational(1)};
  return config;
}

}  // namespace hetcache::testutil
