#pragma once

#include <span>
#include <vector>

#include "hetcache/grouping.hpp"
#include "hetcache/model.hpp"
#include "hetcache/rational.hpp"

namespace hetcache {

// Rate saved by coalescing the uncached pieces of a requested file into one
// transmission per group instead of one per user: (K-N) * prod(1 - M_l/N).
// Capacities must be ascending; requires N < K.
Rational delta_r1(std::span<const Rational> mu_ascending, int num_files);

// Rate saved on singleton pieces by the within/cross-group chains:
// [ sum_{k=1}^{K-N} (k-1) M_{k+N} / (N - M_{k+N}) ] * prod(1 - M_l/N).
// A term with M_{k+N} = N contributes 0 (the global product vanishes).
// Capacities must be ascending; requires N < K.
Rational delta_r2(std::span<const Rational> mu_ascending, int num_files);

// Rate of the reference group-based scheme: sum_{i=1}^{K} prod_{j<=i}
// (1 - M_j/N). Sorts capacities ascending internally.
Rational rate_baseline(std::vector<Rational> mu, int num_files);

struct ProposedRate {
  Rational coded_branch;   // baseline - delta_r1 - delta_r2  (N < K)
  Rational random_branch;  // sum over the min(N,K) smallest of (1 - M_i/N)
  Rational value;          // the achievable rate
  bool random_wins = false;
};

// Achievable delivery rate of the combined scheme. For N < K this is the
// min of the coded and random branches; for N >= K the coded procedure is
// always used and the rate equals the baseline. Sorts internally.
ProposedRate rate_proposed(std::vector<Rational> mu, int num_files);

// Standard cut-set lower bound: max over s in [1:min(N,K)] of
// s - (sum of the s smallest capacities) / floor(N/s), floored at 0.
Rational cut_set_bound(std::vector<Rational> mu, int num_files);

struct RateReport {
  Rational coded_branch;
  Rational random_branch;
  Rational proposed;   // R_c
  Rational baseline;   // R_b
  Rational delta1;     // 0 when N >= K
  Rational delta2;     // 0 when N >= K
  Rational cut_set;
  bool random_wins = false;
};

RateReport analyze(const std::vector<Rational>& mu, int num_files);

struct EnumeratedRate {
  Rational coded_total;   // expected-fraction length of the coded ledger / F
  Rational random_total;  // sum over non-empty groups of max missing fraction
  Rational value;         // min of the two
};

// Deterministic bridge between the bit-level ledger and the closed forms:
// walks the coded schedule with subfile lengths replaced by their expected
// fractions (segment length = max over sources) and prices random delivery
// at its expected row count. Exact rational output. The 2^K subset walk is
// refused above `user_cap` users.
EnumeratedRate enumerate_expected_rate(const SystemConfig& config, const Demand& demand,
                                       int user_cap = 20);

// The headline value of the enumeration: min(coded, random).
Rational expected_rate_enumeration(const SystemConfig& config, const Demand& demand,
                                   int user_cap = 20);

}  // namespace hetcache
