#include "hetcache/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "hetcache/delivery.hpp"

namespace hetcache {

namespace {

Rational survival_product(std::span<const Rational> mu, int num_files) {
  Rational p(1);
  for (const auto& m : mu) p *= Rational(1) - m / num_files;
  return p;
}

void require_fewer_files_than_users(std::span<const Rational> mu, int num_files,
                                    const char* op) {
  if (num_files >= static_cast<int>(mu.size()))
    throw std::invalid_argument(std::string(op) + " requires N < K");
}

}  // namespace

Rational delta_r1(std::span<const Rational> mu_ascending, int num_files) {
  require_fewer_files_than_users(mu_ascending, num_files, "delta_r1");
  const int K = static_cast<int>(mu_ascending.size());
  return Rational(K - num_files) * survival_product(mu_ascending, num_files);
}

Rational delta_r2(std::span<const Rational> mu_ascending, int num_files) {
  require_fewer_files_than_users(mu_ascending, num_files, "delta_r2");
  const int K = static_cast<int>(mu_ascending.size());
  const Rational product = survival_product(mu_ascending, num_files);

  Rational total(0);
  Rational bracket(0);
  for (int k = 1; k <= K - num_files; ++k) {
    const int idx = k + num_files - 1;
    const Rational& m = mu_ascending[idx];
    if (m == num_files) {
      // The k-th term's (N - M) denominator cancels against the matching
      // factor of the global product; at M = N that leaves
      // (k-1) * (M/N) * prod_{l != k+N} (1 - M_l/N).
      Rational partial = Rational(k - 1) * m / num_files;
      for (int l = 0; l < K; ++l)
        if (l != idx) partial *= Rational(1) - mu_ascending[l] / num_files;
      total += partial;
    } else {
      bracket += Rational(k - 1) * m / (Rational(num_files) - m);
    }
  }
  return total + bracket * product;
}

Rational rate_baseline(std::vector<Rational> mu, int num_files) {
  std::sort(mu.begin(), mu.end());
  Rational total(0);
  Rational prefix(1);
  for (const auto& m : mu) {
    prefix *= Rational(1) - m / num_files;
    total += prefix;
  }
  return total;
}

ProposedRate rate_proposed(std::vector<Rational> mu, int num_files) {
  std::sort(mu.begin(), mu.end());
  const int K = static_cast<int>(mu.size());

  ProposedRate out;
  out.random_branch = Rational(0);
  for (int i = 0; i < std::min(num_files, K); ++i)
    out.random_branch += Rational(1) - mu[i] / num_files;

  const Rational baseline = rate_baseline(mu, num_files);
  if (num_files >= K) {
    out.coded_branch = baseline;
    out.value = baseline;
    out.random_wins = false;
    return out;
  }

  out.coded_branch = baseline - delta_r1(mu, num_files) - delta_r2(mu, num_files);
  out.random_wins = out.random_branch < out.coded_branch;
  out.value = out.random_wins ? out.random_branch : out.coded_branch;
  return out;
}

Rational cut_set_bound(std::vector<Rational> mu, int num_files) {
  std::sort(mu.begin(), mu.end());
  const int K = static_cast<int>(mu.size());
  Rational best(0);
  Rational smallest_sum(0);
  for (int s = 1; s <= std::min(num_files, K); ++s) {
    smallest_sum += mu[s - 1];
    const int rounds = num_files / s;
    Rational candidate = Rational(s) - smallest_sum / rounds;
    if (candidate > best) best = candidate;
  }
  return best;
}

RateReport analyze(const std::vector<Rational>& mu, int num_files) {
  RateReport report;
  const int K = static_cast<int>(mu.size());

  std::vector<Rational> ascending = mu;
  std::sort(ascending.begin(), ascending.end());

  const ProposedRate proposed = rate_proposed(ascending, num_files);
  report.coded_branch = proposed.coded_branch;
  report.random_branch = proposed.random_branch;
  report.proposed = proposed.value;
  report.random_wins = proposed.random_wins;
  report.baseline = rate_baseline(ascending, num_files);
  if (num_files < K) {
    report.delta1 = delta_r1(ascending, num_files);
    report.delta2 = delta_r2(ascending, num_files);
  } else {
    report.delta1 = Rational(0);
    report.delta2 = Rational(0);
  }
  report.cut_set = cut_set_bound(ascending, num_files);
  return report;
}

EnumeratedRate enumerate_expected_rate(const SystemConfig& config, const Demand& demand,
                                       int user_cap) {
  const int K = config.num_users;
  if (K > user_cap)
    throw std::length_error("expected-rate enumeration capped at " +
                            std::to_string(user_cap) + " users");

  // Expected fraction of every subfile, indexed by original-user mask.
  std::vector<Rational> fraction(std::size_t{1} << K);
  for (std::uint32_t mask = 0; mask < fraction.size(); ++mask)
    fraction[mask] = expected_subfile_fraction(config, mask);

  const Grouping grouping = group_users(config, demand);

  EnumeratedRate out;
  out.coded_total = Rational(0);
  for_each_coded_segment(grouping, K,
                         [&](PartTag, std::span<const SubfileLabel> sources) {
                           Rational longest(0);
                           for (const auto& label : sources)
                             longest = std::max(longest, fraction[label.cached_by]);
                           out.coded_total += longest;
                         });

  out.random_total = Rational(0);
  for (int i = 0; i < config.num_files; ++i) {
    if (grouping.group_size(i) == 0) continue;
    Rational group_max(0);
    for (int user : grouping.groups[i]) {
      Rational missing = Rational(1) - config.cache_capacities[user] / config.num_files;
      group_max = std::max(group_max, missing);
    }
    out.random_total += group_max;
  }

  out.value = std::min(out.coded_total, out.random_total);
  return out;
}

Rational expected_rate_enumeration(const SystemConfig& config, const Demand& demand,
                                   int user_cap) {
  return enumerate_expected_rate(config, demand, user_cap).value;
}

}  // namespace hetcache
