#include "hetcache/experiment.hpp"

#include <algorithm>
#include <stdexcept>

#include "hetcache/rng.hpp"

namespace hetcache {

namespace {
constexpr std::uint64_t kLibrarySeedStream = 0x51b;
constexpr std::uint64_t kPlacementSeedStream = 0x97ace;
constexpr std::uint64_t kRandomSchemeSeedStream = 0x4a9d;
constexpr std::uint64_t kCapacitySeedStream = 0xca9;
}  // namespace

std::vector<Rational> exp_profile(int num_users, const Rational& max_capacity,
                                  const Rational& alpha) {
  if (alpha < 0 || alpha > 1)
    throw std::invalid_argument("exp_profile: alpha must be in [0, 1]");
  if (max_capacity < 0)
    throw std::invalid_argument("exp_profile: M must be non-negative");
  std::vector<Rational> mu(num_users);
  for (int k = 0; k < num_users; ++k)
    mu[k] = pow_rational(alpha, static_cast<unsigned>(num_users - 1 - k)) * max_capacity;
  return mu;
}

std::vector<Rational> linspace_rational(const Rational& lo, const Rational& hi, int points) {
  if (points < 1) throw std::invalid_argument("linspace needs at least one point");
  if (points == 1) return {lo};
  std::vector<Rational> out;
  out.reserve(points);
  const Rational step = (hi - lo) / (points - 1);
  for (int j = 0; j < points; ++j) out.push_back(lo + step * j);
  return out;
}

std::string csv_header() { return "N,K,alpha,M,r_c,r_b,delta_r1,delta_r2,cut_set,branch"; }

std::string csv_row(const RateRow& row) {
  std::string out = std::to_string(row.num_files) + "," + std::to_string(row.num_users) + ",";
  out += row.alpha ? to_decimal_string(*row.alpha, 6) : "";
  out += ",";
  out += row.max_capacity ? to_decimal_string(*row.max_capacity, 6) : "";
  out += ",";
  out += to_decimal_string(row.report.proposed, 6) + ",";
  out += to_decimal_string(row.report.baseline, 6) + ",";
  out += to_decimal_string(row.report.delta1, 6) + ",";
  out += to_decimal_string(row.report.delta2, 6) + ",";
  out += to_decimal_string(row.report.cut_set, 6) + ",";
  out += row.report.random_wins ? "random" : "coded";
  return out;
}

std::string write_csv(const std::vector<RateRow>& rows) {
  std::string out = csv_header() + "\n";
  for (const auto& row : rows) out += csv_row(row) + "\n";
  return out;
}

SweepSpec fig2_preset() {
  SweepSpec spec;
  spec.num_files = 50;
  spec.num_users = 70;
  spec.alpha = make_rational(97, 100);
  spec.m_axis = linspace_rational(Rational(0), Rational(50), 25);
  return spec;
}

SweepSpec fig3_preset() {
  SweepSpec spec;
  spec.num_files = 30;
  spec.num_users = 45;
  spec.max_capacity = Rational(2);
  spec.a_axis = linspace_rational(make_rational(9, 10), Rational(1), 25);
  return spec;
}

std::vector<RateRow> sweep_max_capacity(const SweepSpec& spec) {
  std::vector<RateRow> rows;
  rows.reserve(spec.m_axis.size());
  for (const auto& m : spec.m_axis) {
    RateRow row;
    row.num_files = spec.num_files;
    row.num_users = spec.num_users;
    row.alpha = spec.alpha;
    row.max_capacity = m;
    row.report = analyze(exp_profile(spec.num_users, m, spec.alpha), spec.num_files);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RateRow> sweep_alpha(const SweepSpec& spec) {
  std::vector<RateRow> rows;
  rows.reserve(spec.a_axis.size());
  for (const auto& a : spec.a_axis) {
    RateRow row;
    row.num_files = spec.num_files;
    row.num_users = spec.num_users;
    row.alpha = a;
    row.max_capacity = spec.max_capacity;
    row.report = analyze(exp_profile(spec.num_users, spec.max_capacity, a), spec.num_files);
    rows.push_back(std::move(row));
  }
  return rows;
}

SimulationReport run_simulation(const SimulationSpec& spec) {
  const SystemConfig config = require_valid(spec.config);
  if (config.num_users > 16)
    throw std::invalid_argument("bit-level simulation supports at most 16 users");

  const Demand demand = spec.demand ? *spec.demand : worst_case_demand(config);
  const Grouping grouping = group_users(config, demand);
  const bool run_random = config.file_size_bits <= spec.random_delivery_max_f;

  SimulationReport report;
  report.proposed = rate_proposed(config.cache_capacities, config.num_files).value;
  report.all_decoded = true;

  Rational coded_sum(0), random_sum(0), measured_sum(0), max_dev(0);

  for (int t = 0; t < spec.trials; ++t) {
    const Library library =
        generate_library(config, derive_seed(spec.seed, kLibrarySeedStream, t));
    const Placement placement =
        place_random(config, derive_seed(spec.seed, kPlacementSeedStream, t));
    const SubfilePartition partition = partition_subfiles(config, placement);

    const MessageLedger coded = coded_delivery(config, library, partition, grouping);
    coded_sum += measure_rate(coded);

    const MessageLedger* chosen = &coded;
    MessageLedger random;
    if (run_random) {
      random = random_delivery(config, library, placement, grouping,
                               derive_seed(spec.seed, kRandomSchemeSeedStream, t));
      random_sum += measure_rate(random);
      chosen = &select_scheme(coded, random);
    }

    const Rational measured = measure_rate(*chosen);
    measured_sum += measured;
    const Rational dev = abs(measured - report.proposed);
    if (dev > max_dev) max_dev = dev;

    const VerifyReport verdict = verify_all(config, library, placement, demand, *chosen);
    bool trial_ok = verdict.all_ok;
    int failed = verdict.users_failed;
    std::string diagnostic;
    if (!verdict.all_ok) diagnostic = render_table(verdict) + export_ledger(*chosen);

    if (run_random) {
      // Exercise the non-selected procedure too; both must decode.
      const MessageLedger& other = chosen == &coded ? random : coded;
      const VerifyReport second = verify_all(config, library, placement, demand, other);
      trial_ok = trial_ok && second.all_ok;
      failed += second.users_failed;
      if (!second.all_ok && diagnostic.empty())
        diagnostic = render_table(second) + export_ledger(other);
    }

    ++report.trials_run;
    if (!trial_ok) {
      report.all_decoded = false;
      report.users_failed += failed;
      report.diagnostic = std::move(diagnostic);
      break;
    }
  }

  if (report.trials_run > 0) {
    report.mean_coded_rate = coded_sum / report.trials_run;
    report.mean_measured_rate = measured_sum / report.trials_run;
    if (run_random) report.mean_random_rate = random_sum / report.trials_run;
  }
  report.max_deviation = max_dev;
  return report;
}

std::string dump_trial_ledger(const SimulationSpec& spec, int trial, bool with_payload) {
  const SystemConfig config = require_valid(spec.config);
  const Demand demand = spec.demand ? *spec.demand : worst_case_demand(config);
  const Library library =
      generate_library(config, derive_seed(spec.seed, kLibrarySeedStream, trial));
  const Placement placement =
      place_random(config, derive_seed(spec.seed, kPlacementSeedStream, trial));
  const SubfilePartition partition = partition_subfiles(config, placement);
  const Grouping grouping = group_users(config, demand);
  return export_ledger(coded_delivery(config, library, partition, grouping), with_payload);
}

ExhaustiveReport verify_exhaustive(const ExhaustiveSpec& spec) {
  ExhaustiveReport report;

  for (int n = 1; n <= spec.max_files; ++n) {
    for (int k = 1; k <= spec.max_users; ++k) {
      for (int s = 0; s < spec.seeds; ++s) {
        const std::uint64_t instance_tag =
            (static_cast<std::uint64_t>(n) << 16) | (static_cast<std::uint64_t>(k) << 8) |
            static_cast<std::uint64_t>(s);

        // Capacities as multiples of N/16 so placement sizes divide F.
        std::mt19937_64 cap_rng(derive_seed(spec.master_seed, kCapacitySeedStream, instance_tag));
        SystemConfig config;
        config.num_files = n;
        config.num_users = k;
        config.file_size_bits = spec.file_size_bits;
        for (int u = 0; u < k; ++u)
          config.cache_capacities.push_back(make_rational(n, 16) * static_cast<long>(bounded(cap_rng, 17)));

        const Library library =
            generate_library(config, derive_seed(spec.master_seed, kLibrarySeedStream, instance_tag));
        const Placement placement =
            place_random(config, derive_seed(spec.master_seed, kPlacementSeedStream, instance_tag));
        const SubfilePartition partition = partition_subfiles(config, placement);

        DemandEnumerator demands(config);
        while (auto demand = demands.next()) {
          const Grouping grouping = group_users(config, *demand);

          const MessageLedger coded = coded_delivery(config, library, partition, grouping);
          const MessageLedger random =
              random_delivery(config, library, placement, grouping,
                              derive_seed(spec.master_seed, kRandomSchemeSeedStream, instance_tag));

          for (const MessageLedger* ledger : {&coded, &random}) {
            ++report.instances;
            const VerifyReport verdict = verify_all(config, library, placement, *demand, *ledger);
            if (!verdict.all_ok) {
              ++report.failures;
              if (report.first_failure.empty()) {
                report.first_failure = "N=" + std::to_string(n) + " K=" + std::to_string(k) +
                                       " seed=" + std::to_string(s) + " demand=" +
                                       format_demand(*demand) + " scheme=" +
                                       (ledger == &coded ? "coded" : "random") + "\n" +
                                       render_table(verdict);
              }
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace hetcache
