// Experiment harness for the decentralized coded caching library: closed-form
// rates, bit-level simulations, figure sweeps and exhaustive verification.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hetcache/experiment.hpp"

namespace {

using namespace hetcache;

struct ProfileArgs {
  std::string mu_text;
  std::string exp_text;  // "K,M,alpha"
};

// Resolves --mu / --exp into a capacity vector; --exp wins K.
std::vector<Rational> resolve_profile(const ProfileArgs& args, int& num_users,
                                      std::optional<Rational>* alpha_out = nullptr,
                                      std::optional<Rational>* m_out = nullptr) {
  if (!args.exp_text.empty()) {
    auto parts = parse_rational_list(args.exp_text);
    if (parts.size() != 3)
      throw CLI::ValidationError("--exp expects K,M,alpha");
    if (parts[0].get_den() != 1 || parts[0] < 1)
      throw CLI::ValidationError("--exp: K must be a positive integer");
    num_users = static_cast<int>(parts[0].get_num().get_si());
    if (alpha_out) *alpha_out = parts[2];
    if (m_out) *m_out = parts[1];
    return exp_profile(num_users, parts[1], parts[2]);
  }
  if (args.mu_text.empty())
    throw CLI::ValidationError("one of --mu or --exp is required");
  auto mu = parse_rational_list(args.mu_text);
  num_users = static_cast<int>(mu.size());
  return mu;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

// "a:b:step" inclusive of both ends (exact rational steps).
std::vector<Rational> parse_grid(const std::string& text) {
  auto first = text.find(':');
  auto second = text.find(':', first == std::string::npos ? 0 : first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw CLI::ValidationError("--grid expects a:b:step");
  Rational lo = parse_rational(text.substr(0, first));
  Rational hi = parse_rational(text.substr(first + 1, second - first - 1));
  Rational step = parse_rational(text.substr(second + 1));
  if (step <= 0) throw CLI::ValidationError("--grid step must be positive");
  std::vector<Rational> out;
  for (Rational v = lo; v <= hi; v += step) out.push_back(v);
  return out;
}

int cmd_rate(int num_files, const ProfileArgs& profile) {
  int num_users = 0;
  std::optional<Rational> alpha, m;
  auto mu = resolve_profile(profile, num_users, &alpha, &m);

  SystemConfig config{num_files, 1, num_users, mu};
  auto errors = validate_config(config);
  if (!errors.empty()) {
    for (const auto& e : errors) std::cerr << "error: " << e << "\n";
    return 2;
  }

  RateRow row{num_files, num_users, alpha, m, analyze(mu, num_files)};
  std::cout << csv_header() << "\n" << csv_row(row) << "\n";
  return 0;
}

int cmd_simulate(int num_files, const ProfileArgs& profile, std::int64_t file_bits,
                 int trials, std::uint64_t seed, const std::string& demand_text,
                 std::int64_t random_cap, bool dump_ledger) {
  int num_users = 0;
  auto mu = resolve_profile(profile, num_users);

  SimulationSpec spec;
  spec.config = SystemConfig{num_files, file_bits, num_users, mu};
  auto errors = validate_config(spec.config);
  if (!errors.empty()) {
    for (const auto& e : errors) std::cerr << "error: " << e << "\n";
    return 2;
  }
  if (demand_text != "worst") spec.demand = parse_demand(demand_text);
  spec.trials = trials;
  spec.seed = seed;
  spec.random_delivery_max_f = random_cap;

  const Demand demand = spec.demand ? *spec.demand : worst_case_demand(spec.config);
  std::cout << "demand=" << format_demand(demand) << " trials=" << trials
            << " F=" << file_bits << "\n";

  SimulationReport report = run_simulation(spec);
  std::cout << "rate_proposed=" << to_decimal_string(report.proposed, 6) << "\n";
  std::cout << "mean_coded_rate=" << to_decimal_string(report.mean_coded_rate, 6) << "\n";
  if (report.mean_random_rate)
    std::cout << "mean_random_rate=" << to_decimal_string(*report.mean_random_rate, 6) << "\n";
  std::cout << "mean_measured_rate=" << to_decimal_string(report.mean_measured_rate, 6) << "\n";
  std::cout << "max_deviation=" << to_decimal_string(report.max_deviation, 6) << "\n";
  std::cout << "all_decoded=" << (report.all_decoded ? "true" : "false") << "\n";

  if (!report.all_decoded) {
    std::cerr << "decode failure; diagnostic ledger follows\n" << report.diagnostic;
    return 1;
  }
  if (dump_ledger) std::cout << dump_trial_ledger(spec, 0);
  return 0;
}

int cmd_sweep(bool over_alpha, const std::string& preset, int num_files, int num_users,
              const std::string& fixed_text, const std::string& grid_text,
              const std::string& out_path) {
  SweepSpec spec;
  if (!preset.empty()) {
    if (over_alpha && preset == "fig3")
      spec = fig3_preset();
    else if (!over_alpha && preset == "fig2")
      spec = fig2_preset();
    else
      throw CLI::ValidationError("unknown preset: " + preset);
  } else {
    if (num_files <= 0 || num_users <= 0)
      throw CLI::ValidationError("--N and --K are required without a preset");
    spec.num_files = num_files;
    spec.num_users = num_users;
    if (grid_text.empty()) throw CLI::ValidationError("--grid is required without a preset");
    auto axis = parse_grid(grid_text);
    if (over_alpha) {
      spec.max_capacity = parse_rational(fixed_text);
      spec.a_axis = std::move(axis);
    } else {
      spec.alpha = parse_rational(fixed_text);
      spec.m_axis = std::move(axis);
    }
  }

  auto rows = over_alpha ? sweep_alpha(spec) : sweep_max_capacity(spec);
  emit(write_csv(rows), out_path);
  return 0;
}

int cmd_example1() {
  const auto mu = exp_profile(4, Rational(1), make_rational(1, 2));
  const int num_files = 2;

  std::cout << "mu=" << format_rational_list(mu) << "\n";
  RateReport report = analyze(mu, num_files);
  std::cout << "r_c=" << to_decimal_string(report.proposed, 6)
            << " (coded branch " << to_decimal_string(report.coded_branch, 6)
            << ", random branch " << to_decimal_string(report.random_branch, 6) << ")\n";
  std::cout << "r_b=" << to_decimal_string(report.baseline, 6) << "\n";
  const Rational reduction = (report.baseline - report.proposed) / report.baseline * 100;
  std::cout << "reduction=" << to_decimal_string(reduction, 2) << "%\n";

  SimulationSpec spec;
  spec.config = SystemConfig{num_files, 1 << 12, 4, mu};
  spec.trials = 5;
  spec.seed = 7;
  SimulationReport sim = run_simulation(spec);
  std::cout << "bit-level mean rate over " << sim.trials_run
            << " trials at F=" << spec.config.file_size_bits << ": "
            << to_decimal_string(sim.mean_measured_rate, 6) << "\n";
  std::cout << "all_decoded=" << (sim.all_decoded ? "true" : "false") << "\n";
  return sim.all_decoded ? 0 : 1;
}

int cmd_verify(bool exhaustive, int max_files, int max_users, std::int64_t file_bits,
               int seeds, std::uint64_t seed) {
  ExhaustiveSpec spec;
  spec.max_files = exhaustive ? max_files : std::min(max_files, 2);
  spec.max_users = exhaustive ? max_users : std::min(max_users, 3);
  spec.file_size_bits = file_bits;
  spec.seeds = exhaustive ? seeds : 1;
  spec.master_seed = seed;

  ExhaustiveReport report = verify_exhaustive(spec);
  std::cout << "instances=" << report.instances << " failures=" << report.failures << "\n";
  if (report.failures > 0) {
    std::cerr << report.first_failure;
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decentralized coded caching with heterogeneous cache sizes"};
  app.require_subcommand(1);

  // rate
  auto* rate = app.add_subcommand("rate", "closed-form delivery rates as a CSV row");
  int rate_n = 0;
  int rate_k = 0;
  ProfileArgs rate_profile;
  rate->add_option("--N", rate_n, "number of files")->required();
  rate->add_option("--K", rate_k, "number of users (implied by --mu/--exp)");
  rate->add_option("--mu", rate_profile.mu_text, "capacities, e.g. 1/8,1/4,1/2,1");
  rate->add_option("--exp", rate_profile.exp_text, "exponential profile K,M,alpha");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "bit-level placement/delivery/decode runs");
  int sim_n = 0;
  ProfileArgs sim_profile;
  std::int64_t sim_f = 100000;
  int sim_trials = 20;
  std::uint64_t sim_seed = 1;
  std::string sim_demand = "worst";
  std::int64_t sim_random_cap = 4096;
  bool sim_dump = false;
  simulate->add_option("--N", sim_n, "number of files")->required();
  simulate->add_option("--mu", sim_profile.mu_text, "capacities");
  simulate->add_option("--exp", sim_profile.exp_text, "exponential profile K,M,alpha");
  simulate->add_option("--F", sim_f, "file size in bits");
  simulate->add_option("--trials", sim_trials, "number of seeded trials");
  simulate->add_option("--seed", sim_seed, "master seed");
  simulate->add_option("--demand", sim_demand, "comma-separated requests or 'worst'");
  simulate->add_option("--random-cap", sim_random_cap,
                       "largest F for bit-level random delivery");
  simulate->add_flag("--dump-ledger", sim_dump, "print the coded ledger of trial 0");

  // sweep-M
  auto* sweep_m = app.add_subcommand("sweep-M", "rate vs largest cache capacity (CSV)");
  std::string sm_preset, sm_grid, sm_alpha = "1", sm_out;
  int sm_n = 0, sm_k = 0;
  sweep_m->add_option("--preset", sm_preset, "fig2 (N=50, K=70, alpha=0.97)");
  sweep_m->add_option("--N", sm_n, "number of files");
  sweep_m->add_option("--K", sm_k, "number of users");
  sweep_m->add_option("--alpha", sm_alpha, "profile skew in [0,1]");
  sweep_m->add_option("--grid", sm_grid, "M grid a:b:step");
  sweep_m->add_option("--out", sm_out, "output CSV path (stdout otherwise)");

  // sweep-alpha
  auto* sweep_a = app.add_subcommand("sweep-alpha", "rate vs profile skew alpha (CSV)");
  std::string sa_preset, sa_grid, sa_m = "1", sa_out;
  int sa_n = 0, sa_k = 0;
  sweep_a->add_option("--preset", sa_preset, "fig3 (N=30, K=45, M=2)");
  sweep_a->add_option("--N", sa_n, "number of files");
  sweep_a->add_option("--K", sa_k, "number of users");
  sweep_a->add_option("--M", sa_m, "largest cache capacity");
  sweep_a->add_option("--grid", sa_grid, "alpha grid a:b:step");
  sweep_a->add_option("--out", sa_out, "output CSV path (stdout otherwise)");

  // example1
  app.add_subcommand("example1", "the N=2, K=4, mu=(1/8,1/4,1/2,1) reference instance");

  // verify
  auto* verify = app.add_subcommand("verify", "bit-exact decoding over a demand grid");
  bool verify_exh = false;
  int v_max_n = 3, v_max_k = 5, v_seeds = 3;
  std::int64_t v_f = 1024;
  std::uint64_t v_seed = 2024;
  verify->add_flag("--exhaustive", verify_exh, "full K<=5, N<=3 grid, all demands, 3 seeds");
  verify->add_option("--max-N", v_max_n, "largest file count");
  verify->add_option("--max-K", v_max_k, "largest user count");
  verify->add_option("--F", v_f, "file size in bits");
  verify->add_option("--seeds", v_seeds, "placement seeds per config");
  verify->add_option("--seed", v_seed, "master seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rate->parsed()) return cmd_rate(rate_n, rate_profile);
    if (simulate->parsed())
      return cmd_simulate(sim_n, sim_profile, sim_f, sim_trials, sim_seed, sim_demand,
                          sim_random_cap, sim_dump);
    if (sweep_m->parsed())
      return cmd_sweep(false, sm_preset, sm_n, sm_k, sm_alpha, sm_grid, sm_out);
    if (sweep_a->parsed())
      return cmd_sweep(true, sa_preset, sa_n, sa_k, sa_m, sa_grid, sa_out);
    if (app.get_subcommand("example1")->parsed()) return cmd_example1();
    if (verify->parsed())
      return cmd_verify(verify_exh, v_max_n, v_max_k, v_f, v_seeds, v_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
