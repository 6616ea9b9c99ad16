#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hetcache/analysis.hpp"
#include "hetcache/decode.hpp"

namespace hetcache {

// Exponential cache profile: mu_k = alpha^(K-k) * M, ascending for
// alpha <= 1. alpha = 1 is the homogeneous case; M is the largest cache.
std::vector<Rational> exp_profile(int num_users, const Rational& max_capacity,
                                  const Rational& alpha);

// `points` evenly spaced rationals covering [lo, hi] inclusive.
std::vector<Rational> linspace_rational(const Rational& lo, const Rational& hi, int points);

struct RateRow {
  int num_files = 0;
  int num_users = 0;
  std::optional<Rational> alpha;         // set for exponential profiles
  std::optional<Rational> max_capacity;  // set for exponential profiles
  RateReport report;
};

// Exactly "N,K,alpha,M,r_c,r_b,delta_r1,delta_r2,cut_set,branch".
std::string csv_header();
std::string csv_row(const RateRow& row);
std::string write_csv(const std::vector<RateRow>& rows);

struct SweepSpec {
  int num_files = 0;
  int num_users = 0;
  // Exactly one axis is swept; the other parameter is fixed.
  Rational alpha;                 // fixed for sweep over M
  Rational max_capacity;          // fixed for sweep over alpha
  std::vector<Rational> m_axis;   // sweep-M grid
  std::vector<Rational> a_axis;   // sweep-alpha grid
};

SweepSpec fig2_preset();  // N=50, K=70, alpha=0.97, M over 25 points in [0,N]
SweepSpec fig3_preset();  // N=30, K=45, M=2, alpha over 25 points in [0.9,1]

std::vector<RateRow> sweep_max_capacity(const SweepSpec& spec);
std::vector<RateRow> sweep_alpha(const SweepSpec& spec);

struct SimulationSpec {
  SystemConfig config;
  std::optional<Demand> demand;  // nullopt = worst-case demand
  int trials = 20;
  std::uint64_t seed = 1;
  // Bit-level random delivery is cubic-ish in F; above this cap only the
  // coded procedure is realized and measured.
  std::int64_t random_delivery_max_f = 4096;
};

struct SimulationReport {
  int trials_run = 0;
  Rational mean_coded_rate;
  std::optional<Rational> mean_random_rate;  // unset when F above the cap
  Rational mean_measured_rate;               // selected scheme per trial
  Rational max_deviation;                    // max |measured - rate_proposed|
  Rational proposed;                         // closed-form reference
  bool all_decoded = false;
  int users_failed = 0;
  std::string diagnostic;  // ledger dump of the first failing trial
};

// Binds placement -> delivery -> decode -> verify over `trials` seeded
// runs. Stops at the first decode failure and attaches a ledger dump.
SimulationReport run_simulation(const SimulationSpec& spec);

// The coded ledger of one simulation trial, in export format.
std::string dump_trial_ledger(const SimulationSpec& spec, int trial,
                              bool with_payload = false);

struct ExhaustiveSpec {
  int max_files = 3;
  int max_users = 5;
  std::int64_t file_size_bits = 1024;
  int seeds = 3;
  std::uint64_t master_seed = 2024;
};

struct ExhaustiveReport {
  std::int64_t instances = 0;  // (config, seed, demand, procedure) runs
  std::int64_t failures = 0;
  std::string first_failure;  // summary of the first failing instance
};

// Every (N <= max_files, K <= max_users, seed, demand) instance, decoded
// bit-for-bit under both the coded and the random procedure.
ExhaustiveReport verify_exhaustive(const ExhaustiveSpec& spec);

}  // namespace hetcache
