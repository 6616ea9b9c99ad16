#include "hetcache/experiment.hpp"

#include <gtest/gtest.h>

#include "testutil.hpp"

namespace hetcache {
namespace {

TEST(ExpProfile, Example1Profile) {
  auto mu = exp_profile(4, Rational(1), make_rational(1, 2));
  ASSERT_EQ(mu.size(), 4u);
  EXPECT_EQ(mu[0], make_rational(1, 8));
  EXPECT_EQ(mu[1], make_rational(1, 4));
  EXPECT_EQ(mu[2], make_rational(1, 2));
  EXPECT_EQ(mu[3], Rational(1));
}

TEST(ExpProfile, HomogeneousAndDegenerate) {
  auto flat = exp_profile(3, Rational(2), Rational(1));
  EXPECT_EQ(flat, (std::vector<Rational>{Rational(2), Rational(2), Rational(2)}));

  auto skewed = exp_profile(3, Rational(2), Rational(0));
  EXPECT_EQ(skewed, (std::vector<Rational>{Rational(0), Rational(0), Rational(2)}));

  EXPECT_THROW(exp_profile(3, Rational(1), Rational(2)), std::invalid_argument);
  EXPECT_THROW(exp_profile(3, Rational(-1), Rational(1)), std::invalid_argument);
}

TEST(Linspace, CoversEndpointsEvenly) {
  auto grid = linspace_rational(make_rational(9, 10), Rational(1), 25);
  ASSERT_EQ(grid.size(), 25u);
  EXPECT_EQ(grid.front(), make_rational(9, 10));
  EXPECT_EQ(grid.back(), Rational(1));
  EXPECT_EQ(grid[1] - grid[0], make_rational(1, 240));
}

TEST(Csv, HeaderIsPinned) {
  EXPECT_EQ(csv_header(), "N,K,alpha,M,r_c,r_b,delta_r1,delta_r2,cut_set,branch");
}

TEST(Csv, RowFormat) {
  RateRow row;
  row.num_files = 2;
  row.num_users = 4;
  row.alpha = make_rational(1, 2);
  row.max_capacity = Rational(1);
  row.report = analyze({make_rational(1, 8), make_rational(1, 4), make_rational(1, 2),
                        Rational(1)},
                       2);
  EXPECT_EQ(csv_row(row),
            "2,4,0.500000,1.000000,1.757813,2.680664,0.615234,0.307617,1.625000,coded");
}

TEST(Sweeps, DeterministicByteIdenticalCsv) {
  SweepSpec spec;
  spec.num_files = 4;
  spec.num_users = 6;
  spec.alpha = make_rational(95, 100);
  spec.m_axis = linspace_rational(Rational(0), Rational(4), 9);
  EXPECT_EQ(write_csv(sweep_max_capacity(spec)), write_csv(sweep_max_capacity(spec)));
}

TEST(Sweeps, Fig2PresetShape) {
  SweepSpec spec = fig2_preset();
  EXPECT_EQ(spec.num_files, 50);
  EXPECT_EQ(spec.num_users, 70);
  EXPECT_EQ(spec.alpha, make_rational(97, 100));
  ASSERT_EQ(spec.m_axis.size(), 25u);
  EXPECT_EQ(spec.m_axis.front(), Rational(0));
  EXPECT_EQ(spec.m_axis.back(), Rational(50));

  auto rows = sweep_max_capacity(spec);
  ASSERT_EQ(rows.size(), 25u);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const auto& r = rows[j].report;
    if (*rows[j].max_capacity > 0) EXPECT_LT(r.proposed, r.baseline);
    EXPECT_LE(r.cut_set, r.proposed);
    if (j > 0) EXPECT_LE(r.proposed, rows[j - 1].report.proposed);  // non-increasing
  }
}

TEST(Sweeps, Fig3PresetShape) {
  SweepSpec spec = fig3_preset();
  EXPECT_EQ(spec.num_files, 30);
  EXPECT_EQ(spec.num_users, 45);
  EXPECT_EQ(spec.max_capacity, Rational(2));
  ASSERT_EQ(spec.a_axis.size(), 25u);

  auto rows = sweep_alpha(spec);
  ASSERT_EQ(rows.size(), 25u);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const auto& r = rows[j].report;
    EXPECT_LE(r.proposed, r.baseline);
    EXPECT_LE(r.cut_set, r.proposed);
    if (j > 0) {
      const Rational gap = r.baseline - r.proposed;
      const Rational prev_gap =
          rows[j - 1].report.baseline - rows[j - 1].report.proposed;
      EXPECT_LE(gap, prev_gap);  // gain shrinks toward alpha = 1
    }
  }
}

TEST(Simulation, Example1SmallInstance) {
  SimulationSpec spec;
  spec.config = testutil::example1_config(2048);
  spec.trials = 4;
  spec.seed = 99;
  SimulationReport report = run_simulation(spec);

  EXPECT_EQ(report.trials_run, 4);
  EXPECT_TRUE(report.all_decoded);
  EXPECT_EQ(report.proposed, make_rational(1800, 1024));
  EXPECT_NEAR(to_double(report.mean_coded_rate), 1.7578, 0.03);
  ASSERT_TRUE(report.mean_random_rate.has_value());
  EXPECT_NEAR(to_double(*report.mean_random_rate), 1.8125, 0.03);
  EXPECT_LE(report.max_deviation, make_rational(1, 10));
}

TEST(Simulation, EmptyCachesGiveExactRate) {
  SimulationSpec spec;
  spec.config = SystemConfig{2, 512, 3, {Rational(0), Rational(0), Rational(0)}};
  spec.trials = 3;
  spec.seed = 5;
  SimulationReport report = run_simulation(spec);
  EXPECT_TRUE(report.all_decoded);
  EXPECT_EQ(report.mean_coded_rate, Rational(2));
  EXPECT_EQ(report.mean_measured_rate, Rational(2));
  EXPECT_EQ(report.max_deviation, Rational(0));
}

TEST(Simulation, RandomDeliverySkippedAboveCap) {
  SimulationSpec spec;
  spec.config = testutil::example1_config(1 << 13);
  spec.trials = 1;
  spec.seed = 3;
  spec.random_delivery_max_f = 1 << 12;
  SimulationReport report = run_simulation(spec);
  EXPECT_FALSE(report.mean_random_rate.has_value());
  EXPECT_TRUE(report.all_decoded);
}

TEST(Simulation, RejectsTooManyUsersForBitLevel) {
  SimulationSpec spec;
  spec.config = SystemConfig{2, 64, 17, std::vector<Rational>(17, Rational(0))};
  EXPECT_THROW(run_simulation(spec), std::invalid_argument);
}

TEST(Simulation, TrialLedgerDump) {
  SimulationSpec spec;
  spec.config = testutil::example1_config(512);
  spec.seed = 11;
  std::string dump = dump_trial_ledger(spec, 0);
  EXPECT_NE(dump.find("P1 1:{} len="), std::string::npos);
  EXPECT_NE(dump.find("P3 "), std::string::npos);
}

TEST(Exhaustive, SmallGridDecodesEverything) {
  ExhaustiveSpec spec;
  spec.max_files = 2;
  spec.max_users = 3;
  spec.file_size_bits = 256;
  spec.seeds = 1;
  ExhaustiveReport report = verify_exhaustive(spec);
  // sum over N<=2, K<=3 of N^K, coded+random: (1+1+1 + 2+4+8) * 2
  EXPECT_EQ(report.instances, 34);
  EXPECT_EQ(report.failures, 0);
  EXPECT_TRUE(report.first_failure.empty());
}

}  // namespace
}  // namespace hetcache
