#include "hetcache/grouping.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "testutil.hpp"

namespace hetcache {
namespace {

TEST(GroupUsers, Example1Grouping) {
  SystemConfig config = testutil::example1_config(1000);
  Grouping g = group_users(config, parse_demand("1,2,1,2"));

  EXPECT_EQ(g.groups[0], (std::vector<int>{0, 2}));  // U1, U3
  EXPECT_EQ(g.groups[1], (std::vector<int>{1, 3}));  // U2, U4
  EXPECT_EQ(g.boundaries, (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(g.relabel, (std::vector<int>{0, 2, 1, 3}));
  EXPECT_EQ(g.relabeled_demand, (std::vector<int>{0, 0, 1, 1}));
}

TEST(GroupUsers, AllSameRequest) {
  SystemConfig config{3, 8, 4,
                      {Rational(1), Rational(0), Rational(2), Rational(0)}};
  Grouping g = group_users(config, parse_demand("1,1,1,1"));
  EXPECT_EQ(g.groups[0].size(), 4u);
  EXPECT_TRUE(g.groups[1].empty());
  EXPECT_TRUE(g.groups[2].empty());
  EXPECT_EQ(g.boundaries, (std::vector<int>{0, 4, 4, 4}));
  // ascending capacity with stable ties: U2 (0), U4 (0), U1 (1), U3 (2)
  EXPECT_EQ(g.groups[0], (std::vector<int>{1, 3, 0, 2}));
}

TEST(GroupUsers, PermutationDemand) {
  SystemConfig config{3, 8, 3, {Rational(0), Rational(1), Rational(2)}};
  Grouping g = group_users(config, parse_demand("3,2,1"));
  EXPECT_EQ(g.boundaries, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(g.relabel, (std::vector<int>{2, 1, 0}));
}

// Applying the relabeling to the original demand yields the canonical
// non-decreasing staircase with ascending capacities inside each group.
TEST(GroupUsers, RelabelIdentityProperty) {
  std::mt19937_64 rng(321);
  for (int t = 0; t < 40; ++t) {
    SystemConfig config = testutil::random_config(rng, 1 + t % 4, 1 + t % 6, 16);
    Demand demand;
    for (int k = 0; k < config.num_users; ++k)
      demand.requests.push_back(static_cast<int>(bounded(rng, config.num_files)));

    Grouping g = group_users(config, demand);
    ASSERT_EQ(static_cast<int>(g.relabel.size()), config.num_users);

    std::set<int> seen(g.relabel.begin(), g.relabel.end());
    EXPECT_EQ(static_cast<int>(seen.size()), config.num_users);  // bijection

    for (int pos = 0; pos < config.num_users; ++pos) {
      EXPECT_EQ(g.relabeled_demand[pos], demand.requests[g.relabel[pos]]);
      if (pos > 0 && g.relabeled_demand[pos] == g.relabeled_demand[pos - 1]) {
        EXPECT_LE(config.cache_capacities[g.relabel[pos - 1]],
                  config.cache_capacities[g.relabel[pos]]);
      } else if (pos > 0) {
        EXPECT_LT(g.relabeled_demand[pos - 1], g.relabeled_demand[pos]);
      }
    }
    for (int i = 0; i < config.num_files; ++i)
      EXPECT_EQ(g.group_size(i), static_cast<int>(g.groups[i].size()));
    EXPECT_EQ(g.boundaries.back(), config.num_users);
  }
}

TEST(WorstCaseDemand, Example1Pattern) {
  SystemConfig config = testutil::example1_config(1000);
  EXPECT_EQ(format_demand(worst_case_demand(config)), "1,2,1,2");
}

TEST(WorstCaseDemand, DistinctFilesWhenEnoughOfThem) {
  SystemConfig config{3, 8, 3, {Rational(0), Rational(1), Rational(2)}};
  EXPECT_EQ(format_demand(worst_case_demand(config)), "1,2,3");

  SystemConfig more_files{5, 8, 3, {Rational(1), Rational(0), Rational(2)}};
  // ascending capacity order U2, U1, U3 gets files 1, 2, 3
  EXPECT_EQ(format_demand(worst_case_demand(more_files)), "2,1,3");
}

TEST(WorstCaseDemand, RoundRobinOverAscendingCapacities) {
  SystemConfig config{2, 8, 5,
                      {Rational(1), make_rational(1, 2), Rational(0), Rational(2),
                       make_rational(1, 4)}};
  // ascending: U3(0), U5(1/4), U2(1/2), U1(1), U4(2)
  // files:      1      2        1        2      1
  EXPECT_EQ(format_demand(worst_case_demand(config)), "2,1,1,1,2");
}

TEST(EnumerateDemands, CountsAndUniqueness) {
  SystemConfig two_two{2, 8, 2, {Rational(0), Rational(0)}};
  DemandEnumerator e1(two_two);
  EXPECT_EQ(e1.total(), 4u);
  int count = 0;
  std::set<std::vector<int>> unique;
  while (auto d = e1.next()) {
    ++count;
    unique.insert(d->requests);
  }
  EXPECT_EQ(count, 4);
  EXPECT_EQ(unique.size(), 4u);

  SystemConfig one_five{1, 8, 5, {Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)}};
  DemandEnumerator e2(one_five);
  EXPECT_EQ(e2.total(), 1u);

  SystemConfig three_three{3, 8, 3, {Rational(0), Rational(0), Rational(0)}};
  DemandEnumerator e3(three_three);
  std::set<std::vector<int>> all;
  while (auto d = e3.next()) all.insert(d->requests);
  EXPECT_EQ(all.size(), 27u);
}

TEST(EnumerateDemands, CapIsEnforced) {
  SystemConfig config{10, 8, 10, std::vector<Rational>(10, Rational(0))};
  EXPECT_THROW(DemandEnumerator{config}, std::length_error);
  EXPECT_NO_THROW(DemandEnumerator(config, 20'000'000'000ull));
}

}  // namespace
}  // namespace hetcache
