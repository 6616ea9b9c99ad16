#include "hetcache/model.hpp"

#include <gtest/gtest.h>

#include <random>

#include "testutil.hpp"

namespace hetcache {
namespace {

TEST(Rational, ParseForms) {
  EXPECT_EQ(parse_rational("1/8"), make_rational(1, 8));
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("0.97"), make_rational(97, 100));
  EXPECT_EQ(parse_rational("-0.5"), make_rational(-1, 2));
  EXPECT_EQ(parse_rational(" 2/6 "), make_rational(1, 3));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rational, DecimalRendering) {
  EXPECT_EQ(to_decimal_string(make_rational(1800, 1024), 6), "1.757813");
  EXPECT_EQ(to_decimal_string(Rational(2), 2), "2.00");
  EXPECT_EQ(to_decimal_string(make_rational(-1, 3), 4), "-0.3333");
  EXPECT_EQ(to_decimal_string(make_rational(1, 2), 0), "1");  // halves up
}

TEST(Rational, RoundHalfUp) {
  EXPECT_EQ(round_half_up(make_rational(5, 2)), 3);
  EXPECT_EQ(round_half_up(make_rational(3, 2)), 2);
  EXPECT_EQ(round_half_up(make_rational(7, 3)), 2);
  EXPECT_EQ(round_half_up(Rational(4)), 4);
  EXPECT_EQ(round_half_up(make_rational(-1, 2)), 0);
}

TEST(ValidateConfig, Example1IsValid) {
  SystemConfig config = testutil::example1_config(1000);
  EXPECT_TRUE(validate_config(config).empty());
}

TEST(ValidateConfig, CapacityAboveFileCount) {
  SystemConfig config{2, 1000, 1, {Rational(3)}};
  auto errors = validate_config(config);
  ASSERT_EQ(errors.size(), 1u);
  EXPECT_NE(errors[0].find("exceeds N"), std::string::npos);
  EXPECT_THROW(require_valid(config), std::invalid_argument);
}

TEST(ValidateConfig, ZeroCachesAllowed) {
  SystemConfig config{5, 10, 2, {Rational(0), Rational(0)}};
  EXPECT_TRUE(validate_config(config).empty());
}

TEST(ValidateConfig, ReportsEveryViolation) {
  SystemConfig config{0, 0, 0, {Rational(-1)}};
  auto errors = validate_config(config);
  EXPECT_GE(errors.size(), 4u);  // N, F, K, vector length (+ negative entry)
}

TEST(GenerateLibrary, DeterministicPerSeed) {
  SystemConfig config{2, 8, 1, {Rational(1)}};
  Library a = generate_library(config, 1234);
  Library b = generate_library(config, 1234);
  Library c = generate_library(config, 1235);
  ASSERT_EQ(a.files.size(), 2u);
  EXPECT_EQ(a.files[0].size(), 8u);
  EXPECT_EQ(a.files[0], b.files[0]);
  EXPECT_EQ(a.files[1], b.files[1]);
  EXPECT_NE(a.files, c.files);
}

TEST(GenerateLibrary, MinimalSize) {
  SystemConfig config{1, 1, 1, {Rational(0)}};
  Library lib = generate_library(config, 5);
  ASSERT_EQ(lib.files.size(), 1u);
  EXPECT_EQ(lib.files[0].size(), 1u);
}

TEST(GenerateLibrary, OnesFractionNearHalf) {
  SystemConfig config{3, 10000, 1, {Rational(0)}};
  Library lib = generate_library(config, 77);
  for (const auto& file : lib.files) {
    const double fraction = static_cast<double>(file.count()) / 10000.0;
    EXPECT_NEAR(fraction, 0.5, 0.02);
  }
}

TEST(ConfigSerialization, RoundTripsExactly) {
  std::mt19937_64 rng(2718);
  for (int t = 0; t < 25; ++t) {
    SystemConfig config = testutil::random_config(rng, 1 + t % 5, 1 + t % 7, 64 + t, 12);
    SystemConfig parsed = parse_config(serialize_config(config));
    EXPECT_EQ(parsed, config);
  }
}

TEST(ConfigSerialization, Format) {
  SystemConfig config = testutil::example1_config(1000);
  EXPECT_EQ(serialize_config(config), "N=2\nF=1000\nK=4\nmu=1/8,1/4,1/2,1\n");
  EXPECT_THROW(parse_config("N=2\nF=8\n"), std::invalid_argument);
  EXPECT_THROW(parse_config("bogus"), std::invalid_argument);
}

TEST(Demand, ParseAndFormat) {
  Demand d = parse_demand("1,2,1,2");
  EXPECT_EQ(d.requests, (std::vector<int>{0, 1, 0, 1}));
  EXPECT_EQ(format_demand(d), "1,2,1,2");

  SystemConfig config = testutil::example1_config(1000);
  EXPECT_TRUE(validate_demand(config, d).empty());
  EXPECT_FALSE(validate_demand(config, parse_demand("1,2,3,1")).empty());
  EXPECT_FALSE(validate_demand(config, parse_demand("1,2")).empty());
}

TEST(SubfileLabelFormat, OneBased) {
  EXPECT_EQ(format_label(SubfileLabel{1, 0b101u}), "2:{1,3}");
  EXPECT_EQ(format_label(SubfileLabel{0, 0}), "1:{}");
}

}  // namespace
}  // namespace hetcache
