#include <gtest/gtest.h>

#include <set>

#include "generators.hpp"
#include "idpl/featmodel.hpp"
#include "idpl/presets.hpp"
#include "oracles.hpp"

namespace fm = idpl::fm;

namespace {

fm::FeatureModel parse(std::string_view src) { return fm::parse_model(src).model.value(); }

}  // namespace

TEST(Enumerate, OptionalPlusAlternativeHasFour) {
  const auto m = parse("featuremodel M root R { optional A alternative {B, C} }");
  EXPECT_EQ(fm::count_configurations(m), 4u);
  EXPECT_EQ(idpl::testing::powerset_count(m), 4u);
  const auto all = fm::enumerate_configurations(m);
  ASSERT_EQ(all.size(), 4u);
  std::set<std::map<std::string, int>> distinct;
  for (const auto& c : all) distinct.insert(c.selections);
  EXPECT_EQ(distinct.size(), 4u);
}

TEST(Enumerate, TrivialModels) {
  EXPECT_EQ(fm::count_configurations(parse("featuremodel M root R")), 1u);
  const auto forced = fm::enumerate_configurations(parse("featuremodel M root R { mandatory M }"));
  ASSERT_EQ(forced.size(), 1u);
  EXPECT_EQ(forced[0].selections, (std::map<std::string, int>{{"M", 1}, {"R", 1}}));
}

TEST(Enumerate, UnsatisfiableModelCountsZero) {
  const auto m = parse(R"(featuremodel M root R {
    alternative {A, B}
    constraint A excludes R
    constraint B excludes R
  })");
  EXPECT_EQ(fm::count_configurations(m), 0u);
}

TEST(Enumerate, TwoThreeWayAlternativesGiveNine) {
  const auto m = parse(R"(featuremodel PriorityAndModel root InstructionalDesign {
    mandatory GoalPriority { alternative {High, Medium, Low} }
    mandatory InstructionalDesignModel {
      alternative {MerrillModel, GagneModel, GenericActivity}
      optional MerrillModel { mandatory FirstPrinciples }
    }
  })");
  EXPECT_EQ(fm::count_configurations(m), 9u);
}

TEST(Enumerate, DesignCoreUnderDefaultCap) {
  // 3 priorities x 3 design models x (Play, Act, Scene, Instruction counts each in 1..3)
  EXPECT_EQ(fm::count_configurations(idpl::presets::design_core_model()), 3u * 3u * 81u);
  EXPECT_EQ(fm::count_configurations(idpl::presets::design_core_model(), 1), 9u);
}

TEST(Enumerate, CloneCountsRangeFromMinToCap) {
  const auto m = parse("featuremodel M root R { optional A [2..9] }");
  // not selected, or 2 or 3 copies under cap 3
  EXPECT_EQ(fm::count_configurations(m, 3), 3u);
  EXPECT_EQ(fm::count_configurations(m, 5), 5u);
  const auto high_min = parse("featuremodel M root R { mandatory A [4..6] }");
  EXPECT_EQ(fm::count_configurations(high_min, 3), 1u);
}

TEST(Enumerate, SearchSpaceGuard) {
  std::string src = "featuremodel Big root R {";
  for (int i = 0; i < 25; ++i) src += " optional F" + std::to_string(i);
  src += " }";
  const auto m = parse(src);
  EXPECT_GT(fm::search_space(m), fm::kMaxSearchSpace);
  try {
    fm::count_configurations(m);
    FAIL();
  } catch (const idpl::Error& e) {
    EXPECT_EQ(e.code(), "SEARCH_SPACE_TOO_LARGE");
  }
  EXPECT_THROW(fm::count_configurations(parse("featuremodel M root R"), 0), idpl::Error);
}

TEST(Enumerate, AgreesWithPowersetOracle) {
  idpl::testing::Rng rng(99);
  for (int i = 0; i < 150; ++i) {
    const auto m = idpl::testing::random_model(rng);
    ASSERT_EQ(fm::count_configurations(m), idpl::testing::powerset_count(m)) << fm::serialize_model(m);
  }
}

TEST(Enumerate, EveryEmittedConfigurationIsValid) {
  idpl::testing::Rng rng(1234);
  idpl::testing::ModelShape shape;
  shape.clones = true;
  shape.max_features = 8;
  for (int i = 0; i < 100; ++i) {
    const auto m = idpl::testing::random_model(rng, shape);
    std::uint64_t n = 0;
    fm::for_each_configuration(m, 2, [&](const fm::Configuration& c) {
      ++n;
      const auto r = fm::check_configuration(m, c, {false});
      ASSERT_TRUE(r.valid) << fm::serialize_model(m) << fm::configuration_to_json(c);
    });
    EXPECT_EQ(n, fm::count_configurations(m, 2));
  }
}
