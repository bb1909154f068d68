#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "idpl/featmodel.hpp"
#include "idpl/presets.hpp"

namespace fm = idpl::fm;

namespace {

bool has_code(const idpl::Diagnostics& diags, const std::string& code) {
  return std::any_of(diags.begin(), diags.end(), [&](const auto& d) { return d.code == code; });
}

fm::FeatureModel must_parse(std::string_view src) {
  auto r = fm::parse_model(src);
  EXPECT_TRUE(r.ok()) << (r.diagnostics.empty() ? "" : idpl::format(r.diagnostics.front()));
  return r.model.value_or(fm::FeatureModel{});
}

}  // namespace

TEST(ParseModel, MinimalRootHasOneFeatureAndOneConfiguration) {
  const auto m = must_parse("featuremodel M root R {}");
  EXPECT_EQ(m.name, "M");
  EXPECT_EQ(m.root.name, "R");
  EXPECT_TRUE(m.root.groups.empty());
  EXPECT_EQ(fm::count_configurations(m), 1u);
}

TEST(ParseModel, DesignCoreParsesClean) {
  auto r = fm::parse_model(idpl::presets::design_core_model_source());
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r.diagnostics.empty());
  const fm::ModelIndex index(*r.model);
  for (const char* name : {"GoalClassification", "IPCL", "MerrillModel", "GagneModel", "GenericActivity",
                           "High", "Medium", "Low", "Play", "FirstPrinciples"}) {
    EXPECT_TRUE(index.find(name).has_value()) << name;
  }
  const auto play = index.find("Play");
  ASSERT_TRUE(play);
  EXPECT_EQ(index.at(*play).feature->cardinality, (fm::Cardinality{1, 25}));
}

TEST(ParseModel, MinGreaterThanMaxReportedAtCardinality) {
  auto r = fm::parse_model("featuremodel M\nroot R {\n  optional X [5..2]\n}\n");
  EXPECT_FALSE(r.ok());
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].code, "MIN_GT_MAX");
  EXPECT_EQ(r.diagnostics[0].line, 3);
  EXPECT_EQ(r.diagnostics[0].column, 15);
}

TEST(ParseModel, SyntaxErrorCarriesPosition) {
  auto r = fm::parse_model("featuremodel M root R {\n  mandatory\n}");
  EXPECT_FALSE(r.ok());
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_EQ(r.diagnostics[0].code, "SYNTAX_ERROR");
  EXPECT_GT(r.diagnostics[0].line, 0);
}

TEST(ParseModel, DuplicateFeatureRejected) {
  auto r = fm::parse_model("featuremodel M root R { mandatory A { optional B } optional B }");
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(has_code(r.diagnostics, "DUPLICATE_FEATURE"));
}

TEST(ParseModel, ConstraintOnUnknownFeatureRejected) {
  auto r = fm::parse_model("featuremodel M root R { optional A constraint A requires Ghost }");
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(has_code(r.diagnostics, "UNKNOWN_FEATURE"));
}

TEST(ParseModel, SelfConstraintRejected) {
  auto r = fm::parse_model("featuremodel M root R { optional A constraint A excludes A }");
  EXPECT_TRUE(has_code(r.diagnostics, "CONSTRAINT_SELF"));
}

TEST(ParseModel, CardinalityInvariants) {
  EXPECT_TRUE(has_code(fm::parse_model("featuremodel M root R { optional A [0..0] }").diagnostics,
                       "CARD_MAX_ZERO"));
  EXPECT_TRUE(has_code(fm::parse_model("featuremodel M root R { optional A [-1..2] }").diagnostics,
                       "CARD_NEGATIVE"));
  EXPECT_TRUE(has_code(fm::parse_model("featuremodel M root R [1..3]").diagnostics, "ROOT_CARDINALITY"));
}

TEST(ParseModel, AttributeDomains) {
  const auto m = must_parse(R"(featuremodel M root R {
    attribute level : enum {Low, High} required
    attribute size : int [1..10]
    attribute note : text
  })");
  ASSERT_EQ(m.root.attributes.size(), 3u);
  EXPECT_EQ(std::get<fm::EnumDomain>(m.root.attributes[0].domain).literals,
            (std::vector<std::string>{"Low", "High"}));
  EXPECT_TRUE(m.root.attributes[0].required);
  EXPECT_EQ(std::get<fm::IntRangeDomain>(m.root.attributes[1].domain), (fm::IntRangeDomain{1, 10}));
  EXPECT_TRUE(std::holds_alternative<fm::TextDomain>(m.root.attributes[2].domain));

  EXPECT_TRUE(has_code(fm::parse_model("featuremodel M root R { attribute a : int [5..1] }").diagnostics,
                       "INT_RANGE_INVALID"));
  EXPECT_TRUE(has_code(
      fm::parse_model("featuremodel M root R { attribute a : enum {X, X} }").diagnostics,
      "DUPLICATE_ENUM_LITERAL"));
  EXPECT_TRUE(has_code(
      fm::parse_model("featuremodel M root R { attribute a : text attribute a : text }").diagnostics,
      "DUPLICATE_ATTRIBUTE"));
}

TEST(ParseModel, GroupMembersElaboratedLater) {
  const auto m = must_parse(R"(featuremodel M root R {
    alternative {A, B}
    optional A [1..4] { mandatory C }
  })");
  ASSERT_EQ(m.root.groups.size(), 1u);
  const auto& g = m.root.groups[0];
  EXPECT_EQ(g.kind, fm::GroupKind::alternative);
  ASSERT_EQ(g.children.size(), 2u);
  EXPECT_EQ(g.children[0].cardinality, (fm::Cardinality{1, 4}));
  ASSERT_EQ(g.children[0].groups.size(), 1u);
  EXPECT_EQ(g.children[0].groups[0].children[0].name, "C");
}

TEST(ParseModel, MandatoryGroupMemberRejected) {
  auto r = fm::parse_model("featuremodel M root R { or {A, B} mandatory A }");
  EXPECT_TRUE(has_code(r.diagnostics, "MANDATORY_GROUP_MEMBER"));
}

TEST(ParseModel, UnicodeIdentifiersAndComments) {
  const auto m = must_parse("# primer\nfeaturemodel पाठ root मूल { optional शब्द_1 # trailing\n }");
  EXPECT_EQ(m.name, "पाठ");
  EXPECT_EQ(m.root.groups.at(0).children.at(0).name, "शब्द_1");
}

TEST(ParseModel, ConstraintsKeptInDeclarationOrder) {
  const auto m = must_parse(R"(featuremodel M root R {
    optional A { optional B constraint B requires C }
    optional C
    constraint A excludes C
  })");
  ASSERT_EQ(m.constraints.size(), 2u);
  EXPECT_EQ(m.constraints[0], (fm::CrossTreeConstraint{fm::ConstraintKind::requires_, "B", "C"}));
  EXPECT_EQ(m.constraints[1], (fm::CrossTreeConstraint{fm::ConstraintKind::excludes, "A", "C"}));
}

TEST(Presets, ShippedModelFilesMatchEmbeddedSources) {
  auto read = [](const std::string& name) {
    std::ifstream in(std::string(IDPL_SAMPLES_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  EXPECT_EQ(read("design_core.fm"), idpl::presets::design_core_model_source());
  EXPECT_EQ(read("adult_literacy.fm"), idpl::presets::adult_literacy_model_source());
}
