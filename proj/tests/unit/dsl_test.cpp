// Copyright 2026 The reqviz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "reqviz/dsl.hpp"

namespace reqviz {
namespace {

using testing::kCaseStudyGoals;
using testing::read_fixture;

bool has_code(const std::vector<Diagnostic>& diags, ErrorCode code) {
  for (const auto& d : diags) {
    if (d.code == code) return true;
  }
  return false;
}

TEST(GoalModelDsl, CaseStudyShape) {
  const GoalModel m = parse_goal_model_or_throw(read_fixture(kCaseStudyGoals));
  EXPECT_EQ(m.actor.name, "Tax collector");
  EXPECT_EQ(m.actor.kind, ActorKind::Lay);
  EXPECT_EQ(m.process.name, "Tax collection");
  ASSERT_EQ(m.strategic_goals.size(), 1u);
  EXPECT_EQ(m.strategic_goals[0].name, "Reduce the unpaid bills");
  ASSERT_EQ(m.strategic_goals[0].analyses.size(), 1u);
  const auto& analysis = m.strategic_goals[0].analyses[0];
  EXPECT_EQ(analysis.kind, AnalysisKind::Diagnostic);
  EXPECT_EQ(analysis.decision_goals.size(), 3u);

  const auto vis = list_visualizations(m);
  ASSERT_EQ(vis.size(), 4u);
  const auto ref = find_visualization(m, "Identify the type of unpaid bills");
  ASSERT_TRUE(ref);
  const auto& req = *ref->requirement;
  EXPECT_EQ(req.goals,
            (std::vector<VisualizationGoal>{VisualizationGoal::Composition,
                                            VisualizationGoal::Comparison}));
  EXPECT_EQ(req.interactions, std::vector<InteractionType>{InteractionType::Overview});
  ASSERT_EQ(req.sources.size(), 1u);
  EXPECT_EQ(req.sources[0].categories, (std::vector<std::string>{"Type", "Province"}));
  EXPECT_EQ(req.sources[0].measures, std::vector<std::string>{"Amount"});
}

TEST(GoalModelDsl, EmptyGoalsSlotIsReported) {
  const std::string text = R"(actor "A" : Lay
process "P"
strategic "S" {
  analysis Descriptive {
    decision "D" {
      information "I" {
        visualization "V" {
          goals:
          interactions: Overview
          source "x.csv" {
            measure "m"
          }
        }
      }
    }
  }
}
)";
  const auto r = parse_goal_model(text);
  ASSERT_FALSE(r.ok());
  bool found = false;
  for (const auto& d : r.diagnostics) {
    if (d.code == ErrorCode::EmptyMultiplicity && d.path.find("goals") != std::string::npos) {
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(GoalModelDsl, MissingProcessAndActor) {
  const auto r = parse_goal_model("strategic \"S\" {\n}\n");
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(has_code(r.diagnostics, ErrorCode::MissingBusinessProcess));
  EXPECT_TRUE(has_code(r.diagnostics, ErrorCode::MissingActor));
}

TEST(GoalModelDsl, UnknownLiteralHasLocation) {
  std::string text = read_fixture(kCaseStudyGoals);
  text.replace(text.find("goals: Trend"), 12, "goals: Trendy");
  const auto r = parse_goal_model(text);
  ASSERT_FALSE(r.ok());
  ASSERT_TRUE(has_code(r.diagnostics, ErrorCode::UnknownLiteral));
  EXPECT_GT(r.diagnostics.front().location.line, 0);
}

TEST(GoalModelDsl, DuplicateAndOverlappingAttributes) {
  GoalModel m = parse_goal_model_or_throw(read_fixture(kCaseStudyGoals));
  auto& src = m.strategic_goals[0].analyses[0].decision_goals[0].information_goals[1]
                  .visualization->sources[0];
  src.categories.push_back("Type");
  src.measures.push_back("Province");
  const auto diags = validate_goal_model(m);
  EXPECT_TRUE(has_code(diags, ErrorCode::DuplicateAttribute));
  EXPECT_TRUE(has_code(diags, ErrorCode::OverlappingAttribute));
}

TEST(GoalModelDsl, DuplicateVisualizationIds) {
  GoalModel m = parse_goal_model_or_throw(read_fixture(kCaseStudyGoals));
  auto& infos = m.strategic_goals[0].analyses[0].decision_goals[0].information_goals;
  infos[1].visualization->name = "unpaid BILLS by place";
  EXPECT_TRUE(has_code(validate_goal_model(m), ErrorCode::DuplicateName));
}

TEST(GoalModelDsl, CanonicalFormIsFixedPoint) {
  const GoalModel m = parse_goal_model_or_throw(read_fixture(kCaseStudyGoals));
  const std::string once = serialize_goal_model(m);
  EXPECT_EQ(serialize_goal_model(parse_goal_model_or_throw(once)), once);
  EXPECT_EQ(parse_goal_model_or_throw(once), m);
}

TEST(GoalModelDsl, CommentsAndContinuedLists) {
  std::string text = read_fixture(kCaseStudyGoals);
  text.replace(text.find("goals: Composition, Comparison"), 30,
               "# why\n          goals: Composition,\n            Comparison  # trailing");
  const GoalModel m = parse_goal_model_or_throw(text);
  EXPECT_EQ(m, parse_goal_model_or_throw(read_fixture(kCaseStudyGoals)));
}

TEST(GoalModelDsl, GarbageNeverThrows) {
  testing::Gen g(7);
  const std::string alphabet = "{}\":,#\n abcxyz\\\t0";
  for (int i = 0; i < 300; ++i) {
    std::string text;
    const std::size_t n = g.below(200);
    for (std::size_t k = 0; k < n; ++k) text.push_back(alphabet[g.below(alphabet.size())]);
    ParseResult r;
    EXPECT_NO_THROW(r = parse_goal_model(text));
    EXPECT_EQ(r.ok(), r.diagnostics.empty());
  }
}

TEST(GoalModelDslProperty, RoundTripOfGeneratedModels) {
  testing::Gen g(20260101);
  constexpr int kInstances = 600;
  int checked = 0;
  for (int i = 0; i < kInstances; ++i) {
    const GoalModel m = testing::random_goal_model(g);
    ASSERT_TRUE(validate_goal_model(m).empty()) << "generator produced an invalid model";
    const std::string text = serialize_goal_model(m);
    const auto r = parse_goal_model(text);
    ASSERT_TRUE(r.ok()) << (r.diagnostics.empty() ? "" : format_diagnostic(r.diagnostics[0]))
                        << "\n"
                        << text;
    ASSERT_EQ(*r.model, m) << text;
    ASSERT_EQ(serialize_goal_model(*r.model), text);
    ++checked;
  }
  EXPECT_EQ(checked, kInstances);
}

}  // namespace
}  // namespace reqviz
