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

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "rule_oracle.hpp"

namespace reqviz {
namespace {

std::vector<std::optional<ScaleType>> scales_with_absent() {
  std::vector<std::optional<ScaleType>> out = {std::nullopt};
  for (auto t : all_values<ScaleType>()) out.emplace_back(t);
  return out;
}

VisualizationSpec make_spec(std::vector<VisualizationGoal> goals, ActorKind user, Dimensionality d,
                            Cardinality c, std::optional<ScaleType> ind,
                            std::optional<ScaleType> dep) {
  VisualizationSpec s;
  s.goals = std::move(goals);
  s.interactions = {InteractionType::Overview};
  s.user = user;
  s.dimensionality = d;
  s.cardinality = {c, c == Cardinality::Low ? 5u : 500u};
  s.independent_type = ind;
  s.dependent_type = dep;
  return s;
}

TEST(DecisionTable, CaseStudyTuple) {
  const auto s = make_spec({VisualizationGoal::Composition, VisualizationGoal::Comparison},
                           ActorKind::Lay, Dimensionality::NDimensional, Cardinality::Low,
                           ScaleType::Nominal, ScaleType::Ratio);
  const Selection sel = select_graphic_type_traced(s);
  EXPECT_EQ(sel.graphic, GraphicType::StackedColumnChart);
  EXPECT_EQ(sel.rule_id, "R5");
  EXPECT_EQ(format_spec(s),
            "Composition & Comparison, Overview, Lay, n-dimensional, Low, Nominal, Ratio");
}

TEST(DecisionTable, TrendIsLineChartAtAnyCardinality) {
  for (auto user : all_values<ActorKind>()) {
    const auto s = make_spec({VisualizationGoal::Trend}, user, Dimensionality::TwoDimensional,
                             Cardinality::High, ScaleType::Interval, ScaleType::Ratio);
    EXPECT_EQ(select_graphic_type(s), GraphicType::LineChart);
  }
  const auto area = make_spec({VisualizationGoal::Trend, VisualizationGoal::Composition},
                              ActorKind::Lay, Dimensionality::TwoDimensional, Cardinality::High,
                              ScaleType::Ordinal, ScaleType::Ratio);
  EXPECT_EQ(select_graphic_type(area), GraphicType::AreaChart);
}

TEST(DecisionTable, InteractionNeverChangesTheOutcome) {
  auto s = make_spec({VisualizationGoal::Comparison}, ActorKind::Lay,
                     Dimensionality::TwoDimensional, Cardinality::Low, ScaleType::Nominal,
                     ScaleType::Ratio);
  const auto base = select_graphic_type(s);
  for (auto i : all_values<InteractionType>()) {
    s.interactions = {i};
    EXPECT_EQ(select_graphic_type(s), base);
  }
}

TEST(DecisionTable, ExhaustiveSingleGoalSpaceMatchesOracle) {
  std::size_t tuples = 0, typed_tuples = 0;
  for (auto goal : all_values<VisualizationGoal>()) {
    for (auto user : all_values<ActorKind>()) {
      for (auto dim : all_values<Dimensionality>()) {
        for (auto card : all_values<Cardinality>()) {
          for (auto ind : scales_with_absent()) {
            for (auto dep : scales_with_absent()) {
              const auto s = make_spec({goal}, user, dim, card, ind, dep);
              const auto expected = testing::oracle_select(s);
              const auto got = select_graphic_type_traced(s);
              ASSERT_EQ(got.graphic, expected.graphic) << format_spec(s);
              ASSERT_EQ(got.rule_id, "R" + std::to_string(expected.rule)) << format_spec(s);
              ASSERT_EQ(select_graphic_type(s), got.graphic);
              ++tuples;
              if (ind && dep) ++typed_tuples;
            }
          }
        }
      }
    }
  }
  EXPECT_EQ(typed_tuples, 2560u);
  EXPECT_EQ(tuples, 4000u);
}

TEST(DecisionTable, GoalPairsMatchOracle) {
  const auto goals = all_values<VisualizationGoal>();
  for (std::size_t a = 0; a < goals.size(); ++a) {
    for (std::size_t b = 0; b < goals.size(); ++b) {
      if (a == b) continue;
      for (auto user : all_values<ActorKind>()) {
        for (auto dim : all_values<Dimensionality>()) {
          for (auto card : all_values<Cardinality>()) {
            for (auto ind : scales_with_absent()) {
              for (auto dep : scales_with_absent()) {
                const auto s = make_spec({goals[a], goals[b]}, user, dim, card, ind, dep);
                ASSERT_EQ(select_graphic_type(s), testing::oracle_select(s).graphic)
                    << format_spec(s);
              }
            }
          }
        }
      }
    }
  }
}

TEST(DecisionTable, GoalOrderDoesNotMatter) {
  const auto s1 = make_spec({VisualizationGoal::Distribution, VisualizationGoal::Comparison},
                            ActorKind::Tech, Dimensionality::TwoDimensional, Cardinality::High,
                            ScaleType::Ordinal, ScaleType::Ratio);
  auto s2 = s1;
  std::reverse(s2.goals.begin(), s2.goals.end());
  EXPECT_EQ(select_graphic_type(s1), select_graphic_type(s2));
  EXPECT_EQ(select_graphic_type(s1), GraphicType::Histogram);
}

TEST(DecisionTable, LayAndTechDifferOnlyInRule11) {
  const auto lay = make_spec({VisualizationGoal::Comparison}, ActorKind::Lay,
                             Dimensionality::NDimensional, Cardinality::High, ScaleType::Nominal,
                             ScaleType::Ratio);
  auto tech = lay;
  tech.user = ActorKind::Tech;
  EXPECT_EQ(select_graphic_type(lay), GraphicType::Table);
  EXPECT_EQ(select_graphic_type(tech), GraphicType::Heatmap);
  EXPECT_EQ(select_graphic_type_traced(lay).rule_id, "R11");
}

TEST(DecisionTable, ExportsListEveryRule) {
  const auto rules = decision_rules();
  ASSERT_EQ(rules.size(), 12u);
  const std::string md = export_rules_markdown();
  for (const auto& r : rules) {
    EXPECT_NE(md.find("| " + std::string(r.id) + " |"), std::string::npos) << r.id;
  }
  const auto doc = nlohmann::json::parse(export_rules_json());
  ASSERT_EQ(doc.size(), 12u);
  EXPECT_EQ(doc[4]["id"], "R5");
  EXPECT_EQ(doc[4]["outcome"], "StackedColumnChart");
  EXPECT_EQ(doc[11]["id"], "R12");
}

}  // namespace
}  // namespace reqviz
