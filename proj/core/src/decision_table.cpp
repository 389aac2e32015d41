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

#include "reqviz/decision_table.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <nlohmann/json.hpp>

namespace reqviz {

namespace {

using G = VisualizationGoal;
using S = ScaleType;
using D = Dimensionality;

bool has_goal(const VisualizationSpec& s, G goal) {
  return std::find(s.goals.begin(), s.goals.end(), goal) != s.goals.end();
}

bool has_any_goal(const VisualizationSpec& s, std::initializer_list<G> goals) {
  return std::any_of(goals.begin(), goals.end(), [&](G g) { return has_goal(s, g); });
}

// Absent marker is a wildcard.
bool scale_in(const std::optional<S>& t, std::initializer_list<S> allowed) {
  return !t || std::find(allowed.begin(), allowed.end(), *t) != allowed.end();
}

bool low(const VisualizationSpec& s) { return s.cardinality.kind == Cardinality::Low; }

constexpr std::array<DecisionRule, 12> kRules = {{
    {"R1", "dimensionality Tree", "Treemap",
     [](const VisualizationSpec& s) -> std::optional<GraphicType> {
       if (s.dimensionality == D::Tree) return GraphicType::Treemap;
       return std::nullopt;
     }},
    {"R2", "dimensionality Graph", "NodeLinkGraph",
     [](const VisualizationSpec& s) -> std::optional<GraphicType> {
       if (s.dimensionality == D::Graph) return GraphicType::NodeLinkGraph;
       return std::nullopt;
     }},
    {"R3", "goal Geospatial", "ChoroplethMap",
     [](const VisualizationSpec& s) -> std::optional<GraphicType> {
       if (has_goal(s, G::Geospatial)) return GraphicType::ChoroplethMap;
       return std::nullopt;
     }},
    {"R4", "dimensionality OneDimensional", "SingleValueCard",
     [](const VisualizationSpec& s) -> std::optional<GraphicType> {
       if (s.dimensionality == D::OneDimensional) return GraphicType::SingleValueCard;
       return std::nullopt;
     }},
    {"R5",
     "goals include Composition and Comparison, NDimensional, Low, independent "
     "Nominal|Ordinal, dependent Interval|Ratio",
     "StackedColumnChart",
     [](const VisualizationSpec& s) -> std::optional<GraphicType> {
       if (has_goal(s, G::Composition) && has_goal(s, G::Comparison) &&
           s.dimensionality == D::NDimensional && low(s) &&
           scale_in(s.independent_type, {S::Nominal, S::Ordinal}) &&
           scale_in(s.dependent_type, {S::Interval, S::Ratio})) {
         return GraphicType::StackedColumnChart;
       }
       return std::nullopt;
     }},
    {"R6",
     "goal Comparison|Order, TwoDimensional, Low, independent Nominal|Ordinal, dependent "
     "Interval|Ratio",
     "ColumnChart",
     [](const VisualizationSpec& s) -> std::optional<GraphicType> {
       if (has_any_goal(s, {G::Comparison, G::Order}) && s.dimensionality == D::TwoDimensional &&
           low(s) && scale_in(s.independent_type, {S::Nominal, S::Ordinal}) &&
           scale_in(s.dependent_type, {S::Interval, S::Ratio})) {
         return GraphicType::ColumnChart;
       }
       return std::nullopt;
     }},
    {"R7", "goal Trend, independent Ordinal|Interval, dependent Interval|Ratio",
     "LineChart; AreaChart when goals also include Composition",
     [](const VisualizationSpec& s) -> std::optional<GraphicType> {
       if (has_goal(s, G::Trend) && scale_in(s.independent_type, {S::Ordinal, S::Interval}) &&
           scale_in(s.dependent_type, {S::Interval, S::Ratio})) {
         return has_goal(s, G::Composition) ? GraphicType::AreaChart : GraphicType::LineChart;
       }
       return std::nullopt;
     }},
    {"R8", "goal Composition, TwoDimensional, Low", "PieChart",
     [](const VisualizationSpec& s) -> std::optional<GraphicType> {
       if (has_goal(s, G::Composition) && s.dimensionality == D::TwoDimensional && low(s)) {
         return GraphicType::PieChart;
       }
       return std::nullopt;
     }},
    {"R9", "goal Distribution, dependent Interval|Ratio, High", "Histogram",
     [](const VisualizationSpec& s) -> std::optional<GraphicType> {
       if (has_goal(s, G::Distribution) && scale_in(s.dependent_type, {S::Interval, S::Ratio}) &&
           !low(s)) {
         return GraphicType::Histogram;
       }
       return std::nullopt;
     }},
    {"R10", "goal Relationship|Cluster, independent Interval|Ratio, dependent Interval|Ratio",
     "ScatterPlot when TwoDimensional; BubbleChart when NDimensional",
     [](const VisualizationSpec& s) -> std::optional<GraphicType> {
       if (has_any_goal(s, {G::Relationship, G::Cluster}) &&
           scale_in(s.independent_type, {S::Interval, S::Ratio}) &&
           scale_in(s.dependent_type, {S::Interval, S::Ratio})) {
         if (s.dimensionality == D::TwoDimensional) return GraphicType::ScatterPlot;
         if (s.dimensionality == D::NDimensional) return GraphicType::BubbleChart;
       }
       return std::nullopt;
     }},
    {"R11", "NDimensional, High, independent Nominal, dependent Interval|Ratio",
     "Heatmap for Tech users; Table for Lay users",
     [](const VisualizationSpec& s) -> std::optional<GraphicType> {
       if (s.dimensionality == D::NDimensional && !low(s) &&
           scale_in(s.independent_type, {S::Nominal}) &&
           scale_in(s.dependent_type, {S::Interval, S::Ratio})) {
         return s.user == ActorKind::Tech ? GraphicType::Heatmap : GraphicType::Table;
       }
       return std::nullopt;
     }},
    {"R12", "otherwise", "Table",
     [](const VisualizationSpec&) -> std::optional<GraphicType> { return GraphicType::Table; }},
}};

}  // namespace

std::span<const DecisionRule> decision_rules() { return kRules; }

Selection select_graphic_type_traced(const VisualizationSpec& spec) {
  for (const auto& rule : kRules) {
    if (auto graphic = rule.match(spec)) return Selection{*graphic, rule.id};
  }
  return Selection{GraphicType::Table, kRules.back().id};  // unreachable: R12 is total
}

GraphicType select_graphic_type(const VisualizationSpec& spec) {
  return select_graphic_type_traced(spec).graphic;
}

std::string export_rules_markdown() {
  std::string out = "| Rule | Condition | Graphic type |\n|---|---|---|\n";
  for (const auto& rule : kRules) {
    out += "| " + std::string(rule.id) + " | " + std::string(rule.condition) + " | " +
           std::string(rule.outcome) + " |\n";
  }
  return out;
}

std::string export_rules_json() {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& rule : kRules) {
    rows.push_back({{"id", rule.id}, {"condition", rule.condition}, {"outcome", rule.outcome}});
  }
  return rows.dump(2) + "\n";
}

}  // namespace reqviz
