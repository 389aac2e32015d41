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

// Ordered chart-selection rules R1..R12. The first rule whose condition
// holds wins; goal conditions hold when any goal of the set satisfies them,
// and an absent scale type satisfies every scale condition. R12 always
// matches, so selection is total.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "reqviz/enums.hpp"
#include "reqviz/spec.hpp"

namespace reqviz {

struct DecisionRule {
  std::string_view id;         // "R1".."R12"
  std::string_view condition;  // human-readable
  std::string_view outcome;
  std::optional<GraphicType> (*match)(const VisualizationSpec&);
};

std::span<const DecisionRule> decision_rules();

struct Selection {
  GraphicType graphic = GraphicType::Table;
  std::string_view rule_id;
};

Selection select_graphic_type_traced(const VisualizationSpec& spec);
GraphicType select_graphic_type(const VisualizationSpec& spec);

/// The rule table as a Markdown table or a JSON array, one row per rule.
std::string export_rules_markdown();
std::string export_rules_json();

}  // namespace reqviz
