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

// Goal-oriented user requirements model: an actor pursuing strategic goals
// within one business process, refined through analyses, decision goals and
// information goals down to the visualizations that answer them.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "reqviz/enums.hpp"

namespace reqviz {

struct VisualizationActor {
  std::string name;
  ActorKind kind = ActorKind::Lay;

  bool operator==(const VisualizationActor&) const = default;
};

struct BusinessProcess {
  std::string name;

  bool operator==(const BusinessProcess&) const = default;
};

struct FlatShape {
  bool operator==(const FlatShape&) const = default;
};

/// Each row is a node; `parent_column` points at the parent's id (null for roots).
struct TreeShape {
  std::string parent_column;
  std::string id_column;

  bool operator==(const TreeShape&) const = default;
};

/// Each row is an edge between two node ids.
struct GraphShape {
  std::string source_column;
  std::string target_column;

  bool operator==(const GraphShape&) const = default;
};

using SourceShape = std::variant<FlatShape, TreeShape, GraphShape>;

struct DatasourceResource {
  std::string uri;
  SourceShape shape;
  std::vector<std::string> categories;
  std::vector<std::string> measures;
  std::map<std::string, ScaleType> type_overrides;

  /// Categories followed by measures, in declaration order.
  std::vector<std::string> attributes() const;

  bool operator==(const DatasourceResource&) const = default;
};

struct VisualizationRequirement {
  std::string name;
  std::vector<VisualizationGoal> goals;  // declaration order, no duplicates
  std::vector<InteractionType> interactions;
  std::vector<DatasourceResource> sources;

  bool operator==(const VisualizationRequirement&) const = default;
};

struct InformationGoal {
  std::string name;
  // Exactly one in a valid model; optional so the validator can report it.
  std::optional<VisualizationRequirement> visualization;

  bool operator==(const InformationGoal&) const = default;
};

struct DecisionGoal {
  std::string name;
  std::vector<InformationGoal> information_goals;

  bool operator==(const DecisionGoal&) const = default;
};

struct AnalysisType {
  AnalysisKind kind = AnalysisKind::Descriptive;
  std::vector<DecisionGoal> decision_goals;

  bool operator==(const AnalysisType&) const = default;
};

struct StrategicGoal {
  std::string name;
  std::vector<AnalysisType> analyses;

  bool operator==(const StrategicGoal&) const = default;
};

struct GoalModel {
  VisualizationActor actor;
  BusinessProcess process;
  std::vector<StrategicGoal> strategic_goals;

  bool operator==(const GoalModel&) const = default;
};

/// Flattened view of one visualization in a goal model.
struct VisualizationRef {
  std::string id;  // slug of the visualization name
  std::string path;
  const InformationGoal* information_goal = nullptr;
  const VisualizationRequirement* requirement = nullptr;
};

/// Lowercase ASCII slug: runs of non-alphanumerics collapse to '-'.
std::string slugify(std::string_view name);

/// All visualizations in document order. References point into `model`.
std::vector<VisualizationRef> list_visualizations(const GoalModel& model);

/// Looks a visualization up by id, visualization name or information-goal name.
std::optional<VisualizationRef> find_visualization(const GoalModel& model, std::string_view key);

}  // namespace reqviz
