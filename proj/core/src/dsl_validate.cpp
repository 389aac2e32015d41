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

#include <map>
#include <set>

#include "reqviz/dsl.hpp"

namespace reqviz {

namespace {

class Validator {
 public:
  std::vector<Diagnostic> run(const GoalModel& model) {
    if (model.process.name.empty()) {
      add(ErrorCode::MissingBusinessProcess, "process", "the model declares no business process");
    }
    if (model.actor.name.empty()) {
      add(ErrorCode::MissingActor, "actor", "the model declares no visualization actor");
    }
    if (model.strategic_goals.empty()) {
      add(ErrorCode::EmptyMultiplicity, "strategic",
          "at least one strategic goal is required");
    }
    for (std::size_t s = 0; s < model.strategic_goals.size(); ++s) {
      strategic(model.strategic_goals[s], "strategic[" + std::to_string(s) + "]");
    }
    return std::move(out_);
  }

 private:
  void add(ErrorCode code, std::string path, std::string message) {
    out_.push_back(Diagnostic{code, std::move(path), std::move(message), {}});
  }

  void require_name(const std::string& name, const std::string& path, std::string_view what) {
    if (name.empty()) add(ErrorCode::InvalidName, path, std::string(what) + " name is empty");
  }

  void strategic(const StrategicGoal& goal, const std::string& path) {
    require_name(goal.name, path, "strategic goal");
    if (goal.analyses.empty()) {
      add(ErrorCode::EmptyMultiplicity, path + "/analysis",
          "strategic goal '" + goal.name + "' needs at least one analysis");
    }
    for (std::size_t a = 0; a < goal.analyses.size(); ++a) {
      const auto& analysis = goal.analyses[a];
      const std::string apath = path + "/analysis[" + std::to_string(a) + "]";
      if (analysis.decision_goals.empty()) {
        add(ErrorCode::EmptyMultiplicity, apath + "/decision",
            "analysis needs at least one decision goal");
      }
      for (std::size_t d = 0; d < analysis.decision_goals.size(); ++d) {
        decision(analysis.decision_goals[d], apath + "/decision[" + std::to_string(d) + "]");
      }
    }
  }

  void decision(const DecisionGoal& goal, const std::string& path) {
    require_name(goal.name, path, "decision goal");
    if (goal.information_goals.empty()) {
      add(ErrorCode::EmptyMultiplicity, path + "/information",
          "decision goal '" + goal.name + "' needs at least one information goal");
    }
    for (std::size_t i = 0; i < goal.information_goals.size(); ++i) {
      const auto& info = goal.information_goals[i];
      const std::string ipath = path + "/information[" + std::to_string(i) + "]";
      require_name(info.name, ipath, "information goal");
      if (!info.visualization) {
        add(ErrorCode::EmptyMultiplicity, ipath + "/visualization",
            "information goal '" + info.name + "' needs exactly one visualization");
        continue;
      }
      visualization(*info.visualization, ipath + "/visualization");
    }
  }

  template <typename E>
  void unique_literals(const std::vector<E>& items, const std::string& path,
                       std::string_view what) {
    std::set<E> seen;
    for (E item : items) {
      if (!seen.insert(item).second) {
        add(ErrorCode::DuplicateLiteral, path,
            "duplicate " + std::string(what) + " '" + std::string(name_of(item)) + "'");
      }
    }
  }

  void visualization(const VisualizationRequirement& vis, const std::string& path) {
    const std::string id = slugify(vis.name);
    if (id.empty()) {
      add(ErrorCode::InvalidName, path,
          "visualization name must contain at least one letter or digit");
    } else if (auto [it, inserted] = ids_.emplace(id, path); !inserted) {
      add(ErrorCode::DuplicateName, path,
          "visualization id '" + id + "' already used at " + it->second);
    }
    if (vis.goals.empty()) {
      add(ErrorCode::EmptyMultiplicity, path + "/goals",
          "visualization '" + vis.name + "' needs at least one goal in the goals slot");
    }
    if (vis.interactions.empty()) {
      add(ErrorCode::EmptyMultiplicity, path + "/interactions",
          "visualization '" + vis.name + "' needs at least one interaction");
    }
    if (vis.sources.empty()) {
      add(ErrorCode::EmptyMultiplicity, path + "/source",
          "visualization '" + vis.name + "' needs at least one data source");
    }
    unique_literals(vis.goals, path + "/goals", "visualization goal");
    unique_literals(vis.interactions, path + "/interactions", "interaction type");
    for (std::size_t k = 0; k < vis.sources.size(); ++k) {
      source(vis.sources[k], path + "/source[" + std::to_string(k) + "]");
    }
  }

  void source(const DatasourceResource& src, const std::string& path) {
    if (src.uri.empty()) add(ErrorCode::InvalidName, path, "data source path is empty");
    if (src.categories.empty() && src.measures.empty()) {
      add(ErrorCode::EmptyMultiplicity, path,
          "data source '" + src.uri + "' selects no category or measure");
    }
    std::set<std::string> categories;
    for (std::size_t j = 0; j < src.categories.size(); ++j) {
      const auto& c = src.categories[j];
      const std::string cpath = path + "/category[" + std::to_string(j) + "]";
      if (c.empty()) add(ErrorCode::InvalidName, cpath, "category name is empty");
      if (!categories.insert(c).second) {
        add(ErrorCode::DuplicateAttribute, cpath, "category '" + c + "' is listed twice");
      }
    }
    std::set<std::string> measures;
    for (std::size_t j = 0; j < src.measures.size(); ++j) {
      const auto& m = src.measures[j];
      const std::string mpath = path + "/measure[" + std::to_string(j) + "]";
      if (m.empty()) add(ErrorCode::InvalidName, mpath, "measure name is empty");
      if (!measures.insert(m).second) {
        add(ErrorCode::DuplicateAttribute, mpath, "measure '" + m + "' is listed twice");
      } else if (categories.contains(m)) {
        add(ErrorCode::OverlappingAttribute, mpath,
            "'" + m + "' is declared as both category and measure");
      }
    }
    for (const auto& [attr, scale] : src.type_overrides) {
      if (!categories.contains(attr) && !measures.contains(attr)) {
        add(ErrorCode::UnknownAttribute, path + "/type[" + attr + "]",
            "type override for '" + attr + "', which is not a selected category or measure");
      }
    }
    auto column = [&](const std::string& name, std::string_view what) {
      if (name.empty()) {
        add(ErrorCode::InvalidName, path + "/shape", std::string(what) + " column is empty");
      }
    };
    if (const auto* tree = std::get_if<TreeShape>(&src.shape)) {
      column(tree->parent_column, "tree parent");
      column(tree->id_column, "tree id");
    } else if (const auto* graph = std::get_if<GraphShape>(&src.shape)) {
      column(graph->source_column, "graph source");
      column(graph->target_column, "graph target");
    }
  }

  std::vector<Diagnostic> out_;
  std::map<std::string, std::string> ids_;
};

}  // namespace

std::vector<Diagnostic> validate_goal_model(const GoalModel& model) {
  return Validator{}.run(model);
}

}  // namespace reqviz
