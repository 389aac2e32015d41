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

#include "reqviz/questionnaire.hpp"

#include <algorithm>

#include "reqviz/error.hpp"

namespace reqviz {

namespace {

std::string_view intent(VisualizationGoal goal) {
  switch (goal) {
    case VisualizationGoal::Composition: return "show how the parts make up the whole";
    case VisualizationGoal::Order: return "show the items in a meaningful order";
    case VisualizationGoal::Relationship: return "show how the variables relate to each other";
    case VisualizationGoal::Comparison: return "let you compare the items with each other";
    case VisualizationGoal::Cluster: return "reveal groups of similar items";
    case VisualizationGoal::Distribution: return "show how the values are distributed";
    case VisualizationGoal::Trend: return "show how the values evolve over time";
    case VisualizationGoal::Geospatial: return "show where things happen";
  }
  return "";
}

}  // namespace

std::vector<Question> build_questionnaire(const VisualizationRequirement& requirement,
                                          std::string_view information_goal) {
  std::vector<Question> out;
  out.reserve(requirement.goals.size());
  for (auto goal : requirement.goals) {
    out.push_back(Question{goal, std::string(name_of(goal)) + ": does the visualization " +
                                     std::string(intent(goal)) + " for \"" +
                                     std::string(information_goal) + "\"?"});
  }
  return out;
}

ValidationResult validate_visualization(const VisualizationModel& /*model*/,
                                        const VisualizationRequirement& requirement,
                                        const std::map<VisualizationGoal, bool>& answers,
                                        Timestamp now) {
  for (const auto& [goal, answer] : answers) {
    if (std::find(requirement.goals.begin(), requirement.goals.end(), goal) ==
        requirement.goals.end()) {
      throw Error(ErrorCode::UnknownGoal, "'" + requirement.name + "' has no " +
                                              std::string(name_of(goal)) + " goal");
    }
  }
  ValidationResult result;
  result.timestamp = now;
  std::vector<Diagnostic> missing;
  for (auto goal : requirement.goals) {
    auto it = answers.find(goal);
    if (it == answers.end()) {
      missing.push_back(Diagnostic{ErrorCode::IncompleteAnswers, std::string(wire_name(goal)),
                                   "no answer for " + std::string(name_of(goal)), {}});
    } else if (!it->second) {
      result.failed_goals.push_back(goal);
    }
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::IncompleteAnswers,
                std::to_string(missing.size()) + " goal(s) of '" + requirement.name +
                    "' are unanswered",
                std::move(missing));
  }
  result.status =
      result.failed_goals.empty() ? ValidationStatus::Validated : ValidationStatus::RequiresRevision;
  return result;
}

}  // namespace reqviz
