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

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "reqviz/enums.hpp"
#include "reqviz/goal_model.hpp"
#include "reqviz/timestamp.hpp"
#include "reqviz/vis_model.hpp"

namespace reqviz {

struct Question {
  VisualizationGoal goal = VisualizationGoal::Composition;
  std::string text;

  bool operator==(const Question&) const = default;
};

struct ValidationResult {
  ValidationStatus status = ValidationStatus::Validated;
  std::vector<VisualizationGoal> failed_goals;  // requirement order
  Timestamp timestamp{};

  bool operator==(const ValidationResult&) const = default;
};

/// One yes/no question per visualization goal, in declaration order.
std::vector<Question> build_questionnaire(const VisualizationRequirement& requirement,
                                          std::string_view information_goal);

/// Validated iff every answer is yes. Throws Error(IncompleteAnswers) when a
/// goal of the requirement has no answer and Error(UnknownGoal) when an
/// answer names a goal the requirement does not have.
ValidationResult validate_visualization(const VisualizationModel& model,
                                        const VisualizationRequirement& requirement,
                                        const std::map<VisualizationGoal, bool>& answers,
                                        Timestamp now = now_utc());

}  // namespace reqviz
