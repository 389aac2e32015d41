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

#include "reqviz/goal_model.hpp"

namespace reqviz {

std::vector<std::string> DatasourceResource::attributes() const {
  std::vector<std::string> out = categories;
  out.insert(out.end(), measures.begin(), measures.end());
  return out;
}

std::string slugify(std::string_view name) {
  std::string out;
  bool pending_dash = false;
  for (char raw : name) {
    char c = raw;
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    const bool alnum = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
    if (alnum) {
      if (pending_dash && !out.empty()) out.push_back('-');
      pending_dash = false;
      out.push_back(c);
    } else {
      pending_dash = true;
    }
  }
  return out;
}

std::vector<VisualizationRef> list_visualizations(const GoalModel& model) {
  std::vector<VisualizationRef> out;
  for (std::size_t s = 0; s < model.strategic_goals.size(); ++s) {
    const auto& strategic = model.strategic_goals[s];
    for (std::size_t a = 0; a < strategic.analyses.size(); ++a) {
      const auto& analysis = strategic.analyses[a];
      for (std::size_t d = 0; d < analysis.decision_goals.size(); ++d) {
        const auto& decision = analysis.decision_goals[d];
        for (std::size_t i = 0; i < decision.information_goals.size(); ++i) {
          const auto& info = decision.information_goals[i];
          if (!info.visualization) continue;
          VisualizationRef ref;
          ref.id = slugify(info.visualization->name);
          ref.path = "strategic[" + std::to_string(s) + "]/analysis[" + std::to_string(a) +
                     "]/decision[" + std::to_string(d) + "]/information[" + std::to_string(i) +
                     "]/visualization";
          ref.information_goal = &info;
          ref.requirement = &*info.visualization;
          out.push_back(std::move(ref));
        }
      }
    }
  }
  return out;
}

std::optional<VisualizationRef> find_visualization(const GoalModel& model, std::string_view key) {
  auto all = list_visualizations(model);
  for (auto& ref : all) {
    if (ref.id == key) return ref;
  }
  for (auto& ref : all) {
    if (ref.requirement->name == key || ref.information_goal->name == key) return ref;
  }
  const std::string slug = slugify(key);
  for (auto& ref : all) {
    if (!slug.empty() && ref.id == slug) return ref;
  }
  return std::nullopt;
}

}  // namespace reqviz
