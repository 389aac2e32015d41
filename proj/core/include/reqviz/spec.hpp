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

#include <optional>
#include <string>
#include <vector>

#include "reqviz/enums.hpp"
#include "reqviz/goal_model.hpp"
#include "reqviz/profiler.hpp"

namespace reqviz {

/// The seven coordinates chart selection works on. An unset scale type is
/// the absent marker: the selection had no category (or no measure).
struct VisualizationSpec {
  std::vector<VisualizationGoal> goals;
  std::vector<InteractionType> interactions;
  ActorKind user = ActorKind::Lay;
  Dimensionality dimensionality = Dimensionality::OneDimensional;
  CardinalityClass cardinality;
  std::optional<ScaleType> independent_type;
  std::optional<ScaleType> dependent_type;

  bool operator==(const VisualizationSpec&) const = default;
};

/// Joins a requirement's goals and interactions with the profile of its
/// (single) source. Throws Error(ProfileMismatch) when the profiled
/// attributes differ from the requirement's, and
/// Error(UnsupportedMultiSource) for more than one source.
VisualizationSpec assemble_spec(const VisualizationRequirement& requirement, ActorKind user,
                                const DataProfile& profile);

/// "Composition & Comparison, Overview, Lay, n-dimensional, Low, Nominal, Ratio".
/// Absent scale types print as "absent".
std::string format_spec(const VisualizationSpec& spec);

}  // namespace reqviz
