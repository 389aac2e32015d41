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

#include "reqviz/spec.hpp"

#include <set>

#include "reqviz/error.hpp"

namespace reqviz {

VisualizationSpec assemble_spec(const VisualizationRequirement& requirement, ActorKind user,
                                const DataProfile& profile) {
  if (requirement.sources.size() != 1) {
    throw Error(ErrorCode::UnsupportedMultiSource,
                "visualization '" + requirement.name + "' must have exactly one source, found " +
                    std::to_string(requirement.sources.size()));
  }
  const auto& source = requirement.sources.front();
  std::set<std::string> wanted;
  for (const auto& a : source.attributes()) wanted.insert(a);
  std::set<std::string> profiled;
  for (const auto& [name, type] : profile.attribute_types) profiled.insert(name);
  if (wanted != profiled) {
    std::string detail;
    for (const auto& a : wanted) {
      if (!profiled.contains(a)) detail += " missing '" + a + "'";
    }
    for (const auto& a : profiled) {
      if (!wanted.contains(a)) detail += " unexpected '" + a + "'";
    }
    throw Error(ErrorCode::ProfileMismatch,
                "profile does not match the attributes of '" + requirement.name + "':" + detail);
  }
  if (profile.independent_type.has_value() != !source.categories.empty() ||
      profile.dependent_type.has_value() != !source.measures.empty()) {
    throw Error(ErrorCode::ProfileMismatch,
                "profile scale types do not match the category/measure split of '" +
                    requirement.name + "'");
  }

  VisualizationSpec spec;
  spec.goals = requirement.goals;
  spec.interactions = requirement.interactions;
  spec.user = user;
  spec.dimensionality = profile.dimensionality;
  spec.cardinality = profile.cardinality;
  spec.independent_type = profile.independent_type;
  spec.dependent_type = profile.dependent_type;
  return spec;
}

namespace {

template <typename E>
std::string join(const std::vector<E>& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += " & ";
    out += name_of(v);
  }
  return out.empty() ? "none" : out;
}

std::string scale(const std::optional<ScaleType>& t) {
  return t ? std::string(name_of(*t)) : "absent";
}

}  // namespace

std::string format_spec(const VisualizationSpec& spec) {
  return join(spec.goals) + ", " + join(spec.interactions) + ", " +
         std::string(name_of(spec.user)) + ", " +
         std::string(display_label(spec.dimensionality)) + ", " +
         std::string(name_of(spec.cardinality.kind)) + ", " + scale(spec.independent_type) +
         ", " + scale(spec.dependent_type);
}

}  // namespace reqviz
