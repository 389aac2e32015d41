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
#include <vector>

#include "reqviz/enums.hpp"
#include "reqviz/goal_model.hpp"
#include "reqviz/spec.hpp"
#include "reqviz/vis_model.hpp"

namespace reqviz {

/// One axis per attribute with the default channel assignment:
///   first category -> X, first measure -> Y,
///   further categories -> Color then Detail,
///   further measures -> Size then Detail.
/// A selection without categories puts its second measure on X; one
/// without measures puts its second category on Y. The X axis (else the
/// first axis) holds the order role.
///
/// `attribute_types` supplies each axis's scale type; unlisted categories
/// default to Nominal and unlisted measures to Ratio.
///
/// Throws Error(TooManyAttributes) when no free channel remains and
/// Error(InsufficientAttributes) when `graphic` needs X and Y but the
/// selection cannot fill both.
std::vector<Axis> derive_axes(const std::vector<std::string>& categories,
                              const std::vector<std::string>& measures, GraphicType graphic,
                              const std::map<std::string, ScaleType>& attribute_types = {});

/// Builds the default model for `graphic`: title and interactions from the
/// requirement, axes or node/edge bindings from its source, a List legend
/// when a Color axis exists, Vertical orientation for oriented charts and
/// the colorblind-safe palette.
VisualizationModel derive_visualization(const VisualizationSpec& spec,
                                        const VisualizationRequirement& requirement,
                                        GraphicType graphic,
                                        const std::map<std::string, ScaleType>& attribute_types);

}  // namespace reqviz
