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

// User refinements of a visualization model. Every operation either
// returns a model that passes check_model_invariants or throws.
//
// JSON form, one object per operation:
//   {"op": "set_channel", "attribute": "Province", "channel": "x", "swap": true}
//   {"op": "set_order", "attribute": "Province"}
//   {"op": "set_orientation", "orientation": "horizontal"}
//   {"op": "set_legend", "legend": {...} | null}
//   {"op": "set_color_range", "color_range": {"type": "named", "id": "..."}}
//   {"op": "set_axis_bounds", "channel": "y", "min": 0, "max": null}
//   {"op": "set_title", "title": "..."}
//   {"op": "set_dashboard_position", "position": {...} | null}

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "reqviz/vis_model.hpp"

namespace reqviz {

/// Moves `attribute` to `channel`. If another axis holds the channel the
/// two swap places when `swap` is set; otherwise ChannelOccupied.
struct SetChannel {
  std::string attribute;
  Channel channel = Channel::X;
  bool swap = true;

  bool operator==(const SetChannel&) const = default;
};

struct SetOrder {
  std::string attribute;

  bool operator==(const SetOrder&) const = default;
};

struct SetOrientation {
  Orientation orientation = Orientation::Any;

  bool operator==(const SetOrientation&) const = default;
};

struct SetLegend {
  std::optional<Legend> legend;

  bool operator==(const SetLegend&) const = default;
};

struct SetColorRange {
  ColorRange range;

  bool operator==(const SetColorRange&) const = default;
};

struct SetAxisBounds {
  Channel channel = Channel::Y;
  std::optional<double> min_value;
  std::optional<double> max_value;

  bool operator==(const SetAxisBounds&) const = default;
};

struct SetTitle {
  std::string title;

  bool operator==(const SetTitle&) const = default;
};

struct SetDashboardPosition {
  std::optional<DashboardPosition> position;

  bool operator==(const SetDashboardPosition&) const = default;
};

using RefinementOp = std::variant<SetChannel, SetOrder, SetOrientation, SetLegend, SetColorRange,
                                  SetAxisBounds, SetTitle, SetDashboardPosition>;

/// Throws Error(ModelInvalid) if `model` is invalid to begin with, and a
/// typed Error (UnknownAxis, ChannelOccupied, InvalidBounds,
/// OrientationNotApplicable, OpNotApplicable, or the code of the first
/// violated invariant) when the operation is rejected.
VisualizationModel apply_refinement(const VisualizationModel& model, const RefinementOp& op);

/// All or nothing: the first rejected operation aborts the batch and its
/// error carries a diagnostic whose path is "ops[i]".
VisualizationModel apply_refinements(const VisualizationModel& model,
                                     std::span<const RefinementOp> ops);

std::string_view op_name(const RefinementOp& op);

/// Accepts one operation object or an array of them. Throws Error(SchemaError).
std::vector<RefinementOp> parse_refinement_ops(std::string_view json_text);
std::string serialize_refinement_ops(std::span<const RefinementOp> ops);

}  // namespace reqviz
