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

#include "reqviz/refinement.hpp"

#include "json_codec.hpp"

namespace reqviz {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

AxisVisualization& axes_of(VisualizationModel& model, std::string_view op) {
  auto* axes = std::get_if<AxisVisualization>(&model.body);
  if (!axes) {
    throw Error(ErrorCode::OpNotApplicable,
                std::string(op) + " needs an axis-based visualization, " +
                    std::string(name_of(model.graphic_type)) + " has a graph body");
  }
  return *axes;
}

Axis* axis_for_attribute(AxisVisualization& body, const std::string& attribute) {
  for (auto& axis : body.axes) {
    if (axis.attribute && axis.attribute->name == attribute) return &axis;
  }
  for (auto& axis : body.axes) {
    if (!axis.attribute && axis.name == attribute) return &axis;
  }
  return nullptr;
}

Axis& require_axis(AxisVisualization& body, const std::string& attribute) {
  if (Axis* axis = axis_for_attribute(body, attribute)) return *axis;
  throw Error(ErrorCode::UnknownAxis, "no axis shows attribute '" + attribute + "'");
}

void apply(VisualizationModel& m, const SetChannel& op) {
  auto& body = axes_of(m, "set_channel");
  Axis& moving = require_axis(body, op.attribute);
  if (moving.channel == op.channel) return;
  for (auto& other : body.axes) {
    if (&other == &moving || other.channel != op.channel) continue;
    if (!op.swap) {
      throw Error(ErrorCode::ChannelOccupied,
                  "channel " + std::string(name_of(op.channel)) + " already shows '" +
                      other.name + "'");
    }
    other.channel = moving.channel;
  }
  moving.channel = op.channel;
}

void apply(VisualizationModel& m, const SetOrder& op) {
  auto& body = axes_of(m, "set_order");
  Axis& target = require_axis(body, op.attribute);
  for (auto& axis : body.axes) axis.order_role = false;
  target.order_role = true;
}

void apply(VisualizationModel& m, const SetOrientation& op) {
  const bool oriented = has_orientation(m.graphic_type);
  if (oriented && op.orientation == Orientation::Any) {
    throw Error(ErrorCode::OrientationNotApplicable,
                std::string(name_of(m.graphic_type)) + " must be Horizontal or Vertical");
  }
  if (!oriented && op.orientation != Orientation::Any) {
    throw Error(ErrorCode::OrientationNotApplicable,
                std::string(name_of(m.graphic_type)) + " has no orientation");
  }
  m.orientation = op.orientation;
}

void apply(VisualizationModel& m, const SetLegend& op) { m.legend = op.legend; }
void apply(VisualizationModel& m, const SetColorRange& op) { m.color_range = op.range; }

void apply(VisualizationModel& m, const SetAxisBounds& op) {
  auto& body = axes_of(m, "set_axis_bounds");
  for (auto& axis : body.axes) {
    if (axis.channel != op.channel) continue;
    if (op.min_value && op.max_value && !(*op.min_value < *op.max_value)) {
      throw Error(ErrorCode::InvalidBounds, "minimum " + std::to_string(*op.min_value) +
                                                " is not below maximum " +
                                                std::to_string(*op.max_value));
    }
    axis.min_value = op.min_value;
    axis.max_value = op.max_value;
    return;
  }
  throw Error(ErrorCode::UnknownAxis, "no axis on channel " + std::string(name_of(op.channel)));
}

void apply(VisualizationModel& m, const SetTitle& op) {
  if (op.title.empty()) throw Error(ErrorCode::InvalidTitle, "title must not be empty");
  m.title = op.title;
}

void apply(VisualizationModel& m, const SetDashboardPosition& op) {
  m.dashboard_position = op.position;
}

}  // namespace

VisualizationModel apply_refinement(const VisualizationModel& model, const RefinementOp& op) {
  if (auto diags = check_model_invariants(model); !diags.empty()) {
    const std::string message = "cannot refine an invalid model: " + diags.front().message;
    throw Error(ErrorCode::ModelInvalid, message, std::move(diags));
  }
  VisualizationModel next = model;
  std::visit([&](const auto& o) { apply(next, o); }, op);
  if (auto diags = check_model_invariants(next); !diags.empty()) {
    const ErrorCode code = diags.front().code;
    const std::string message = std::string(op_name(op)) + " rejected: " + diags.front().message;
    throw Error(code, message, std::move(diags));
  }
  return next;
}

VisualizationModel apply_refinements(const VisualizationModel& model,
                                     std::span<const RefinementOp> ops) {
  VisualizationModel current = model;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    try {
      current = apply_refinement(current, ops[i]);
    } catch (const Error& e) {
      const std::string path = "ops[" + std::to_string(i) + "]";
      std::vector<Diagnostic> diags{Diagnostic{e.code(), path, e.what(), {}}};
      throw Error(e.code(), path + " (" + std::string(op_name(ops[i])) + "): " + e.what(),
                  std::move(diags));
    }
  }
  return current;
}

std::string_view op_name(const RefinementOp& op) {
  return std::visit(Overloaded{
                        [](const SetChannel&) { return std::string_view("set_channel"); },
                        [](const SetOrder&) { return std::string_view("set_order"); },
                        [](const SetOrientation&) { return std::string_view("set_orientation"); },
                        [](const SetLegend&) { return std::string_view("set_legend"); },
                        [](const SetColorRange&) { return std::string_view("set_color_range"); },
                        [](const SetAxisBounds&) { return std::string_view("set_axis_bounds"); },
                        [](const SetTitle&) { return std::string_view("set_title"); },
                        [](const SetDashboardPosition&) {
                          return std::string_view("set_dashboard_position");
                        },
                    },
                    op);
}

namespace {

using json::Json;

RefinementOp op_from_json(const Json& v, const std::string& path) {
  if (!v.is_object()) json::fail(path, "expected an operation object");
  const std::string name = json::get_string(json::field(v, "op", path), path + "/op");
  auto at = [&](std::string_view key) -> const Json& { return json::field(v, key, path); };
  auto sub = [&](std::string_view key) { return path + "/" + std::string(key); };
  if (name == "set_channel") {
    json::expect_object(v, path, {"op", "attribute", "channel", "swap"});
    SetChannel op;
    op.attribute = json::get_string(at("attribute"), sub("attribute"));
    op.channel = json::get_enum<Channel>(at("channel"), sub("channel"));
    if (const auto* s = json::optional_field(v, "swap")) op.swap = json::get_bool(*s, sub("swap"));
    return op;
  }
  if (name == "set_order") {
    json::expect_object(v, path, {"op", "attribute"});
    return SetOrder{json::get_string(at("attribute"), sub("attribute"))};
  }
  if (name == "set_orientation") {
    json::expect_object(v, path, {"op", "orientation"});
    return SetOrientation{json::get_enum<Orientation>(at("orientation"), sub("orientation"))};
  }
  if (name == "set_legend") {
    json::expect_object(v, path, {"op", "legend"});
    return SetLegend{json::legend_from_json(at("legend"), sub("legend"))};
  }
  if (name == "set_color_range") {
    json::expect_object(v, path, {"op", "color_range"});
    return SetColorRange{json::color_range_from_json(at("color_range"), sub("color_range"))};
  }
  if (name == "set_axis_bounds") {
    json::expect_object(v, path, {"op", "channel", "min", "max"});
    SetAxisBounds op;
    op.channel = json::get_enum<Channel>(at("channel"), sub("channel"));
    if (const auto* m = json::optional_field(v, "min")) {
      op.min_value = json::get_optional_number(*m, sub("min"));
    }
    if (const auto* m = json::optional_field(v, "max")) {
      op.max_value = json::get_optional_number(*m, sub("max"));
    }
    return op;
  }
  if (name == "set_title") {
    json::expect_object(v, path, {"op", "title"});
    return SetTitle{json::get_string(at("title"), sub("title"))};
  }
  if (name == "set_dashboard_position") {
    json::expect_object(v, path, {"op", "position"});
    return SetDashboardPosition{json::position_from_json(at("position"), sub("position"))};
  }
  json::fail(path + "/op", "unknown operation '" + name + "'");
}

Json optional_number(const std::optional<double>& v) {
  return v ? json::number(*v) : Json(nullptr);
}

Json op_to_json(const RefinementOp& op) {
  Json out = Json::object();
  out["op"] = std::string(op_name(op));
  std::visit(Overloaded{
                 [&](const SetChannel& o) {
                   out["attribute"] = o.attribute;
                   out["channel"] = json::enum_value(o.channel);
                   out["swap"] = o.swap;
                 },
                 [&](const SetOrder& o) { out["attribute"] = o.attribute; },
                 [&](const SetOrientation& o) {
                   out["orientation"] = json::enum_value(o.orientation);
                 },
                 [&](const SetLegend& o) { out["legend"] = json::legend_to_json(o.legend); },
                 [&](const SetColorRange& o) {
                   out["color_range"] = json::color_range_to_json(o.range);
                 },
                 [&](const SetAxisBounds& o) {
                   out["channel"] = json::enum_value(o.channel);
                   out["min"] = optional_number(o.min_value);
                   out["max"] = optional_number(o.max_value);
                 },
                 [&](const SetTitle& o) { out["title"] = o.title; },
                 [&](const SetDashboardPosition& o) {
                   out["position"] = json::position_to_json(o.position);
                 },
             },
             op);
  return out;
}

}  // namespace

std::vector<RefinementOp> parse_refinement_ops(std::string_view json_text) {
  const Json doc = json::parse(json_text);
  std::vector<RefinementOp> ops;
  if (doc.is_array()) {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      ops.push_back(op_from_json(doc[i], "ops[" + std::to_string(i) + "]"));
    }
  } else {
    ops.push_back(op_from_json(doc, "ops[0]"));
  }
  return ops;
}

std::string serialize_refinement_ops(std::span<const RefinementOp> ops) {
  Json doc = Json::array();
  for (const auto& op : ops) doc.push_back(op_to_json(op));
  return json::dump(doc);
}

}  // namespace reqviz
