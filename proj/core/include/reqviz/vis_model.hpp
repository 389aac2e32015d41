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

// Platform-independent visualization model: everything a renderer needs to
// know about one chart, independent of the charting technology.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "reqviz/enums.hpp"
#include "reqviz/error.hpp"

namespace reqviz {

struct Legend {
  std::string title;
  LegendType type = LegendType::List;
  LegendPosition position = LegendPosition::Right;
  std::string font_family = "sans-serif";
  double text_size = 12;

  bool operator==(const Legend&) const = default;
};

struct NamedPalette {
  std::string id;

  bool operator==(const NamedPalette&) const = default;
};

struct CustomPalette {
  std::vector<std::string> colors;  // "#rrggbb"

  bool operator==(const CustomPalette&) const = default;
};

struct ColorRange {
  std::variant<NamedPalette, CustomPalette> source = NamedPalette{"colorblind-safe-8"};

  bool operator==(const ColorRange&) const = default;
};

inline constexpr std::string_view kDefaultPalette = "colorblind-safe-8";

/// Colors of a registered palette, or an empty span for unknown ids.
std::span<const std::string_view> palette_colors(std::string_view id);
std::span<const std::string_view> palette_ids();

/// True for "#rrggbb" (either case).
bool is_hex_color(std::string_view s);

struct DashboardPosition {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  std::uint32_t width = 1;
  std::uint32_t height = 1;

  bool operator==(const DashboardPosition&) const = default;
};

struct Attribute {
  std::string name;
  ScaleType type = ScaleType::Nominal;
  AttributeRole role = AttributeRole::Category;

  bool operator==(const Attribute&) const = default;
};

struct Axis {
  std::string name;
  Channel channel = Channel::X;
  bool order_role = false;  // this axis's attribute orders the data (ascending)
  std::optional<double> min_value;  // nullopt: automatic
  std::optional<double> max_value;
  std::optional<Attribute> attribute;  // absent for synthetic count axes

  bool operator==(const Axis&) const = default;
};

struct AxisVisualization {
  std::vector<Axis> axes;

  bool operator==(const AxisVisualization&) const = default;
};

enum class GraphLayout { Tree, Graph };

struct NodeBinding {
  std::string id_column;
  std::string label_column;

  bool operator==(const NodeBinding&) const = default;
};

struct EdgeBinding {
  std::string source_column;
  std::string target_column;

  bool operator==(const EdgeBinding&) const = default;
};

/// For Tree layouts rows are nodes and edges run parent -> id; for Graph
/// layouts rows are edges and nodes are their endpoints.
struct GraphVisualization {
  GraphLayout layout = GraphLayout::Graph;
  NodeBinding nodes;
  EdgeBinding edges;

  bool operator==(const GraphVisualization&) const = default;
};

struct VisualizationModel {
  std::string title;
  std::optional<Legend> legend;
  GraphicType graphic_type = GraphicType::Table;
  std::vector<InteractionType> interactions;
  std::optional<DashboardPosition> dashboard_position;
  Orientation orientation = Orientation::Any;
  ColorRange color_range;
  std::variant<AxisVisualization, GraphVisualization> body;

  const AxisVisualization* axes() const { return std::get_if<AxisVisualization>(&body); }
  const GraphVisualization* graph() const { return std::get_if<GraphVisualization>(&body); }

  bool operator==(const VisualizationModel&) const = default;
};

/// Graphic types drawn with nodes and edges rather than axes.
bool is_graph_family(GraphicType type);
/// Graphic types that can be drawn horizontally or vertically.
bool has_orientation(GraphicType type);
/// Axis-family graphic types that need exactly one X and one Y axis.
bool requires_xy(GraphicType type);

const Axis* find_axis(const AxisVisualization& body, Channel channel);
const Axis* find_axis_by_attribute(const AxisVisualization& body, std::string_view attribute);

/// Empty iff every structural invariant of the model holds.
std::vector<Diagnostic> check_model_invariants(const VisualizationModel& model);

}  // namespace reqviz
