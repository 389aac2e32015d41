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

#include "reqviz/vis_model.hpp"

#include <array>
#include <cmath>
#include <map>
#include <set>

namespace reqviz {

namespace {

// Okabe-Ito; distinguishable under the common forms of color blindness.
constexpr std::array<std::string_view, 8> kColorblindSafe8 = {
    "#000000", "#e69f00", "#56b4e9", "#009e73", "#f0e442", "#0072b2", "#d55e00", "#cc79a7"};
constexpr std::array<std::string_view, 10> kCategory10 = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
constexpr std::array<std::string_view, 6> kViridis6 = {"#440154", "#414487", "#2a788e",
                                                       "#22a884", "#7ad151", "#fde725"};
constexpr std::array<std::string_view, 5> kGreys5 = {"#f7f7f7", "#cccccc", "#969696", "#636363",
                                                     "#252525"};
constexpr std::array<std::string_view, 4> kPaletteIds = {"colorblind-safe-8", "category-10",
                                                         "viridis-6", "greys-5"};

}  // namespace

std::span<const std::string_view> palette_colors(std::string_view id) {
  if (id == "colorblind-safe-8") return kColorblindSafe8;
  if (id == "category-10") return kCategory10;
  if (id == "viridis-6") return kViridis6;
  if (id == "greys-5") return kGreys5;
  return {};
}

std::span<const std::string_view> palette_ids() { return kPaletteIds; }

bool is_hex_color(std::string_view s) {
  if (s.size() != 7 || s[0] != '#') return false;
  for (std::size_t i = 1; i < 7; ++i) {
    const char c = s[i];
    const bool hex = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
    if (!hex) return false;
  }
  return true;
}

bool is_graph_family(GraphicType type) {
  return type == GraphicType::Treemap || type == GraphicType::NodeLinkGraph;
}

bool has_orientation(GraphicType type) {
  switch (type) {
    case GraphicType::ColumnChart:
    case GraphicType::BarChart:
    case GraphicType::StackedColumnChart:
    case GraphicType::LineChart:
    case GraphicType::AreaChart:
    case GraphicType::Histogram:
      return true;
    default:
      return false;
  }
}

bool requires_xy(GraphicType type) {
  if (is_graph_family(type)) return false;
  switch (type) {
    case GraphicType::SingleValueCard:
    case GraphicType::Table:
    case GraphicType::ChoroplethMap:
      return false;
    default:
      return true;
  }
}

const Axis* find_axis(const AxisVisualization& body, Channel channel) {
  for (const auto& axis : body.axes) {
    if (axis.channel == channel) return &axis;
  }
  return nullptr;
}

const Axis* find_axis_by_attribute(const AxisVisualization& body, std::string_view attribute) {
  for (const auto& axis : body.axes) {
    if (axis.attribute && axis.attribute->name == attribute) return &axis;
  }
  return nullptr;
}

namespace {

class InvariantChecker {
 public:
  std::vector<Diagnostic> run(const VisualizationModel& m) {
    if (m.title.empty()) add(ErrorCode::InvalidTitle, "title", "title is empty");

    const bool oriented = has_orientation(m.graphic_type);
    if (oriented && m.orientation == Orientation::Any) {
      add(ErrorCode::OrientationNotApplicable, "orientation",
          std::string(name_of(m.graphic_type)) + " needs Horizontal or Vertical orientation");
    } else if (!oriented && m.orientation != Orientation::Any) {
      add(ErrorCode::OrientationNotApplicable, "orientation",
          std::string(name_of(m.graphic_type)) + " has no orientation; expected Any");
    }

    if (m.legend) legend(*m.legend);
    color_range(m.color_range);
    if (m.dashboard_position &&
        (m.dashboard_position->width < 1 || m.dashboard_position->height < 1)) {
      add(ErrorCode::InvalidPosition, "dashboard_position", "width and height must be at least 1");
    }

    std::set<InteractionType> seen;
    for (auto i : m.interactions) {
      if (!seen.insert(i).second) {
        add(ErrorCode::DuplicateLiteral, "interactions",
            "duplicate interaction '" + std::string(name_of(i)) + "'");
      }
    }

    const bool graph_type = is_graph_family(m.graphic_type);
    if (const auto* axes = m.axes()) {
      if (graph_type) {
        add(ErrorCode::BodyMismatch, "body",
            std::string(name_of(m.graphic_type)) + " needs a graph body, found axes");
      }
      axis_body(*axes, m.graphic_type);
    } else if (const auto* graph = m.graph()) {
      if (!graph_type) {
        add(ErrorCode::BodyMismatch, "body",
            std::string(name_of(m.graphic_type)) + " needs an axis body, found a graph");
      } else if (m.graphic_type == GraphicType::Treemap && graph->layout != GraphLayout::Tree) {
        add(ErrorCode::BodyMismatch, "body", "Treemap needs a tree layout");
      }
      graph_body(*graph);
    }
    return std::move(out_);
  }

 private:
  void add(ErrorCode code, std::string path, std::string message) {
    out_.push_back(Diagnostic{code, std::move(path), std::move(message), {}});
  }

  void legend(const Legend& l) {
    if (!(l.text_size > 0) || !std::isfinite(l.text_size)) {
      add(ErrorCode::InvalidLegend, "legend/text_size", "legend text size must be positive");
    }
    if (l.font_family.empty()) add(ErrorCode::InvalidLegend, "legend/font_family", "font is empty");
  }

  void color_range(const ColorRange& r) {
    if (const auto* named = std::get_if<NamedPalette>(&r.source)) {
      if (palette_colors(named->id).empty()) {
        add(ErrorCode::InvalidColorRange, "color_range", "unknown palette '" + named->id + "'");
      }
      return;
    }
    const auto& custom = std::get<CustomPalette>(r.source);
    if (custom.colors.empty()) {
      add(ErrorCode::InvalidColorRange, "color_range", "custom color range is empty");
    }
    for (const auto& c : custom.colors) {
      if (!is_hex_color(c)) {
        add(ErrorCode::InvalidColorRange, "color_range", "'" + c + "' is not a #rrggbb color");
      }
    }
  }

  void axis_body(const AxisVisualization& body, GraphicType type) {
    std::map<Channel, std::size_t> channels;
    std::map<std::string, std::size_t> attributes;
    std::size_t order_holders = 0;
    for (std::size_t i = 0; i < body.axes.size(); ++i) {
      const Axis& axis = body.axes[i];
      const std::string path = "body/axes[" + std::to_string(i) + "]";
      if (axis.name.empty()) add(ErrorCode::InvalidName, path, "axis name is empty");
      if (auto [it, fresh] = channels.emplace(axis.channel, i); !fresh) {
        add(ErrorCode::ChannelOccupied, path,
            "channel " + std::string(name_of(axis.channel)) + " already holds axes[" +
                std::to_string(it->second) + "]");
      }
      if (axis.attribute) {
        if (axis.attribute->name.empty()) {
          add(ErrorCode::InvalidName, path + "/attribute", "attribute name is empty");
        } else if (auto [it, fresh] = attributes.emplace(axis.attribute->name, i); !fresh) {
          add(ErrorCode::DuplicateAssignment, path,
              "attribute '" + axis.attribute->name + "' is already on axes[" +
                  std::to_string(it->second) + "]");
        }
      }
      const bool finite_bounds = (!axis.min_value || std::isfinite(*axis.min_value)) &&
                                 (!axis.max_value || std::isfinite(*axis.max_value));
      if (!finite_bounds) {
        add(ErrorCode::InvalidBounds, path, "axis bounds must be finite");
      } else if (axis.min_value && axis.max_value && !(*axis.min_value < *axis.max_value)) {
        add(ErrorCode::InvalidBounds, path, "axis minimum must be below its maximum");
      }
      if (axis.order_role) ++order_holders;
    }
    if (!body.axes.empty() && order_holders != 1) {
      add(ErrorCode::OrderRoleInvalid, "body/axes",
          "exactly one axis must order the data, found " + std::to_string(order_holders));
    }
    if (requires_xy(type)) {
      for (Channel c : {Channel::X, Channel::Y}) {
        if (!channels.contains(c)) {
          add(ErrorCode::MissingChannel, "body/axes",
              std::string(name_of(type)) + " needs an axis on channel " +
                  std::string(name_of(c)));
        }
      }
    }
  }

  void graph_body(const GraphVisualization& g) {
    auto need = [&](const std::string& column, std::string_view what) {
      if (column.empty()) add(ErrorCode::InvalidName, "body", std::string(what) + " is empty");
    };
    need(g.nodes.id_column, "node id column");
    need(g.nodes.label_column, "node label column");
    need(g.edges.source_column, "edge source column");
    need(g.edges.target_column, "edge target column");
  }

  std::vector<Diagnostic> out_;
};

}  // namespace

std::vector<Diagnostic> check_model_invariants(const VisualizationModel& model) {
  return InvariantChecker{}.run(model);
}

}  // namespace reqviz
