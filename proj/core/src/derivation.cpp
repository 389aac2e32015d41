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

#include "reqviz/derivation.hpp"

#include <initializer_list>
#include <set>

#include "reqviz/error.hpp"

namespace reqviz {

namespace {

ScaleType type_of(const std::map<std::string, ScaleType>& types, const std::string& name,
                  AttributeRole role) {
  if (auto it = types.find(name); it != types.end()) return it->second;
  return role == AttributeRole::Category ? ScaleType::Nominal : ScaleType::Ratio;
}

}  // namespace

std::vector<Axis> derive_axes(const std::vector<std::string>& categories,
                              const std::vector<std::string>& measures, GraphicType graphic,
                              const std::map<std::string, ScaleType>& attribute_types) {
  std::set<Channel> used;
  std::vector<Axis> axes;
  auto place = [&](const std::string& name, AttributeRole role,
                   std::initializer_list<Channel> preferred) {
    for (Channel c : preferred) {
      if (used.insert(c).second) {
        axes.push_back(Axis{name, c, false, std::nullopt, std::nullopt,
                            Attribute{name, type_of(attribute_types, name, role), role}});
        return;
      }
    }
    throw Error(ErrorCode::TooManyAttributes,
                "no free channel for " + std::string(name_of(role)) + " '" + name + "'");
  };

  for (std::size_t i = 0; i < categories.size(); ++i) {
    if (i == 0) {
      place(categories[i], AttributeRole::Category, {Channel::X});
    } else if (i == 1 && measures.empty()) {
      place(categories[i], AttributeRole::Category, {Channel::Y});
    } else {
      place(categories[i], AttributeRole::Category, {Channel::Color, Channel::Detail});
    }
  }
  for (std::size_t i = 0; i < measures.size(); ++i) {
    if (i == 0) {
      place(measures[i], AttributeRole::Measure, {Channel::Y});
    } else if (i == 1 && categories.empty()) {
      place(measures[i], AttributeRole::Measure, {Channel::X});
    } else {
      place(measures[i], AttributeRole::Measure, {Channel::Size, Channel::Detail});
    }
  }

  if (requires_xy(graphic) && !(used.contains(Channel::X) && used.contains(Channel::Y))) {
    throw Error(ErrorCode::InsufficientAttributes,
                std::string(name_of(graphic)) + " needs attributes on both X and Y, got " +
                    std::to_string(axes.size()) + " attribute(s)");
  }

  if (!axes.empty()) {
    Axis* order = &axes.front();
    for (auto& axis : axes) {
      if (axis.channel == Channel::X) order = &axis;
    }
    order->order_role = true;
  }
  return axes;
}

VisualizationModel derive_visualization(const VisualizationSpec& spec,
                                        const VisualizationRequirement& requirement,
                                        GraphicType graphic,
                                        const std::map<std::string, ScaleType>& attribute_types) {
  if (requirement.sources.size() != 1) {
    throw Error(ErrorCode::UnsupportedMultiSource,
                "visualization '" + requirement.name + "' must have exactly one source");
  }
  const DatasourceResource& source = requirement.sources.front();

  VisualizationModel model;
  model.title = requirement.name;
  model.graphic_type = graphic;
  model.interactions = requirement.interactions;
  model.orientation = has_orientation(graphic) ? Orientation::Vertical : Orientation::Any;

  const bool graph_dims =
      spec.dimensionality == Dimensionality::Tree || spec.dimensionality == Dimensionality::Graph;
  if (graph_dims || is_graph_family(graphic)) {
    if (!is_graph_family(graphic)) {
      throw Error(ErrorCode::BodyMismatch, std::string(name_of(graphic)) +
                                               " cannot draw " +
                                               std::string(display_label(spec.dimensionality)) +
                                               " data");
    }
    GraphVisualization g;
    if (const auto* tree = std::get_if<TreeShape>(&source.shape)) {
      const std::string label = source.categories.empty() ? tree->id_column : source.categories[0];
      g.layout = GraphLayout::Tree;
      g.nodes = NodeBinding{tree->id_column, label};
      g.edges = EdgeBinding{tree->parent_column, tree->id_column};
    } else if (const auto* graph_shape = std::get_if<GraphShape>(&source.shape)) {
      g.layout = GraphLayout::Graph;
      g.nodes = NodeBinding{graph_shape->source_column, graph_shape->source_column};
      g.edges = EdgeBinding{graph_shape->source_column, graph_shape->target_column};
    } else {
      // Flat source drawn as a graph: the first two attributes are the endpoints.
      const auto attributes = source.attributes();
      if (attributes.size() < 2) {
        throw Error(ErrorCode::InsufficientAttributes,
                    std::string(name_of(graphic)) + " needs two endpoint attributes");
      }
      g.layout = graphic == GraphicType::Treemap ? GraphLayout::Tree : GraphLayout::Graph;
      if (g.layout == GraphLayout::Tree) {
        g.nodes = NodeBinding{attributes[1], attributes[1]};
        g.edges = EdgeBinding{attributes[0], attributes[1]};
      } else {
        g.nodes = NodeBinding{attributes[0], attributes[0]};
        g.edges = EdgeBinding{attributes[0], attributes[1]};
      }
    }
    model.body = std::move(g);
    return model;
  }

  AxisVisualization body;
  body.axes = derive_axes(source.categories, source.measures, graphic, attribute_types);
  for (const auto& axis : body.axes) {
    if (axis.channel == Channel::Color && axis.attribute) model.legend = Legend{axis.attribute->name};
  }
  model.body = std::move(body);
  return model;
}

}  // namespace reqviz
