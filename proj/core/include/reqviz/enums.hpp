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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace reqviz {

enum class ActorKind { Lay, Tech };

enum class AnalysisKind { Prescriptive, Diagnostic, Predictive, Descriptive };

enum class VisualizationGoal {
  Composition,
  Order,
  Relationship,
  Comparison,
  Cluster,
  Distribution,
  Trend,
  Geospatial,
};

enum class InteractionType { Overview, Zoom, Filter, DetailsOnDemand };

/// Measurement scale of a single attribute.
enum class ScaleType { Nominal, Ordinal, Interval, Ratio };

enum class Cardinality { Low, High };

enum class Dimensionality { OneDimensional, TwoDimensional, NDimensional, Tree, Graph };

enum class GraphicType {
  SingleValueCard,
  ColumnChart,
  BarChart,
  StackedColumnChart,
  LineChart,
  AreaChart,
  PieChart,
  Histogram,
  ScatterPlot,
  BubbleChart,
  Heatmap,
  Treemap,
  NodeLinkGraph,
  ChoroplethMap,
  Table,
};

/// Encoding channels an axis can be bound to.
enum class Channel { X, Y, Color, Size, Detail };

enum class Orientation { Horizontal, Vertical, Any };

enum class LegendType { List, Swatch };

enum class LegendPosition { Top, Bottom, Left, Right };

enum class AttributeRole { Category, Measure };

enum class ValidationStatus { Validated, RequiresRevision };

/// Lifecycle of a visualization inside a project.
enum class VisualizationStatus { Pending, Derived, Validated, RequiresRevision };

// Every enum has two spellings: a PascalCase display/DSL name and a
// snake_case wire name used in JSON documents. Parsing accepts either,
// case-insensitively, and ignores '-', '_' and spaces.

template <typename E>
struct EnumTable;

#define REQVIZ_ENUM_TABLE(E, N)                                      \
  template <>                                                        \
  struct EnumTable<E> {                                              \
    static const std::array<E, N> values;                            \
    static const std::array<std::string_view, N> names;              \
    static const std::array<std::string_view, N> wire_names;         \
  }

REQVIZ_ENUM_TABLE(ActorKind, 2);
REQVIZ_ENUM_TABLE(AnalysisKind, 4);
REQVIZ_ENUM_TABLE(VisualizationGoal, 8);
REQVIZ_ENUM_TABLE(InteractionType, 4);
REQVIZ_ENUM_TABLE(ScaleType, 4);
REQVIZ_ENUM_TABLE(Cardinality, 2);
REQVIZ_ENUM_TABLE(Dimensionality, 5);
REQVIZ_ENUM_TABLE(GraphicType, 15);
REQVIZ_ENUM_TABLE(Channel, 5);
REQVIZ_ENUM_TABLE(Orientation, 3);
REQVIZ_ENUM_TABLE(LegendType, 2);
REQVIZ_ENUM_TABLE(LegendPosition, 4);
REQVIZ_ENUM_TABLE(AttributeRole, 2);
REQVIZ_ENUM_TABLE(ValidationStatus, 2);
REQVIZ_ENUM_TABLE(VisualizationStatus, 4);

#undef REQVIZ_ENUM_TABLE

template <typename E>
std::span<const E> all_values() {
  return EnumTable<E>::values;
}

template <typename E>
std::string_view name_of(E value) {
  return EnumTable<E>::names[static_cast<std::size_t>(value)];
}

template <typename E>
std::string_view wire_name(E value) {
  return EnumTable<E>::wire_names[static_cast<std::size_t>(value)];
}

namespace detail {
bool literal_matches(std::string_view input, std::string_view canonical);
}  // namespace detail

template <typename E>
std::optional<E> parse_enum(std::string_view text) {
  const auto& table = EnumTable<E>::names;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (detail::literal_matches(text, table[i])) return EnumTable<E>::values[i];
  }
  return std::nullopt;
}

/// Human-readable label, e.g. "Stacked Column Chart" or "n-dimensional".
std::string_view display_label(GraphicType type);
std::string_view display_label(Dimensionality dim);

}  // namespace reqviz
