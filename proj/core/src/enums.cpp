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

#include "reqviz/enums.hpp"

namespace reqviz {

using A = ActorKind;
const std::array<A, 2> EnumTable<A>::values = {A::Lay, A::Tech};
const std::array<std::string_view, 2> EnumTable<A>::names = {"Lay", "Tech"};
const std::array<std::string_view, 2> EnumTable<A>::wire_names = {"lay", "tech"};

using K = AnalysisKind;
const std::array<K, 4> EnumTable<K>::values = {K::Prescriptive, K::Diagnostic, K::Predictive,
                                               K::Descriptive};
const std::array<std::string_view, 4> EnumTable<K>::names = {"Prescriptive", "Diagnostic",
                                                             "Predictive", "Descriptive"};
const std::array<std::string_view, 4> EnumTable<K>::wire_names = {"prescriptive", "diagnostic",
                                                                  "predictive", "descriptive"};

using G = VisualizationGoal;
const std::array<G, 8> EnumTable<G>::values = {G::Composition, G::Order,        G::Relationship,
                                               G::Comparison,  G::Cluster,      G::Distribution,
                                               G::Trend,       G::Geospatial};
const std::array<std::string_view, 8> EnumTable<G>::names = {
    "Composition", "Order",        "Relationship", "Comparison",
    "Cluster",     "Distribution", "Trend",        "Geospatial"};
const std::array<std::string_view, 8> EnumTable<G>::wire_names = {
    "composition", "order",        "relationship", "comparison",
    "cluster",     "distribution", "trend",        "geospatial"};

using I = InteractionType;
const std::array<I, 4> EnumTable<I>::values = {I::Overview, I::Zoom, I::Filter, I::DetailsOnDemand};
const std::array<std::string_view, 4> EnumTable<I>::names = {"Overview", "Zoom", "Filter",
                                                             "DetailsOnDemand"};
const std::array<std::string_view, 4> EnumTable<I>::wire_names = {"overview", "zoom", "filter",
                                                                  "details_on_demand"};

using S = ScaleType;
const std::array<S, 4> EnumTable<S>::values = {S::Nominal, S::Ordinal, S::Interval, S::Ratio};
const std::array<std::string_view, 4> EnumTable<S>::names = {"Nominal", "Ordinal", "Interval",
                                                             "Ratio"};
const std::array<std::string_view, 4> EnumTable<S>::wire_names = {"nominal", "ordinal",
                                                                  "interval", "ratio"};

using C = Cardinality;
const std::array<C, 2> EnumTable<C>::values = {C::Low, C::High};
const std::array<std::string_view, 2> EnumTable<C>::names = {"Low", "High"};
const std::array<std::string_view, 2> EnumTable<C>::wire_names = {"low", "high"};

using D = Dimensionality;
const std::array<D, 5> EnumTable<D>::values = {D::OneDimensional, D::TwoDimensional,
                                               D::NDimensional, D::Tree, D::Graph};
const std::array<std::string_view, 5> EnumTable<D>::names = {
    "OneDimensional", "TwoDimensional", "NDimensional", "Tree", "Graph"};
const std::array<std::string_view, 5> EnumTable<D>::wire_names = {
    "one_dimensional", "two_dimensional", "n_dimensional", "tree", "graph"};

using T = GraphicType;
const std::array<T, 15> EnumTable<T>::values = {
    T::SingleValueCard, T::ColumnChart, T::BarChart,    T::StackedColumnChart, T::LineChart,
    T::AreaChart,       T::PieChart,    T::Histogram,   T::ScatterPlot,        T::BubbleChart,
    T::Heatmap,         T::Treemap,     T::NodeLinkGraph, T::ChoroplethMap,    T::Table};
const std::array<std::string_view, 15> EnumTable<T>::names = {
    "SingleValueCard", "ColumnChart", "BarChart",      "StackedColumnChart", "LineChart",
    "AreaChart",       "PieChart",    "Histogram",     "ScatterPlot",        "BubbleChart",
    "Heatmap",         "Treemap",     "NodeLinkGraph", "ChoroplethMap",      "Table"};
const std::array<std::string_view, 15> EnumTable<T>::wire_names = {
    "single_value_card", "column_chart", "bar_chart",       "stacked_column_chart",
    "line_chart",        "area_chart",   "pie_chart",       "histogram",
    "scatter_plot",      "bubble_chart", "heatmap",         "treemap",
    "node_link_graph",   "choropleth_map", "table"};

using Ch = Channel;
const std::array<Ch, 5> EnumTable<Ch>::values = {Ch::X, Ch::Y, Ch::Color, Ch::Size, Ch::Detail};
const std::array<std::string_view, 5> EnumTable<Ch>::names = {"X", "Y", "Color", "Size",
                                                              "Detail"};
const std::array<std::string_view, 5> EnumTable<Ch>::wire_names = {"x", "y", "color", "size",
                                                                   "detail"};

using O = Orientation;
const std::array<O, 3> EnumTable<O>::values = {O::Horizontal, O::Vertical, O::Any};
const std::array<std::string_view, 3> EnumTable<O>::names = {"Horizontal", "Vertical", "Any"};
const std::array<std::string_view, 3> EnumTable<O>::wire_names = {"horizontal", "vertical", "any"};

using LT = LegendType;
const std::array<LT, 2> EnumTable<LT>::values = {LT::List, LT::Swatch};
const std::array<std::string_view, 2> EnumTable<LT>::names = {"List", "Swatch"};
const std::array<std::string_view, 2> EnumTable<LT>::wire_names = {"list", "swatch"};

using LP = LegendPosition;
const std::array<LP, 4> EnumTable<LP>::values = {LP::Top, LP::Bottom, LP::Left, LP::Right};
const std::array<std::string_view, 4> EnumTable<LP>::names = {"Top", "Bottom", "Left", "Right"};
const std::array<std::string_view, 4> EnumTable<LP>::wire_names = {"top", "bottom", "left",
                                                                   "right"};

using R = AttributeRole;
const std::array<R, 2> EnumTable<R>::values = {R::Category, R::Measure};
const std::array<std::string_view, 2> EnumTable<R>::names = {"Category", "Measure"};
const std::array<std::string_view, 2> EnumTable<R>::wire_names = {"category", "measure"};

using V = ValidationStatus;
const std::array<V, 2> EnumTable<V>::values = {V::Validated, V::RequiresRevision};
const std::array<std::string_view, 2> EnumTable<V>::names = {"Validated", "RequiresRevision"};
const std::array<std::string_view, 2> EnumTable<V>::wire_names = {"validated",
                                                                  "requires_revision"};

using VS = VisualizationStatus;
const std::array<VS, 4> EnumTable<VS>::values = {VS::Pending, VS::Derived, VS::Validated,
                                                 VS::RequiresRevision};
const std::array<std::string_view, 4> EnumTable<VS>::names = {"Pending", "Derived", "Validated",
                                                              "RequiresRevision"};
const std::array<std::string_view, 4> EnumTable<VS>::wire_names = {"pending", "derived",
                                                                   "validated",
                                                                   "requires_revision"};

namespace detail {

bool literal_matches(std::string_view input, std::string_view canonical) {
  auto lower = [](char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
  };
  auto skip = [](char c) { return c == '-' || c == '_' || c == ' '; };
  std::size_t i = 0;
  std::size_t j = 0;
  while (true) {
    while (i < input.size() && skip(input[i])) ++i;
    while (j < canonical.size() && skip(canonical[j])) ++j;
    if (i == input.size() || j == canonical.size()) break;
    if (lower(input[i]) != lower(canonical[j])) return false;
    ++i;
    ++j;
  }
  return i == input.size() && j == canonical.size() && !input.empty();
}

}  // namespace detail

std::string_view display_label(GraphicType type) {
  static constexpr std::array<std::string_view, 15> kLabels = {
      "Single Value Card", "Column Chart", "Bar Chart",       "Stacked Column Chart",
      "Line Chart",        "Area Chart",   "Pie Chart",       "Histogram",
      "Scatter Plot",      "Bubble Chart", "Heatmap",         "Treemap",
      "Node-Link Graph",   "Choropleth Map", "Table"};
  return kLabels[static_cast<std::size_t>(type)];
}

std::string_view display_label(Dimensionality dim) {
  static constexpr std::array<std::string_view, 5> kLabels = {
      "1-dimensional", "2-dimensional", "n-dimensional", "tree", "graph"};
  return kLabels[static_cast<std::size_t>(dim)];
}

}  // namespace reqviz
