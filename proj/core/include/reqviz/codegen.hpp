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

// Code generation: chart documents (axis-based graphics), graph documents
// (trees and graphs) and standalone HTML pages. All outputs are
// byte-deterministic functions of their inputs.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "reqviz/dataset.hpp"
#include "reqviz/vis_model.hpp"

namespace reqviz {

inline constexpr std::string_view kChartDocVersion = "1.0";

struct ChartDocResult {
  std::string json;  // canonical; see docs/chartdoc.schema.json
  std::size_t emitted_rows = 0;
  std::size_t dropped_rows = 0;  // rows with a null in an encoded attribute

  /// One-line summary for generation logs.
  std::string log_line() const;
};

/// Encodings are keyed by channel in the order x, y, color, size, detail.
/// Data rows keep source order and hold only encoded attributes; sorting
/// by the order-role attribute is left to the renderer.
///
/// Throws Error(ModelInvalid) for a model failing its invariants,
/// Error(UnsupportedGraphicType) for ChoroplethMap and graph-family
/// models, and Error(UnknownAttribute) when an encoded attribute is not a
/// dataset column.
ChartDocResult generate_chartdoc(const VisualizationModel& model, const Dataset& dataset);

struct GraphDocOptions {
  /// Create nodes for edge endpoints that have no row of their own; when
  /// false such edges raise DanglingEdge.
  bool synthesize_missing_nodes = true;
};

struct GraphDocResult {
  std::string json;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::size_t synthesized_nodes = 0;
  std::size_t dropped_rows = 0;  // rows whose node id or endpoint is null

  std::string log_line() const;
};

/// Nodes are deduplicated by id in first-appearance order; edges follow
/// row order. Tree layouts treat each row as a node whose parent column
/// points at its parent (null for roots); graph layouts treat each row as
/// an edge. Throws Error(ModelInvalid / UnsupportedGraphicType /
/// UnknownAttribute / DanglingEdge).
GraphDocResult generate_graphdoc(const VisualizationModel& model, const Dataset& dataset,
                                 const GraphDocOptions& options = {});

/// Self-contained page embedding `chartdoc_json` verbatim in
/// <script type="application/json" id="chartdoc"> plus an SVG runtime.
/// Interactions become runtime flags: Zoom -> pan_zoom, Filter ->
/// legend_filter, DetailsOnDemand -> tooltips. Throws Error(SchemaError)
/// if the text is not a chart document.
std::string generate_html(std::string_view chartdoc_json);

/// Inverse of the embedding above. Throws Error(SchemaError) when the page
/// has no chartdoc block.
std::string extract_chartdoc(std::string_view html);

/// The JavaScript renderer embedded in generated pages.
std::string_view html_runtime_script();

}  // namespace reqviz
