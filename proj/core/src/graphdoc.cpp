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

#include <map>

#include "json_codec.hpp"
#include "reqviz/codegen.hpp"

namespace reqviz {

using json::Json;

std::string GraphDocResult::log_line() const {
  return "graphdoc: " + std::to_string(node_count) + " node(s) (" +
         std::to_string(synthesized_nodes) + " synthesized), " + std::to_string(edge_count) +
         " edge(s), " + std::to_string(dropped_rows) + " row(s) dropped for null ids";
}

namespace {

class GraphBuilder {
 public:
  void add_node(const std::string& id, const std::string& label) {
    if (index_.emplace(id, nodes_.size()).second) nodes_.push_back({id, label});
  }
  bool has_node(const std::string& id) const { return index_.contains(id); }
  void add_edge(std::string source, std::string target) {
    edges_.push_back({std::move(source), std::move(target)});
  }

  const std::vector<std::pair<std::string, std::string>>& nodes() const { return nodes_; }
  const std::vector<std::pair<std::string, std::string>>& edges() const { return edges_; }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<std::pair<std::string, std::string>> nodes_;
  std::vector<std::pair<std::string, std::string>> edges_;
};

const Column& require_column(const Dataset& dataset, const std::string& name) {
  const Column* c = dataset.find(name);
  if (!c) {
    throw Error(ErrorCode::UnknownAttribute, "bound column '" + name + "' is not in the dataset");
  }
  return *c;
}

}  // namespace

GraphDocResult generate_graphdoc(const VisualizationModel& model, const Dataset& dataset,
                                 const GraphDocOptions& options) {
  if (auto diags = check_model_invariants(model); !diags.empty()) {
    const std::string message = "model is invalid: " + diags.front().message;
    throw Error(ErrorCode::ModelInvalid, message, std::move(diags));
  }
  const auto* g = model.graph();
  if (!g) {
    throw Error(ErrorCode::UnsupportedGraphicType,
                std::string(name_of(model.graphic_type)) + " is not a graph visualization");
  }
  const Column& ids = require_column(dataset, g->nodes.id_column);
  const Column& labels = require_column(dataset, g->nodes.label_column);
  const Column& sources = require_column(dataset, g->edges.source_column);
  const Column& targets = require_column(dataset, g->edges.target_column);

  GraphDocResult result;
  GraphBuilder graph;
  std::vector<std::pair<std::string, std::string>> pending;
  auto label_at = [&](std::size_t r, const std::string& fallback) {
    return labels.values[r].is_null() ? fallback : labels.values[r].to_string();
  };

  for (std::size_t r = 0; r < dataset.row_count(); ++r) {
    if (g->layout == GraphLayout::Tree) {
      // Rows are nodes; edges run parent -> id.
      if (ids.values[r].is_null()) {
        ++result.dropped_rows;
        continue;
      }
      const std::string id = ids.values[r].to_string();
      graph.add_node(id, label_at(r, id));
      if (!sources.values[r].is_null()) pending.emplace_back(sources.values[r].to_string(), id);
    } else {
      if (sources.values[r].is_null() || targets.values[r].is_null()) {
        ++result.dropped_rows;
        continue;
      }
      const std::string source = sources.values[r].to_string();
      graph.add_node(source, ids.values[r].is_null() ? source : label_at(r, source));
      pending.emplace_back(source, targets.values[r].to_string());
    }
  }

  for (auto& [source, target] : pending) {
    for (const std::string* endpoint : {&source, &target}) {
      if (graph.has_node(*endpoint)) continue;
      if (!options.synthesize_missing_nodes) {
        throw Error(ErrorCode::DanglingEdge,
                    "edge " + source + " -> " + target + " references unknown node '" + *endpoint +
                        "'");
      }
      graph.add_node(*endpoint, *endpoint);
      ++result.synthesized_nodes;
    }
    graph.add_edge(source, target);
  }

  Json nodes = Json::array();
  for (const auto& [id, label] : graph.nodes()) nodes.push_back(Json{{"id", id}, {"label", label}});
  Json edges = Json::array();
  for (const auto& [s, t] : graph.edges()) edges.push_back(Json{{"source", s}, {"target", t}});

  Json doc = Json::object();
  doc["version"] = kChartDocVersion;
  doc["title"] = model.title;
  doc["graphic_type"] = json::enum_value(model.graphic_type);
  doc["layout"] = g->layout == GraphLayout::Tree ? "tree" : "graph";
  doc["interactions"] = json::enum_list(model.interactions);
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(edges);
  result.node_count = graph.nodes().size();
  result.edge_count = graph.edges().size();
  result.json = json::dump_html_safe(doc);
  return result;
}

}  // namespace reqviz
