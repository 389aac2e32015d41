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

#include <algorithm>

#include "json_codec.hpp"
#include "reqviz/codegen.hpp"

namespace reqviz {

using json::Json;

namespace {

Json optional_number(const std::optional<double>& v) {
  return v ? json::number(*v) : Json(nullptr);
}

}  // namespace

std::string ChartDocResult::log_line() const {
  return "chartdoc: " + std::to_string(emitted_rows) + " row(s) emitted, " +
         std::to_string(dropped_rows) + " dropped for nulls in encoded attributes";
}

ChartDocResult generate_chartdoc(const VisualizationModel& model, const Dataset& dataset) {
  if (auto diags = check_model_invariants(model); !diags.empty()) {
    const std::string message = "model is invalid: " + diags.front().message;
    throw Error(ErrorCode::ModelInvalid, message, std::move(diags));
  }
  if (model.graphic_type == GraphicType::ChoroplethMap) {
    throw Error(ErrorCode::UnsupportedGraphicType, "map rendering is not supported");
  }
  const auto* body = model.axes();
  if (!body) {
    throw Error(ErrorCode::UnsupportedGraphicType,
                std::string(name_of(model.graphic_type)) +
                    " is drawn from a graph document, not a chart document");
  }

  std::vector<const Axis*> ordered;
  for (Channel c : all_values<Channel>()) {
    if (const Axis* axis = find_axis(*body, c)) ordered.push_back(axis);
  }

  Json encodings = Json::object();
  struct Bound {
    std::string attribute;
    const Column* column;
  };
  std::vector<Bound> bound;
  for (const Axis* axis : ordered) {
    Json e = Json::object();
    if (axis->attribute) {
      const Column* column = dataset.find(axis->attribute->name);
      if (!column) {
        throw Error(ErrorCode::UnknownAttribute,
                    "encoded attribute '" + axis->attribute->name + "' is not a dataset column");
      }
      bound.push_back(Bound{axis->attribute->name, column});
      e["attribute"] = axis->attribute->name;
      e["scale_type"] = json::enum_value(axis->attribute->type);
    } else {
      e["attribute"] = nullptr;
      e["scale_type"] = nullptr;
    }
    e["min"] = optional_number(axis->min_value);
    e["max"] = optional_number(axis->max_value);
    e["order_role"] = axis->order_role;
    encodings[std::string(wire_name(axis->channel))] = std::move(e);
  }

  ChartDocResult result;
  Json data = Json::array();
  for (std::size_t r = 0; r < dataset.row_count(); ++r) {
    const bool complete = std::none_of(bound.begin(), bound.end(), [&](const Bound& b) {
      return b.column->values[r].is_null();
    });
    if (!complete) {
      ++result.dropped_rows;
      continue;
    }
    Json row = Json::object();
    for (const auto& b : bound) row[b.attribute] = json::cell_value(b.column->values[r]);
    data.push_back(std::move(row));
    ++result.emitted_rows;
  }

  Json doc = Json::object();
  doc["version"] = kChartDocVersion;
  doc["title"] = model.title;
  doc["graphic_type"] = json::enum_value(model.graphic_type);
  doc["orientation"] = json::enum_value(model.orientation);
  doc["interactions"] = json::enum_list(model.interactions);
  doc["legend"] = json::legend_to_json(model.legend);
  doc["color_range"] = json::color_range_to_json(model.color_range, /*resolve=*/true);
  doc["encodings"] = std::move(encodings);
  doc["data"] = std::move(data);
  doc["dashboard_position"] = json::position_to_json(model.dashboard_position);
  result.json = json::dump_html_safe(doc);
  return result;
}

}  // namespace reqviz
