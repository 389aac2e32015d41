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

#include "reqviz/vis_json.hpp"

#include "json_codec.hpp"
#include "text_util.hpp"

namespace reqviz {

using json::Json;

namespace {

Json optional_number(const std::optional<double>& v) {
  return v ? json::number(*v) : Json(nullptr);
}

Json axis_to_json(const Axis& axis) {
  Json out = Json::object();
  out["name"] = axis.name;
  out["channel"] = json::enum_value(axis.channel);
  out["order_role"] = axis.order_role;
  out["min_value"] = optional_number(axis.min_value);
  out["max_value"] = optional_number(axis.max_value);
  if (axis.attribute) {
    out["attribute"] = Json{{"name", axis.attribute->name},
                            {"type", json::enum_value(axis.attribute->type)},
                            {"role", json::enum_value(axis.attribute->role)}};
  } else {
    out["attribute"] = nullptr;
  }
  return out;
}

Json body_to_json(const VisualizationModel& model) {
  Json out = Json::object();
  if (const auto* axes = model.axes()) {
    out["kind"] = "axes";
    Json list = Json::array();
    for (const auto& axis : axes->axes) list.push_back(axis_to_json(axis));
    out["axes"] = std::move(list);
  } else {
    const auto& g = *model.graph();
    out["kind"] = "graph";
    out["layout"] = g.layout == GraphLayout::Tree ? "tree" : "graph";
    out["nodes"] = Json{{"id_column", g.nodes.id_column}, {"label_column", g.nodes.label_column}};
    out["edges"] = Json{{"source_column", g.edges.source_column},
                        {"target_column", g.edges.target_column}};
  }
  return out;
}

Axis axis_from_json(const Json& v, const std::string& path) {
  json::expect_object(v, path, {"name", "channel", "order_role", "min_value", "max_value",
                                "attribute"});
  Axis axis;
  axis.name = json::get_string(json::field(v, "name", path), path + "/name");
  axis.channel = json::get_enum<Channel>(json::field(v, "channel", path), path + "/channel");
  axis.order_role = json::get_bool(json::field(v, "order_role", path), path + "/order_role");
  axis.min_value =
      json::get_optional_number(json::field(v, "min_value", path), path + "/min_value");
  axis.max_value =
      json::get_optional_number(json::field(v, "max_value", path), path + "/max_value");
  const Json& attr = json::field(v, "attribute", path);
  if (!attr.is_null()) {
    const std::string apath = path + "/attribute";
    json::expect_object(attr, apath, {"name", "type", "role"});
    axis.attribute = Attribute{
        json::get_string(json::field(attr, "name", apath), apath + "/name"),
        json::get_enum<ScaleType>(json::field(attr, "type", apath), apath + "/type"),
        json::get_enum<AttributeRole>(json::field(attr, "role", apath), apath + "/role")};
  }
  return axis;
}

std::variant<AxisVisualization, GraphVisualization> body_from_json(const Json& v,
                                                                   const std::string& path) {
  if (!v.is_object()) json::fail(path, "expected an object");
  const std::string kind = json::get_string(json::field(v, "kind", path), path + "/kind");
  if (kind == "axes") {
    json::expect_object(v, path, {"kind", "axes"});
    const Json& list = json::field(v, "axes", path);
    if (!list.is_array()) json::fail(path + "/axes", "expected an array");
    AxisVisualization body;
    for (std::size_t i = 0; i < list.size(); ++i) {
      body.axes.push_back(axis_from_json(list[i], path + "/axes[" + std::to_string(i) + "]"));
    }
    return body;
  }
  if (kind == "graph") {
    json::expect_object(v, path, {"kind", "layout", "nodes", "edges"});
    GraphVisualization g;
    const std::string layout =
        json::get_string(json::field(v, "layout", path), path + "/layout");
    if (layout == "tree") {
      g.layout = GraphLayout::Tree;
    } else if (layout == "graph") {
      g.layout = GraphLayout::Graph;
    } else {
      json::fail(path + "/layout", "expected \"tree\" or \"graph\"");
    }
    const std::string npath = path + "/nodes";
    const Json& nodes = json::field(v, "nodes", path);
    json::expect_object(nodes, npath, {"id_column", "label_column"});
    g.nodes.id_column = json::get_string(json::field(nodes, "id_column", npath), npath);
    g.nodes.label_column = json::get_string(json::field(nodes, "label_column", npath), npath);
    const std::string epath = path + "/edges";
    const Json& edges = json::field(v, "edges", path);
    json::expect_object(edges, epath, {"source_column", "target_column"});
    g.edges.source_column = json::get_string(json::field(edges, "source_column", epath), epath);
    g.edges.target_column = json::get_string(json::field(edges, "target_column", epath), epath);
    return g;
  }
  json::fail(path + "/kind", "expected \"axes\" or \"graph\"");
}

}  // namespace

std::string serialize_vis_model(const VisualizationModel& model) {
  Json doc = Json::object();
  doc["version"] = kVisModelFormatVersion;
  doc["title"] = model.title;
  doc["graphic_type"] = json::enum_value(model.graphic_type);
  doc["orientation"] = json::enum_value(model.orientation);
  doc["interactions"] = json::enum_list(model.interactions);
  doc["legend"] = json::legend_to_json(model.legend);
  doc["color_range"] = json::color_range_to_json(model.color_range);
  doc["dashboard_position"] = json::position_to_json(model.dashboard_position);
  doc["body"] = body_to_json(model);
  return json::dump(doc);
}

VisualizationModel parse_vis_model(std::string_view json_text) {
  const Json doc = json::parse(json_text);
  json::expect_object(doc, "", {"version", "title", "graphic_type", "orientation", "interactions",
                                "legend", "color_range", "dashboard_position", "body"});
  const std::string version = json::get_string(json::field(doc, "version", ""), "version");
  if (version != kVisModelFormatVersion) {
    json::fail("version", "unsupported format version '" + version + "'");
  }
  VisualizationModel model;
  model.title = json::get_string(json::field(doc, "title", ""), "title");
  model.graphic_type =
      json::get_enum<GraphicType>(json::field(doc, "graphic_type", ""), "graphic_type");
  model.orientation =
      json::get_enum<Orientation>(json::field(doc, "orientation", ""), "orientation");
  model.interactions =
      json::get_enum_list<InteractionType>(json::field(doc, "interactions", ""), "interactions");
  model.legend = json::legend_from_json(json::field(doc, "legend", ""), "legend");
  model.color_range =
      json::color_range_from_json(json::field(doc, "color_range", ""), "color_range");
  model.dashboard_position =
      json::position_from_json(json::field(doc, "dashboard_position", ""), "dashboard_position");
  model.body = body_from_json(json::field(doc, "body", ""), "body");
  return model;
}

VisualizationModel load_vis_model(const std::filesystem::path& path) {
  return parse_vis_model(text::read_file(path));
}

}  // namespace reqviz
