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

#include "json_codec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace reqviz::json {

Json number(double value) {
  constexpr double kExact = 9007199254740992.0;  // 2^53
  if (std::isfinite(value) && std::trunc(value) == value && std::fabs(value) < kExact) {
    return static_cast<std::int64_t>(value);
  }
  return value;
}

Json cell_value(const Cell& cell) {
  switch (cell.kind()) {
    case CellKind::Null: return nullptr;
    case CellKind::Number: return number(cell.number());
    case CellKind::Date: return cell.date().text;
    case CellKind::Text: return cell.text();
  }
  return nullptr;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string dump_html_safe(const Json& doc) {
  const std::string raw = dump(doc);
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '<': out += "\\u003c"; break;
      case '>': out += "\\u003e"; break;
      case '&': out += "\\u0026"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

Json parse(std::string_view text, ErrorCode code) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    SourceLocation at{1, 1};
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++at.line;
        at.column = 1;
      } else {
        ++at.column;
      }
    }
    const std::string message = std::string("malformed JSON: ") + e.what();
    throw Error(code, message, {Diagnostic{code, "", message, at}});
  } catch (const nlohmann::json::exception& e) {
    const std::string message = std::string("malformed JSON: ") + e.what();
    throw Error(code, message, {Diagnostic{code, "", message, {}}});
  }
}

void fail(const std::string& path, const std::string& message, ErrorCode code) {
  const std::string where = path.empty() ? "document" : path;
  throw Error(code, where + ": " + message, {Diagnostic{code, path, message, {}}});
}

void expect_object(const Json& value, const std::string& path,
                   std::initializer_list<std::string_view> allowed) {
  if (!value.is_object()) fail(path, "expected an object");
  for (const auto& [key, v] : value.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) fail(path, "unexpected key '" + key + "'");
  }
}

const Json& field(const Json& object, std::string_view key, const std::string& path) {
  auto it = object.find(std::string(key));
  if (it == object.end()) fail(path, "missing key '" + std::string(key) + "'");
  return *it;
}

const Json* optional_field(const Json& object, std::string_view key) {
  auto it = object.find(std::string(key));
  return it == object.end() ? nullptr : &*it;
}

std::string get_string(const Json& value, const std::string& path) {
  if (!value.is_string()) fail(path, "expected a string");
  return value.get<std::string>();
}

double get_number(const Json& value, const std::string& path) {
  if (!value.is_number()) fail(path, "expected a number");
  return value.get<double>();
}

bool get_bool(const Json& value, const std::string& path) {
  if (!value.is_boolean()) fail(path, "expected a boolean");
  return value.get<bool>();
}

std::uint32_t get_index(const Json& value, const std::string& path) {
  if (!value.is_number_unsigned() ||
      value.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max()) {
    fail(path, "expected a non-negative integer");
  }
  return static_cast<std::uint32_t>(value.get<std::uint64_t>());
}

std::optional<double> get_optional_number(const Json& value, const std::string& path) {
  if (value.is_null()) return std::nullopt;
  return get_number(value, path);
}

Json legend_to_json(const std::optional<Legend>& legend) {
  if (!legend) return nullptr;
  Json out = Json::object();
  out["title"] = legend->title;
  out["type"] = enum_value(legend->type);
  out["position"] = enum_value(legend->position);
  out["font_family"] = legend->font_family;
  out["text_size"] = number(legend->text_size);
  return out;
}

std::optional<Legend> legend_from_json(const Json& value, const std::string& path) {
  if (value.is_null()) return std::nullopt;
  expect_object(value, path, {"title", "type", "position", "font_family", "text_size"});
  Legend legend;
  legend.title = get_string(field(value, "title", path), path + "/title");
  if (const auto* v = optional_field(value, "type")) {
    legend.type = get_enum<LegendType>(*v, path + "/type");
  }
  if (const auto* v = optional_field(value, "position")) {
    legend.position = get_enum<LegendPosition>(*v, path + "/position");
  }
  if (const auto* v = optional_field(value, "font_family")) {
    legend.font_family = get_string(*v, path + "/font_family");
  }
  if (const auto* v = optional_field(value, "text_size")) {
    legend.text_size = get_number(*v, path + "/text_size");
  }
  return legend;
}

Json color_range_to_json(const ColorRange& range, bool resolve) {
  Json out = Json::object();
  if (const auto* named = std::get_if<NamedPalette>(&range.source)) {
    out["type"] = "named";
    out["id"] = named->id;
    if (resolve) {
      Json colors = Json::array();
      for (auto c : palette_colors(named->id)) colors.push_back(std::string(c));
      out["colors"] = std::move(colors);
    }
  } else {
    const auto& custom = std::get<CustomPalette>(range.source);
    out["type"] = "custom";
    if (resolve) out["id"] = nullptr;
    out["colors"] = custom.colors;
  }
  return out;
}

ColorRange color_range_from_json(const Json& value, const std::string& path) {
  expect_object(value, path, {"type", "id", "colors"});
  const std::string type = get_string(field(value, "type", path), path + "/type");
  ColorRange range;
  if (type == "named") {
    range.source = NamedPalette{get_string(field(value, "id", path), path + "/id")};
  } else if (type == "custom") {
    const Json& colors = field(value, "colors", path);
    if (!colors.is_array()) fail(path + "/colors", "expected an array");
    CustomPalette custom;
    for (std::size_t i = 0; i < colors.size(); ++i) {
      custom.colors.push_back(get_string(colors[i], path + "/colors[" + std::to_string(i) + "]"));
    }
    range.source = std::move(custom);
  } else {
    fail(path + "/type", "expected \"named\" or \"custom\"");
  }
  return range;
}

Json position_to_json(const std::optional<DashboardPosition>& position) {
  if (!position) return nullptr;
  Json out = Json::object();
  out["row"] = position->row;
  out["col"] = position->col;
  out["width"] = position->width;
  out["height"] = position->height;
  return out;
}

std::optional<DashboardPosition> position_from_json(const Json& value, const std::string& path) {
  if (value.is_null()) return std::nullopt;
  expect_object(value, path, {"row", "col", "width", "height"});
  DashboardPosition p;
  p.row = get_index(field(value, "row", path), path + "/row");
  p.col = get_index(field(value, "col", path), path + "/col");
  if (const auto* v = optional_field(value, "width")) p.width = get_index(*v, path + "/width");
  if (const auto* v = optional_field(value, "height")) p.height = get_index(*v, path + "/height");
  return p;
}

}  // namespace reqviz::json
