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

// Shared JSON plumbing: canonical output and path-aware strict readers that
// throw Error(SchemaError).

#pragma once

#include <cstdint>
#include <initializer_list>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "reqviz/dataset.hpp"
#include "reqviz/enums.hpp"
#include "reqviz/error.hpp"
#include "reqviz/vis_model.hpp"

namespace reqviz::json {

using Json = nlohmann::ordered_json;

/// Integral values within the exactly-representable range become JSON
/// integers so "1250" is never written as "1250.0".
Json number(double value);

template <typename E>
Json enum_value(E value) {
  return std::string(wire_name(value));
}

template <typename E>
Json enum_list(const std::vector<E>& values) {
  Json out = Json::array();
  for (auto v : values) out.push_back(enum_value(v));
  return out;
}

/// Numbers as numbers, dates as their source text, null as null.
Json cell_value(const Cell& cell);

/// dump(2) plus a trailing newline.
std::string dump(const Json& doc);

/// Like dump, but '<', '>' and '&' are written as \u escapes so the text
/// can sit verbatim inside an HTML script element.
std::string dump_html_safe(const Json& doc);

/// Parses text; a syntax error becomes Error(code).
Json parse(std::string_view text, ErrorCode code = ErrorCode::SchemaError);

[[noreturn]] void fail(const std::string& path, const std::string& message,
                       ErrorCode code = ErrorCode::SchemaError);

/// Requires an object whose keys are all in `allowed`.
void expect_object(const Json& value, const std::string& path,
                   std::initializer_list<std::string_view> allowed);
const Json& field(const Json& object, std::string_view key, const std::string& path);
const Json* optional_field(const Json& object, std::string_view key);

std::string get_string(const Json& value, const std::string& path);
double get_number(const Json& value, const std::string& path);
bool get_bool(const Json& value, const std::string& path);
std::uint32_t get_index(const Json& value, const std::string& path);
std::optional<double> get_optional_number(const Json& value, const std::string& path);

template <typename E>
E get_enum(const Json& value, const std::string& path) {
  const std::string text = get_string(value, path);
  if (auto parsed = parse_enum<E>(text)) return *parsed;
  fail(path, "unknown literal '" + text + "'");
}

template <typename E>
std::vector<E> get_enum_list(const Json& value, const std::string& path) {
  if (!value.is_array()) fail(path, "expected an array");
  std::vector<E> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(get_enum<E>(value[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json legend_to_json(const std::optional<Legend>& legend);
std::optional<Legend> legend_from_json(const Json& value, const std::string& path);

/// `resolve` adds the palette's concrete colors for named ranges.
Json color_range_to_json(const ColorRange& range, bool resolve = false);
ColorRange color_range_from_json(const Json& value, const std::string& path);

Json position_to_json(const std::optional<DashboardPosition>& position);
std::optional<DashboardPosition> position_from_json(const Json& value, const std::string& path);

}  // namespace reqviz::json
