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

#include "reqviz/profiler.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>

#include "reqviz/error.hpp"
#include "text_util.hpp"

namespace reqviz {

std::vector<std::vector<std::string>> ProfilerConfig::default_ordinal_lexicons() {
  return {
      {"january", "february", "march", "april", "may", "june", "july", "august", "september",
       "october", "november", "december"},
      {"jan", "feb", "mar", "apr", "may", "jun", "jul", "aug", "sep", "oct", "nov", "dec"},
      {"monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday"},
      {"mon", "tue", "wed", "thu", "fri", "sat", "sun"},
      {"q1", "q2", "q3", "q4"},
      {"very low", "low", "medium", "high", "very high"},
      {"small", "medium", "large"},
      {"poor", "fair", "good", "very good", "excellent"},
      {"strongly disagree", "disagree", "neutral", "agree", "strongly agree"},
  };
}

void ProfilerConfig::check() const {
  if (cardinality_threshold < 2) {
    throw Error(ErrorCode::ConfigError, "cardinality_threshold must be at least 2, got " +
                                            std::to_string(cardinality_threshold));
  }
  for (std::size_t i = 0; i < ordinal_lexicons.size(); ++i) {
    if (ordinal_lexicons[i].empty()) {
      throw Error(ErrorCode::ConfigError, "ordinal_lexicons[" + std::to_string(i) + "] is empty");
    }
    for (const auto& token : ordinal_lexicons[i]) {
      if (token.empty()) {
        throw Error(ErrorCode::ConfigError,
                    "ordinal_lexicons[" + std::to_string(i) + "] contains an empty token");
      }
    }
  }
}

ProfilerConfig ProfilerConfig::from_json(std::string_view json_text) {
  ProfilerConfig config;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ConfigError, std::string("profiler config is not valid JSON: ") +
                                            e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ConfigError, "profiler config must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "cardinality_threshold") {
      if (!value.is_number_unsigned()) {
        throw Error(ErrorCode::ConfigError, "cardinality_threshold must be a positive integer");
      }
      config.cardinality_threshold = value.get<std::size_t>();
    } else if (key == "ordinal_lexicons") {
      if (!value.is_array()) {
        throw Error(ErrorCode::ConfigError, "ordinal_lexicons must be a list of string lists");
      }
      config.ordinal_lexicons.clear();
      for (const auto& lex : value) {
        if (!lex.is_array()) {
          throw Error(ErrorCode::ConfigError, "ordinal_lexicons must be a list of string lists");
        }
        std::vector<std::string> tokens;
        for (const auto& tok : lex) {
          if (!tok.is_string()) {
            throw Error(ErrorCode::ConfigError, "ordinal lexicon tokens must be strings");
          }
          tokens.push_back(tok.get<std::string>());
        }
        config.ordinal_lexicons.push_back(std::move(tokens));
      }
    } else {
      throw Error(ErrorCode::ConfigError, "unknown profiler config key '" + key + "'");
    }
  }
  config.check();
  return config;
}

std::string ProfilerConfig::to_json() const {
  nlohmann::ordered_json doc;
  doc["cardinality_threshold"] = cardinality_threshold;
  doc["ordinal_lexicons"] = ordinal_lexicons;
  return doc.dump(2) + "\n";
}

namespace {

bool matches_lexicon(const std::set<std::string>& tokens, const ProfilerConfig& config) {
  for (const auto& lexicon : config.ordinal_lexicons) {
    std::set<std::string> vocabulary;
    for (const auto& t : lexicon) vocabulary.insert(text::ascii_lower(t));
    if (std::includes(vocabulary.begin(), vocabulary.end(), tokens.begin(), tokens.end())) {
      return true;
    }
  }
  return false;
}

}  // namespace

ScaleType infer_column_type(std::span<const Cell> values, std::optional<ScaleType> override_type,
                            const ProfilerConfig& config) {
  if (override_type) return *override_type;
  std::size_t numbers = 0, dates = 0, texts = 0;
  bool negative = false;
  std::set<std::string> tokens;
  for (const auto& cell : values) {
    switch (cell.kind()) {
      case CellKind::Null: break;
      case CellKind::Number:
        ++numbers;
        negative = negative || cell.number() < 0;
        break;
      case CellKind::Date: ++dates; break;
      case CellKind::Text:
        ++texts;
        tokens.insert(text::ascii_lower(text::trim(cell.text())));
        break;
    }
  }
  const std::size_t present = numbers + dates + texts;
  if (present == 0) throw Error(ErrorCode::AllNullColumn, "column has no non-null values");
  if (texts == present && matches_lexicon(tokens, config)) return ScaleType::Ordinal;
  if (numbers == present) return negative ? ScaleType::Interval : ScaleType::Ratio;
  if (dates == present) return ScaleType::Interval;
  return ScaleType::Nominal;
}

CardinalityClass classify_cardinality(std::span<const std::size_t> distinct_counts,
                                      const ProfilerConfig& config) {
  if (distinct_counts.empty()) {
    throw Error(ErrorCode::EmptySelection, "cardinality needs at least one selected attribute");
  }
  const std::size_t max = *std::max_element(distinct_counts.begin(), distinct_counts.end());
  return CardinalityClass{max < config.cardinality_threshold ? Cardinality::Low : Cardinality::High,
                          max};
}

Dimensionality classify_dimensionality(std::size_t selected_attribute_count,
                                       const SourceShape& shape) {
  if (std::holds_alternative<TreeShape>(shape)) return Dimensionality::Tree;
  if (std::holds_alternative<GraphShape>(shape)) return Dimensionality::Graph;
  switch (selected_attribute_count) {
    case 0: throw Error(ErrorCode::ZeroAttributes, "a flat selection needs at least one attribute");
    case 1: return Dimensionality::OneDimensional;
    case 2: return Dimensionality::TwoDimensional;
    default: return Dimensionality::NDimensional;
  }
}

std::size_t distinct_count(std::span<const Cell> values) {
  std::set<Cell::Value> seen;
  for (const auto& cell : values) {
    if (!cell.is_null()) seen.insert(cell.value());
  }
  return seen.size();
}

std::optional<ScaleType> dominant_scale(std::span<const ScaleType> types) {
  if (types.empty()) return std::nullopt;
  // Enum order is Nominal < Ordinal < Interval < Ratio; the least
  // informative scale is the smallest enumerator.
  return *std::min_element(types.begin(), types.end());
}

DataProfile profile_source(const Dataset& dataset, const DatasourceResource& source,
                           const ProfilerConfig& config) {
  config.check();
  auto column = [&](const std::string& name) -> const Column& {
    const Column* c = dataset.find(name);
    if (!c) {
      throw Error(ErrorCode::UnknownAttribute,
                  "attribute '" + name + "' is not a column of " + source.uri);
    }
    return *c;
  };
  if (const auto* tree = std::get_if<TreeShape>(&source.shape)) {
    column(tree->parent_column);
    column(tree->id_column);
  } else if (const auto* graph = std::get_if<GraphShape>(&source.shape)) {
    column(graph->source_column);
    column(graph->target_column);
  }

  DataProfile profile;
  auto infer = [&](const std::string& name) {
    const Column& c = column(name);
    std::optional<ScaleType> override_type;
    if (auto it = source.type_overrides.find(name); it != source.type_overrides.end()) {
      override_type = it->second;
    }
    try {
      return infer_column_type(c.values, override_type, config);
    } catch (const Error& e) {
      throw Error(e.code(), "attribute '" + name + "': " + e.what());
    }
  };

  std::vector<ScaleType> independent, dependent;
  std::vector<std::size_t> category_counts, measure_counts;
  for (const auto& name : source.categories) {
    const ScaleType t = infer(name);
    profile.attribute_types[name] = t;
    independent.push_back(t);
    category_counts.push_back(distinct_count(column(name).values));
  }
  for (const auto& name : source.measures) {
    const ScaleType t = infer(name);
    profile.attribute_types[name] = t;
    dependent.push_back(t);
    measure_counts.push_back(distinct_count(column(name).values));
  }
  profile.independent_type = dominant_scale(independent);
  profile.dependent_type = dominant_scale(dependent);
  // Items to represent are the category members; a measure-only selection
  // plots its measure values directly.
  profile.cardinality =
      classify_cardinality(category_counts.empty() ? measure_counts : category_counts, config);
  profile.dimensionality =
      classify_dimensionality(source.categories.size() + source.measures.size(), source.shape);
  return profile;
}

}  // namespace reqviz
