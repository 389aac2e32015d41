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

// Data profiling: reduces a selection of dataset columns to the
// coordinates chart selection needs (scale types, cardinality class and
// dimensionality class).

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reqviz/dataset.hpp"
#include "reqviz/enums.hpp"
#include "reqviz/goal_model.hpp"

namespace reqviz {

struct ProfilerConfig {
  /// Low cardinality iff the largest distinct count is strictly below this.
  std::size_t cardinality_threshold = 50;
  /// Ordered vocabularies; a text column whose values all belong to one of
  /// these lists (case-insensitively) is Ordinal.
  std::vector<std::vector<std::string>> ordinal_lexicons = default_ordinal_lexicons();

  static std::vector<std::vector<std::string>> default_ordinal_lexicons();

  /// Reads `cardinality_threshold` and `ordinal_lexicons`; missing keys keep
  /// their defaults. Throws Error(ConfigError).
  static ProfilerConfig from_json(std::string_view json_text);
  std::string to_json() const;

  /// Throws Error(ConfigError) unless threshold >= 2 and lexicons are non-empty lists.
  void check() const;

  bool operator==(const ProfilerConfig&) const = default;
};

struct CardinalityClass {
  Cardinality kind = Cardinality::Low;
  std::size_t max_distinct = 0;

  bool operator==(const CardinalityClass&) const = default;
};

struct DataProfile {
  std::map<std::string, ScaleType> attribute_types;
  std::optional<ScaleType> independent_type;  // nullopt: no category selected
  std::optional<ScaleType> dependent_type;    // nullopt: no measure selected
  CardinalityClass cardinality;
  Dimensionality dimensionality = Dimensionality::OneDimensional;

  bool operator==(const DataProfile&) const = default;
};

/// Override wins; otherwise lexicon match -> Ordinal, numbers -> Interval
/// when any is negative else Ratio, dates -> Interval, anything else ->
/// Nominal. Nulls are ignored. Throws Error(AllNullColumn).
ScaleType infer_column_type(std::span<const Cell> values, std::optional<ScaleType> override_type,
                            const ProfilerConfig& config);

/// Throws Error(EmptySelection) for an empty list.
CardinalityClass classify_cardinality(std::span<const std::size_t> distinct_counts,
                                      const ProfilerConfig& config);

/// Tree/Graph shapes map directly; flat selections by attribute count.
/// Throws Error(ZeroAttributes) for a flat selection of nothing.
Dimensionality classify_dimensionality(std::size_t selected_attribute_count,
                                       const SourceShape& shape);

/// Number of distinct non-null values.
std::size_t distinct_count(std::span<const Cell> values);

/// Least informative scale among `types` (Nominal > Ordinal > Interval > Ratio).
std::optional<ScaleType> dominant_scale(std::span<const ScaleType> types);

/// Throws Error(UnknownAttribute / AllNullColumn / EmptySelection).
DataProfile profile_source(const Dataset& dataset, const DatasourceResource& source,
                           const ProfilerConfig& config);

}  // namespace reqviz
