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

#include <compare>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace reqviz {

/// An ISO-8601 date or date-time cell. `text` is the source spelling;
/// `epoch_seconds` orders dates.
struct DateValue {
  std::string text;
  std::int64_t epoch_seconds = 0;

  auto operator<=>(const DateValue&) const = default;
};

enum class CellKind { Null, Number, Date, Text };

class Cell {
 public:
  using Value = std::variant<std::monostate, double, DateValue, std::string>;

  Cell() = default;
  explicit Cell(double number) : value_(number) {}
  explicit Cell(DateValue date) : value_(std::move(date)) {}
  explicit Cell(std::string text) : value_(std::move(text)) {}

  /// Typed reading of a raw CSV field: number, then ISO-8601 date, then
  /// text. The empty string is null.
  static Cell parse(std::string_view raw);

  CellKind kind() const { return static_cast<CellKind>(value_.index()); }
  bool is_null() const { return kind() == CellKind::Null; }
  const Value& value() const { return value_; }

  double number() const { return std::get<double>(value_); }
  const DateValue& date() const { return std::get<DateValue>(value_); }
  const std::string& text() const { return std::get<std::string>(value_); }

  /// Display/identity string: numbers in shortest form, dates as written.
  std::string to_string() const;

  bool operator==(const Cell&) const = default;
  auto operator<=>(const Cell& other) const { return value_ <=> other.value_; }

 private:
  Value value_;
};

struct Column {
  std::string name;
  std::vector<Cell> values;

  bool operator==(const Column&) const = default;
};

/// Column-major table. All columns have `row_count` cells; names are unique.
class Dataset {
 public:
  Dataset() = default;
  /// Throws Error(RaggedRows / DuplicateColumn) if the invariants fail.
  explicit Dataset(std::vector<Column> columns);

  const std::vector<Column>& columns() const { return columns_; }
  std::size_t row_count() const { return row_count_; }
  const Column* find(std::string_view name) const;

  bool operator==(const Dataset&) const = default;

 private:
  std::vector<Column> columns_;
  std::size_t row_count_ = 0;
};

enum class DataFormat { Csv };

/// RFC 4180 CSV with a mandatory header row. Throws Error with
/// MissingHeader, RaggedRows, DuplicateColumn or InvalidEncoding.
Dataset parse_csv(std::string_view text);

/// Throws Error(IoError) when the file cannot be read.
Dataset load_dataset(const std::filesystem::path& path, DataFormat format = DataFormat::Csv);

/// Row-major helper used by tests and codegen.
std::vector<Cell> row_at(const Dataset& dataset, std::size_t row);

}  // namespace reqviz
