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

#include "reqviz/dataset.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <set>

#include "reqviz/error.hpp"
#include "text_util.hpp"

namespace reqviz {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::optional<double> parse_number(std::string_view s) {
  if (s.empty()) return std::nullopt;
  // Strict decimal syntax: -?digits[.digits][(e|E)[+-]digits]
  std::size_t i = 0;
  if (s[i] == '-') ++i;
  std::size_t int_digits = 0;
  while (i < s.size() && is_digit(s[i])) {
    ++i;
    ++int_digits;
  }
  std::size_t frac_digits = 0;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && is_digit(s[i])) {
      ++i;
      ++frac_digits;
    }
  }
  if (int_digits == 0 && frac_digits == 0) return std::nullopt;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t exp_digits = 0;
    while (i < s.size() && is_digit(s[i])) {
      ++i;
      ++exp_digits;
    }
    if (exp_digits == 0) return std::nullopt;
  }
  if (i != s.size()) return std::nullopt;
  double value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  if (value == 0) value = 0;  // normalise -0
  return value;
}

bool read_fixed(std::string_view s, std::size_t pos, std::size_t len, int& out) {
  if (pos + len > s.size()) return false;
  int v = 0;
  for (std::size_t k = 0; k < len; ++k) {
    if (!is_digit(s[pos + k])) return false;
    v = v * 10 + (s[pos + k] - '0');
  }
  out = v;
  return true;
}

std::optional<DateValue> parse_date(std::string_view s) {
  int y = 0, mo = 0, d = 0;
  if (s.size() < 10 || !read_fixed(s, 0, 4, y) || s[4] != '-' || !read_fixed(s, 5, 2, mo) ||
      s[7] != '-' || !read_fixed(s, 8, 2, d)) {
    return std::nullopt;
  }
  static constexpr int kDays[] = {31, 29, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (mo < 1 || mo > 12 || d < 1 || d > kDays[mo - 1]) return std::nullopt;
  const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
  if (mo == 2 && d == 29 && !leap) return std::nullopt;

  std::int64_t seconds = text::days_from_civil(y, static_cast<unsigned>(mo),
                                               static_cast<unsigned>(d)) * 86400;
  std::size_t i = 10;
  if (i < s.size()) {
    if (s[i] != 'T' && s[i] != ' ') return std::nullopt;
    int hh = 0, mi = 0, ss = 0;
    if (!read_fixed(s, i + 1, 2, hh) || i + 3 >= s.size() || s[i + 3] != ':' ||
        !read_fixed(s, i + 4, 2, mi)) {
      return std::nullopt;
    }
    i += 6;
    if (i < s.size() && s[i] == ':') {
      if (!read_fixed(s, i + 1, 2, ss)) return std::nullopt;
      i += 3;
      if (i < s.size() && s[i] == '.') {
        ++i;
        const std::size_t start = i;
        while (i < s.size() && is_digit(s[i])) ++i;
        if (i == start) return std::nullopt;
      }
    }
    if (hh > 23 || mi > 59 || ss > 60) return std::nullopt;
    seconds += hh * 3600 + mi * 60 + ss;
    if (i < s.size()) {
      if (s[i] == 'Z') {
        ++i;
      } else if (s[i] == '+' || s[i] == '-') {
        int oh = 0, om = 0;
        if (!read_fixed(s, i + 1, 2, oh) || i + 3 >= s.size() || s[i + 3] != ':' ||
            !read_fixed(s, i + 4, 2, om) || oh > 23 || om > 59) {
          return std::nullopt;
        }
        const int offset = oh * 3600 + om * 60;
        seconds += s[i] == '+' ? -offset : offset;
        i += 6;
      }
    }
    if (i != s.size()) return std::nullopt;
  }
  return DateValue{std::string(s), seconds};
}

}  // namespace

Cell Cell::parse(std::string_view raw) {
  if (raw.empty()) return Cell{};
  const auto trimmed = text::trim(raw);
  if (auto n = parse_number(trimmed)) return Cell{*n};
  if (auto d = parse_date(trimmed)) return Cell{std::move(*d)};
  return Cell{std::string(raw)};
}

std::string Cell::to_string() const {
  switch (kind()) {
    case CellKind::Null: return "";
    case CellKind::Number: return text::format_number(number());
    case CellKind::Date: return date().text;
    case CellKind::Text: return text();
  }
  return "";
}

Dataset::Dataset(std::vector<Column> columns) : columns_(std::move(columns)) {
  std::set<std::string_view> names;
  for (const auto& c : columns_) {
    if (!names.insert(c.name).second) {
      throw Error(ErrorCode::DuplicateColumn, "duplicate column name '" + c.name + "'");
    }
  }
  row_count_ = columns_.empty() ? 0 : columns_.front().values.size();
  for (const auto& c : columns_) {
    if (c.values.size() != row_count_) {
      throw Error(ErrorCode::RaggedRows, "column '" + c.name + "' has " +
                                             std::to_string(c.values.size()) + " cells, expected " +
                                             std::to_string(row_count_));
    }
  }
}

const Column* Dataset::find(std::string_view name) const {
  for (const auto& c : columns_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<Cell> row_at(const Dataset& dataset, std::size_t row) {
  std::vector<Cell> out;
  out.reserve(dataset.columns().size());
  for (const auto& c : dataset.columns()) out.push_back(c.values.at(row));
  return out;
}

namespace {

// Splits RFC 4180 records. Accepts LF or CRLF terminators and a missing
// final terminator.
std::vector<std::vector<std::string>> split_records(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t record_line = 1;
  std::size_t line = 1;
  auto end_record = [&] {
    record.push_back(std::move(field));
    field.clear();
    // A physically blank line is not a record.
    if (!(record.size() == 1 && record.front().empty() && !field_started)) {
      records.push_back(std::move(record));
    }
    record.clear();
    field_started = false;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty()) {
          throw Error(ErrorCode::SyntaxError,
                      "stray quote inside unquoted field on line " + std::to_string(line));
        }
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        record.push_back(std::move(field));
        field.clear();
        field_started = true;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        field.push_back(c);
        break;
      case '\n':
        end_record();
        ++line;
        record_line = line;
        break;
      default:
        field.push_back(c);
        field_started = true;
    }
  }
  if (in_quotes) {
    throw Error(ErrorCode::SyntaxError,
                "unterminated quoted field starting on line " + std::to_string(record_line));
  }
  if (field_started || !field.empty() || !record.empty()) end_record();
  return records;
}

}  // namespace

Dataset parse_csv(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  if (const auto bad = text::utf8_error_offset(text); bad != std::string_view::npos) {
    throw Error(ErrorCode::InvalidEncoding,
                "CSV input is not valid UTF-8 (byte offset " + std::to_string(bad) + ")");
  }
  auto records = split_records(text);
  if (records.empty()) throw Error(ErrorCode::MissingHeader, "CSV input has no header row");
  const auto& header = records.front();
  std::vector<Column> columns;
  columns.reserve(header.size());
  for (const auto& name : header) {
    if (name.empty()) throw Error(ErrorCode::MissingHeader, "CSV header has an empty column name");
    columns.push_back(Column{name, {}});
  }
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != header.size()) {
      throw Error(ErrorCode::RaggedRows, "row " + std::to_string(r) + " has " +
                                             std::to_string(rec.size()) + " fields, header has " +
                                             std::to_string(header.size()));
    }
    for (std::size_t c = 0; c < rec.size(); ++c) columns[c].values.push_back(Cell::parse(rec[c]));
  }
  return Dataset(std::move(columns));
}

Dataset load_dataset(const std::filesystem::path& path, DataFormat format) {
  switch (format) {
    case DataFormat::Csv: return parse_csv(text::read_file(path));
  }
  throw Error(ErrorCode::IoError, "unsupported data format");
}

}  // namespace reqviz
