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

#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "generators.hpp"
#include "reqviz/dataset.hpp"
#include "reqviz/profiler.hpp"

namespace reqviz {
namespace {

DatasourceResource flat_source(std::vector<std::string> categories,
                               std::vector<std::string> measures) {
  DatasourceResource s;
  s.uri = "t.csv";
  s.categories = std::move(categories);
  s.measures = std::move(measures);
  return s;
}

Dataset distinct_column(std::size_t distinct) {
  Column key{"Key", {}};
  Column value{"Value", {}};
  for (std::size_t i = 0; i < distinct; ++i) {
    key.values.emplace_back("k" + std::to_string(i));
    value.values.emplace_back(static_cast<double>(i));
  }
  return Dataset({key, value});
}

std::vector<Cell> cells(std::initializer_list<const char*> raw) {
  std::vector<Cell> out;
  for (const char* r : raw) out.push_back(Cell::parse(r));
  return out;
}

TEST(Profiler, CardinalityBoundaryAtDefaultThreshold) {
  const ProfilerConfig config;
  ASSERT_EQ(config.cardinality_threshold, 50u);
  const auto source = flat_source({"Key"}, {"Value"});
  const auto low = profile_source(distinct_column(49), source, config);
  EXPECT_EQ(low.cardinality.kind, Cardinality::Low);
  EXPECT_EQ(low.cardinality.max_distinct, 49u);
  const auto high = profile_source(distinct_column(50), source, config);
  EXPECT_EQ(high.cardinality.kind, Cardinality::High);
  EXPECT_EQ(high.cardinality.max_distinct, 50u);
}

TEST(Profiler, CardinalityCountsCategoriesOnly) {
  // 60 distinct amounts under 3 categories stay Low.
  Column cat{"Cat", {}}, amount{"Amount", {}};
  for (int i = 0; i < 60; ++i) {
    cat.values.emplace_back(std::string(1, static_cast<char>('a' + i % 3)));
    amount.values.emplace_back(1000.0 + i);
  }
  const auto p = profile_source(Dataset({cat, amount}), flat_source({"Cat"}, {"Amount"}), {});
  EXPECT_EQ(p.cardinality.kind, Cardinality::Low);
  EXPECT_EQ(p.cardinality.max_distinct, 3u);
}

TEST(Profiler, CaseStudyProfile) {
  const auto cs = testing::derive_case_study();
  EXPECT_EQ(cs.profile.attribute_types.at("Type"), ScaleType::Nominal);
  EXPECT_EQ(cs.profile.attribute_types.at("Province"), ScaleType::Nominal);
  EXPECT_EQ(cs.profile.attribute_types.at("Amount"), ScaleType::Ratio);
  EXPECT_EQ(cs.profile.independent_type, ScaleType::Nominal);
  EXPECT_EQ(cs.profile.dependent_type, ScaleType::Ratio);
  EXPECT_EQ(cs.profile.dimensionality, Dimensionality::NDimensional);
  EXPECT_EQ(cs.profile.cardinality.kind, Cardinality::Low);
  EXPECT_EQ(cs.profile.cardinality.max_distinct, 6u);
}

TEST(Profiler, TypeInference) {
  const ProfilerConfig config;
  EXPECT_EQ(infer_column_type(cells({"1", "2.5", ""}), std::nullopt, config), ScaleType::Ratio);
  EXPECT_EQ(infer_column_type(cells({"1", "-2"}), std::nullopt, config), ScaleType::Interval);
  EXPECT_EQ(infer_column_type(cells({"2024-01-01", "2024-02-01"}), std::nullopt, config),
            ScaleType::Interval);
  EXPECT_EQ(infer_column_type(cells({"March", "january", "MAY"}), std::nullopt, config),
            ScaleType::Ordinal);
  EXPECT_EQ(infer_column_type(cells({"Valencia", "Alicante"}), std::nullopt, config),
            ScaleType::Nominal);
  EXPECT_EQ(infer_column_type(cells({"1", "x"}), std::nullopt, config), ScaleType::Nominal);
  EXPECT_EQ(infer_column_type(cells({"1", "2"}), ScaleType::Ordinal, config), ScaleType::Ordinal);
  EXPECT_THROW(infer_column_type(cells({"", ""}), std::nullopt, config), Error);
}

TEST(Profiler, DimensionalityAndShapes) {
  EXPECT_EQ(classify_dimensionality(1, FlatShape{}), Dimensionality::OneDimensional);
  EXPECT_EQ(classify_dimensionality(2, FlatShape{}), Dimensionality::TwoDimensional);
  EXPECT_EQ(classify_dimensionality(5, FlatShape{}), Dimensionality::NDimensional);
  EXPECT_EQ(classify_dimensionality(2, TreeShape{"p", "i"}), Dimensionality::Tree);
  EXPECT_EQ(classify_dimensionality(2, GraphShape{"s", "t"}), Dimensionality::Graph);
  try {
    classify_dimensionality(0, FlatShape{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroAttributes);
  }
}

TEST(Profiler, DominantScaleIsLeastInformative) {
  const std::vector<ScaleType> types = {ScaleType::Ratio, ScaleType::Ordinal, ScaleType::Interval};
  EXPECT_EQ(dominant_scale(types), ScaleType::Ordinal);
  EXPECT_EQ(dominant_scale(std::span<const ScaleType>{}), std::nullopt);
}

TEST(Profiler, UnknownAttribute) {
  const auto cs = testing::derive_case_study();
  try {
    profile_source(cs.data, flat_source({"Region"}, {"Amount"}), {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownAttribute);
  }
}

TEST(Profiler, ConfigValidation) {
  EXPECT_THROW(ProfilerConfig::from_json(R"({"cardinality_threshold": 1})"), Error);
  EXPECT_THROW(ProfilerConfig::from_json(R"({"ordinal_lexicons": [[]]})"), Error);
  const auto c = ProfilerConfig::from_json(R"({"cardinality_threshold": 7})");
  EXPECT_EQ(c.cardinality_threshold, 7u);
  EXPECT_EQ(ProfilerConfig::from_json(c.to_json()), c);
}

// Random dataset: one text category with up to `max_distinct` values, one
// numeric measure, one mixed column.
Dataset random_dataset(testing::Gen& g, std::size_t rows, std::size_t max_distinct) {
  Column cat{"Cat", {}}, num{"Num", {}}, mixed{"Mixed", {}};
  for (std::size_t r = 0; r < rows; ++r) {
    cat.values.push_back(g.coin(0.05) ? Cell() : Cell("c" + std::to_string(g.below(max_distinct))));
    num.values.push_back(g.coin(0.05) ? Cell() : Cell(g.real(-10, 100)));
    mixed.values.push_back(g.coin(0.5) ? Cell(static_cast<double>(g.below(9)))
                                       : Cell(std::string(g.coin() ? "low" : "high")));
  }
  cat.values.front() = Cell(std::string("c0"));
  num.values.front() = Cell(1.0);
  return Dataset({cat, num, mixed});
}

Dataset permute_rows(const Dataset& d, std::vector<std::size_t> order) {
  std::vector<Column> cols;
  for (const auto& c : d.columns()) {
    Column out{c.name, {}};
    for (auto i : order) out.values.push_back(c.values[i]);
    cols.push_back(std::move(out));
  }
  return Dataset(std::move(cols));
}

TEST(ProfilerProperty, RowPermutationInvariance) {
  testing::Gen g(99);
  const auto source = flat_source({"Cat", "Mixed"}, {"Num"});
  for (int i = 0; i < 200; ++i) {
    const Dataset d = random_dataset(g, 1 + g.below(120), 1 + g.below(80));
    std::vector<std::size_t> order(d.row_count());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::shuffle(order.begin(), order.end(), g.engine());
    EXPECT_EQ(profile_source(d, source, {}), profile_source(permute_rows(d, order), source, {}));
  }
}

TEST(ProfilerProperty, AppendMonotonicity) {
  // Appending rows never lowers the distinct count nor turns High into Low.
  testing::Gen g(1234);
  const auto source = flat_source({"Cat"}, {"Num"});
  for (int i = 0; i < 200; ++i) {
    const Dataset base = random_dataset(g, 1 + g.below(100), 1 + g.below(90));
    const Dataset extra = random_dataset(g, 1 + g.below(60), 1 + g.below(90));
    std::vector<Column> joined;
    for (std::size_t c = 0; c < base.columns().size(); ++c) {
      Column col = base.columns()[c];
      const auto& more = extra.columns()[c].values;
      col.values.insert(col.values.end(), more.begin(), more.end());
      joined.push_back(std::move(col));
    }
    const auto before = profile_source(base, source, {});
    const auto after = profile_source(Dataset(std::move(joined)), source, {});
    EXPECT_GE(after.cardinality.max_distinct, before.cardinality.max_distinct);
    if (before.cardinality.kind == Cardinality::High) {
      EXPECT_EQ(after.cardinality.kind, Cardinality::High);
    }
  }
}

TEST(Csv, QuotedFieldsAndErrors) {
  const Dataset d = parse_csv("a,b\n\"x, y\",\"he said \"\"hi\"\"\"\n\"multi\nline\",2\n");
  ASSERT_EQ(d.row_count(), 2u);
  EXPECT_EQ(d.find("a")->values[0].text(), "x, y");
  EXPECT_EQ(d.find("b")->values[0].text(), "he said \"hi\"");
  EXPECT_EQ(d.find("a")->values[1].text(), "multi\nline");
  EXPECT_EQ(d.find("b")->values[1].number(), 2);

  auto code_of = [](std::string_view text) {
    try {
      parse_csv(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::SyntaxError;
  };
  EXPECT_EQ(code_of(""), ErrorCode::MissingHeader);
  EXPECT_EQ(code_of("a,b\n1\n"), ErrorCode::RaggedRows);
  EXPECT_EQ(code_of("a,a\n1,2\n"), ErrorCode::DuplicateColumn);
  EXPECT_EQ(code_of("a\n\xff\n"), ErrorCode::InvalidEncoding);
}

}  // namespace
}  // namespace reqviz
