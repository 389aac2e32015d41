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

#include <cmath>
#include <limits>

#include "fixtures.hpp"
#include "generators.hpp"
#include "reqviz/vis_json.hpp"

namespace reqviz {
namespace {

std::vector<ErrorCode> codes(const VisualizationModel& m) {
  std::vector<ErrorCode> out;
  for (const auto& d : check_model_invariants(m)) out.push_back(d.code);
  return out;
}

bool has(const std::vector<ErrorCode>& v, ErrorCode c) {
  return std::find(v.begin(), v.end(), c) != v.end();
}

AxisVisualization& axes_of(VisualizationModel& m) { return std::get<AxisVisualization>(m.body); }

TEST(VisModelInvariants, EachViolationHasItsCode) {
  const auto base = testing::derive_case_study().model;
  ASSERT_TRUE(codes(base).empty());

  auto m = base;
  m.title.clear();
  EXPECT_TRUE(has(codes(m), ErrorCode::InvalidTitle));

  m = base;
  m.orientation = Orientation::Any;
  EXPECT_TRUE(has(codes(m), ErrorCode::OrientationNotApplicable));

  m = base;
  m.graphic_type = GraphicType::PieChart;
  m.orientation = Orientation::Horizontal;
  EXPECT_TRUE(has(codes(m), ErrorCode::OrientationNotApplicable));

  m = base;
  axes_of(m).axes[1].channel = Channel::X;
  EXPECT_TRUE(has(codes(m), ErrorCode::ChannelOccupied));

  m = base;
  axes_of(m).axes[1].attribute->name = axes_of(m).axes[0].attribute->name;
  EXPECT_TRUE(has(codes(m), ErrorCode::DuplicateAssignment));

  m = base;
  axes_of(m).axes[0].min_value = 5;
  axes_of(m).axes[0].max_value = 5;
  EXPECT_TRUE(has(codes(m), ErrorCode::InvalidBounds));

  m = base;
  axes_of(m).axes[0].min_value = std::numeric_limits<double>::quiet_NaN();
  EXPECT_TRUE(has(codes(m), ErrorCode::InvalidBounds));

  m = base;
  for (auto& a : axes_of(m).axes) a.order_role = false;
  EXPECT_TRUE(has(codes(m), ErrorCode::OrderRoleInvalid));
  for (auto& a : axes_of(m).axes) a.order_role = true;
  EXPECT_TRUE(has(codes(m), ErrorCode::OrderRoleInvalid));

  m = base;
  std::erase_if(axes_of(m).axes, [](const Axis& a) { return a.channel == Channel::Y; });
  EXPECT_TRUE(has(codes(m), ErrorCode::MissingChannel));

  m = base;
  m.legend->text_size = 0;
  EXPECT_TRUE(has(codes(m), ErrorCode::InvalidLegend));

  m = base;
  m.color_range = ColorRange{NamedPalette{"rainbow"}};
  EXPECT_TRUE(has(codes(m), ErrorCode::InvalidColorRange));
  m.color_range = ColorRange{CustomPalette{{"#12345"}}};
  EXPECT_TRUE(has(codes(m), ErrorCode::InvalidColorRange));

  m = base;
  m.dashboard_position = DashboardPosition{0, 0, 0, 1};
  EXPECT_TRUE(has(codes(m), ErrorCode::InvalidPosition));

  m = base;
  m.graphic_type = GraphicType::Treemap;
  m.orientation = Orientation::Any;
  EXPECT_TRUE(has(codes(m), ErrorCode::BodyMismatch));
}

TEST(VisModelJson, CaseStudyDocument) {
  const auto m = testing::derive_case_study().model;
  const std::string text = serialize_vis_model(m);
  EXPECT_EQ(text.rfind("{\n  \"version\": \"1.0\",\n  \"title\": \"Unpaid bills by type\",", 0), 0u);
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(parse_vis_model(text), m);
}

TEST(VisModelJson, StrictParsing) {
  const std::string good = serialize_vis_model(testing::derive_case_study().model);
  auto code_of = [](const std::string& text) {
    try {
      parse_vis_model(text);
    } catch (const Error& e) {
      EXPECT_FALSE(e.diagnostics().empty());
      return e.code();
    }
    return ErrorCode::SyntaxError;
  };
  EXPECT_EQ(code_of("{"), ErrorCode::SchemaError);
  EXPECT_EQ(code_of("[]"), ErrorCode::SchemaError);
  std::string extra = good;
  extra.insert(1, "\"surprise\": 1,");
  EXPECT_EQ(code_of(extra), ErrorCode::SchemaError);
  std::string bad_enum = good;
  bad_enum.replace(bad_enum.find("stacked_column_chart"), 20, "stacked_colum_chart");
  EXPECT_EQ(code_of(bad_enum), ErrorCode::SchemaError);
  std::string bad_version = good;
  bad_version.replace(bad_version.find("\"1.0\""), 5, "\"9.9\"");
  EXPECT_EQ(code_of(bad_version), ErrorCode::SchemaError);
  // Well-formed but violating an invariant: parses, then fails the check.
  std::string invalid = good;
  invalid.replace(invalid.find("\"vertical\""), 10, "\"any\"");
  EXPECT_TRUE(has(codes(parse_vis_model(invalid)), ErrorCode::OrientationNotApplicable));
}

TEST(VisModelJsonProperty, RoundTripOfGeneratedModels) {
  testing::Gen g(424242);
  constexpr int kInstances = 800;
  for (int i = 0; i < kInstances; ++i) {
    const VisualizationModel m = testing::random_vis_model(g);
    const auto diags = check_model_invariants(m);
    ASSERT_TRUE(diags.empty()) << diags.front().message;
    const std::string text = serialize_vis_model(m);
    const VisualizationModel back = parse_vis_model(text);
    ASSERT_EQ(back, m) << text;
    ASSERT_EQ(serialize_vis_model(back), text);
  }
}

}  // namespace
}  // namespace reqviz
