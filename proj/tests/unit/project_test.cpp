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

#include "fixtures.hpp"
#include "generators.hpp"
#include "reqviz/codegen.hpp"
#include "reqviz/vis_json.hpp"

namespace reqviz {
namespace {

namespace fs = std::filesystem;
using testing::kCaseStudyVis;
using testing::read_fixture;

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::SyntaxError;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::map<VisualizationGoal, bool> kYesYes = {{VisualizationGoal::Composition, true},
                                                   {VisualizationGoal::Comparison, true}};
const std::map<VisualizationGoal, bool> kYesNo = {{VisualizationGoal::Composition, true},
                                                  {VisualizationGoal::Comparison, false}};

TEST(Project, InitCreatesTheLayout) {
  testing::TempDir tmp;
  const Project p = testing::init_case_study(tmp.path());
  EXPECT_EQ(p.dir, tmp.path() / "tax");
  EXPECT_TRUE(fs::is_regular_file(p.dir / "project.json"));
  EXPECT_TRUE(fs::is_regular_file(p.dir / "model.goals"));
  EXPECT_TRUE(fs::is_regular_file(p.dir / "data" / "unpaid_bills.csv"));
  EXPECT_TRUE(fs::is_directory(p.dir / "models" / "snapshots"));
  ASSERT_EQ(p.visualizations.size(), 4u);
  for (const auto& e : p.visualizations) EXPECT_EQ(e.status, VisualizationStatus::Pending);
  EXPECT_EQ(load_project(p.dir), p);
  // Nothing but the project itself is left in the root.
  EXPECT_EQ(std::distance(fs::directory_iterator(tmp.path()), fs::directory_iterator()), 1);
}

TEST(Project, InitFailuresLeaveNothingBehind) {
  testing::TempDir tmp;
  const std::string goals = read_fixture(testing::kCaseStudyGoals);
  EXPECT_EQ(code_of([&] { init_project(tmp.path(), "../x", goals, {}); }), ErrorCode::InvalidName);
  EXPECT_EQ(code_of([&] {
              init_project(tmp.path(), "t", goals, {{"unpaid_bills.csv", "a,b\n1,2\n"}});
            }),
            ErrorCode::UnresolvedSource);
  EXPECT_EQ(code_of([&] { init_project(tmp.path(), "t", "actor", {}); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([&] {
              auto ds = testing::case_study_datasets();
              ds[0].content = "a,b\n1\n";
              init_project(tmp.path(), "t", goals, ds);
            }),
            ErrorCode::RaggedRows);
  EXPECT_TRUE(fs::is_empty(tmp.path()));
  testing::init_case_study(tmp.path());
  EXPECT_EQ(code_of([&] { testing::init_case_study(tmp.path()); }), ErrorCode::AlreadyExists);
  EXPECT_EQ(code_of([&] { load_project(tmp.path() / "nope"); }), ErrorCode::UnknownProject);
}

TEST(Project, PipelineReproducesTheCaseStudy) {
  testing::TempDir tmp;
  Project p = testing::init_case_study(tmp.path());
  const auto report = run_pipeline(p, kCaseStudyVis);
  EXPECT_EQ(format_spec(report.spec),
            "Composition & Comparison, Overview, Lay, n-dimensional, Low, Nominal, Ratio");
  EXPECT_EQ(report.graphic_type, GraphicType::StackedColumnChart);
  EXPECT_EQ(report.rule_id, "R5");
  EXPECT_EQ(report.artifacts,
            (std::vector<std::string>{"models/unpaid-bills-by-type.vismodel.json",
                                      "out/unpaid-bills-by-type.chartdoc.json",
                                      "out/unpaid-bills-by-type.html"}));
  const auto* e = p.find_entry(kCaseStudyVis);
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->status, VisualizationStatus::Derived);
  EXPECT_EQ(e->model_version, model_version(p.vis_models.at(kCaseStudyVis)));
  EXPECT_EQ(load_project(p.dir), p);

  const auto ops = parse_refinement_ops(read_fixture("case_study/refinements.json"));
  const auto refined = refine_visualization(p, kCaseStudyVis, ops, e->model_version);
  const std::string chartdoc = slurp(p.dir / "out/unpaid-bills-by-type.chartdoc.json");
  EXPECT_EQ(chartdoc, read_fixture("golden/unpaid-bills-by-type.chartdoc.json"));
  EXPECT_EQ(extract_chartdoc(slurp(p.dir / "out/unpaid-bills-by-type.html")), chartdoc);
  EXPECT_EQ(refined.model_version, p.find_entry(kCaseStudyVis)->model_version);
}

TEST(Project, LookupByNameOrInformationGoal) {
  testing::TempDir tmp;
  Project p = testing::init_case_study(tmp.path());
  EXPECT_EQ(run_pipeline(p, "Identify the type of unpaid bills").visualization_id, kCaseStudyVis);
  EXPECT_EQ(run_pipeline(p, "Unpaid bills by type").visualization_id, kCaseStudyVis);
  EXPECT_EQ(code_of([&] { run_pipeline(p, "nothing"); }), ErrorCode::UnknownVisualization);
}

TEST(Project, RerunIsIdempotent) {
  testing::TempDir tmp;
  Project p = testing::init_case_study(tmp.path());
  run_pipeline(p, kCaseStudyVis);
  const std::string manifest = slurp(p.dir / "project.json");
  const std::string html = slurp(p.dir / "out/unpaid-bills-by-type.html");
  run_pipeline(p, kCaseStudyVis);
  EXPECT_EQ(slurp(p.dir / "project.json"), manifest);
  EXPECT_EQ(slurp(p.dir / "out/unpaid-bills-by-type.html"), html);
}

TEST(Project, FailingStageIsTaggedAndWritesNothing) {
  testing::TempDir tmp;
  Project p = testing::init_case_study(tmp.path());
  const std::string manifest = slurp(p.dir / "project.json");
  try {
    run_pipeline(p, "unpaid-bills-by-place");
    FAIL();
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), "codegen");
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedGraphicType);
  }
  EXPECT_EQ(slurp(p.dir / "project.json"), manifest);
  EXPECT_FALSE(fs::exists(p.dir / "models/unpaid-bills-by-place.vismodel.json"));

  fs::remove(p.dir / "data/unpaid_bills.csv");
  try {
    run_pipeline(p, kCaseStudyVis);
    FAIL();
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), "profiling");
    EXPECT_EQ(e.code(), ErrorCode::IoError);
  }
}

TEST(Project, RefineGuards) {
  testing::TempDir tmp;
  Project p = testing::init_case_study(tmp.path());
  const std::vector<RefinementOp> ops = {SetTitle{"New"}};
  EXPECT_EQ(code_of([&] { refine_visualization(p, kCaseStudyVis, ops); }), ErrorCode::NotDerived);
  run_pipeline(p, kCaseStudyVis);
  EXPECT_EQ(code_of([&] { refine_visualization(p, kCaseStudyVis, ops, std::string("stale")); }),
            ErrorCode::VersionConflict);
  const Project before = p;
  const std::vector<RefinementOp> bad = {SetTitle{"New"}, SetOrder{"Nope"}};
  EXPECT_EQ(code_of([&] { refine_visualization(p, kCaseStudyVis, bad); }), ErrorCode::UnknownAxis);
  EXPECT_EQ(p, before);
  EXPECT_EQ(load_project(p.dir), before);
}

TEST(ValidationLoop, RequiresRevisionAppendsOneRecordAndFlags) {
  testing::TempDir tmp;
  Project p = testing::init_case_study(tmp.path());
  run_pipeline(p, kCaseStudyVis);
  ASSERT_TRUE(p.history.empty());
  const auto result = validate_project_visualization(p, kCaseStudyVis, kYesNo);
  EXPECT_EQ(result.status, ValidationStatus::RequiresRevision);
  EXPECT_EQ(result.failed_goals, std::vector<VisualizationGoal>{VisualizationGoal::Comparison});
  ASSERT_EQ(p.history.size(), 1u);
  EXPECT_EQ(p.history[0].visualization_id, kCaseStudyVis);
  EXPECT_EQ(p.history[0].result, result);
  EXPECT_EQ(p.find_entry(kCaseStudyVis)->status, VisualizationStatus::RequiresRevision);
  const fs::path snapshot = p.dir / p.history[0].snapshot;
  ASSERT_TRUE(fs::is_regular_file(snapshot));
  EXPECT_EQ(load_vis_model(snapshot), p.vis_models.at(kCaseStudyVis));
  EXPECT_EQ(load_project(p.dir).history, p.history);

  validate_project_visualization(p, kCaseStudyVis, kYesYes);
  EXPECT_EQ(p.history.size(), 2u);
  EXPECT_EQ(p.find_entry(kCaseStudyVis)->status, VisualizationStatus::Validated);
}

TEST(ValidationLoop, RejectedAnswersRecordNothing) {
  testing::TempDir tmp;
  Project p = testing::init_case_study(tmp.path());
  EXPECT_EQ(code_of([&] { validate_project_visualization(p, kCaseStudyVis, kYesYes); }),
            ErrorCode::NotDerived);
  run_pipeline(p, kCaseStudyVis);
  EXPECT_EQ(code_of([&] {
              validate_project_visualization(p, kCaseStudyVis,
                                             {{VisualizationGoal::Composition, true}});
            }),
            ErrorCode::IncompleteAnswers);
  EXPECT_TRUE(p.history.empty());
  EXPECT_TRUE(load_project(p.dir).history.empty());
}

TEST(ValidationLoop, HistoryIsAppendOnlyUnderRandomOperations) {
  testing::TempDir tmp;
  Project p = testing::init_case_study(tmp.path());
  testing::Gen g(2026);
  const std::vector<std::string> targets = {"unpaid-bills-by-type", "unpaid-bills-by-taxpayer",
                                            "unpaid-bills-over-time", "unpaid-bills-by-place"};
  Timestamp clock{std::chrono::milliseconds(1'800'000'000'000)};
  std::vector<IterationRecord> seen;
  for (int step = 0; step < 100; ++step) {
    const std::string& vis = g.pick(targets);
    const std::size_t before = p.history.size();
    bool recorded = false;
    try {
      switch (g.below(4)) {
        case 0: run_pipeline(p, vis); break;
        case 1: {
          const auto& model = p.vis_models.count(vis) ? p.vis_models.at(vis) : VisualizationModel{};
          refine_visualization(p, vis, std::vector<RefinementOp>{testing::random_op(g, model)});
          break;
        }
        default: {
          std::map<VisualizationGoal, bool> answers;
          for (auto goal : find_visualization(p.goal_model, vis)->requirement->goals) {
            answers[goal] = g.coin(0.6);
          }
          // Clock goes backwards sometimes; records still never do.
          clock += std::chrono::milliseconds(static_cast<long long>(g.below(2000)) - 500);
          validate_project_visualization(p, vis, answers, clock);
          recorded = true;
        }
      }
    } catch (const Error&) {
      recorded = false;
    }
    ASSERT_EQ(p.history.size(), before + (recorded ? 1 : 0));
    for (std::size_t i = 0; i < seen.size(); ++i) ASSERT_EQ(p.history[i], seen[i]);
    for (std::size_t i = 1; i < p.history.size(); ++i) {
      ASSERT_LE(p.history[i - 1].timestamp, p.history[i].timestamp);
    }
    seen = p.history;
  }
  EXPECT_EQ(load_project(p.dir).history, p.history);
  EXPECT_GT(p.history.size(), 10u);
}

TEST(Project, ParseAnswers) {
  const auto a = parse_answers(R"({"composition": true, "Comparison": "no"})");
  EXPECT_EQ(a, kYesNo);
  EXPECT_THROW(parse_answers(R"({"colour": true})"), Error);
  EXPECT_THROW(parse_answers(R"({"composition": 1})"), Error);
  EXPECT_THROW(parse_answers("[]"), Error);
}

}  // namespace
}  // namespace reqviz
