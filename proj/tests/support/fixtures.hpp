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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "reqviz/dataset.hpp"
#include "reqviz/decision_table.hpp"
#include "reqviz/derivation.hpp"
#include "reqviz/dsl.hpp"
#include "reqviz/profiler.hpp"
#include "reqviz/project.hpp"
#include "reqviz/spec.hpp"

namespace reqviz::testing {

inline std::filesystem::path data_dir() { return REQVIZ_TEST_DATA_DIR; }

inline std::string read_fixture(const std::filesystem::path& relative) {
  std::ifstream in(data_dir() / relative, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline constexpr const char* kCaseStudyGoals = "case_study/tax_collection.goals";
inline constexpr const char* kCaseStudyVis = "unpaid-bills-by-type";

/// Removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("reqviz-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline std::vector<DatasetFile> case_study_datasets() {
  return {{"unpaid_bills.csv", read_fixture("case_study/unpaid_bills.csv")},
          {"unpaid_detail.csv", read_fixture("case_study/unpaid_detail.csv")}};
}

inline Project init_case_study(const std::filesystem::path& root) {
  return init_project(root, "tax", read_fixture(kCaseStudyGoals), case_study_datasets());
}

struct CaseStudy {
  GoalModel goals;
  VisualizationRequirement requirement;
  std::string information_goal;
  Dataset data;
  DataProfile profile;
  VisualizationSpec spec;
  GraphicType graphic = GraphicType::Table;
  VisualizationModel model;
};

/// The "Unpaid bills by type" pipeline, computed in memory.
inline CaseStudy derive_case_study() {
  CaseStudy cs;
  cs.goals = parse_goal_model_or_throw(read_fixture(kCaseStudyGoals));
  cs.data = parse_csv(read_fixture("case_study/unpaid_bills.csv"));
  const auto ref = *find_visualization(cs.goals, kCaseStudyVis);
  cs.requirement = *ref.requirement;
  cs.information_goal = ref.information_goal->name;
  const auto& source = cs.requirement.sources.front();
  cs.profile = profile_source(cs.data, source, ProfilerConfig{});
  cs.spec = assemble_spec(cs.requirement, cs.goals.actor.kind, cs.profile);
  cs.graphic = select_graphic_type(cs.spec);
  cs.model = derive_visualization(cs.spec, cs.requirement, cs.graphic,
                                  cs.profile.attribute_types);
  return cs;
}

}  // namespace reqviz::testing
