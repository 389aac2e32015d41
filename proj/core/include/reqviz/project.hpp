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

// File-backed projects and the derive / refine / validate loop.
//
// Layout of a project directory:
//   project.json                    manifest, profiles, visualization states, history
//   model.goals                     the goal model (source of truth)
//   data/*.csv                      datasets
//   models/<vid>.vismodel.json      current visualization models
//   models/snapshots/<vid>-<version>.vismodel.json   models referenced by history
//   out/<vid>.chartdoc.json, out/<vid>.html          generated artifacts
//   out/<vid>.graphdoc.json                          (tree and graph visualizations)
//
// A Project value is not synchronized; callers serialize writers.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reqviz/goal_model.hpp"
#include "reqviz/profiler.hpp"
#include "reqviz/questionnaire.hpp"
#include "reqviz/refinement.hpp"
#include "reqviz/spec.hpp"
#include "reqviz/timestamp.hpp"
#include "reqviz/vis_model.hpp"

namespace reqviz {

struct IterationRecord {
  std::string visualization_id;
  ValidationResult result;
  std::string snapshot;  // project-relative path of the validated model
  Timestamp timestamp{};  // never earlier than the previous record's

  bool operator==(const IterationRecord&) const = default;
};

struct VisualizationEntry {
  std::string id;
  std::string name;
  std::string information_goal;
  VisualizationStatus status = VisualizationStatus::Pending;
  std::optional<VisualizationSpec> spec;
  std::optional<GraphicType> graphic_type;
  std::string rule_id;  // decision rule that picked graphic_type
  std::string model_version;

  bool operator==(const VisualizationEntry&) const = default;
};

struct Project {
  std::filesystem::path dir;
  std::string id;
  std::string goals_source;
  GoalModel goal_model;
  ProfilerConfig config;
  std::vector<std::string> datasets;  // project-relative, e.g. "data/unpaid_bills.csv"
  std::map<std::string, DataProfile> profiles;  // keyed by "<vid>:<source uri>"
  std::map<std::string, VisualizationModel> vis_models;  // keyed by visualization id
  std::vector<VisualizationEntry> visualizations;        // goal-model order
  std::vector<IterationRecord> history;

  const VisualizationEntry* find_entry(std::string_view key) const;

  bool operator==(const Project&) const = default;
};

struct DatasetFile {
  std::string name;  // plain file name, stored under data/
  std::string content;
};

/// Creates `root/id` atomically: everything is staged in a sibling
/// temporary directory and renamed into place. Throws the goal model's
/// diagnostics, Error(AlreadyExists), Error(UnresolvedSource) when a source
/// names no supplied dataset, dataset parse errors, or Error(IoError).
Project init_project(const std::filesystem::path& root, const std::string& id,
                     std::string_view goals_source, const std::vector<DatasetFile>& datasets,
                     const ProfilerConfig& config = {});

/// Throws Error(UnknownProject) when `dir` holds no project.json.
Project load_project(const std::filesystem::path& dir);

/// Rewrites project.json atomically.
void save_project(const Project& project);

std::string serialize_project_manifest(const Project& project);

/// Content hash of the canonical model JSON; used for optimistic concurrency.
std::string model_version(const VisualizationModel& model);

/// Dataset file a source resolves to: its uri relative to the project
/// directory, else data/<basename>. Throws Error(IoError) if neither exists.
std::filesystem::path resolve_source(const Project& project, const DatasourceResource& source);

struct PipelineReport {
  std::string visualization_id;
  VisualizationSpec spec;
  GraphicType graphic_type = GraphicType::Table;
  std::string rule_id;
  std::string model_version;
  std::vector<std::string> log;
  std::vector<std::string> artifacts;  // project-relative paths written
};

/// profiling -> spec -> selection -> derivation -> codegen for one
/// visualization (looked up by id, name or information goal). Everything
/// is computed before anything is written; a failing stage throws
/// StageError tagged with the stage name and writes nothing.
PipelineReport run_pipeline(Project& project, std::string_view visualization);

/// Profiles every source of every visualization and stores the results.
/// Errors are StageError("profiling").
std::map<std::string, DataProfile> profile_project(Project& project);

struct RefineReport {
  std::string model_version;
  std::vector<std::string> log;
  std::vector<std::string> artifacts;
};

/// Applies `ops` transactionally, regenerates artifacts and resets the
/// status to Derived. Throws Error(NotDerived), Error(VersionConflict)
/// when `expected_version` is set and stale, or the rejecting op's error.
RefineReport refine_visualization(Project& project, std::string_view visualization,
                                  std::span<const RefinementOp> ops,
                                  const std::optional<std::string>& expected_version = {});

/// Regenerates artifacts from the stored model.
std::vector<std::string> render_visualization(Project& project, std::string_view visualization);

std::vector<Question> project_questionnaire(const Project& project,
                                            std::string_view visualization);

/// Scores the answers and records the outcome (see record_iteration).
ValidationResult validate_project_visualization(Project& project, std::string_view visualization,
                                                const std::map<VisualizationGoal, bool>& answers,
                                                Timestamp now = now_utc());

/// Appends exactly one IterationRecord, snapshots the current model and
/// sets the status (RequiresRevision flags the visualization for
/// requirement review). Throws Error(UnknownVisualization / NotDerived).
const IterationRecord& record_iteration(Project& project, std::string_view visualization,
                                        const ValidationResult& result);

/// {"composition": true, ...} or {"Composition": "yes", ...}.
/// Throws Error(SchemaError).
std::map<VisualizationGoal, bool> parse_answers(std::string_view json_text);

}  // namespace reqviz
