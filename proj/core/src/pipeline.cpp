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

#include <algorithm>
#include <utility>

#include "project_internal.hpp"
#include "reqviz/codegen.hpp"
#include "reqviz/dataset.hpp"
#include "reqviz/decision_table.hpp"
#include "reqviz/derivation.hpp"
#include "reqviz/vis_json.hpp"

namespace reqviz {

namespace fs = std::filesystem;

namespace {

struct Artifact {
  std::string path;
  std::string contents;
};

struct Rendered {
  std::vector<Artifact> files;
  std::vector<std::string> log;
};

VisualizationRef require_ref(const Project& project, std::string_view key) {
  auto ref = find_visualization(project.goal_model, key);
  if (!ref) {
    throw Error(ErrorCode::UnknownVisualization, "no visualization '" + std::string(key) + "'");
  }
  return *ref;
}

VisualizationEntry& entry_for(Project& project, const std::string& id) {
  auto it = std::find_if(project.visualizations.begin(), project.visualizations.end(),
                         [&](const VisualizationEntry& e) { return e.id == id; });
  if (it == project.visualizations.end()) {
    throw Error(ErrorCode::UnknownVisualization, "no visualization '" + id + "'");
  }
  return *it;
}

const VisualizationModel& require_model(const Project& project, const std::string& id) {
  auto it = project.vis_models.find(id);
  if (it == project.vis_models.end()) {
    throw Error(ErrorCode::NotDerived, "visualization '" + id + "' has not been derived");
  }
  return it->second;
}

const DatasourceResource& single_source(const VisualizationRequirement& requirement) {
  if (requirement.sources.size() != 1) {
    throw Error(ErrorCode::UnsupportedMultiSource,
                "'" + requirement.name + "' draws on " +
                    std::to_string(requirement.sources.size()) +
                    " sources; exactly one is supported");
  }
  return requirement.sources.front();
}

Dataset load_source(const Project& project, const DatasourceResource& source) {
  return load_dataset(resolve_source(project, source));
}

template <typename F>
auto stage(const char* name, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(name, e);
  }
}

Rendered render(const std::string& id, const VisualizationModel& model, const Dataset& data) {
  Rendered out;
  if (model.graph()) {
    auto doc = generate_graphdoc(model, data);
    out.log.push_back(doc.log_line());
    out.files.push_back({"out/" + id + ".graphdoc.json", std::move(doc.json)});
    return out;
  }
  auto doc = generate_chartdoc(model, data);
  out.log.push_back(doc.log_line());
  std::string html = generate_html(doc.json);
  out.files.push_back({"out/" + id + ".chartdoc.json", std::move(doc.json)});
  out.files.push_back({"out/" + id + ".html", std::move(html)});
  return out;
}

std::vector<std::string> write_all(const Project& project, const std::vector<Artifact>& files) {
  std::vector<std::string> paths;
  for (const auto& f : files) {
    write_project_file(project, f.path, f.contents);
    paths.push_back(f.path);
  }
  return paths;
}

}  // namespace

fs::path resolve_source(const Project& project, const DatasourceResource& source) {
  std::error_code ec;
  const fs::path direct = project.dir / source.uri;
  if (fs::is_regular_file(direct, ec)) return direct;
  const fs::path fallback = project.dir / "data" / fs::path(source.uri).filename();
  if (fs::is_regular_file(fallback, ec)) return fallback;
  throw Error(ErrorCode::IoError, "source '" + source.uri + "' resolves to no dataset file");
}

std::map<std::string, DataProfile> profile_project(Project& project) {
  std::map<std::string, DataProfile> profiles;
  for (const auto& ref : list_visualizations(project.goal_model)) {
    for (const auto& source : ref.requirement->sources) {
      profiles[ref.id + ":" + source.uri] = stage("profiling", [&] {
        return profile_source(load_source(project, source), source, project.config);
      });
    }
  }
  Project next = project;
  for (const auto& [uri, p] : profiles) next.profiles[uri] = p;
  save_project(next);
  project = std::move(next);
  return profiles;
}

PipelineReport run_pipeline(Project& project, std::string_view visualization) {
  const VisualizationRef ref = require_ref(project, visualization);
  const VisualizationRequirement& requirement = *ref.requirement;

  PipelineReport report;
  report.visualization_id = ref.id;

  const DatasourceResource& source =
      stage("profiling", [&]() -> const DatasourceResource& { return single_source(requirement); });
  const Dataset data = stage("profiling", [&] { return load_source(project, source); });
  const DataProfile profile =
      stage("profiling", [&] { return profile_source(data, source, project.config); });
  report.log.push_back("profiling: " + std::to_string(data.row_count()) + " row(s), " +
                       std::to_string(profile.attribute_types.size()) + " attribute(s)");

  report.spec = stage("spec", [&] {
    return assemble_spec(requirement, project.goal_model.actor.kind, profile);
  });
  report.log.push_back("spec: (" + format_spec(report.spec) + ")");

  const Selection selection =
      stage("selection", [&] { return select_graphic_type_traced(report.spec); });
  report.graphic_type = selection.graphic;
  report.rule_id = std::string(selection.rule_id);
  report.log.push_back("selection: " + std::string(name_of(selection.graphic)) + " (rule " +
                       report.rule_id + ")");

  const VisualizationModel model = stage("derivation", [&] {
    return derive_visualization(report.spec, requirement, selection.graphic,
                                profile.attribute_types);
  });
  report.model_version = model_version(model);
  report.log.push_back("derivation: model " + report.model_version);

  Rendered rendered = stage("codegen", [&] { return render(ref.id, model, data); });
  for (auto& line : rendered.log) report.log.push_back("codegen: " + line);

  Project next = project;
  next.profiles[ref.id + ":" + source.uri] = profile;
  next.vis_models[ref.id] = model;
  VisualizationEntry& entry = entry_for(next, ref.id);
  entry.status = VisualizationStatus::Derived;
  entry.spec = report.spec;
  entry.graphic_type = selection.graphic;
  entry.rule_id = report.rule_id;
  entry.model_version = report.model_version;

  const std::string model_path = "models/" + ref.id + ".vismodel.json";
  rendered.files.insert(rendered.files.begin(), {model_path, serialize_vis_model(model)});
  report.artifacts = write_all(next, rendered.files);
  save_project(next);
  project = std::move(next);
  return report;
}

RefineReport refine_visualization(Project& project, std::string_view visualization,
                                  std::span<const RefinementOp> ops,
                                  const std::optional<std::string>& expected_version) {
  const VisualizationRef ref = require_ref(project, visualization);
  const VisualizationModel& current = require_model(project, ref.id);
  const std::string current_version = model_version(current);
  if (expected_version && *expected_version != current_version) {
    throw Error(ErrorCode::VersionConflict, "model of '" + ref.id + "' is at version " +
                                                current_version + ", not " + *expected_version);
  }
  const VisualizationModel refined = apply_refinements(current, ops);
  const Dataset data = load_source(project, single_source(*ref.requirement));
  Rendered rendered = render(ref.id, refined, data);

  RefineReport report;
  report.model_version = model_version(refined);
  for (const auto& op : ops) report.log.push_back("refine: " + std::string(op_name(op)));
  for (auto& line : rendered.log) report.log.push_back("codegen: " + line);

  Project next = project;
  next.vis_models[ref.id] = refined;
  VisualizationEntry& entry = entry_for(next, ref.id);
  entry.status = VisualizationStatus::Derived;
  entry.model_version = report.model_version;

  rendered.files.insert(rendered.files.begin(),
                        {"models/" + ref.id + ".vismodel.json", serialize_vis_model(refined)});
  report.artifacts = write_all(next, rendered.files);
  save_project(next);
  project = std::move(next);
  return report;
}

std::vector<std::string> render_visualization(Project& project, std::string_view visualization) {
  const VisualizationRef ref = require_ref(project, visualization);
  const VisualizationModel& model = require_model(project, ref.id);
  const Dataset data = load_source(project, single_source(*ref.requirement));
  Rendered rendered = render(ref.id, model, data);
  return write_all(project, rendered.files);
}

std::vector<Question> project_questionnaire(const Project& project,
                                            std::string_view visualization) {
  const VisualizationRef ref = require_ref(project, visualization);
  return build_questionnaire(*ref.requirement, ref.information_goal->name);
}

ValidationResult validate_project_visualization(Project& project, std::string_view visualization,
                                                const std::map<VisualizationGoal, bool>& answers,
                                                Timestamp now) {
  const VisualizationRef ref = require_ref(project, visualization);
  const VisualizationModel& model = require_model(project, ref.id);
  ValidationResult result = validate_visualization(model, *ref.requirement, answers, now);
  return record_iteration(project, ref.id, result).result;
}

}  // namespace reqviz
