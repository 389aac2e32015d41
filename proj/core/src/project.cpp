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

#include "reqviz/project.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "json_codec.hpp"
#include "project_internal.hpp"
#include "reqviz/dataset.hpp"
#include "reqviz/dsl.hpp"
#include "reqviz/vis_json.hpp"
#include "text_util.hpp"

namespace reqviz {

namespace fs = std::filesystem;
using json::Json;

namespace {

constexpr std::string_view kManifestFormat = "reqviz.project/1";

Json optional_scale(const std::optional<ScaleType>& t) {
  return t ? json::enum_value(*t) : Json(nullptr);
}

std::optional<ScaleType> optional_scale_from(const Json& v, const std::string& path) {
  if (v.is_null()) return std::nullopt;
  return json::get_enum<ScaleType>(v, path);
}

Json cardinality_to_json(const CardinalityClass& c) {
  return Json{{"kind", json::enum_value(c.kind)}, {"max_distinct", c.max_distinct}};
}

CardinalityClass cardinality_from_json(const Json& v, const std::string& path) {
  json::expect_object(v, path, {"kind", "max_distinct"});
  CardinalityClass c;
  c.kind = json::get_enum<Cardinality>(json::field(v, "kind", path), path + "/kind");
  c.max_distinct = json::get_index(json::field(v, "max_distinct", path), path + "/max_distinct");
  return c;
}

Json profile_to_json(const DataProfile& p) {
  Json types = Json::object();
  for (const auto& [name, type] : p.attribute_types) types[name] = json::enum_value(type);
  Json out = Json::object();
  out["attribute_types"] = std::move(types);
  out["independent_type"] = optional_scale(p.independent_type);
  out["dependent_type"] = optional_scale(p.dependent_type);
  out["cardinality"] = cardinality_to_json(p.cardinality);
  out["dimensionality"] = json::enum_value(p.dimensionality);
  return out;
}

DataProfile profile_from_json(const Json& v, const std::string& path) {
  json::expect_object(v, path, {"attribute_types", "independent_type", "dependent_type",
                                "cardinality", "dimensionality"});
  DataProfile p;
  const Json& types = json::field(v, "attribute_types", path);
  if (!types.is_object()) json::fail(path + "/attribute_types", "expected an object");
  for (const auto& [name, t] : types.items()) {
    p.attribute_types[name] = json::get_enum<ScaleType>(t, path + "/attribute_types/" + name);
  }
  p.independent_type =
      optional_scale_from(json::field(v, "independent_type", path), path + "/independent_type");
  p.dependent_type =
      optional_scale_from(json::field(v, "dependent_type", path), path + "/dependent_type");
  p.cardinality = cardinality_from_json(json::field(v, "cardinality", path), path + "/cardinality");
  p.dimensionality = json::get_enum<Dimensionality>(json::field(v, "dimensionality", path),
                                                    path + "/dimensionality");
  return p;
}

Json result_to_json(const ValidationResult& r) {
  Json out = Json::object();
  out["status"] = json::enum_value(r.status);
  out["failed_goals"] = json::enum_list(r.failed_goals);
  out["timestamp"] = format_timestamp(r.timestamp);
  return out;
}

Timestamp timestamp_from(const Json& v, const std::string& path) {
  const auto t = parse_timestamp(json::get_string(v, path));
  if (!t) json::fail(path, "expected a UTC timestamp like 2026-01-31T12:00:00.000Z");
  return *t;
}

ValidationResult result_from_json(const Json& v, const std::string& path) {
  json::expect_object(v, path, {"status", "failed_goals", "timestamp"});
  ValidationResult r;
  r.status = json::get_enum<ValidationStatus>(json::field(v, "status", path), path + "/status");
  r.failed_goals = json::get_enum_list<VisualizationGoal>(json::field(v, "failed_goals", path),
                                                          path + "/failed_goals");
  r.timestamp = timestamp_from(json::field(v, "timestamp", path), path + "/timestamp");
  return r;
}

Json entry_to_json(const VisualizationEntry& e) {
  Json out = Json::object();
  out["id"] = e.id;
  out["name"] = e.name;
  out["information_goal"] = e.information_goal;
  out["status"] = json::enum_value(e.status);
  out["spec"] = e.spec ? spec_to_json(*e.spec) : Json(nullptr);
  out["graphic_type"] = e.graphic_type ? json::enum_value(*e.graphic_type) : Json(nullptr);
  out["rule"] = e.rule_id.empty() ? Json(nullptr) : Json(e.rule_id);
  out["model_version"] = e.model_version.empty() ? Json(nullptr) : Json(e.model_version);
  return out;
}

std::string optional_string(const Json& v, const std::string& path) {
  return v.is_null() ? std::string() : json::get_string(v, path);
}

VisualizationEntry entry_from_json(const Json& v, const std::string& path) {
  json::expect_object(v, path, {"id", "name", "information_goal", "status", "spec",
                                "graphic_type", "rule", "model_version"});
  VisualizationEntry e;
  e.id = json::get_string(json::field(v, "id", path), path + "/id");
  e.name = json::get_string(json::field(v, "name", path), path + "/name");
  e.information_goal =
      json::get_string(json::field(v, "information_goal", path), path + "/information_goal");
  e.status =
      json::get_enum<VisualizationStatus>(json::field(v, "status", path), path + "/status");
  const Json& spec = json::field(v, "spec", path);
  if (!spec.is_null()) e.spec = spec_from_json(spec, path + "/spec");
  const Json& graphic = json::field(v, "graphic_type", path);
  if (!graphic.is_null()) e.graphic_type = json::get_enum<GraphicType>(graphic, path + "/graphic_type");
  e.rule_id = optional_string(json::field(v, "rule", path), path + "/rule");
  e.model_version = optional_string(json::field(v, "model_version", path), path + "/model_version");
  return e;
}

Json record_to_json(const IterationRecord& r) {
  Json out = Json::object();
  out["visualization"] = r.visualization_id;
  out["result"] = result_to_json(r.result);
  out["snapshot"] = r.snapshot;
  out["timestamp"] = format_timestamp(r.timestamp);
  return out;
}

IterationRecord record_from_json(const Json& v, const std::string& path) {
  json::expect_object(v, path, {"visualization", "result", "snapshot", "timestamp"});
  IterationRecord r;
  r.visualization_id = json::get_string(json::field(v, "visualization", path), path);
  r.result = result_from_json(json::field(v, "result", path), path + "/result");
  r.snapshot = json::get_string(json::field(v, "snapshot", path), path + "/snapshot");
  r.timestamp = timestamp_from(json::field(v, "timestamp", path), path + "/timestamp");
  return r;
}

std::vector<VisualizationEntry> entries_for(const GoalModel& model) {
  std::vector<VisualizationEntry> out;
  for (const auto& ref : list_visualizations(model)) {
    VisualizationEntry e;
    e.id = ref.id;
    e.name = ref.requirement->name;
    e.information_goal = ref.information_goal->name;
    out.push_back(std::move(e));
  }
  return out;
}

bool is_plain_file_name(std::string_view name) {
  return !name.empty() && name != "." && name != ".." &&
         name.find_first_of("/\\") == std::string_view::npos && name.front() != '.';
}

bool is_valid_project_id(std::string_view id) {
  if (id.empty() || id.size() > 128 || id.front() == '-' || id.front() == '.') return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '-' || c == '_' || c == '.';
  });
}

std::string random_suffix() {
  std::random_device rd;
  return text::fnv1a_hex(std::to_string(rd()) + std::to_string(rd())).substr(0, 8);
}

}  // namespace

Json spec_to_json(const VisualizationSpec& s) {
  Json out = Json::object();
  out["goals"] = json::enum_list(s.goals);
  out["interactions"] = json::enum_list(s.interactions);
  out["user"] = json::enum_value(s.user);
  out["dimensionality"] = json::enum_value(s.dimensionality);
  out["cardinality"] = cardinality_to_json(s.cardinality);
  out["independent_type"] = optional_scale(s.independent_type);
  out["dependent_type"] = optional_scale(s.dependent_type);
  return out;
}

VisualizationSpec spec_from_json(const Json& v, const std::string& path) {
  json::expect_object(v, path, {"goals", "interactions", "user", "dimensionality", "cardinality",
                                "independent_type", "dependent_type"});
  VisualizationSpec s;
  s.goals = json::get_enum_list<VisualizationGoal>(json::field(v, "goals", path), path + "/goals");
  s.interactions = json::get_enum_list<InteractionType>(json::field(v, "interactions", path),
                                                        path + "/interactions");
  s.user = json::get_enum<ActorKind>(json::field(v, "user", path), path + "/user");
  s.dimensionality = json::get_enum<Dimensionality>(json::field(v, "dimensionality", path),
                                                    path + "/dimensionality");
  s.cardinality = cardinality_from_json(json::field(v, "cardinality", path), path + "/cardinality");
  s.independent_type =
      optional_scale_from(json::field(v, "independent_type", path), path + "/independent_type");
  s.dependent_type =
      optional_scale_from(json::field(v, "dependent_type", path), path + "/dependent_type");
  return s;
}

Json manifest_to_json(const Project& p) {
  Json doc = Json::object();
  doc["format"] = kManifestFormat;
  doc["id"] = p.id;
  doc["goals"] = "model.goals";
  doc["datasets"] = p.datasets;
  doc["profiler"] = json::parse(p.config.to_json());
  Json profiles = Json::object();
  for (const auto& [uri, profile] : p.profiles) profiles[uri] = profile_to_json(profile);
  doc["profiles"] = std::move(profiles);
  Json entries = Json::array();
  for (const auto& e : p.visualizations) entries.push_back(entry_to_json(e));
  doc["visualizations"] = std::move(entries);
  Json history = Json::array();
  for (const auto& r : p.history) history.push_back(record_to_json(r));
  doc["history"] = std::move(history);
  return doc;
}

void write_project_file(const Project& project, const std::string& relative,
                        std::string_view contents) {
  text::write_file_atomic(project.dir / relative, contents);
}

const VisualizationEntry* Project::find_entry(std::string_view key) const {
  for (const auto& e : visualizations) {
    if (e.id == key) return &e;
  }
  for (const auto& e : visualizations) {
    if (e.name == key || e.information_goal == key) return &e;
  }
  return nullptr;
}

std::string model_version(const VisualizationModel& model) {
  return text::fnv1a_hex(serialize_vis_model(model));
}

std::string serialize_project_manifest(const Project& project) {
  return json::dump(manifest_to_json(project));
}

void save_project(const Project& project) {
  write_project_file(project, "project.json", serialize_project_manifest(project));
}

Project init_project(const fs::path& root, const std::string& id, std::string_view goals_source,
                     const std::vector<DatasetFile>& datasets, const ProfilerConfig& config) {
  if (!is_valid_project_id(id)) {
    throw Error(ErrorCode::InvalidName, "invalid project id '" + id +
                                            "' (letters, digits, '-', '_' and '.' only)");
  }
  const fs::path dir = root / id;
  std::error_code ec;
  if (fs::exists(dir, ec)) throw Error(ErrorCode::AlreadyExists, "project '" + id + "' exists");
  config.check();

  Project p;
  p.id = id;
  p.goals_source = std::string(goals_source);
  p.goal_model = parse_goal_model_or_throw(goals_source);
  p.config = config;
  p.visualizations = entries_for(p.goal_model);

  std::set<std::string> names;
  for (const auto& d : datasets) {
    if (!is_plain_file_name(d.name)) {
      throw Error(ErrorCode::InvalidName, "dataset name '" + d.name + "' is not a plain file name");
    }
    if (!names.insert(d.name).second) {
      throw Error(ErrorCode::DuplicateName, "dataset '" + d.name + "' given twice");
    }
    try {
      parse_csv(d.content);
    } catch (const Error& e) {
      throw Error(e.code(), d.name + ": " + e.what(), e.diagnostics());
    }
    p.datasets.push_back("data/" + d.name);
  }
  for (const auto& ref : list_visualizations(p.goal_model)) {
    for (const auto& source : ref.requirement->sources) {
      const std::string base = fs::path(source.uri).filename().string();
      if (!names.contains(base)) {
        throw Error(ErrorCode::UnresolvedSource, "source '" + source.uri + "' of '" +
                                                     ref.requirement->name +
                                                     "' matches no supplied dataset");
      }
    }
  }

  fs::create_directories(root, ec);
  const fs::path staging = root / ("." + id + ".init-" + random_suffix());
  p.dir = staging;
  try {
    write_project_file(p, "model.goals", p.goals_source);
    for (const auto& d : datasets) write_project_file(p, "data/" + d.name, d.content);
    fs::create_directories(staging / "models" / "snapshots");
    fs::create_directories(staging / "out");
    save_project(p);
    fs::rename(staging, dir, ec);
    if (ec) {
      throw Error(fs::exists(dir) ? ErrorCode::AlreadyExists : ErrorCode::IoError,
                  "cannot create project '" + id + "': " + ec.message());
    }
  } catch (...) {
    fs::remove_all(staging, ec);
    throw;
  }
  p.dir = dir;
  return p;
}

Project load_project(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_regular_file(dir / "project.json", ec)) {
    throw Error(ErrorCode::UnknownProject, "no project at " + dir.string());
  }
  const Json doc = json::parse(text::read_file(dir / "project.json"));
  json::expect_object(doc, "", {"format", "id", "goals", "datasets", "profiler", "profiles",
                                "visualizations", "history"});
  if (json::get_string(json::field(doc, "format", ""), "format") != kManifestFormat) {
    json::fail("format", "unsupported project format");
  }
  Project p;
  p.dir = dir;
  p.id = json::get_string(json::field(doc, "id", ""), "id");
  const std::string goals_file = json::get_string(json::field(doc, "goals", ""), "goals");
  p.goals_source = text::read_file(dir / goals_file);
  p.goal_model = parse_goal_model_or_throw(p.goals_source);
  const Json& datasets = json::field(doc, "datasets", "");
  if (!datasets.is_array()) json::fail("datasets", "expected an array");
  for (std::size_t i = 0; i < datasets.size(); ++i) {
    p.datasets.push_back(json::get_string(datasets[i], "datasets[" + std::to_string(i) + "]"));
  }
  p.config = ProfilerConfig::from_json(json::field(doc, "profiler", "").dump());
  const Json& profiles = json::field(doc, "profiles", "");
  if (!profiles.is_object()) json::fail("profiles", "expected an object");
  for (const auto& [uri, v] : profiles.items()) {
    p.profiles[uri] = profile_from_json(v, "profiles/" + uri);
  }
  const Json& entries = json::field(doc, "visualizations", "");
  if (!entries.is_array()) json::fail("visualizations", "expected an array");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    p.visualizations.push_back(
        entry_from_json(entries[i], "visualizations[" + std::to_string(i) + "]"));
  }
  const Json& history = json::field(doc, "history", "");
  if (!history.is_array()) json::fail("history", "expected an array");
  for (std::size_t i = 0; i < history.size(); ++i) {
    p.history.push_back(record_from_json(history[i], "history[" + std::to_string(i) + "]"));
  }

  const auto expected = entries_for(p.goal_model);
  const bool same_ids = std::equal(
      expected.begin(), expected.end(), p.visualizations.begin(), p.visualizations.end(),
      [](const VisualizationEntry& a, const VisualizationEntry& b) { return a.id == b.id; });
  if (!same_ids) {
    json::fail("visualizations", "manifest does not list the goal model's visualizations");
  }
  for (const auto& e : p.visualizations) {
    if (e.status == VisualizationStatus::Pending) continue;
    p.vis_models[e.id] = load_vis_model(dir / "models" / (e.id + ".vismodel.json"));
  }
  return p;
}

const IterationRecord& record_iteration(Project& project, std::string_view visualization,
                                        const ValidationResult& result) {
  const VisualizationEntry* found = project.find_entry(visualization);
  if (!found) {
    throw Error(ErrorCode::UnknownVisualization,
                "no visualization '" + std::string(visualization) + "'");
  }
  const VisualizationEntry& entry = *found;
  auto model = project.vis_models.find(entry.id);
  if (entry.status == VisualizationStatus::Pending || model == project.vis_models.end()) {
    throw Error(ErrorCode::NotDerived, "visualization '" + entry.id + "' has not been derived");
  }
  if ((result.status == ValidationStatus::Validated) != result.failed_goals.empty()) {
    throw Error(ErrorCode::SchemaError, "validation status disagrees with its failed goals");
  }

  IterationRecord record;
  record.visualization_id = entry.id;
  record.result = result;
  record.snapshot = "models/snapshots/" + entry.id + "-" + entry.model_version + ".vismodel.json";
  record.timestamp = project.history.empty()
                         ? result.timestamp
                         : std::max(result.timestamp, project.history.back().timestamp);

  Project next = project;
  auto& next_entry = *std::find_if(next.visualizations.begin(), next.visualizations.end(),
                                   [&](const VisualizationEntry& e) { return e.id == entry.id; });
  next_entry.status = result.status == ValidationStatus::Validated
                          ? VisualizationStatus::Validated
                          : VisualizationStatus::RequiresRevision;
  next.history.push_back(record);

  std::error_code ec;
  if (!fs::exists(project.dir / record.snapshot, ec)) {
    write_project_file(project, record.snapshot, serialize_vis_model(model->second));
  }
  save_project(next);
  project = std::move(next);
  return project.history.back();
}

std::map<VisualizationGoal, bool> parse_answers(std::string_view json_text) {
  const Json doc = json::parse(json_text);
  if (!doc.is_object()) json::fail("", "answers must be an object of goal -> yes/no");
  std::map<VisualizationGoal, bool> out;
  for (const auto& [key, v] : doc.items()) {
    const auto goal = parse_enum<VisualizationGoal>(key);
    if (!goal) json::fail(key, "unknown visualization goal '" + key + "'");
    bool answer = false;
    if (v.is_boolean()) {
      answer = v.get<bool>();
    } else if (v.is_string() && (text::ascii_lower(v.get<std::string>()) == "yes" ||
                                 text::ascii_lower(v.get<std::string>()) == "no")) {
      answer = text::ascii_lower(v.get<std::string>()) == "yes";
    } else {
      json::fail(key, "expected true/false or \"yes\"/\"no\"");
    }
    if (!out.emplace(*goal, answer).second) json::fail(key, "goal answered twice");
  }
  return out;
}

}  // namespace reqviz
