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

#include "reqviz/http_api.hpp"

#include <httplib.h>

#include <vector>

#include "json_codec.hpp"
#include "project_internal.hpp"
#include "reqviz/decision_table.hpp"
#include "reqviz/dsl.hpp"
#include "reqviz/vis_json.hpp"
#include "text_util.hpp"

namespace reqviz {

namespace fs = std::filesystem;
using json::Json;

namespace {

std::vector<std::string> split_path(std::string_view path) {
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i <= path.size()) {
    const auto j = path.find('/', i);
    const auto end = j == std::string_view::npos ? path.size() : j;
    if (end > i) parts.emplace_back(path.substr(i, end - i));
    if (j == std::string_view::npos) break;
    i = j + 1;
  }
  return parts;
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownProject:
    case ErrorCode::UnknownVisualization:
      return 404;
    case ErrorCode::VersionConflict:
    case ErrorCode::AlreadyExists:
      return 409;
    case ErrorCode::IoError:
      return 500;
    default:
      return 400;
  }
}

HttpResponse json_response(int status, const Json& body) {
  return {status, "application/json", json::dump(body)};
}

HttpResponse error_response(const Error& e, const std::string* stage = nullptr) {
  Json diags = Json::array();
  for (const auto& d : e.diagnostics()) {
    Json item = Json::object();
    item["code"] = std::string(to_string(d.code));
    item["path"] = d.path;
    item["message"] = d.message;
    item["line"] = d.location.line;
    item["column"] = d.location.column;
    diags.push_back(std::move(item));
  }
  Json err = Json::object();
  err["code"] = std::string(to_string(e.code()));
  err["message"] = e.what();
  if (stage) err["stage"] = *stage;
  err["diagnostics"] = std::move(diags);
  return json_response(status_for(e.code()), Json{{"error", std::move(err)}});
}

HttpResponse not_found(const std::string& what) {
  return error_response(Error(ErrorCode::UnknownProject, "no such resource: " + what));
}

HttpResponse method_not_allowed() {
  Json err = Json::object();
  err["code"] = "MethodNotAllowed";
  err["message"] = "method not allowed on this resource";
  err["diagnostics"] = Json::array();
  return json_response(405, Json{{"error", std::move(err)}});
}

bool is_safe_segment(const std::string& s) {
  return !s.empty() && s != "." && s != ".." && s.find('\\') == std::string::npos;
}

Json entry_json(const VisualizationEntry& e) {
  Json out = Json::object();
  out["id"] = e.id;
  out["name"] = e.name;
  out["information_goal"] = e.information_goal;
  out["status"] = json::enum_value(e.status);
  out["spec"] = e.spec ? spec_to_json(*e.spec) : Json(nullptr);
  out["spec_text"] = e.spec ? Json(format_spec(*e.spec)) : Json(nullptr);
  out["graphic_type"] = e.graphic_type ? json::enum_value(*e.graphic_type) : Json(nullptr);
  out["rule"] = e.rule_id.empty() ? Json(nullptr) : Json(e.rule_id);
  out["model_version"] = e.model_version.empty() ? Json(nullptr) : Json(e.model_version);
  return out;
}

Json project_json(const Project& p) {
  Json doc = manifest_to_json(p);
  Json entries = Json::array();
  for (const auto& e : p.visualizations) entries.push_back(entry_json(e));
  doc["visualizations"] = std::move(entries);
  return doc;
}

const VisualizationEntry& require_entry(const Project& p, const std::string& vid) {
  const VisualizationEntry* e = p.find_entry(vid);
  if (!e) throw Error(ErrorCode::UnknownVisualization, "no visualization '" + vid + "'");
  return *e;
}

Json model_json(const Project& p, const VisualizationEntry& e) {
  auto it = p.vis_models.find(e.id);
  if (it == p.vis_models.end()) {
    throw Error(ErrorCode::NotDerived, "visualization '" + e.id + "' has not been derived");
  }
  Json out = entry_json(e);
  out["version"] = e.model_version;
  out["model"] = json::parse(serialize_vis_model(it->second));
  return out;
}

Json parse_body(const std::string& body) {
  Json doc = json::parse(body.empty() ? "{}" : body);
  if (!doc.is_object()) json::fail("", "request body must be a JSON object");
  return doc;
}

}  // namespace

ApiService::ApiService(fs::path root) : root_(std::move(root)) {}

std::shared_mutex& ApiService::lock_for(const std::string& project_id) {
  std::lock_guard guard(locks_guard_);
  auto& slot = locks_[project_id];
  if (!slot) slot = std::make_unique<std::shared_mutex>();
  return *slot;
}

HttpResponse ApiService::handle(const HttpRequest& request) {
  const auto parts = split_path(request.path);
  const std::string& m = request.method;
  if (parts.size() < 3 || parts[0] != "api" || parts[1] != "v1") return not_found(request.path);

  try {
    if (parts.size() == 3 && parts[2] == "rules") {
      if (m != "GET") return method_not_allowed();
      return json_response(200, json::parse(export_rules_json()));
    }
    if (parts[2] != "projects") return not_found(request.path);

    if (parts.size() == 3) {
      if (m != "POST") return method_not_allowed();
      const Json body = parse_body(request.body);
      json::expect_object(body, "", {"id", "goals", "datasets", "config"});
      const std::string goals = json::get_string(json::field(body, "goals", ""), "goals");
      std::string id;
      if (const Json* v = json::optional_field(body, "id")) {
        id = json::get_string(*v, "id");
      } else {
        id = slugify(parse_goal_model_or_throw(goals).process.name);
      }
      std::vector<DatasetFile> datasets;
      if (const Json* list = json::optional_field(body, "datasets")) {
        if (!list->is_array()) json::fail("datasets", "expected an array");
        for (std::size_t i = 0; i < list->size(); ++i) {
          const std::string path = "datasets[" + std::to_string(i) + "]";
          const Json& d = (*list)[i];
          json::expect_object(d, path, {"name", "content"});
          datasets.push_back({json::get_string(json::field(d, "name", path), path + "/name"),
                              json::get_string(json::field(d, "content", path), path + "/content")});
        }
      }
      ProfilerConfig config;
      if (const Json* c = json::optional_field(body, "config")) {
        config = ProfilerConfig::from_json(c->dump());
      }
      std::unique_lock lock(lock_for(id));
      const Project p = init_project(root_, id, goals, datasets, config);
      return json_response(201, project_json(p));
    }

    const std::string& id = parts[3];
    if (!is_safe_segment(id)) return not_found(request.path);
    const fs::path dir = root_ / id;

    if (parts.size() == 4) {
      if (m != "GET") return method_not_allowed();
      std::shared_lock lock(lock_for(id));
      return json_response(200, project_json(load_project(dir)));
    }
    if (parts.size() != 7 || parts[4] != "visualizations") return not_found(request.path);
    const std::string& vid = parts[5];
    const std::string& action = parts[6];

    if (action == "derive") {
      if (m != "POST") return method_not_allowed();
      std::unique_lock lock(lock_for(id));
      Project p = load_project(dir);
      require_entry(p, vid);
      try {
        const PipelineReport r = run_pipeline(p, vid);
        Json out = entry_json(require_entry(p, r.visualization_id));
        out["log"] = r.log;
        out["artifacts"] = r.artifacts;
        return json_response(200, out);
      } catch (const StageError& e) {
        return error_response(e, &e.stage());
      }
    }
    if (action == "model") {
      if (m == "GET") {
        std::shared_lock lock(lock_for(id));
        const Project p = load_project(dir);
        return json_response(200, model_json(p, require_entry(p, vid)));
      }
      if (m != "PATCH") return method_not_allowed();
      const Json body = parse_body(request.body);
      json::expect_object(body, "", {"version", "ops"});
      const std::string version = json::get_string(json::field(body, "version", ""), "version");
      const auto ops = parse_refinement_ops(json::field(body, "ops", "").dump());
      std::unique_lock lock(lock_for(id));
      Project p = load_project(dir);
      const std::string vis_id = require_entry(p, vid).id;
      const RefineReport r = refine_visualization(p, vis_id, ops, version);
      Json out = model_json(p, require_entry(p, vis_id));
      out["log"] = r.log;
      return json_response(200, out);
    }
    if (action == "questions") {
      if (m != "GET") return method_not_allowed();
      std::shared_lock lock(lock_for(id));
      const Project p = load_project(dir);
      Json out = Json::array();
      for (const auto& q : project_questionnaire(p, require_entry(p, vid).id)) {
        out.push_back(Json{{"goal", json::enum_value(q.goal)}, {"text", q.text}});
      }
      return json_response(200, out);
    }
    if (action == "validate") {
      if (m != "POST") return method_not_allowed();
      const Json body = parse_body(request.body);
      json::expect_object(body, "", {"answers"});
      const auto answers = parse_answers(json::field(body, "answers", "").dump());
      std::unique_lock lock(lock_for(id));
      Project p = load_project(dir);
      const std::string vis_id = require_entry(p, vid).id;
      const ValidationResult r = validate_project_visualization(p, vis_id, answers);
      Json out = Json::object();
      out["status"] = json::enum_value(r.status);
      out["failed_goals"] = json::enum_list(r.failed_goals);
      out["timestamp"] = format_timestamp(r.timestamp);
      out["visualization_status"] = json::enum_value(require_entry(p, vis_id).status);
      out["history_length"] = p.history.size();
      return json_response(200, out);
    }
    if (action == "chartdoc" || action == "render") {
      if (m != "GET") return method_not_allowed();
      std::shared_lock lock(lock_for(id));
      const Project p = load_project(dir);
      const VisualizationEntry& e = require_entry(p, vid);
      auto model = p.vis_models.find(e.id);
      if (model == p.vis_models.end()) {
        throw Error(ErrorCode::NotDerived, "visualization '" + e.id + "' has not been derived");
      }
      const bool graph = model->second.graph() != nullptr;
      if (action == "render" && graph) {
        throw Error(ErrorCode::UnsupportedGraphicType,
                    "graph visualizations have a graph document but no page");
      }
      const std::string file = action == "render" ? e.id + ".html"
                               : graph            ? e.id + ".graphdoc.json"
                                                  : e.id + ".chartdoc.json";
      std::string contents = text::read_file(dir / "out" / file);
      if (action == "render") return {200, "text/html; charset=utf-8", std::move(contents)};
      return {200, "application/json", std::move(contents)};
    }
    return not_found(request.path);
  } catch (const StageError& e) {
    return error_response(e, &e.stage());
  } catch (const Error& e) {
    return error_response(e);
  } catch (const std::exception& e) {
    return error_response(Error(ErrorCode::IoError, e.what()));
  }
}

struct HttpServer::Impl {
  explicit Impl(ApiService& s) : service(s) {}
  ApiService& service;
  httplib::Server server;
};

HttpServer::HttpServer(ApiService& service) : impl_(std::make_unique<Impl>(service)) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    const HttpResponse r = impl_->service.handle({req.method, req.path, req.body});
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  impl_->server.Get(".*", handler);
  impl_->server.Post(".*", handler);
  impl_->server.Patch(".*", handler);
  impl_->server.Put(".*", handler);
  impl_->server.Delete(".*", handler);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) throw Error(ErrorCode::IoError, "cannot bind " + host);
    return bound;
  }
  if (!impl_->server.bind_to_port(host, port)) {
    throw Error(ErrorCode::IoError, "cannot bind " + host + ":" + std::to_string(port));
  }
  return port;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

}  // namespace reqviz
