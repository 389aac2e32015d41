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

// reqviz: command-line front end for goal-model driven visualization projects.
//
// Exit status: 0 success, 1 diagnostics (invalid input, rejected operation,
// failed pipeline stage), 2 I/O failure.

#include <CLI11.hpp>

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "reqviz/decision_table.hpp"
#include "reqviz/dsl.hpp"
#include "reqviz/error.hpp"
#include "reqviz/http_api.hpp"
#include "reqviz/project.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw reqviz::Error(reqviz::ErrorCode::IoError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    throw reqviz::Error(reqviz::ErrorCode::IoError, "cannot write " + path.string());
  }
}

std::string spec_line(const reqviz::VisualizationSpec& spec) {
  return "(" + reqviz::format_spec(spec) + ")";
}

std::string prompt(const std::string& question) {
  std::cout << question << ": " << std::flush;
  std::string answer;
  std::getline(std::cin, answer);
  return answer;
}

void print_error(const reqviz::Error& e) {
  std::cerr << "error: " << reqviz::to_string(e.code()) << ": " << e.what() << "\n";
  for (const auto& d : e.diagnostics()) std::cerr << "  " << reqviz::format_diagnostic(d) << "\n";
}

reqviz::HttpServer* g_server = nullptr;

extern "C" void on_signal(int) {
  if (g_server) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derive visualizations from goal-oriented requirements"};
  app.require_subcommand(1);

  std::string project_dir = ".";
  std::string vis;
  bool all = false;

  auto* init = app.add_subcommand("init", "Create a project from a goal model and datasets");
  std::string goals_file, config_file, id, root = ".";
  std::vector<std::string> data_files;
  bool interactive = false;
  init->add_option("--goals", goals_file, "Goal model (.goals)");
  init->add_option("--data", data_files, "Dataset files (CSV)");
  init->add_option("--config", config_file, "Profiler configuration (JSON)");
  init->add_option("--id", id, "Project id (defaults to the business process slug)");
  init->add_option("--root", root, "Directory that receives the project")->capture_default_str();
  init->add_flag("--interactive", interactive, "Prompt for anything not given");

  auto* check = app.add_subcommand("check", "Parse and validate a goal model");
  check->add_option("goals", goals_file, "Goal model (.goals)")->required();
  bool canonical = false;
  check->add_flag("--canonical", canonical, "Print the canonical form");

  auto* list = app.add_subcommand("list", "List visualizations and their status");
  auto* profile = app.add_subcommand("profile", "Profile every data source");
  auto* derive = app.add_subcommand("derive", "Run the derivation pipeline");
  derive->add_option("--vis", vis, "Visualization id, name or information goal");
  derive->add_flag("--all", all, "Derive every visualization");

  auto* refine = app.add_subcommand("refine", "Apply refinement operations");
  std::string ops_file, expected_version;
  refine->add_option("--vis", vis)->required();
  refine->add_option("--ops", ops_file, "JSON operation or list of operations")->required();
  refine->add_option("--expect-version", expected_version, "Reject if the model has moved on");

  auto* questions = app.add_subcommand("questions", "Print the validation questionnaire");
  questions->add_option("--vis", vis)->required();

  auto* validate = app.add_subcommand("validate", "Record the questionnaire answers");
  std::string answers_file;
  validate->add_option("--vis", vis)->required();
  validate->add_option("--answers", answers_file, "JSON goal -> yes/no map")->required();

  auto* render = app.add_subcommand("render", "Regenerate artifacts from the stored model");
  render->add_option("--vis", vis)->required();

  for (auto* sub : {list, profile, derive, refine, questions, validate, render}) {
    sub->add_option("-p,--project", project_dir, "Project directory")->capture_default_str();
  }

  auto* rules = app.add_subcommand("rules", "Print the graphic-type decision table");
  std::string format = "md", output;
  rules->add_flag("--export", "Accepted for compatibility; the table is always exported");
  rules->add_option("--format", format, "md or json")
      ->check(CLI::IsMember({"md", "json"}))
      ->capture_default_str();
  rules->add_option("-o,--output", output, "Write to a file instead of stdout");

  auto* serve = app.add_subcommand("serve", "Serve the JSON API");
  std::string host = "127.0.0.1";
  int port = 8080;
  serve->add_option("--root", root, "Directory holding projects")->capture_default_str();
  serve->add_option("--host", host)->capture_default_str();
  serve->add_option("--port", port)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*init) {
      if (interactive) {
        if (goals_file.empty()) goals_file = prompt("Goal model file");
        if (data_files.empty()) {
          for (std::string f; !(f = prompt("Dataset file (empty to finish)")).empty();) {
            data_files.push_back(f);
          }
        }
        if (id.empty()) id = prompt("Project id (empty for default)");
      }
      if (goals_file.empty()) {
        std::cerr << "error: --goals is required\n";
        return 1;
      }
      const std::string goals = read_text(goals_file);
      if (id.empty()) id = reqviz::slugify(reqviz::parse_goal_model_or_throw(goals).process.name);
      std::vector<reqviz::DatasetFile> datasets;
      for (const auto& f : data_files) {
        datasets.push_back({fs::path(f).filename().string(), read_text(f)});
      }
      reqviz::ProfilerConfig config;
      if (!config_file.empty()) config = reqviz::ProfilerConfig::from_json(read_text(config_file));
      const auto p = reqviz::init_project(root, id, goals, datasets, config);
      std::cout << "created " << p.dir.string() << " with " << p.visualizations.size()
                << " visualization(s)\n";
      for (const auto& e : p.visualizations) std::cout << "  " << e.id << "\n";
      return 0;
    }
    if (*check) {
      const auto result = reqviz::parse_goal_model(read_text(goals_file));
      for (const auto& d : result.diagnostics) std::cerr << reqviz::format_diagnostic(d) << "\n";
      if (!result.model) return 1;
      if (canonical) {
        std::cout << reqviz::serialize_goal_model(*result.model);
      } else {
        std::cout << "ok: " << reqviz::list_visualizations(*result.model).size()
                  << " visualization(s)\n";
      }
      return 0;
    }
    if (*rules) {
      const std::string text =
          format == "json" ? reqviz::export_rules_json() : reqviz::export_rules_markdown();
      if (output.empty()) {
        std::cout << text;
      } else {
        write_text(output, text);
      }
      return 0;
    }
    if (*serve) {
      reqviz::ApiService service(root);
      reqviz::HttpServer server(service);
      const int bound = server.bind(host, port);
      g_server = &server;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      std::cout << "listening on http://" << host << ":" << bound << "/api/v1\n" << std::flush;
      server.listen();
      g_server = nullptr;
      return 0;
    }

    reqviz::Project project = reqviz::load_project(project_dir);
    if (*list) {
      for (const auto& e : project.visualizations) {
        std::cout << e.id << "\t" << reqviz::name_of(e.status);
        if (e.graphic_type) std::cout << "\t" << reqviz::name_of(*e.graphic_type);
        std::cout << "\n";
      }
    } else if (*profile) {
      for (const auto& [uri, p] : reqviz::profile_project(project)) {
        std::cout << uri << ":";
        for (const auto& [attr, type] : p.attribute_types) {
          std::cout << " " << attr << "=" << reqviz::name_of(type);
        }
        std::cout << "; " << reqviz::name_of(p.dimensionality) << ", "
                  << reqviz::name_of(p.cardinality.kind) << " (max " << p.cardinality.max_distinct
                  << " distinct)\n";
      }
    } else if (*derive) {
      std::vector<std::string> targets;
      if (all || vis.empty()) {
        for (const auto& e : project.visualizations) targets.push_back(e.id);
      } else {
        targets.push_back(vis);
      }
      int status = 0;
      for (const auto& t : targets) {
        try {
          const auto report = reqviz::run_pipeline(project, t);
          std::cout << report.visualization_id << ": " << reqviz::name_of(report.graphic_type)
                    << " " << spec_line(report.spec) << " rule " << report.rule_id << "\n";
          for (const auto& line : report.log) std::cout << "  " << line << "\n";
        } catch (const reqviz::StageError& e) {
          std::cerr << t << ": stage " << e.stage() << " failed\n";
          print_error(e);
          status = e.code() == reqviz::ErrorCode::IoError ? 2 : 1;
          if (targets.size() == 1) return status;
        }
      }
      return status;
    } else if (*refine) {
      const auto ops = reqviz::parse_refinement_ops(read_text(ops_file));
      std::optional<std::string> expect;
      if (!expected_version.empty()) expect = expected_version;
      const auto report = reqviz::refine_visualization(project, vis, ops, expect);
      for (const auto& line : report.log) std::cout << line << "\n";
      std::cout << "model " << report.model_version << "\n";
    } else if (*questions) {
      for (const auto& q : reqviz::project_questionnaire(project, vis)) {
        std::cout << q.text << "\n";
      }
    } else if (*validate) {
      const auto answers = reqviz::parse_answers(read_text(answers_file));
      const auto result = reqviz::validate_project_visualization(project, vis, answers);
      std::cout << reqviz::name_of(result.status);
      for (auto g : result.failed_goals) std::cout << " " << reqviz::name_of(g);
      std::cout << "\n";
    } else if (*render) {
      for (const auto& path : reqviz::render_visualization(project, vis)) {
        std::cout << path << "\n";
      }
    }
    return 0;
  } catch (const reqviz::Error& e) {
    print_error(e);
    return e.code() == reqviz::ErrorCode::IoError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
