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

#include "reqviz/dsl.hpp"

namespace reqviz {

namespace {

std::string quote(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  out.push_back('"');
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

class Writer {
 public:
  std::string finish() { return std::move(out_); }

  void line(int depth, std::string_view content) {
    out_.append(static_cast<std::size_t>(depth) * 2, ' ');
    out_ += content;
    out_ += '\n';
  }

  void blank() { out_ += '\n'; }

  template <typename E>
  static std::string literal_list(const std::vector<E>& items) {
    std::string out;
    for (E item : items) {
      out += out.empty() ? " " : ", ";
      out += name_of(item);
    }
    return out;
  }

  void source(int d, const DatasourceResource& src) {
    line(d, "source " + quote(src.uri) + " {");
    for (const auto& c : src.categories) line(d + 1, "category " + quote(c));
    for (const auto& m : src.measures) line(d + 1, "measure " + quote(m));
    if (const auto* tree = std::get_if<TreeShape>(&src.shape)) {
      line(d + 1, "shape tree " + quote(tree->parent_column) + " " + quote(tree->id_column));
    } else if (const auto* graph = std::get_if<GraphShape>(&src.shape)) {
      line(d + 1,
           "shape graph " + quote(graph->source_column) + " " + quote(graph->target_column));
    }
    for (const auto& [attr, scale] : src.type_overrides) {
      line(d + 1, "type " + quote(attr) + " " + std::string(name_of(scale)));
    }
    line(d, "}");
  }

  void visualization(int d, const VisualizationRequirement& vis) {
    line(d, "visualization " + quote(vis.name) + " {");
    line(d + 1, "goals:" + literal_list(vis.goals));
    line(d + 1, "interactions:" + literal_list(vis.interactions));
    for (const auto& src : vis.sources) source(d + 1, src);
    line(d, "}");
  }

 private:
  std::string out_;
};

}  // namespace

std::string serialize_goal_model(const GoalModel& model) {
  Writer w;
  w.line(0, "actor " + quote(model.actor.name) + " : " + std::string(name_of(model.actor.kind)));
  w.line(0, "process " + quote(model.process.name));
  for (const auto& strategic : model.strategic_goals) {
    w.blank();
    w.line(0, "strategic " + quote(strategic.name) + " {");
    for (const auto& analysis : strategic.analyses) {
      w.line(1, "analysis " + std::string(name_of(analysis.kind)) + " {");
      for (const auto& decision : analysis.decision_goals) {
        w.line(2, "decision " + quote(decision.name) + " {");
        for (const auto& info : decision.information_goals) {
          w.line(3, "information " + quote(info.name) + " {");
          if (info.visualization) w.visualization(4, *info.visualization);
          w.line(3, "}");
        }
        w.line(2, "}");
      }
      w.line(1, "}");
    }
    w.line(0, "}");
  }
  return w.finish();
}

}  // namespace reqviz
