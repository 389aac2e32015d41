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

#include "dsl_lexer.hpp"
#include "reqviz/dsl.hpp"
#include "text_util.hpp"

namespace reqviz {

namespace {

using dsl::Token;
using dsl::TokenKind;

// Thrown on the first syntax error; the parser does not attempt recovery.
struct Abort {};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  SyntaxTree run() {
    try {
      parse_file();
    } catch (const Abort&) {
    }
    return std::move(tree_);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& previous() const { return tokens_[pos_ > 0 ? pos_ - 1 : 0]; }

  const Token& take() {
    const Token& t = tokens_[pos_];
    if (t.kind != TokenKind::End) ++pos_;
    return t;
  }

  bool at_keyword(std::string_view kw) const {
    return peek().kind == TokenKind::Identifier && peek().text == kw;
  }

  [[noreturn]] void fail(const Token& at, std::string message) {
    tree_.diagnostics.push_back(
        Diagnostic{ErrorCode::SyntaxError, current_path(), std::move(message), at.location});
    throw Abort{};
  }

  const Token& expect(TokenKind kind, std::string_view what) {
    if (peek().kind != kind) {
      fail(peek(), "expected " + std::string(what) + ", found " + found(peek()));
    }
    return take();
  }

  static std::string found(const Token& t) {
    if (t.kind == TokenKind::Identifier) return "'" + t.text + "'";
    if (t.kind == TokenKind::String) return "string \"" + t.text + "\"";
    return std::string(dsl::describe(t.kind));
  }

  std::string expect_string(std::string_view what) {
    return expect(TokenKind::String, what).text;
  }

  void note(const std::string& path, SourceLocation loc) { tree_.locations.emplace(path, loc); }

  void semantic(ErrorCode code, const std::string& path, std::string message,
                SourceLocation loc) {
    tree_.diagnostics.push_back(Diagnostic{code, path, std::move(message), loc});
  }

  template <typename E>
  std::optional<E> literal(const Token& tok, std::string_view what, const std::string& path) {
    if (auto v = parse_enum<E>(tok.text)) return v;
    std::string expected;
    for (E e : all_values<E>()) {
      if (!expected.empty()) expected += ", ";
      expected += name_of(e);
    }
    semantic(ErrorCode::UnknownLiteral, path,
             "unknown " + std::string(what) + " '" + tok.text + "' (expected one of " + expected +
                 ")",
             tok.location);
    return std::nullopt;
  }

  std::string current_path() const {
    std::string out;
    for (const auto& seg : path_) {
      if (!out.empty()) out += '/';
      out += seg;
    }
    return out;
  }

  struct Scope {
    Scope(Parser& p, std::string seg) : parser(p) { parser.path_.push_back(std::move(seg)); }
    ~Scope() { parser.path_.pop_back(); }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;
    Parser& parser;
  };

  static std::string indexed(std::string_view name, std::size_t i) {
    return std::string(name) + "[" + std::to_string(i) + "]";
  }

  void parse_file() {
    bool have_actor = false;
    bool have_process = false;
    while (peek().kind != TokenKind::End) {
      const Token& kw = peek();
      if (at_keyword("actor")) {
        take();
        if (have_actor) fail(kw, "duplicate actor declaration; a model has exactly one actor");
        have_actor = true;
        note("actor", kw.location);
        Scope scope(*this, "actor");
        tree_.model.actor.name = expect_string("actor name");
        expect(TokenKind::Colon, "':' before actor kind");
        const Token& kind = expect(TokenKind::Identifier, "actor kind (Lay or Tech)");
        if (auto k = literal<ActorKind>(kind, "actor kind", "actor")) tree_.model.actor.kind = *k;
      } else if (at_keyword("process")) {
        take();
        if (have_process) {
          fail(kw, "duplicate process declaration; a model has exactly one business process");
        }
        have_process = true;
        note("process", kw.location);
        Scope scope(*this, "process");
        tree_.model.process.name = expect_string("business process name");
      } else if (at_keyword("strategic")) {
        take();
        parse_strategic(kw);
      } else {
        fail(kw, "expected 'actor', 'process' or 'strategic', found " + found(kw));
      }
    }
  }

  void parse_strategic(const Token& kw) {
    const std::size_t index = tree_.model.strategic_goals.size();
    Scope scope(*this, indexed("strategic", index));
    note(current_path(), kw.location);
    StrategicGoal goal;
    goal.name = expect_string("strategic goal name");
    expect(TokenKind::LBrace, "'{'");
    while (!at_close()) {
      const Token& inner = peek();
      if (!at_keyword("analysis")) fail(inner, "expected 'analysis', found " + found(inner));
      take();
      goal.analyses.push_back(parse_analysis(inner, goal.analyses.size()));
    }
    expect(TokenKind::RBrace, "'}'");
    tree_.model.strategic_goals.push_back(std::move(goal));
  }

  bool at_close() const {
    return peek().kind == TokenKind::RBrace || peek().kind == TokenKind::End;
  }

  AnalysisType parse_analysis(const Token& kw, std::size_t index) {
    Scope scope(*this, indexed("analysis", index));
    note(current_path(), kw.location);
    AnalysisType analysis;
    const Token& kind = expect(TokenKind::Identifier, "analysis type");
    if (auto k = literal<AnalysisKind>(kind, "analysis type", current_path())) analysis.kind = *k;
    expect(TokenKind::LBrace, "'{'");
    while (!at_close()) {
      const Token& inner = peek();
      if (!at_keyword("decision")) fail(inner, "expected 'decision', found " + found(inner));
      take();
      analysis.decision_goals.push_back(parse_decision(inner, analysis.decision_goals.size()));
    }
    expect(TokenKind::RBrace, "'}'");
    return analysis;
  }

  DecisionGoal parse_decision(const Token& kw, std::size_t index) {
    Scope scope(*this, indexed("decision", index));
    note(current_path(), kw.location);
    DecisionGoal decision;
    decision.name = expect_string("decision goal name");
    expect(TokenKind::LBrace, "'{'");
    while (!at_close()) {
      const Token& inner = peek();
      if (!at_keyword("information")) {
        fail(inner, "expected 'information', found " + found(inner));
      }
      take();
      decision.information_goals.push_back(
          parse_information(inner, decision.information_goals.size()));
    }
    expect(TokenKind::RBrace, "'}'");
    return decision;
  }

  InformationGoal parse_information(const Token& kw, std::size_t index) {
    Scope scope(*this, indexed("information", index));
    note(current_path(), kw.location);
    InformationGoal info;
    info.name = expect_string("information goal name");
    expect(TokenKind::LBrace, "'{'");
    while (!at_close()) {
      const Token& inner = peek();
      if (!at_keyword("visualization")) {
        fail(inner, "expected 'visualization', found " + found(inner));
      }
      take();
      if (info.visualization) {
        semantic(ErrorCode::MultiplicityExceeded, current_path() + "/visualization",
                 "an information goal has exactly one visualization", inner.location);
        parse_visualization(inner);  // parsed for syntax, then discarded
      } else {
        info.visualization = parse_visualization(inner);
      }
    }
    expect(TokenKind::RBrace, "'}'");
    return info;
  }

  VisualizationRequirement parse_visualization(const Token& kw) {
    Scope scope(*this, "visualization");
    note(current_path(), kw.location);
    VisualizationRequirement vis;
    vis.name = expect_string("visualization name");
    expect(TokenKind::LBrace, "'{'");
    bool seen_goals = false;
    bool seen_interactions = false;
    while (!at_close()) {
      const Token& inner = peek();
      if (at_keyword("goals")) {
        take();
        if (seen_goals) fail(inner, "duplicate 'goals:' section");
        seen_goals = true;
        note(current_path() + "/goals", inner.location);
        vis.goals = parse_literal_list<VisualizationGoal>("visualization goal",
                                                         current_path() + "/goals");
      } else if (at_keyword("interactions")) {
        take();
        if (seen_interactions) fail(inner, "duplicate 'interactions:' section");
        seen_interactions = true;
        note(current_path() + "/interactions", inner.location);
        vis.interactions = parse_literal_list<InteractionType>("interaction type",
                                                              current_path() + "/interactions");
      } else if (at_keyword("source")) {
        take();
        vis.sources.push_back(parse_source(inner, vis.sources.size()));
      } else {
        fail(inner, "expected 'goals:', 'interactions:' or 'source', found " + found(inner));
      }
    }
    expect(TokenKind::RBrace, "'}'");
    return vis;
  }

  // `goals: A, B, C`: items on the keyword's line; a trailing comma
  // continues the list onto the next line. An empty list is accepted here
  // and reported by the validator.
  template <typename E>
  std::vector<E> parse_literal_list(std::string_view what, const std::string& path) {
    const Token& colon = expect(TokenKind::Colon, "':'");
    std::vector<E> out;
    int line = colon.location.line;
    while (peek().kind == TokenKind::Identifier && peek().location.line == line) {
      const Token& item = take();
      if (auto v = literal<E>(item, what, path)) out.push_back(*v);
      if (peek().kind != TokenKind::Comma) break;
      const Token& comma = take();
      line = peek().kind == TokenKind::Identifier ? peek().location.line : comma.location.line;
      if (peek().kind != TokenKind::Identifier) {
        fail(peek(), "expected " + std::string(what) + " after ','");
      }
    }
    return out;
  }

  DatasourceResource parse_source(const Token& kw, std::size_t index) {
    Scope scope(*this, indexed("source", index));
    const std::string path = current_path();
    note(path, kw.location);
    DatasourceResource src;
    src.uri = expect_string("data source path");
    expect(TokenKind::LBrace, "'{'");
    bool seen_shape = false;
    while (!at_close()) {
      const Token& inner = peek();
      if (at_keyword("category")) {
        take();
        note(indexed(path + "/category", src.categories.size()), inner.location);
        src.categories.push_back(expect_string("category attribute name"));
      } else if (at_keyword("measure")) {
        take();
        note(indexed(path + "/measure", src.measures.size()), inner.location);
        src.measures.push_back(expect_string("measure attribute name"));
      } else if (at_keyword("shape")) {
        take();
        if (seen_shape) fail(inner, "duplicate 'shape' declaration");
        seen_shape = true;
        note(path + "/shape", inner.location);
        src.shape = parse_shape(path);
      } else if (at_keyword("type")) {
        take();
        const Token& attr = expect(TokenKind::String, "attribute name");
        const Token& scale = expect(TokenKind::Identifier, "scale type");
        const std::string type_path = path + "/type[" + attr.text + "]";
        note(type_path, inner.location);
        auto parsed = literal<ScaleType>(scale, "scale type", type_path);
        if (src.type_overrides.contains(attr.text)) {
          semantic(ErrorCode::DuplicateAttribute, type_path,
                   "duplicate type override for '" + attr.text + "'", inner.location);
        } else if (parsed) {
          src.type_overrides.emplace(attr.text, *parsed);
        }
      } else {
        fail(inner,
             "expected 'category', 'measure', 'shape' or 'type', found " + found(inner));
      }
    }
    expect(TokenKind::RBrace, "'}'");
    return src;
  }

  SourceShape parse_shape(const std::string& path) {
    const Token& kind = expect(TokenKind::Identifier, "shape kind (flat, tree or graph)");
    const std::string lowered = text::ascii_lower(kind.text);
    if (lowered == "flat") return FlatShape{};
    if (lowered == "tree") {
      TreeShape t;
      t.parent_column = expect_string("parent column");
      t.id_column = expect_string("id column");
      return t;
    }
    if (lowered == "graph") {
      GraphShape g;
      g.source_column = expect_string("source column");
      g.target_column = expect_string("target column");
      return g;
    }
    semantic(ErrorCode::UnknownLiteral, path + "/shape",
             "unknown shape '" + kind.text + "' (expected flat, tree or graph)", kind.location);
    return FlatShape{};
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string> path_;
  SyntaxTree tree_;
};

SourceLocation locate(const SyntaxTree& tree, const std::string& path) {
  // Longest recorded prefix of the diagnostic path.
  std::string probe = path;
  while (true) {
    if (auto it = tree.locations.find(probe); it != tree.locations.end()) return it->second;
    const auto slash = probe.rfind('/');
    if (slash == std::string::npos) break;
    probe.resize(slash);
  }
  return SourceLocation{};
}

}  // namespace

SyntaxTree parse_goal_model_syntax(std::string_view source) {
  auto lexed = dsl::tokenize(source);
  if (lexed.error) {
    SyntaxTree tree;
    tree.diagnostics.push_back(*lexed.error);
    return tree;
  }
  return Parser(std::move(lexed.tokens)).run();
}

ParseResult parse_goal_model(std::string_view source) {
  ParseResult result;
  try {
    SyntaxTree tree = parse_goal_model_syntax(source);
    result.diagnostics = tree.diagnostics;
    const bool syntax_failed =
        std::any_of(tree.diagnostics.begin(), tree.diagnostics.end(),
                    [](const Diagnostic& d) {
                      return d.code == ErrorCode::SyntaxError ||
                             d.code == ErrorCode::InvalidEncoding;
                    });
    if (syntax_failed) return result;
    for (auto& d : validate_goal_model(tree.model)) {
      // The parser already reported literal and duplicate-override issues
      // with precise positions; keep the validator's view of everything else.
      if (d.location.line == 0) d.location = locate(tree, d.path);
      result.diagnostics.push_back(std::move(d));
    }
    if (result.diagnostics.empty()) result.model = std::move(tree.model);
  } catch (const std::exception& e) {
    result.model.reset();
    result.diagnostics.push_back(
        Diagnostic{ErrorCode::SyntaxError, "", std::string("internal parser error: ") + e.what(), {}});
  }
  return result;
}

GoalModel parse_goal_model_or_throw(std::string_view source) {
  auto result = parse_goal_model(source);
  if (result.ok()) return std::move(*result.model);
  const ErrorCode code = result.diagnostics.front().code;
  throw Error(code, "", std::move(result.diagnostics));
}

GoalModel load_goal_model(const std::filesystem::path& path) {
  return parse_goal_model_or_throw(text::read_file(path));
}

}  // namespace reqviz
