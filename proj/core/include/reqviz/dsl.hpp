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

// Textual syntax for goal models (`.goals` files).
//
//   actor "Tax collector" : Lay
//   process "Tax collection"
//   strategic "Reduce the unpaid bills" {
//     analysis Diagnostic {
//       decision "Identify unpaid bills" {
//         information "Identify the type of unpaid bills" {
//           visualization "Unpaid bills by type" {
//             goals: Composition, Comparison
//             interactions: Overview
//             source "unpaid_bills.csv" {
//               category "Type"
//               category "Province"
//               measure "Amount"
//               shape tree "Parent" "Id"     # optional: flat | tree P I | graph S T
//               type "Amount" Ratio          # optional scale override
//             }
//           }
//         }
//       }
//     }
//   }
//
// Literal lists (`goals:`, `interactions:`) end at the end of the line
// unless the line ends with a comma. Enum literals are case-insensitive.
// `#` starts a comment.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reqviz/error.hpp"
#include "reqviz/goal_model.hpp"

namespace reqviz {

/// Structural parse without semantic validation. `locations` maps node
/// paths (as used in diagnostics) to the position of the node's keyword.
struct SyntaxTree {
  GoalModel model;
  std::map<std::string, SourceLocation> locations;
  std::vector<Diagnostic> diagnostics;
};

SyntaxTree parse_goal_model_syntax(std::string_view source);

struct ParseResult {
  std::optional<GoalModel> model;  // engaged iff diagnostics is empty
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return model.has_value(); }
};

/// Parses and validates. Never throws; any byte sequence yields either a
/// model or at least one diagnostic.
ParseResult parse_goal_model(std::string_view source);

/// Throws Error carrying all diagnostics; the error code is the first one's.
GoalModel parse_goal_model_or_throw(std::string_view source);

GoalModel load_goal_model(const std::filesystem::path& path);

/// Empty iff every multiplicity, naming and disjointness rule holds.
std::vector<Diagnostic> validate_goal_model(const GoalModel& model);

/// Canonical text: 2-space indentation, canonical literal spelling, LF.
std::string serialize_goal_model(const GoalModel& model);

}  // namespace reqviz
