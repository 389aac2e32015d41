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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace reqviz {

enum class ErrorCode {
  // goal-model DSL
  SyntaxError,
  MissingBusinessProcess,
  MissingActor,
  EmptyMultiplicity,
  MultiplicityExceeded,
  UnknownLiteral,
  DuplicateAttribute,
  DuplicateLiteral,
  OverlappingAttribute,
  DuplicateName,
  InvalidName,
  // data ingestion and profiling
  IoError,
  InvalidEncoding,
  MissingHeader,
  RaggedRows,
  DuplicateColumn,
  UnknownAttribute,
  AllNullColumn,
  EmptySelection,
  ZeroAttributes,
  ConfigError,
  // transformation
  ProfileMismatch,
  TooManyAttributes,
  InsufficientAttributes,
  IncompleteAnswers,
  UnknownGoal,
  // visualization model
  DuplicateAssignment,
  ChannelOccupied,
  MissingChannel,
  InvalidBounds,
  OrientationNotApplicable,
  OrderRoleInvalid,
  BodyMismatch,
  InvalidLegend,
  InvalidColorRange,
  InvalidPosition,
  InvalidTitle,
  UnknownAxis,
  OpNotApplicable,
  SchemaError,
  // code generation
  UnsupportedGraphicType,
  ModelInvalid,
  DanglingEdge,
  // project service
  AlreadyExists,
  UnknownProject,
  UnknownVisualization,
  UnsupportedMultiSource,
  UnresolvedSource,
  VersionConflict,
  NotDerived,
};

std::string_view to_string(ErrorCode code);

struct SourceLocation {
  int line = 0;  // 1-based; 0 when unknown
  int column = 0;

  bool operator==(const SourceLocation&) const = default;
};

struct Diagnostic {
  ErrorCode code = ErrorCode::SyntaxError;
  std::string path;  // node path, e.g. "strategic[0]/analysis[0]"
  std::string message;
  SourceLocation location;

  bool operator==(const Diagnostic&) const = default;
};

/// "line:col: Code: message (at path)", the form printed by the CLI.
std::string format_diagnostic(const Diagnostic& diagnostic);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<Diagnostic> diagnostics = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  ErrorCode code_;
  std::vector<Diagnostic> diagnostics_;
};

/// An error raised by one stage of the derivation pipeline, tagged with the
/// stage name ("profiling", "spec", "selection", "derivation", "codegen").
class StageError : public Error {
 public:
  StageError(std::string stage, const Error& cause);

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace reqviz
