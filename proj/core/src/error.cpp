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

#include "reqviz/error.hpp"

#include <utility>

namespace reqviz {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::MissingBusinessProcess: return "MissingBusinessProcess";
    case ErrorCode::MissingActor: return "MissingActor";
    case ErrorCode::EmptyMultiplicity: return "EmptyMultiplicity";
    case ErrorCode::MultiplicityExceeded: return "MultiplicityExceeded";
    case ErrorCode::UnknownLiteral: return "UnknownLiteral";
    case ErrorCode::DuplicateAttribute: return "DuplicateAttribute";
    case ErrorCode::DuplicateLiteral: return "DuplicateLiteral";
    case ErrorCode::OverlappingAttribute: return "OverlappingAttribute";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::InvalidName: return "InvalidName";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidEncoding: return "InvalidEncoding";
    case ErrorCode::MissingHeader: return "MissingHeader";
    case ErrorCode::RaggedRows: return "RaggedRows";
    case ErrorCode::DuplicateColumn: return "DuplicateColumn";
    case ErrorCode::UnknownAttribute: return "UnknownAttribute";
    case ErrorCode::AllNullColumn: return "AllNullColumn";
    case ErrorCode::EmptySelection: return "EmptySelection";
    case ErrorCode::ZeroAttributes: return "ZeroAttributes";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::ProfileMismatch: return "ProfileMismatch";
    case ErrorCode::TooManyAttributes: return "TooManyAttributes";
    case ErrorCode::InsufficientAttributes: return "InsufficientAttributes";
    case ErrorCode::IncompleteAnswers: return "IncompleteAnswers";
    case ErrorCode::UnknownGoal: return "UnknownGoal";
    case ErrorCode::DuplicateAssignment: return "DuplicateAssignment";
    case ErrorCode::ChannelOccupied: return "ChannelOccupied";
    case ErrorCode::MissingChannel: return "MissingChannel";
    case ErrorCode::InvalidBounds: return "InvalidBounds";
    case ErrorCode::OrientationNotApplicable: return "OrientationNotApplicable";
    case ErrorCode::OrderRoleInvalid: return "OrderRoleInvalid";
    case ErrorCode::BodyMismatch: return "BodyMismatch";
    case ErrorCode::InvalidLegend: return "InvalidLegend";
    case ErrorCode::InvalidColorRange: return "InvalidColorRange";
    case ErrorCode::InvalidPosition: return "InvalidPosition";
    case ErrorCode::InvalidTitle: return "InvalidTitle";
    case ErrorCode::UnknownAxis: return "UnknownAxis";
    case ErrorCode::OpNotApplicable: return "OpNotApplicable";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::UnsupportedGraphicType: return "UnsupportedGraphicType";
    case ErrorCode::ModelInvalid: return "ModelInvalid";
    case ErrorCode::DanglingEdge: return "DanglingEdge";
    case ErrorCode::AlreadyExists: return "AlreadyExists";
    case ErrorCode::UnknownProject: return "UnknownProject";
    case ErrorCode::UnknownVisualization: return "UnknownVisualization";
    case ErrorCode::UnsupportedMultiSource: return "UnsupportedMultiSource";
    case ErrorCode::UnresolvedSource: return "UnresolvedSource";
    case ErrorCode::VersionConflict: return "VersionConflict";
    case ErrorCode::NotDerived: return "NotDerived";
  }
  return "Unknown";
}

std::string format_diagnostic(const Diagnostic& d) {
  std::string out;
  if (d.location.line > 0) {
    out += std::to_string(d.location.line) + ":" + std::to_string(d.location.column) + ": ";
  }
  out += to_string(d.code);
  out += ": ";
  out += d.message;
  if (!d.path.empty()) out += " (at " + d.path + ")";
  return out;
}

namespace {

std::string with_first_diagnostic(const std::string& message,
                                  const std::vector<Diagnostic>& diagnostics) {
  if (!message.empty() || diagnostics.empty()) return message;
  return format_diagnostic(diagnostics.front());
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::vector<Diagnostic> diagnostics)
    : std::runtime_error(with_first_diagnostic(message, diagnostics)),
      code_(code),
      diagnostics_(std::move(diagnostics)) {}

StageError::StageError(std::string stage, const Error& cause)
    : Error(cause.code(), stage + ": " + cause.what(), cause.diagnostics()),
      stage_(std::move(stage)) {}

}  // namespace reqviz
