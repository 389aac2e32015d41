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

// Canonical `.vismodel.json` form: fixed key order, 2-space indent, LF.
// docs/vismodel.schema.json describes the document.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "reqviz/vis_model.hpp"

namespace reqviz {

inline constexpr std::string_view kVisModelFormatVersion = "1.0";

std::string serialize_vis_model(const VisualizationModel& model);

/// Throws Error(SchemaError) for malformed JSON, unknown keys, missing
/// keys, wrong value types or unknown literals. Structural invariants are
/// not checked here; see check_model_invariants.
VisualizationModel parse_vis_model(std::string_view json_text);

VisualizationModel load_vis_model(const std::filesystem::path& path);

}  // namespace reqviz
