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

#include <string>
#include <string_view>

#include "json_codec.hpp"
#include "reqviz/project.hpp"

namespace reqviz {

json::Json spec_to_json(const VisualizationSpec& spec);
VisualizationSpec spec_from_json(const json::Json& value, const std::string& path);
json::Json manifest_to_json(const Project& project);

/// Atomic write of a project-relative file.
void write_project_file(const Project& project, const std::string& relative,
                        std::string_view contents);

}  // namespace reqviz
