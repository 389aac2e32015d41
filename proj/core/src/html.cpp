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

#include "json_codec.hpp"
#include "reqviz/codegen.hpp"

namespace reqviz {

namespace {

constexpr std::string_view kChartDocOpen = "<script type=\"application/json\" id=\"chartdoc\">\n";
constexpr std::string_view kScriptClose = "</script>";

std::string escape_html(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

constexpr std::string_view kStyle = R"(body{margin:0;padding:16px;font-family:sans-serif;color:#222;background:#fff}
h1{font-size:18px;font-weight:600;margin:0 0 8px}
#chart{position:relative}
#chart svg{display:block;max-width:100%;height:auto}
.reqviz-tooltip{position:absolute;pointer-events:none;background:rgba(0,0,0,.8);color:#fff;padding:4px 8px;border-radius:3px;font-size:12px;white-space:pre;display:none}
.reqviz-table{border-collapse:collapse;font-size:13px}
.reqviz-table th,.reqviz-table td{border:1px solid #ccc;padding:4px 8px;text-align:left}
.reqviz-card{font-size:48px;font-weight:600;padding:24px 0}
.reqviz-card small{display:block;font-size:14px;font-weight:400;color:#666}
)";

}  // namespace

std::string generate_html(std::string_view chartdoc_json) {
  // Verbatim embedding is only safe when no '<' can close the script element.
  if (chartdoc_json.find('<') != std::string_view::npos) {
    json::fail("", "chart document contains '<'; embed the canonical escaped form");
  }
  const json::Json doc = json::parse(chartdoc_json);
  if (!doc.is_object() || !doc.contains("title") || !doc.contains("interactions") ||
      !doc.contains("encodings")) {
    json::fail("", "not a chart document");
  }
  const std::string title = json::get_string(doc["title"], "title");
  const auto interactions = json::get_enum_list<InteractionType>(doc["interactions"],
                                                                 "interactions");
  bool pan_zoom = false, legend_filter = false, tooltips = false;
  for (auto i : interactions) {
    pan_zoom = pan_zoom || i == InteractionType::Zoom;
    legend_filter = legend_filter || i == InteractionType::Filter;
    tooltips = tooltips || i == InteractionType::DetailsOnDemand;
  }
  json::Json flags = json::Json::object();
  flags["pan_zoom"] = pan_zoom;
  flags["legend_filter"] = legend_filter;
  flags["tooltips"] = tooltips;

  const std::string escaped_title = escape_html(title);
  std::string out;
  out += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
  out += "<meta name=\"viewport\" content=\"width=device-width, initial-scale=1\">\n";
  out += "<title>" + escaped_title + "</title>\n";
  out += "<style>\n" + std::string(kStyle) + "</style>\n</head>\n<body>\n";
  out += "<h1>" + escaped_title + "</h1>\n<div id=\"chart\"></div>\n";
  out += kChartDocOpen;
  out += chartdoc_json;
  out += kScriptClose;
  out += "\n<script type=\"application/json\" id=\"runtime-flags\">" + flags.dump() + "</script>\n";
  out += "<script>\n" + std::string(html_runtime_script()) + "</script>\n";
  out += "</body>\n</html>\n";
  return out;
}

std::string extract_chartdoc(std::string_view html) {
  const auto start = html.find(kChartDocOpen);
  if (start == std::string_view::npos) {
    throw Error(ErrorCode::SchemaError, "page has no chartdoc block");
  }
  const auto body = start + kChartDocOpen.size();
  const auto end = html.find(kScriptClose, body);
  if (end == std::string_view::npos) {
    throw Error(ErrorCode::SchemaError, "chartdoc block is not terminated");
  }
  return std::string(html.substr(body, end - body));
}

}  // namespace reqviz
