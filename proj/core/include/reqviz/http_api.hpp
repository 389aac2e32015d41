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

// JSON API over a directory of projects, mounted under /api/v1.
//
//   POST  /projects                                  {id?, goals, datasets:[{name, content}], config?}
//   GET   /projects/{id}
//   POST  /projects/{id}/visualizations/{vid}/derive
//   GET   /projects/{id}/visualizations/{vid}/model      -> {version, spec, model}
//   PATCH /projects/{id}/visualizations/{vid}/model      {version, ops}
//   GET   /projects/{id}/visualizations/{vid}/questions
//   POST  /projects/{id}/visualizations/{vid}/validate   {answers}
//   GET   /projects/{id}/visualizations/{vid}/chartdoc
//   GET   /projects/{id}/visualizations/{vid}/render     (text/html)
//   GET   /rules
//
// Errors: 400 {"error": {code, message, stage?, diagnostics}}, 404 for
// unknown projects or visualizations, 409 for a stale model version or an
// existing project id.

#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

namespace reqviz {

struct HttpRequest {
  std::string method;
  std::string path;  // without query string
  std::string body;
};

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

/// Transport-independent request handling. Writers to one project are
/// serialized by an exclusive lock; readers share it.
class ApiService {
 public:
  explicit ApiService(std::filesystem::path root);

  HttpResponse handle(const HttpRequest& request);

  const std::filesystem::path& root() const { return root_; }

 private:
  std::shared_mutex& lock_for(const std::string& project_id);

  std::filesystem::path root_;
  std::mutex locks_guard_;
  std::map<std::string, std::unique_ptr<std::shared_mutex>> locks_;
};

/// Binds an HTTP listener to an ApiService.
class HttpServer {
 public:
  explicit HttpServer(ApiService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Returns the bound port (an ephemeral one when `port` is 0); throws
  /// Error(IoError) when binding fails.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace reqviz
