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

#include <gtest/gtest.h>
#include <httplib.h>

#include <atomic>
#include <nlohmann/json.hpp>
#include <thread>

#include "fixtures.hpp"
#include "reqviz/codegen.hpp"
#include "reqviz/http_api.hpp"

namespace reqviz {
namespace {

using nlohmann::json;

constexpr const char* kBase = "/api/v1/projects";
constexpr const char* kVis = "/api/v1/projects/tax/visualizations/unpaid-bills-by-type";

json create_body() {
  json body;
  body["id"] = "tax";
  body["goals"] = testing::read_fixture(testing::kCaseStudyGoals);
  body["datasets"] = json::array();
  for (const auto& d : testing::case_study_datasets()) {
    body["datasets"].push_back({{"name", d.name}, {"content", d.content}});
  }
  return body;
}

class HttpApi : public ::testing::Test {
 protected:
  void SetUp() override {
    service_ = std::make_unique<ApiService>(tmp_.path());
    server_ = std::make_unique<HttpServer>(*service_);
    port_ = server_->bind("127.0.0.1", 0);
    thread_ = std::thread([this] { server_->listen(); });
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
    client_->set_read_timeout(10, 0);
    for (int i = 0; i < 200 && !client_->Get("/api/v1/rules"); ++i) {
      std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
  }
  void TearDown() override {
    server_->stop();
    thread_.join();
  }

  httplib::Result post(const std::string& path, const json& body) {
    return client_->Post(path, body.dump(), "application/json");
  }
  httplib::Result patch(const std::string& path, const json& body) {
    return client_->Patch(path, body.dump(), "application/json");
  }

  void create_and_derive() {
    auto r = post(kBase, create_body());
    ASSERT_TRUE(r);
    ASSERT_EQ(r->status, 201) << r->body;
    r = post(std::string(kVis) + "/derive", json::object());
    ASSERT_TRUE(r);
    ASSERT_EQ(r->status, 200) << r->body;
  }

  std::string model_version() {
    auto r = client_->Get(std::string(kVis) + "/model");
    return json::parse(r->body)["version"].get<std::string>();
  }

  testing::TempDir tmp_;
  std::unique_ptr<ApiService> service_;
  std::unique_ptr<HttpServer> server_;
  std::unique_ptr<httplib::Client> client_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(HttpApi, CreateAndGetProject) {
  auto r = post(kBase, create_body());
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 201);
  const auto doc = json::parse(r->body);
  EXPECT_EQ(doc["id"], "tax");
  EXPECT_EQ(doc["visualizations"].size(), 4u);

  r = client_->Get("/api/v1/projects/tax");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 200);
  EXPECT_EQ(json::parse(r->body)["visualizations"][1]["status"], "pending");

  r = post(kBase, create_body());
  EXPECT_EQ(r->status, 409);
  EXPECT_EQ(json::parse(r->body)["error"]["code"], "AlreadyExists");
}

TEST_F(HttpApi, DeriveReturnsAllSevenCoordinates) {
  ASSERT_EQ(post(kBase, create_body())->status, 201);
  auto r = post(std::string(kVis) + "/derive", json::object());
  ASSERT_EQ(r->status, 200) << r->body;
  const auto doc = json::parse(r->body);
  EXPECT_EQ(doc["graphic_type"], "stacked_column_chart");
  EXPECT_EQ(doc["spec_text"],
            "Composition & Comparison, Overview, Lay, n-dimensional, Low, Nominal, Ratio");
  const auto& spec = doc["spec"];
  EXPECT_EQ(spec["goals"], json({"composition", "comparison"}));
  EXPECT_EQ(spec["interactions"], json({"overview"}));
  EXPECT_EQ(spec["user"], "lay");
  EXPECT_EQ(spec["dimensionality"], "n_dimensional");
  EXPECT_EQ(spec["cardinality"]["kind"], "low");
  EXPECT_EQ(spec["independent_type"], "nominal");
  EXPECT_EQ(spec["dependent_type"], "ratio");
}

TEST_F(HttpApi, RefineThenChartdocMatchesGolden) {
  create_and_derive();
  json body;
  body["version"] = model_version();
  body["ops"] = json::parse(testing::read_fixture("case_study/refinements.json"));
  auto r = patch(std::string(kVis) + "/model", body);
  ASSERT_EQ(r->status, 200) << r->body;
  EXPECT_NE(json::parse(r->body)["version"], body["version"]);

  r = client_->Get(std::string(kVis) + "/chartdoc");
  ASSERT_EQ(r->status, 200);
  EXPECT_EQ(r->body, testing::read_fixture("golden/unpaid-bills-by-type.chartdoc.json"));
  const std::string chartdoc = r->body;

  r = client_->Get(std::string(kVis) + "/render");
  ASSERT_EQ(r->status, 200);
  EXPECT_NE(r->get_header_value("Content-Type").find("text/html"), std::string::npos);
  EXPECT_EQ(extract_chartdoc(r->body), chartdoc);
}

TEST_F(HttpApi, StaleVersionIs409AndBadOpsAre400) {
  create_and_derive();
  const std::string v0 = model_version();
  json ok = {{"version", v0}, {"ops", json::array({{{"op", "set_title"}, {"title", "A"}}})}};
  ASSERT_EQ(patch(std::string(kVis) + "/model", ok)->status, 200);
  auto r = patch(std::string(kVis) + "/model", ok);
  EXPECT_EQ(r->status, 409);
  EXPECT_EQ(json::parse(r->body)["error"]["code"], "VersionConflict");

  const std::string v1 = model_version();
  json bad = {{"version", v1},
              {"ops", json::array({{{"op", "set_title"}, {"title", "B"}},
                                   {{"op", "set_order"}, {"attribute", "Nope"}}})}};
  r = patch(std::string(kVis) + "/model", bad);
  EXPECT_EQ(r->status, 400);
  const auto err = json::parse(r->body)["error"];
  EXPECT_EQ(err["code"], "UnknownAxis");
  EXPECT_EQ(err["diagnostics"][0]["path"], "ops[1]");
  EXPECT_EQ(model_version(), v1);  // all or nothing

  r = patch(std::string(kVis) + "/model", {{"ops", json::array()}});
  EXPECT_EQ(r->status, 400);
}

TEST_F(HttpApi, ConcurrentPatchesWithOneVersionHaveOneWinner) {
  create_and_derive();
  const std::string v0 = model_version();
  std::atomic<int> ok{0}, conflict{0};
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&, i] {
      httplib::Client c("127.0.0.1", port_);
      json body = {{"version", v0},
                   {"ops", json::array({{{"op", "set_title"},
                                         {"title", "Title " + std::to_string(i)}}})}};
      auto r = c.Patch(std::string(kVis) + "/model", body.dump(), "application/json");
      if (r && r->status == 200) ++ok;
      if (r && r->status == 409) ++conflict;
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(ok.load(), 1);
  EXPECT_EQ(conflict.load(), 7);
}

TEST_F(HttpApi, ValidateFlagsRevision) {
  create_and_derive();
  auto r = client_->Get(std::string(kVis) + "/questions");
  ASSERT_EQ(r->status, 200);
  EXPECT_EQ(json::parse(r->body).size(), 2u);

  r = post(std::string(kVis) + "/validate",
           {{"answers", {{"composition", "yes"}, {"comparison", "no"}}}});
  ASSERT_EQ(r->status, 200) << r->body;
  auto doc = json::parse(r->body);
  EXPECT_EQ(doc["status"], "requires_revision");
  EXPECT_EQ(doc["failed_goals"], json({"comparison"}));
  EXPECT_EQ(doc["visualization_status"], "requires_revision");
  EXPECT_EQ(doc["history_length"], 1);

  r = post(std::string(kVis) + "/validate",
           {{"answers", {{"composition", true}, {"comparison", true}}}});
  doc = json::parse(r->body);
  EXPECT_EQ(doc["status"], "validated");
  EXPECT_EQ(doc["history_length"], 2);

  r = post(std::string(kVis) + "/validate", {{"answers", {{"composition", true}}}});
  EXPECT_EQ(r->status, 400);
  EXPECT_EQ(json::parse(r->body)["error"]["code"], "IncompleteAnswers");
}

TEST_F(HttpApi, ErrorsAndUnknownIds) {
  EXPECT_EQ(client_->Get("/api/v1/projects/missing")->status, 404);
  EXPECT_EQ(client_->Get("/api/v1/projects/..")->status, 404);
  EXPECT_EQ(client_->Get("/api/v2/anything")->status, 404);
  ASSERT_EQ(post(kBase, create_body())->status, 201);
  EXPECT_EQ(client_->Get("/api/v1/projects/tax/visualizations/nope/model")->status, 404);
  EXPECT_EQ(client_->Get(std::string(kVis) + "/chartdoc")->status, 400);  // not derived
  EXPECT_EQ(client_->Delete("/api/v1/projects/tax")->status, 405);

  auto r = post(std::string("/api/v1/projects/tax/visualizations/unpaid-bills-by-place/derive"),
                json::object());
  EXPECT_EQ(r->status, 400);
  EXPECT_EQ(json::parse(r->body)["error"]["stage"], "codegen");

  r = client_->Post(kBase, "{not json", "application/json");
  EXPECT_EQ(r->status, 400);
  EXPECT_EQ(json::parse(r->body)["error"]["code"], "SchemaError");

  json bad_goals = create_body();
  bad_goals["id"] = "other";
  bad_goals["goals"] = "actor \"A\" : Lay\n";
  r = post(kBase, bad_goals);
  EXPECT_EQ(r->status, 400);
  EXPECT_FALSE(json::parse(r->body)["error"]["diagnostics"].empty());
}

TEST(ApiServiceDirect, HandlesWithoutSockets) {
  testing::TempDir tmp;
  ApiService s(tmp.path());
  auto r = s.handle({"POST", kBase, create_body().dump()});
  EXPECT_EQ(r.status, 201);
  r = s.handle({"GET", "/api/v1/rules", ""});
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(json::parse(r.body).size(), 12u);
}

}  // namespace
}  // namespace reqviz
