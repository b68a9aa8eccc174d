// Copyright 2026 The gptlods Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "http_service.h"

#include <thread>

#include "gtest/gtest.h"
#include "httplib.h"
#include "json_codec.h"
#include "stub_server.h"
#include "test_util.h"

namespace gptlods {
namespace {

using nlohmann::json;

constexpr const char *kQuestion = "Which is the birth place of Aristotle?";

std::shared_ptr<const KnowledgeBase> Athens3Kb() {
  return KnowledgeBase::Create(testing::BuildAthens3(), Stoplist::Default());
}

std::shared_ptr<const Pipeline> MakePipeline(
    std::vector<std::shared_ptr<const RecognizerClient>> recognizers = {}) {
  return std::make_shared<Pipeline>(
      Athens3Kb(),
      std::make_shared<CannedProvider>(
          testing::SourcePath("data/athens3/canned.json")),
      std::move(recognizers), [] { return Timestamp{}; });
}

// Runs an ApiServer on a free port for the lifetime of the fixture.
class ServiceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    static_dir_ = testing::TempDir("static");
    testing::WriteFile(static_dir_ + "/index.html", "<html>gptlods</html>");
    ServerOptions options;
    options.port = 0;
    options.static_dir = static_dir_;
    server_ = std::make_unique<ApiServer>(MakePipeline(), options);
    port_ = server_->Bind();
    thread_ = std::thread([this] { server_->Run(); });
    server_->WaitUntilReady();
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
    schema_ = json::parse(ApiSchema());
  }

  void TearDown() override {
    server_->Stop();
    thread_.join();
  }

  // Returns the parsed body after checking status and schema conformance.
  json Get(const std::string &path, int status, const std::string &def) {
    auto res = client_->Get(path);
    EXPECT_TRUE(res) << path;
    if (!res) return json();
    return Check(*res, status, def, path);
  }

  json Post(const std::string &path, const std::string &body, int status,
            const std::string &def) {
    auto res = client_->Post(path, body, "application/json");
    EXPECT_TRUE(res) << path;
    if (!res) return json();
    return Check(*res, status, def, path);
  }

  json Check(const httplib::Response &res, int status, const std::string &def,
             const std::string &path) {
    EXPECT_EQ(res.status, status) << path << ": " << res.body;
    EXPECT_NE(res.get_header_value("Content-Type").find("application/json"),
              std::string::npos);
    json doc = json::parse(res.body);
    EXPECT_EQ(testing::ValidateAgainst(schema_, def, doc), "")
        << path << ": " << res.body;
    return doc;
  }

  std::string static_dir_;
  std::unique_ptr<ApiServer> server_;
  int port_ = 0;
  std::thread thread_;
  std::unique_ptr<httplib::Client> client_;
  json schema_;
};

TEST_F(ServiceTest, ReadEndpoints) {
  json health = Get("/api/health", 200, "Health");
  EXPECT_EQ(health["entities"], 3);

  json datasets = Get("/api/datasets", 200, "DatasetRegistry");
  ASSERT_EQ(datasets["datasets"].size(), 3u);
  EXPECT_EQ(datasets["datasets"][0]["name"], "kgA");

  json card = Get("/api/entity/0", 200, "EntityCard");
  EXPECT_EQ(card["preferred_label"], "Aristotle");
  EXPECT_EQ(card["uri_count"], 3);

  json uris = Get("/api/entity/0/uris", 200, "EntityUris");
  EXPECT_EQ(uris["uris"].size(), 3u);

  json facts = Get("/api/entity/2/facts?page=0&size=3", 200, "EntityFacts");
  EXPECT_EQ(facts["facts"].size(), 3u);
  EXPECT_EQ(facts["total"], 4);
  json rest = Get("/api/entity/2/facts?page=1&size=3", 200, "EntityFacts");
  EXPECT_EQ(rest["facts"].size(), 1u);

  json mentions = Get("/api/entity/0/datasets", 200, "EntityDatasets");
  EXPECT_EQ(mentions["datasets"].size(), 3u);

  auto res = client_->Get("/api/schema");
  ASSERT_TRUE(res);
  EXPECT_EQ(json::parse(res->body), schema_);
}

TEST_F(ServiceTest, ErrorDocuments) {
  EXPECT_EQ(Get("/api/entity/3", 404, "Problem")["error"]["code"],
            "not_found");
  Get("/api/entity/99999999999999999999", 404, "Problem");
  Get("/api/entity/3/facts", 404, "Problem");
  Get("/api/nothing", 404, "Problem");
  Get("/api/entity/0/facts?size=0", 400, "Problem");
  Get("/api/entity/0/facts?size=1001", 400, "Problem");
  Get("/api/entity/0/facts?page=x", 400, "Problem");

  Post("/api/ask", "{", 400, "Problem");
  Post("/api/ask", "[]", 400, "Problem");
  Post("/api/ask", R"({"question":""})", 400, "Problem");
  Post("/api/ask", R"({"question":3})", 400, "Problem");
  EXPECT_EQ(Post("/api/ask", R"({"question":"unknown?"})", 502,
                 "Problem")["error"]["code"],
            "provider_error");
  Post("/api/annotate", R"({})", 400, "Problem");
  Post("/api/factcheck", R"({"entity_ids":[0,0]})", 400, "Problem");
  Post("/api/factcheck", R"({"entity_ids":[0,7]})", 404, "Problem");
  Post("/api/factcheck", R"({"entity_ids":[0,-1]})", 400, "Problem");
  Post("/api/factcheck", R"({"entity_ids":"0,1"})", 400, "Problem");
}

TEST_F(ServiceTest, AskIsStateless) {
  const std::string body = json{{"question", kQuestion}}.dump();
  json first = Post("/api/ask", body, 200, "PipelineResult");
  json second = Post("/api/ask", body, 200, "PipelineResult");
  EXPECT_EQ(first, second);

  EXPECT_EQ(first["question"], kQuestion);
  const json &answer = first["answer"];
  EXPECT_EQ(answer["text"], "Aristotle was born in Stagira, Chalkidiki.");
  EXPECT_EQ(answer["timestamp"], "1970-01-01T00:00:00Z");
  EXPECT_EQ(answer["provider_info"], "canned:canned.json");
  ASSERT_EQ(answer["spans"].size(), 3u);
  EXPECT_EQ(answer["cards"].size(), 3u);
  ASSERT_EQ(first["validation"].size(), 3u);
  for (const json &pair : first["validation"]) {
    if (pair["entities"] == json::array({0, 2})) {
      EXPECT_EQ(pair["evidence"].size(), 2u);
    }
  }
}

TEST_F(ServiceTest, AnnotateAndFactcheck) {
  json run = Post("/api/annotate",
                  R"({"text":"Aristotle was born in Stagira."})", 200,
                  "AnnotatedResponse");
  ASSERT_EQ(run["spans"].size(), 2u);
  EXPECT_EQ(run["spans"][0]["start"], 0);
  EXPECT_EQ(run["spans"][0]["end"], 9);
  EXPECT_EQ(run["spans"][1]["start"], 22);
  EXPECT_EQ(run["spans"][1]["end"], 29);
  EXPECT_EQ(run["spans"][1]["surface"], "Stagira");
  EXPECT_EQ(Post("/api/annotate", R"({"text":""})", 200,
                 "AnnotatedResponse")["spans"]
                .size(),
            0u);

  json check = Post("/api/factcheck", R"({"entity_ids":[2,1,0]})", 200,
                    "FactcheckResult");
  EXPECT_EQ(check["validation"].size(), 3u);
}

TEST_F(ServiceTest, ServesStaticFiles) {
  auto res = client_->Get("/");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->body, "<html>gptlods</html>");
  res = client_->Get("/index.html");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
}

TEST_F(ServiceTest, ConcurrentRequests) {
  std::vector<std::thread> workers;
  std::atomic<int> ok{0};
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&] {
      httplib::Client client("127.0.0.1", port_);
      for (int i = 0; i < 10; ++i) {
        auto res = client.Post("/api/annotate",
                               R"({"text":"Aristotle was born in Stagira."})",
                               "application/json");
        if (res && res->status == 200) ++ok;
      }
    });
  }
  for (std::thread &w : workers) w.join();
  EXPECT_EQ(ok, 80);
}

TEST(ServerTest, StatusMapping) {
  EXPECT_EQ(HttpStatusFor(ErrorCode::kInvalidArgument), 400);
  EXPECT_EQ(HttpStatusFor(ErrorCode::kInvalidPair), 400);
  EXPECT_EQ(HttpStatusFor(ErrorCode::kNotFound), 404);
  EXPECT_EQ(HttpStatusFor(ErrorCode::kProvider), 502);
  EXPECT_EQ(HttpStatusFor(ErrorCode::kConfig), 502);
  EXPECT_EQ(HttpStatusFor(ErrorCode::kRecognizerUnavailable), 503);
  EXPECT_EQ(HttpStatusFor(ErrorCode::kInternal), 500);
}

TEST(ServerTest, StopBeforeRunAndBindConflict) {
  ServerOptions options;
  options.port = 0;
  ApiServer first(MakePipeline(), options);
  int port = first.Bind();
  options.port = port;
  ApiServer second(MakePipeline(), options);
  try {
    second.Bind();
    ADD_FAILURE() << "second bind succeeded";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kBind);
  }
  first.Stop();
  first.Run();  // returns at once
}

TEST(PipelineTest, ExternalRecognizersJoinTheEnsemble) {
  testing::StubServer agree(testing::StubServer::Fixed(
      R"({"annotations":[{"start":0,"end":9,"uri":"http://www.wikidata.org/wiki/Q868"},
                         {"start":14,"end":18,"uri":"http://ex.org/unknown"}]})"));
  auto pipeline = MakePipeline(
      {std::make_shared<HttpRecognizerClient>("spot", agree.url()),
       std::make_shared<HttpRecognizerClient>("down",
                                              testing::UnreachableUrl())});
  AnnotationRun run = pipeline->AnnotateText("Aristotle was born in Stagira.");
  ASSERT_EQ(run.response.spans.size(), 2u);
  EXPECT_EQ(run.response.spans[0].recognizers,
            (std::vector<std::string>{"gazetteer", "spot"}));
  EXPECT_DOUBLE_EQ(run.response.spans[0].confidence, 1.0);
  EXPECT_DOUBLE_EQ(run.response.spans[1].confidence, 0.5);
  // One unreachable recognizer and one unresolved IRI.
  ASSERT_EQ(run.warnings.size(), 2u);
  EXPECT_NE(run.warnings[0].find("recognizer_unavailable"), std::string::npos);
  EXPECT_NE(run.warnings[1].find("http://ex.org/unknown"), std::string::npos);
}

TEST(PipelineTest, RunValidatesAnswer) {
  PipelineResult result = MakePipeline()->Run(kQuestion);
  EXPECT_EQ(result.answer.spans.size(), 3u);
  EXPECT_EQ(result.validation.size(), 3u);
  EXPECT_TRUE(result.warnings.empty());
  auto no_provider = std::make_shared<Pipeline>(Athens3Kb(), nullptr);
  try {
    no_provider->Run(kQuestion);
    ADD_FAILURE() << "ran without a provider";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfig);
  }
}

}  // namespace
}  // namespace gptlods
