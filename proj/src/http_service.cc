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

#include <charconv>
#include <functional>
#include <thread>

#include "httplib.h"
#include "json_codec.h"

namespace gptlods {

namespace {

constexpr size_t kDefaultPageSize = 50;
constexpr const char *kJsonType = "application/json; charset=utf-8";

void Reply(httplib::Response &res, int status, const json &body) {
  res.status = status;
  res.set_content(body.dump(), kJsonType);
}

void ReplyError(httplib::Response &res, ErrorCode code,
                const std::string &message) {
  Reply(res, HttpStatusFor(code), ErrorJson(code, message));
}

// Wraps a handler so every failure becomes a JSON problem document.
httplib::Server::Handler Guarded(
    std::function<void(const httplib::Request &, httplib::Response &)> fn) {
  return [fn = std::move(fn)](const httplib::Request &req,
                              httplib::Response &res) {
    try {
      fn(req, res);
    } catch (const Error &e) {
      ReplyError(res, e.code(), e.what());
    } catch (const json::exception &e) {
      ReplyError(res, ErrorCode::kInvalidArgument,
                 std::string("malformed JSON: ") + e.what());
    } catch (const std::exception &e) {
      ReplyError(res, ErrorCode::kInternal, e.what());
    }
  };
}

json ParseBody(const httplib::Request &req) {
  json body = json::parse(req.body);
  if (!body.is_object()) {
    throw Error(ErrorCode::kInvalidArgument, "request body must be an object");
  }
  return body;
}

std::string RequireString(const json &body, const char *field) {
  if (!body.contains(field) || !body[field].is_string()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("field \"") + field + "\" must be a string");
  }
  return body[field].get<std::string>();
}

// Ids that do not fit are reported as unknown entities.
EntityId EntityFromPath(const std::string &digits,
                        const EquivalenceIndex &index) {
  uint32_t value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() ||
      value >= index.entity_count()) {
    throw Error(ErrorCode::kNotFound, "unknown entity id " + digits);
  }
  return EntityId{value};
}

size_t QueryNumber(const httplib::Request &req, const char *name,
                   size_t fallback) {
  if (!req.has_param(name)) return fallback;
  std::string raw = req.get_param_value(name);
  size_t value = 0;
  auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
  if (raw.empty() || ec != std::errc() || ptr != raw.data() + raw.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("query parameter ") + name +
                    " must be a non-negative integer");
  }
  return value;
}

}  // namespace

int HttpStatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kInvalidPair:
    case ErrorCode::kParse:
      return 400;
    case ErrorCode::kNotFound:
      return 404;
    case ErrorCode::kProvider:
    case ErrorCode::kConfig:
      return 502;
    case ErrorCode::kRecognizerUnavailable:
      return 503;
    default:
      return 500;
  }
}

ApiServer::ApiServer(std::shared_ptr<const Pipeline> pipeline,
                     ServerOptions options)
    : pipeline_(std::move(pipeline)),
      options_(std::move(options)),
      server_(std::make_unique<httplib::Server>()) {
  // Without SO_REUSEPORT, so a second server on a busy port fails to bind.
  server_->set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR,
               reinterpret_cast<const void *>(&yes), sizeof(yes));
  });
  RegisterRoutes();
}

ApiServer::~ApiServer() { Stop(); }

void ApiServer::RegisterRoutes() {
  const Pipeline &pipeline = *pipeline_;
  const EquivalenceIndex &index = pipeline.kb().index;
  httplib::Server &srv = *server_;

  srv.Get("/api/health", Guarded([&](const auto &, auto &res) {
            Reply(res, 200, HealthJson(index));
          }));

  srv.Get("/api/schema", Guarded([](const auto &, auto &res) {
            res.set_content(ApiSchema(), kJsonType);
          }));

  srv.Get("/api/datasets", Guarded([&](const auto &, auto &res) {
            Reply(res, 200, DatasetsJson(index));
          }));

  srv.Get(R"(/api/entity/(\d+))", Guarded([&](const auto &req, auto &res) {
            EntityId id = EntityFromPath(req.matches[1], index);
            Reply(res, 200, EntityCardJson(index, id));
          }));

  srv.Get(R"(/api/entity/(\d+)/uris)",
          Guarded([&](const auto &req, auto &res) {
            EntityId id = EntityFromPath(req.matches[1], index);
            Reply(res, 200, EntityUrisJson(index, id));
          }));

  srv.Get(R"(/api/entity/(\d+)/facts)",
          Guarded([&](const auto &req, auto &res) {
            EntityId id = EntityFromPath(req.matches[1], index);
            size_t page = QueryNumber(req, "page", 0);
            size_t size = QueryNumber(req, "size", kDefaultPageSize);
            Reply(res, 200, EntityFactsJson(index, id, page, size));
          }));

  srv.Get(R"(/api/entity/(\d+)/datasets)",
          Guarded([&](const auto &req, auto &res) {
            EntityId id = EntityFromPath(req.matches[1], index);
            Reply(res, 200, EntityDatasetsJson(index, id));
          }));

  srv.Post("/api/ask", Guarded([&](const auto &req, auto &res) {
             std::string question = RequireString(ParseBody(req), "question");
             if (question.empty()) {
               throw Error(ErrorCode::kInvalidArgument, "question is empty");
             }
             Reply(res, 200,
                   PipelineResultToJson(pipeline.Run(question), index));
           }));

  srv.Post("/api/annotate", Guarded([&](const auto &req, auto &res) {
             std::string text = RequireString(ParseBody(req), "text");
             Reply(res, 200,
                   AnnotationRunToJson(pipeline.AnnotateText(text), index));
           }));

  srv.Post("/api/factcheck", Guarded([&](const auto &req, auto &res) {
             json body = ParseBody(req);
             if (!body.contains("entity_ids") || !body["entity_ids"].is_array()) {
               throw Error(ErrorCode::kInvalidArgument,
                           "field \"entity_ids\" must be an array");
             }
             std::vector<EntityId> ids;
             for (const json &v : body["entity_ids"]) {
               if (!v.is_number_unsigned()) {
                 throw Error(ErrorCode::kInvalidArgument,
                             "entity ids must be non-negative integers");
               }
               uint64_t raw = v.get<uint64_t>();
               if (raw >= index.entity_count()) {
                 throw Error(ErrorCode::kNotFound,
                             "unknown entity id " + std::to_string(raw));
               }
               ids.push_back(EntityId{static_cast<uint32_t>(raw)});
             }
             RequireDistinctPair(ids);
             json out = {
                 {"validation",
                  ValidationToJson(ValidateEntities(ids, index), index)}};
             Reply(res, 200, out);
           }));

  if (!options_.static_dir.empty()) {
    srv.set_mount_point("/", options_.static_dir);
  }

  srv.set_error_handler([](const httplib::Request &req,
                           httplib::Response &res) {
    if (!res.body.empty()) return;
    ErrorCode code = res.status == 404 ? ErrorCode::kNotFound
                                       : ErrorCode::kInvalidArgument;
    std::string message = res.status == 404 ? "no route for " + req.path
                                            : "request rejected";
    res.set_content(ErrorJson(code, message).dump(), kJsonType);
  });
}

int ApiServer::Bind() {
  if (options_.port == 0) {
    port_ = server_->bind_to_any_port(options_.host);
  } else if (server_->bind_to_port(options_.host, options_.port)) {
    port_ = options_.port;
  } else {
    port_ = -1;
  }
  if (port_ <= 0) {
    throw Error(ErrorCode::kBind, "cannot bind " + options_.host + ":" +
                                      std::to_string(options_.port));
  }
  return port_;
}

void ApiServer::Run() {
  if (port_ <= 0) throw Error(ErrorCode::kBind, "server is not bound");
  if (!stop_requested_) server_->listen_after_bind();
  finished_ = true;
}

void ApiServer::WaitUntilReady() const {
  while (!server_->is_running() && !finished_ && !stop_requested_) {
    std::this_thread::sleep_for(std::chrono::milliseconds(1));
  }
}

void ApiServer::Stop() {
  stop_requested_ = true;
  if (server_ && server_->is_running()) server_->stop();
}

}  // namespace gptlods
