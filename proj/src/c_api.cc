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


#include "gptlods/gptlods.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "annotation.h"
#include "error.h"
#include "http_service.h"
#include "json_codec.h"
#include "pipeline.h"

using namespace gptlods;

struct gptlods_builder {
  struct DatasetError {
    std::string dataset;
    ParseError error;
  };

  DatasetRegistry registry;
  std::vector<Triple> triples;
  std::vector<DatasetError> errors;
};

struct gptlods_index {
  std::shared_ptr<const KnowledgeBase> kb;
};

struct gptlods_pipeline {
  std::shared_ptr<const KnowledgeBase> kb;
  std::shared_ptr<const LlmProvider> provider;
  std::vector<std::shared_ptr<const RecognizerClient>> recognizers;
  std::optional<Timestamp> fixed_time;
  std::shared_ptr<const Pipeline> pipeline;

  void Rebuild() {
    Pipeline::ClockFn clock = [] { return std::chrono::system_clock::now(); };
    if (fixed_time) clock = [t = *fixed_time] { return t; };
    pipeline = std::make_shared<Pipeline>(kb, provider, recognizers, clock);
  }
};

struct gptlods_server {
  std::unique_ptr<ApiServer> server;
};

namespace {

thread_local std::string last_error;

gptlods_status Fail(ErrorCode code, const std::string &message) {
  last_error = message;
  return static_cast<gptlods_status>(code);
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
gptlods_status Guard(Fn &&fn) {
  try {
    last_error.clear();
    fn();
    return GPTLODS_OK;
  } catch (const Error &e) {
    return Fail(e.code(), e.what());
  } catch (const std::bad_alloc &) {
    return Fail(ErrorCode::kInternal, "out of memory");
  } catch (const std::exception &e) {
    return Fail(ErrorCode::kInternal, e.what());
  }
}

void Require(bool ok, const char *what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

char *Dup(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void Emit(const json &doc, char **out) { *out = Dup(doc.dump()); }

Stoplist StoplistFrom(const char *path) {
  return path == nullptr ? Stoplist::Default() : Stoplist::FromFile(path);
}

std::shared_ptr<const LlmProvider> ProviderFrom(const char *descriptor) {
  if (descriptor == nullptr || *descriptor == '\0') return nullptr;
  std::string s(descriptor);
  constexpr std::string_view kCanned = "canned:";
  if (s.starts_with(kCanned)) {
    return MakeProvider(ProviderConfig::Canned(s.substr(kCanned.size())));
  }
  if (s == "http") return MakeProvider(ProviderConfig::HttpChatFromEnvironment());
  throw Error(ErrorCode::kConfig, "unknown provider \"" + s +
                                      "\"; expected canned:<file> or http");
}

EntityId CheckedEntity(const EquivalenceIndex &index, uint32_t id) {
  if (id >= index.entity_count()) {
    throw Error(ErrorCode::kNotFound, "unknown entity id " + std::to_string(id));
  }
  return EntityId{id};
}

}  // namespace

extern "C" {

const char *gptlods_version(void) { return "1.0.0"; }

const char *gptlods_last_error(void) { return last_error.c_str(); }

const char *gptlods_status_name(gptlods_status status) {
  if (status == GPTLODS_OK) return "ok";
  return ErrorCodeName(static_cast<ErrorCode>(status));
}

void gptlods_string_free(char *str) { std::free(str); }

gptlods_status gptlods_normalize_iri(const char *raw, char **out) {
  return Guard([&] {
    Require(raw != nullptr && out != nullptr, "null argument");
    *out = Dup(NormalizeIri(raw).str());
  });
}

gptlods_status gptlods_builder_create(gptlods_builder **out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    *out = new gptlods_builder();
  });
}

void gptlods_builder_free(gptlods_builder *builder) { delete builder; }

gptlods_status gptlods_builder_add_ntriples(gptlods_builder *builder,
                                            const char *name, const char *path,
                                            gptlods_parse_mode mode,
                                            size_t *triple_count,
                                            size_t *error_count) {
  return Guard([&] {
    Require(builder != nullptr && name != nullptr && path != nullptr,
            "null argument");
    Require(*name != '\0', "dataset name is empty");
    if (builder->registry.Find(name)) {
      throw Error(ErrorCode::kDuplicate,
                  std::string("dataset \"") + name + "\" already registered");
    }
    // Parse first so a failed file leaves the builder untouched.
    DatasetId next{static_cast<uint32_t>(builder->registry.size())};
    ParseResult parsed = ParseNTriplesFile(
        path, next,
        mode == GPTLODS_PARSE_STRICT ? ParseMode::kStrict : ParseMode::kLenient);
    DatasetId id = builder->registry.Register(name, path);
    builder->registry.SetTripleCount(id, parsed.triples.size());
    if (triple_count) *triple_count = parsed.triples.size();
    if (error_count) *error_count = parsed.errors.size();
    builder->triples.insert(builder->triples.end(),
                            std::make_move_iterator(parsed.triples.begin()),
                            std::make_move_iterator(parsed.triples.end()));
    for (ParseError &e : parsed.errors) {
      builder->errors.push_back({name, std::move(e)});
    }
  });
}

gptlods_status gptlods_builder_errors_json(const gptlods_builder *builder,
                                           char **out) {
  return Guard([&] {
    Require(builder != nullptr && out != nullptr, "null argument");
    json doc = json::array();
    for (const auto &[dataset, e] : builder->errors) {
      doc.push_back({{"dataset", dataset},
                     {"line_number", e.line_number},
                     {"reason", e.reason},
                     {"raw_line", e.raw_line}});
    }
    Emit(doc, out);
  });
}

gptlods_status gptlods_builder_build(gptlods_builder *builder,
                                     const char *stopwords_path,
                                     gptlods_index **out) {
  return Guard([&] {
    Require(builder != nullptr && out != nullptr, "null argument");
    Stoplist stoplist = StoplistFrom(stopwords_path);
    EquivalenceIndex index =
        EquivalenceIndex::Build(builder->triples, builder->registry);
    *out = new gptlods_index{KnowledgeBase::Create(std::move(index),
                                                   std::move(stoplist))};
  });
}

gptlods_status gptlods_index_load(const char *snapshot_path,
                                  const char *stopwords_path,
                                  gptlods_index **out) {
  return Guard([&] {
    Require(snapshot_path != nullptr && out != nullptr, "null argument");
    Stoplist stoplist = StoplistFrom(stopwords_path);
    *out = new gptlods_index{KnowledgeBase::Create(
        EquivalenceIndex::Load(std::string(snapshot_path)),
        std::move(stoplist))};
  });
}

gptlods_status gptlods_index_save(const gptlods_index *index,
                                  const char *snapshot_path) {
  return Guard([&] {
    Require(index != nullptr && snapshot_path != nullptr, "null argument");
    index->kb->index.Save(std::string(snapshot_path));
  });
}

void gptlods_index_free(gptlods_index *index) { delete index; }

gptlods_status gptlods_index_entity_count(const gptlods_index *index,
                                          size_t *out) {
  return Guard([&] {
    Require(index != nullptr && out != nullptr, "null argument");
    *out = index->kb->index.entity_count();
  });
}

gptlods_status gptlods_index_resolve(const gptlods_index *index,
                                     const char *iri, uint32_t *entity_id) {
  return Guard([&] {
    Require(index != nullptr && iri != nullptr && entity_id != nullptr,
            "null argument");
    std::optional<EntityId> id = index->kb->index.Resolve(NormalizeIri(iri));
    if (!id) throw Error(ErrorCode::kNotFound, std::string("unknown IRI ") + iri);
    *entity_id = id->value;
  });
}

gptlods_status gptlods_index_entity_json(const gptlods_index *index,
                                         uint32_t entity_id,
                                         gptlods_entity_view view,
                                         char **out) {
  return Guard([&] {
    Require(index != nullptr && out != nullptr, "null argument");
    const EquivalenceIndex &idx = index->kb->index;
    EntityId id = CheckedEntity(idx, entity_id);
    switch (view) {
      case GPTLODS_ENTITY_CARD: Emit(EntityCardJson(idx, id), out); return;
      case GPTLODS_ENTITY_URIS: Emit(EntityUrisJson(idx, id), out); return;
      case GPTLODS_ENTITY_DATASETS:
        Emit(EntityDatasetsJson(idx, id), out);
        return;
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown entity view");
  });
}

gptlods_status gptlods_index_entity_facts_json(const gptlods_index *index,
                                               uint32_t entity_id, size_t page,
                                               size_t page_size, char **out) {
  return Guard([&] {
    Require(index != nullptr && out != nullptr, "null argument");
    const EquivalenceIndex &idx = index->kb->index;
    Emit(EntityFactsJson(idx, CheckedEntity(idx, entity_id), page, page_size),
         out);
  });
}

gptlods_status gptlods_index_datasets_json(const gptlods_index *index,
                                           char **out) {
  return Guard([&] {
    Require(index != nullptr && out != nullptr, "null argument");
    Emit(DatasetsJson(index->kb->index), out);
  });
}

gptlods_status gptlods_index_health_json(const gptlods_index *index,
                                         char **out) {
  return Guard([&] {
    Require(index != nullptr && out != nullptr, "null argument");
    Emit(HealthJson(index->kb->index), out);
  });
}

gptlods_status gptlods_index_factcheck_json(const gptlods_index *index,
                                            const uint32_t *entity_ids,
                                            size_t count, char **out) {
  return Guard([&] {
    Require(index != nullptr && out != nullptr, "null argument");
    Require(count == 0 || entity_ids != nullptr, "null entity id array");
    const EquivalenceIndex &idx = index->kb->index;
    std::vector<EntityId> ids;
    for (size_t i = 0; i < count; ++i) {
      ids.push_back(CheckedEntity(idx, entity_ids[i]));
    }
    RequireDistinctPair(ids);
    Emit({{"validation", ValidationToJson(ValidateEntities(ids, idx), idx)}},
         out);
  });
}

gptlods_status gptlods_pipeline_create(const gptlods_index *index,
                                       const char *provider,
                                       gptlods_pipeline **out) {
  return Guard([&] {
    Require(index != nullptr && out != nullptr, "null argument");
    auto p = std::make_unique<gptlods_pipeline>();
    p->kb = index->kb;
    p->provider = ProviderFrom(provider);
    p->Rebuild();
    *out = p.release();
  });
}

void gptlods_pipeline_free(gptlods_pipeline *pipeline) { delete pipeline; }

gptlods_status gptlods_pipeline_add_recognizer(gptlods_pipeline *pipeline,
                                               const char *name,
                                               const char *url,
                                               int64_t timeout_ms) {
  return Guard([&] {
    Require(pipeline != nullptr && name != nullptr && url != nullptr,
            "null argument");
    Require(*name != '\0', "recognizer name is empty");
    Require(timeout_ms > 0, "timeout must be positive");
    if (name == std::string_view(kGazetteerName)) {
      throw Error(ErrorCode::kDuplicate, "recognizer name is reserved");
    }
    for (const auto &r : pipeline->recognizers) {
      if (r->name() == name) {
        throw Error(ErrorCode::kDuplicate,
                    std::string("recognizer \"") + name + "\" already added");
      }
    }
    pipeline->recognizers.push_back(std::make_shared<HttpRecognizerClient>(
        name, url, std::chrono::milliseconds(timeout_ms)));
    pipeline->Rebuild();
  });
}

gptlods_status gptlods_pipeline_set_fixed_time(gptlods_pipeline *pipeline,
                                               int64_t unix_seconds) {
  return Guard([&] {
    Require(pipeline != nullptr, "null argument");
    pipeline->fixed_time =
        Timestamp(std::chrono::seconds(unix_seconds));
    pipeline->Rebuild();
  });
}

gptlods_status gptlods_pipeline_ask_json(const gptlods_pipeline *pipeline,
                                         const char *question, char **out) {
  return Guard([&] {
    Require(pipeline != nullptr && question != nullptr && out != nullptr,
            "null argument");
    Require(*question != '\0', "question is empty");
    Emit(PipelineResultToJson(pipeline->pipeline->Run(question),
                              pipeline->kb->index),
         out);
  });
}

gptlods_status gptlods_pipeline_annotate_json(const gptlods_pipeline *pipeline,
                                              const char *text, char **out) {
  return Guard([&] {
    Require(pipeline != nullptr && text != nullptr && out != nullptr,
            "null argument");
    Emit(AnnotationRunToJson(pipeline->pipeline->AnnotateText(text),
                             pipeline->kb->index),
         out);
  });
}

gptlods_status gptlods_pipeline_annotate_html(const gptlods_pipeline *pipeline,
                                              const char *text, char **out) {
  return Guard([&] {
    Require(pipeline != nullptr && text != nullptr && out != nullptr,
            "null argument");
    *out = Dup(RenderHtml(pipeline->pipeline->AnnotateText(text).response));
  });
}

gptlods_status gptlods_server_create(const gptlods_pipeline *pipeline,
                                     const char *host, int port,
                                     const char *static_dir,
                                     gptlods_server **out) {
  return Guard([&] {
    Require(pipeline != nullptr && out != nullptr, "null argument");
    Require(port >= 0 && port <= 65535, "port out of range");
    ServerOptions options;
    if (host != nullptr) options.host = host;
    options.port = port;
    if (static_dir != nullptr) options.static_dir = static_dir;
    auto s = std::make_unique<gptlods_server>();
    s->server = std::make_unique<ApiServer>(pipeline->pipeline, options);
    s->server->Bind();
    *out = s.release();
  });
}

int gptlods_server_port(const gptlods_server *server) {
  return server == nullptr ? -1 : server->server->port();
}

gptlods_status gptlods_server_run(gptlods_server *server) {
  return Guard([&] {
    Require(server != nullptr, "null argument");
    server->server->Run();
  });
}

void gptlods_server_wait_ready(const gptlods_server *server) {
  if (server != nullptr) server->server->WaitUntilReady();
}

void gptlods_server_stop(gptlods_server *server) {
  if (server != nullptr) server->server->Stop();
}

void gptlods_server_free(gptlods_server *server) { delete server; }

}  // extern "C"
