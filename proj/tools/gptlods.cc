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


// Command-line front end. Talks to the library only through the C API.

#include <signal.h>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "gptlods/gptlods.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitProvider = 3;

int ExitCodeFor(gptlods_status status) {
  switch (status) {
    case GPTLODS_OK:
      return kExitOk;
    case GPTLODS_ERR_INVALID_ARGUMENT:
      return kExitUsage;
    case GPTLODS_ERR_CONFIG:
    case GPTLODS_ERR_PROVIDER:
    case GPTLODS_ERR_RECOGNIZER_UNAVAILABLE:
    case GPTLODS_ERR_PROTOCOL:
      return kExitProvider;
    default:
      return kExitData;
  }
}

// Carries a failed status out of a subcommand.
struct Failure {
  gptlods_status status;
};

void Check(gptlods_status status) {
  if (status == GPTLODS_OK) return;
  std::cerr << "gptlods: " << gptlods_status_name(status) << ": "
            << gptlods_last_error() << "\n";
  throw Failure{status};
}

void PrintAndFree(char *doc) {
  std::cout << doc << "\n";
  gptlods_string_free(doc);
}

template <typename T, void (*Free)(T *)>
struct Handle {
  T *ptr = nullptr;
  Handle() = default;
  Handle(const Handle &) = delete;
  Handle &operator=(const Handle &) = delete;
  ~Handle() { Free(ptr); }
};

using IndexHandle = Handle<gptlods_index, gptlods_index_free>;
using PipelineHandle = Handle<gptlods_pipeline, gptlods_pipeline_free>;

std::pair<std::string, std::string> SplitAssignment(const std::string &arg) {
  size_t eq = arg.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == arg.size()) {
    std::cerr << "gptlods: expected name=value, got \"" << arg << "\"\n";
    throw Failure{GPTLODS_ERR_INVALID_ARGUMENT};
  }
  return {arg.substr(0, eq), arg.substr(eq + 1)};
}

struct IndexOptions {
  std::string index_path;
  std::string stopwords;
};

void AddIndexOptions(CLI::App *cmd, IndexOptions *opts) {
  cmd->add_option("--index", opts->index_path, "Snapshot written by ingest")
      ->required();
  cmd->add_option("--stopwords", opts->stopwords,
                  "Stopword list (one word per line)");
}

void LoadIndex(const IndexOptions &opts, IndexHandle *index) {
  Check(gptlods_index_load(opts.index_path.c_str(),
                           opts.stopwords.empty() ? nullptr
                                                  : opts.stopwords.c_str(),
                           &index->ptr));
}

struct PipelineOptions {
  std::string provider;
  std::vector<std::string> recognizers;
  int64_t recognizer_timeout_ms = 10000;
  std::optional<int64_t> fixed_time;
};

void AddPipelineOptions(CLI::App *cmd, PipelineOptions *opts) {
  cmd->add_option("--recognizer", opts->recognizers,
                  "External recognizer as name=url (repeatable)");
  cmd->add_option("--recognizer-timeout-ms", opts->recognizer_timeout_ms,
                  "Per-request recognizer timeout")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--fixed-time", opts->fixed_time,
                  "Annotation timestamp as Unix seconds");
}

void MakePipeline(const IndexHandle &index, const PipelineOptions &opts,
                  PipelineHandle *pipeline) {
  Check(gptlods_pipeline_create(
      index.ptr, opts.provider.empty() ? nullptr : opts.provider.c_str(),
      &pipeline->ptr));
  for (const std::string &assignment : opts.recognizers) {
    auto [name, url] = SplitAssignment(assignment);
    Check(gptlods_pipeline_add_recognizer(pipeline->ptr, name.c_str(),
                                          url.c_str(),
                                          opts.recognizer_timeout_ms));
  }
  if (opts.fixed_time) {
    Check(gptlods_pipeline_set_fixed_time(pipeline->ptr, *opts.fixed_time));
  }
}

// ingest ---------------------------------------------------------------------

struct IngestOptions {
  std::vector<std::string> kgs;
  std::string out;
  std::string stopwords;
  bool strict = false;
  std::string errors_out;
};

void RunIngest(const IngestOptions &opts) {
  std::vector<std::pair<std::string, std::string>> kgs;
  for (const std::string &kg : opts.kgs) kgs.push_back(SplitAssignment(kg));
  // Registration order fixes dataset ids, so the snapshot must not depend on
  // the order of --kg flags.
  std::sort(kgs.begin(), kgs.end());

  Handle<gptlods_builder, gptlods_builder_free> builder;
  Check(gptlods_builder_create(&builder.ptr));
  size_t total_errors = 0;
  for (const auto &[name, path] : kgs) {
    size_t triples = 0, errors = 0;
    Check(gptlods_builder_add_ntriples(
        builder.ptr, name.c_str(), path.c_str(),
        opts.strict ? GPTLODS_PARSE_STRICT : GPTLODS_PARSE_LENIENT, &triples,
        &errors));
    std::cerr << name << ": " << triples << " triples, " << errors
              << " malformed lines\n";
    total_errors += errors;
  }
  if (total_errors > 0 || !opts.errors_out.empty()) {
    char *errors = nullptr;
    Check(gptlods_builder_errors_json(builder.ptr, &errors));
    if (opts.errors_out.empty()) {
      std::cerr << errors << "\n";
    } else {
      FILE *f = std::fopen(opts.errors_out.c_str(), "wb");
      if (f == nullptr) {
        gptlods_string_free(errors);
        std::cerr << "gptlods: cannot write " << opts.errors_out << "\n";
        throw Failure{GPTLODS_ERR_IO};
      }
      std::fputs(errors, f);
      std::fputc('\n', f);
      std::fclose(f);
    }
    gptlods_string_free(errors);
  }

  IndexHandle index;
  Check(gptlods_builder_build(
      builder.ptr, opts.stopwords.empty() ? nullptr : opts.stopwords.c_str(),
      &index.ptr));
  Check(gptlods_index_save(index.ptr, opts.out.c_str()));
  size_t entities = 0;
  Check(gptlods_index_entity_count(index.ptr, &entities));
  std::cerr << "wrote " << opts.out << ": " << entities << " entities\n";
}

// serve ----------------------------------------------------------------------

struct ServeOptions {
  IndexOptions index;
  PipelineOptions pipeline;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string static_dir;
};

void RunServe(const ServeOptions &opts) {
  // Block termination signals before any worker thread exists so only the
  // watcher below receives them.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  IndexHandle index;
  LoadIndex(opts.index, &index);
  PipelineHandle pipeline;
  MakePipeline(index, opts.pipeline, &pipeline);
  Handle<gptlods_server, gptlods_server_free> server;
  Check(gptlods_server_create(
      pipeline.ptr, opts.host.c_str(), opts.port,
      opts.static_dir.empty() ? nullptr : opts.static_dir.c_str(),
      &server.ptr));
  std::cerr << "listening on http://" << opts.host << ":"
            << gptlods_server_port(server.ptr) << "\n";

  std::thread watcher([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    gptlods_server_stop(server.ptr);
  });
  gptlods_status status = gptlods_server_run(server.ptr);
  // Wake the watcher if the server stopped on its own.
  pthread_kill(watcher.native_handle(), SIGTERM);
  watcher.join();
  Check(status);
  std::cerr << "shut down\n";
}

// ask / annotate / factcheck / entity -----------------------------------------

struct AskOptions {
  IndexOptions index;
  PipelineOptions pipeline;
  std::string question;
};

void RunAsk(const AskOptions &opts) {
  IndexHandle index;
  LoadIndex(opts.index, &index);
  PipelineHandle pipeline;
  MakePipeline(index, opts.pipeline, &pipeline);
  char *doc = nullptr;
  Check(gptlods_pipeline_ask_json(pipeline.ptr, opts.question.c_str(), &doc));
  PrintAndFree(doc);
}

struct AnnotateOptions {
  IndexOptions index;
  PipelineOptions pipeline;
  std::optional<std::string> text;
  bool from_stdin = false;
  bool html = false;
};

void RunAnnotate(const AnnotateOptions &opts) {
  std::string text;
  if (opts.text) {
    text = *opts.text;
  } else {
    text.assign(std::istreambuf_iterator<char>(std::cin),
                std::istreambuf_iterator<char>());
  }
  IndexHandle index;
  LoadIndex(opts.index, &index);
  PipelineHandle pipeline;
  MakePipeline(index, opts.pipeline, &pipeline);
  char *doc = nullptr;
  if (opts.html) {
    Check(gptlods_pipeline_annotate_html(pipeline.ptr, text.c_str(), &doc));
  } else {
    Check(gptlods_pipeline_annotate_json(pipeline.ptr, text.c_str(), &doc));
  }
  PrintAndFree(doc);
}

struct FactcheckOptions {
  IndexOptions index;
  std::vector<uint32_t> ids;
};

void RunFactcheck(const FactcheckOptions &opts) {
  IndexHandle index;
  LoadIndex(opts.index, &index);
  char *doc = nullptr;
  Check(gptlods_index_factcheck_json(index.ptr, opts.ids.data(),
                                     opts.ids.size(), &doc));
  PrintAndFree(doc);
}

struct EntityOptions {
  IndexOptions index;
  std::optional<uint32_t> id;
  std::string iri;
  bool facts = false;
  bool uris = false;
  bool datasets = false;
  size_t page = 0;
  size_t size = 50;
};

void RunEntity(const EntityOptions &opts) {
  IndexHandle index;
  LoadIndex(opts.index, &index);
  uint32_t id = 0;
  if (opts.id) {
    id = *opts.id;
  } else {
    Check(gptlods_index_resolve(index.ptr, opts.iri.c_str(), &id));
  }
  char *doc = nullptr;
  if (opts.facts) {
    Check(gptlods_index_entity_facts_json(index.ptr, id, opts.page, opts.size,
                                          &doc));
  } else {
    gptlods_entity_view view = opts.uris       ? GPTLODS_ENTITY_URIS
                               : opts.datasets ? GPTLODS_ENTITY_DATASETS
                                               : GPTLODS_ENTITY_CARD;
    Check(gptlods_index_entity_json(index.ptr, id, view, &doc));
  }
  PrintAndFree(doc);
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Annotate LLM answers with linked entities from RDF graphs",
               "gptlods"};
  app.require_subcommand(1);
  app.set_version_flag("--version", gptlods_version());

  IngestOptions ingest;
  CLI::App *ingest_cmd =
      app.add_subcommand("ingest", "Parse N-Triples files and write a snapshot");
  ingest_cmd->add_option("--kg", ingest.kgs, "Dataset as name=path.nt")
      ->required();
  ingest_cmd->add_option("--out", ingest.out, "Snapshot path")->required();
  ingest_cmd->add_option("--stopwords", ingest.stopwords,
                         "Stopword list used to validate labels");
  ingest_cmd->add_flag("--strict", ingest.strict,
                       "Fail on the first malformed line");
  ingest_cmd->add_option("--errors-out", ingest.errors_out,
                         "Write malformed-line report as JSON");

  ServeOptions serve;
  CLI::App *serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  AddIndexOptions(serve_cmd, &serve.index);
  AddPipelineOptions(serve_cmd, &serve.pipeline);
  serve_cmd->add_option("--provider", serve.pipeline.provider,
                        "canned:<file> or http");
  serve_cmd->add_option("--host", serve.host, "Listen address")
      ->capture_default_str();
  serve_cmd->add_option("--port", serve.port, "Listen port (0 = any)")
      ->capture_default_str()
      ->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--static-dir", serve.static_dir,
                        "Directory served at /");

  AskOptions ask;
  CLI::App *ask_cmd =
      app.add_subcommand("ask", "Ask a question and annotate the answer");
  ask_cmd->add_option("question", ask.question, "Question text")->required();
  AddIndexOptions(ask_cmd, &ask.index);
  AddPipelineOptions(ask_cmd, &ask.pipeline);
  ask_cmd->add_option("--provider", ask.pipeline.provider,
                      "canned:<file> or http")
      ->required();

  AnnotateOptions annotate;
  CLI::App *annotate_cmd =
      app.add_subcommand("annotate", "Annotate text without asking an LLM");
  AddIndexOptions(annotate_cmd, &annotate.index);
  AddPipelineOptions(annotate_cmd, &annotate.pipeline);
  auto *text_opt =
      annotate_cmd->add_option("--text", annotate.text, "Text to annotate");
  auto *stdin_opt = annotate_cmd->add_flag("--stdin", annotate.from_stdin,
                                           "Read the text from stdin");
  text_opt->excludes(stdin_opt);
  annotate_cmd->add_flag("--html", annotate.html, "Print the HTML rendering");
  annotate_cmd->callback([&] {
    if (!annotate.text && !annotate.from_stdin) {
      throw CLI::RequiredError("--text or --stdin");
    }
  });

  FactcheckOptions factcheck;
  CLI::App *factcheck_cmd = app.add_subcommand(
      "factcheck", "List evidence linking each pair of entities");
  AddIndexOptions(factcheck_cmd, &factcheck.index);
  factcheck_cmd->add_option("ids", factcheck.ids, "Entity ids")
      ->required()
      ->expected(2, -1);

  EntityOptions entity;
  CLI::App *entity_cmd = app.add_subcommand("entity", "Show one entity");
  AddIndexOptions(entity_cmd, &entity.index);
  auto *id_opt = entity_cmd->add_option("id", entity.id, "Entity id");
  auto *iri_opt =
      entity_cmd->add_option("--iri", entity.iri, "Look the entity up by IRI");
  id_opt->excludes(iri_opt);
  auto *facts_flag = entity_cmd->add_flag("--facts", entity.facts, "List facts");
  auto *uris_flag = entity_cmd->add_flag("--uris", entity.uris, "List URIs");
  auto *datasets_flag =
      entity_cmd->add_flag("--datasets", entity.datasets, "List datasets");
  facts_flag->excludes(uris_flag)->excludes(datasets_flag);
  uris_flag->excludes(datasets_flag);
  entity_cmd->add_option("--page", entity.page, "Facts page")
      ->capture_default_str();
  entity_cmd->add_option("--size", entity.size, "Facts page size")
      ->capture_default_str();
  entity_cmd->callback([&] {
    if (!entity.id && entity.iri.empty()) {
      throw CLI::RequiredError("id or --iri");
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ingest_cmd) RunIngest(ingest);
    if (*serve_cmd) RunServe(serve);
    if (*ask_cmd) RunAsk(ask);
    if (*annotate_cmd) RunAnnotate(annotate);
    if (*factcheck_cmd) RunFactcheck(factcheck);
    if (*entity_cmd) RunEntity(entity);
  } catch (const Failure &f) {
    return ExitCodeFor(f.status);
  }
  return kExitOk;
}
