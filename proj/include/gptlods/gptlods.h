/*
 * Copyright 2026 The gptlods Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libgptlods: ingest RDF knowledge graphs, query the sameAs
 * entity index, annotate LLM answers and serve the HTTP API.
 *
 * Conventions:
 *  - Every function returns a gptlods_status. On failure,
 *    gptlods_last_error() describes the cause (thread-local, valid until the
 *    next call on the same thread).
 *  - Objects are opaque handles released with their *_free function.
 *  - Documents are returned as NUL-terminated UTF-8 JSON strings owned by the
 *    caller and released with gptlods_string_free().
 *  - Text offsets are Unicode code points.
 */

#ifndef GPTLODS_GPTLODS_H_
#define GPTLODS_GPTLODS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GPTLODS_API __declspec(dllexport)
#else
#define GPTLODS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gptlods_status {
  GPTLODS_OK = 0,
  GPTLODS_ERR_INVALID_ARGUMENT = 1,
  GPTLODS_ERR_NOT_FOUND = 2,
  GPTLODS_ERR_PARSE = 3,
  GPTLODS_ERR_IO = 4,
  GPTLODS_ERR_VERSION = 5,
  GPTLODS_ERR_CORRUPT = 6,
  GPTLODS_ERR_DUPLICATE = 7,
  GPTLODS_ERR_CONFIG = 8,
  GPTLODS_ERR_PROVIDER = 9,
  GPTLODS_ERR_RECOGNIZER_UNAVAILABLE = 10,
  GPTLODS_ERR_PROTOCOL = 11,
  GPTLODS_ERR_INVALID_PAIR = 12,
  GPTLODS_ERR_BIND = 13,
  GPTLODS_ERR_INTERNAL = 14
} gptlods_status;

typedef enum gptlods_parse_mode {
  GPTLODS_PARSE_LENIENT = 0,
  GPTLODS_PARSE_STRICT = 1
} gptlods_parse_mode;

typedef enum gptlods_entity_view {
  GPTLODS_ENTITY_CARD = 0,
  GPTLODS_ENTITY_URIS = 1,
  GPTLODS_ENTITY_DATASETS = 2
} gptlods_entity_view;

typedef struct gptlods_builder gptlods_builder;
typedef struct gptlods_index gptlods_index;
typedef struct gptlods_pipeline gptlods_pipeline;
typedef struct gptlods_server gptlods_server;

GPTLODS_API const char *gptlods_version(void);
GPTLODS_API const char *gptlods_last_error(void);
/* Stable lowercase name, e.g. "not_found". */
GPTLODS_API const char *gptlods_status_name(gptlods_status status);
GPTLODS_API void gptlods_string_free(char *str);

GPTLODS_API gptlods_status gptlods_normalize_iri(const char *raw, char **out);

/* ---- Ingestion ---------------------------------------------------------- */

GPTLODS_API gptlods_status gptlods_builder_create(gptlods_builder **out);
GPTLODS_API void gptlods_builder_free(gptlods_builder *builder);

/* Registers dataset `name` and parses the N-Triples file at `path`. In
 * lenient mode malformed lines are collected (see
 * gptlods_builder_errors_json) and the call succeeds. Either count pointer
 * may be NULL. */
GPTLODS_API gptlods_status gptlods_builder_add_ntriples(
    gptlods_builder *builder, const char *name, const char *path,
    gptlods_parse_mode mode, size_t *triple_count, size_t *error_count);

/* Parse errors collected so far: [{"dataset", "line_number", "reason",
 * "raw_line"}]. */
GPTLODS_API gptlods_status gptlods_builder_errors_json(
    const gptlods_builder *builder, char **out);

/* Builds the index. `stopwords_path` may be NULL for the built-in list. The
 * builder stays usable. */
GPTLODS_API gptlods_status gptlods_builder_build(gptlods_builder *builder,
                                                 const char *stopwords_path,
                                                 gptlods_index **out);

/* ---- Index -------------------------------------------------------------- */

GPTLODS_API gptlods_status gptlods_index_load(const char *snapshot_path,
                                              const char *stopwords_path,
                                              gptlods_index **out);
GPTLODS_API gptlods_status gptlods_index_save(const gptlods_index *index,
                                              const char *snapshot_path);
GPTLODS_API void gptlods_index_free(gptlods_index *index);

GPTLODS_API gptlods_status gptlods_index_entity_count(
    const gptlods_index *index, size_t *out);
/* GPTLODS_ERR_NOT_FOUND when the IRI is not an entity. */
GPTLODS_API gptlods_status gptlods_index_resolve(const gptlods_index *index,
                                                 const char *iri,
                                                 uint32_t *entity_id);
GPTLODS_API gptlods_status gptlods_index_entity_json(
    const gptlods_index *index, uint32_t entity_id, gptlods_entity_view view,
    char **out);
GPTLODS_API gptlods_status gptlods_index_entity_facts_json(
    const gptlods_index *index, uint32_t entity_id, size_t page,
    size_t page_size, char **out);
GPTLODS_API gptlods_status gptlods_index_datasets_json(
    const gptlods_index *index, char **out);
GPTLODS_API gptlods_status gptlods_index_health_json(
    const gptlods_index *index, char **out);
/* Pairwise evidence between the given entities: {"validation": [...]}. */
GPTLODS_API gptlods_status gptlods_index_factcheck_json(
    const gptlods_index *index, const uint32_t *entity_ids, size_t count,
    char **out);

/* ---- Pipeline ----------------------------------------------------------- */

/* `provider` is NULL (annotation only), "canned:<fixture.json>" or "http"
 * (endpoint and model from CHAT_API_URL / CHAT_MODEL, key from
 * CHAT_API_KEY). The pipeline keeps its own reference to the index. */
GPTLODS_API gptlods_status gptlods_pipeline_create(const gptlods_index *index,
                                                   const char *provider,
                                                   gptlods_pipeline **out);
GPTLODS_API void gptlods_pipeline_free(gptlods_pipeline *pipeline);

/* Adds an external recognizer speaking the recognizer wire protocol. Must
 * be called before the pipeline is used. */
GPTLODS_API gptlods_status gptlods_pipeline_add_recognizer(
    gptlods_pipeline *pipeline, const char *name, const char *url,
    int64_t timeout_ms);

/* Pins the annotation clock (seconds since the Unix epoch). */
GPTLODS_API gptlods_status gptlods_pipeline_set_fixed_time(
    gptlods_pipeline *pipeline, int64_t unix_seconds);

/* Full pipeline; writes the PipelineResult document. */
GPTLODS_API gptlods_status gptlods_pipeline_ask_json(
    const gptlods_pipeline *pipeline, const char *question, char **out);
/* Recognition and annotation of caller-supplied text. */
GPTLODS_API gptlods_status gptlods_pipeline_annotate_json(
    const gptlods_pipeline *pipeline, const char *text, char **out);
/* HTML fragment for caller-supplied text. */
GPTLODS_API gptlods_status gptlods_pipeline_annotate_html(
    const gptlods_pipeline *pipeline, const char *text, char **out);

/* ---- HTTP service ------------------------------------------------------- */

/* Binds host:port (port 0 picks a free port). `static_dir` may be NULL. */
GPTLODS_API gptlods_status gptlods_server_create(
    const gptlods_pipeline *pipeline, const char *host, int port,
    const char *static_dir, gptlods_server **out);
GPTLODS_API int gptlods_server_port(const gptlods_server *server);
/* Blocks until gptlods_server_stop() is called from another thread. */
GPTLODS_API gptlods_status gptlods_server_run(gptlods_server *server);
GPTLODS_API void gptlods_server_wait_ready(const gptlods_server *server);
GPTLODS_API void gptlods_server_stop(gptlods_server *server);
GPTLODS_API void gptlods_server_free(gptlods_server *server);

#ifdef __cplusplus
}
#endif

#endif /* GPTLODS_GPTLODS_H_ */
