// Copyright 2026 The motifpred Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MOTIFPRED_MOTIFPRED_H_
#define MOTIFPRED_MOTIFPRED_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MP_API __declspec(dllexport)
#else
#define MP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mp_status {
  MP_OK = 0,
  MP_ERR_INVALID_ARGUMENT = 1,
  MP_ERR_OUT_OF_RANGE = 2,
  MP_ERR_PARSE = 3,
  MP_ERR_IO = 4,
  MP_ERR_INSUFFICIENT_SAMPLES = 5,
  MP_ERR_OVERFLOW = 6,
  MP_ERR_INTERNAL = 7,
} mp_status;

typedef struct mp_graph mp_graph;
typedef struct mp_config mp_config;
typedef struct mp_query mp_query;
typedef struct mp_embedding mp_embedding;

#define MP_UNREACHED UINT32_MAX

MP_API const char* mp_version(void);
MP_API const char* mp_status_name(mp_status status);
// Message of the last failed call on this thread; "" after a success.
MP_API const char* mp_last_error(void);

// Run configuration. Keys are the long command line flags without dashes,
// e.g. "per-class" or "score-on".
MP_API mp_status mp_config_create(mp_config** out);
MP_API void mp_config_destroy(mp_config* config);
MP_API mp_status mp_config_set(mp_config* config, const char* key,
                               const char* value);
MP_API mp_status mp_config_load_file(mp_config* config, const char* path);
MP_API mp_status mp_config_validate(const mp_config* config);
MP_API size_t mp_config_key_count(void);
MP_API const char* mp_config_key(size_t index);

// Commands. Primary output goes to the configured "output" file or to
// stdout; notes go to stderr.
MP_API mp_status mp_run_score(const mp_config* config);
MP_API mp_status mp_run_export(const mp_config* config, uint64_t* n_train,
                               uint64_t* n_val);
MP_API mp_status mp_run_bench(const mp_config* config);
MP_API mp_status mp_run_embed(const mp_config* config);
MP_API mp_status mp_run_auc(const mp_config* config);

// Graphs. `pairs` holds m (u, v) pairs flattened to 2m entries.
MP_API mp_status mp_graph_load(const char* path, mp_graph** out);
MP_API mp_status mp_graph_from_edges(uint32_t n, const uint32_t* pairs,
                                     size_t m, mp_graph** out);
MP_API void mp_graph_destroy(mp_graph* graph);
MP_API uint32_t mp_graph_num_vertices(const mp_graph* graph);
MP_API uint64_t mp_graph_num_edges(const mp_graph* graph);
MP_API mp_status mp_graph_degree(const mp_graph* graph, uint32_t v,
                                 uint32_t* out);
// Writes up to `capacity` sorted neighbors; `count` gets the degree.
MP_API mp_status mp_graph_neighbors(const mp_graph* graph, uint32_t v,
                                    uint32_t* buffer, size_t capacity,
                                    size_t* count);
MP_API mp_status mp_graph_find_vertex(const mp_graph* graph, const char* id,
                                      uint32_t* out);
// `distances` has one entry per vertex; MP_UNREACHED beyond h_max.
MP_API mp_status mp_graph_bfs(const mp_graph* graph, const uint32_t* sources,
                              size_t n_sources, uint32_t h_max,
                              uint32_t* distances);
// Vertices of the h-hop enclosing subgraph in local order. Writes up to
// `capacity` ids; `count` gets the subgraph size.
MP_API mp_status mp_extract_h_hop(const mp_graph* graph, const uint32_t* inner,
                                  size_t k, uint32_t h, uint32_t* buffer,
                                  size_t capacity, size_t* count);
MP_API mp_status mp_link_score(const mp_graph* graph, const char* scorer,
                               uint32_t u, uint32_t v, double* out);

// Queries. Motif names: clique, star, db-star, dense.
MP_API mp_status mp_query_from_template(const mp_graph* graph,
                                        const char* motif, uint32_t k,
                                        double density, const uint32_t* inner,
                                        mp_query** out);
MP_API mp_status mp_query_build(const mp_graph* graph, const uint32_t* inner,
                                size_t k, const uint32_t* motif_pairs,
                                size_t n_motif, const uint32_t* db_pairs,
                                size_t n_db, mp_query** out);
MP_API void mp_query_destroy(mp_query* query);
MP_API size_t mp_query_scored_count(const mp_query* query);
MP_API mp_status mp_query_is_instance(const mp_graph* graph,
                                      const mp_query* query, int* out);
// NULL weights select uniform weight over the missing entries.
MP_API mp_status mp_query_score(const mp_graph* graph, const mp_query* query,
                                const char* scorer, const char* aggregator,
                                const double* weights, size_t n_weights,
                                double* out);

MP_API mp_status mp_count_possible_motifs(uint32_t k, uint64_t* out);
MP_API mp_status mp_auc(const double* scores, const uint8_t* labels, size_t n,
                        double* out);
MP_API mp_status mp_accuracy(const double* scores, const uint8_t* labels,
                             size_t n, double threshold, double* out);

// Embeddings computed with the walk and dimension keys of `config`.
MP_API mp_status mp_embedding_compute(const mp_graph* graph,
                                      const mp_config* config,
                                      mp_embedding** out);
MP_API mp_status mp_embedding_load(const mp_graph* graph, const char* path,
                                   mp_embedding** out);
MP_API void mp_embedding_destroy(mp_embedding* embedding);
MP_API size_t mp_embedding_dim(const mp_embedding* embedding);
MP_API mp_status mp_embedding_row(const mp_embedding* embedding, uint32_t v,
                                  double* buffer, size_t capacity);

#ifdef __cplusplus
}
#endif

#endif  // MOTIFPRED_MOTIFPRED_H_
