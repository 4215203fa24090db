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

#include "motifpred/motifpred.h"

#include <cstring>
#include <exception>
#include <iostream>
#include <new>
#include <string>
#include <vector>

#include "motifpred/config.hpp"
#include "motifpred/embedding.hpp"
#include "motifpred/error.hpp"
#include "motifpred/featurization.hpp"
#include "motifpred/graph.hpp"
#include "motifpred/link_scores.hpp"
#include "motifpred/metrics.hpp"
#include "motifpred/motif.hpp"
#include "motifpred/motif_scores.hpp"
#include "motifpred/pipeline.hpp"

struct mp_graph {
  motifpred::Graph graph;
};
struct mp_config {
  motifpred::RunConfig config;
};
struct mp_query {
  motifpred::MotifQuery query;
};
struct mp_embedding {
  motifpred::EmbeddingMatrix matrix;
};

namespace {

thread_local std::string last_error;

mp_status Record(mp_status status, const char* message) {
  last_error = message;
  return status;
}

mp_status HandleException() {
  try {
    throw;
  } catch (const motifpred::Error& e) {
    return Record(static_cast<mp_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return Record(MP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Record(MP_ERR_INTERNAL, e.what());
  } catch (...) {
    return Record(MP_ERR_INTERNAL, "unknown error");
  }
}

template <typename Fn>
mp_status Guard(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return MP_OK;
  } catch (...) {
    return HandleException();
  }
}

#define MP_REQUIRE_ARG(cond)                                              \
  do {                                                                    \
    if (!(cond)) return Record(MP_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

std::vector<motifpred::VertexPair> Pairs(const uint32_t* flat, size_t m) {
  std::vector<motifpred::VertexPair> out;
  out.reserve(m);
  for (size_t i = 0; i < m; ++i) out.emplace_back(flat[2 * i], flat[2 * i + 1]);
  return out;
}

}  // namespace

extern "C" {

const char* mp_version(void) { return MOTIFPRED_VERSION; }

const char* mp_status_name(mp_status status) {
  switch (status) {
    case MP_OK: return "ok";
    case MP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MP_ERR_OUT_OF_RANGE: return "out of range";
    case MP_ERR_PARSE: return "parse error";
    case MP_ERR_IO: return "i/o error";
    case MP_ERR_INSUFFICIENT_SAMPLES: return "insufficient samples";
    case MP_ERR_OVERFLOW: return "overflow";
    case MP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* mp_last_error(void) { return last_error.c_str(); }

mp_status mp_config_create(mp_config** out) {
  MP_REQUIRE_ARG(out);
  return Guard([&] { *out = new mp_config{}; });
}

void mp_config_destroy(mp_config* config) { delete config; }

mp_status mp_config_set(mp_config* config, const char* key, const char* value) {
  MP_REQUIRE_ARG(config && key && value);
  return Guard([&] { motifpred::ApplyConfigKey(&config->config, key, value); });
}

mp_status mp_config_load_file(mp_config* config, const char* path) {
  MP_REQUIRE_ARG(config && path);
  return Guard([&] { motifpred::ApplyConfigFile(&config->config, path); });
}

mp_status mp_config_validate(const mp_config* config) {
  MP_REQUIRE_ARG(config);
  return Guard([&] { motifpred::ValidateConfig(config->config); });
}

size_t mp_config_key_count(void) { return motifpred::ConfigKeys().size(); }

const char* mp_config_key(size_t index) {
  static const std::vector<std::string> keys = motifpred::ConfigKeys();
  return index < keys.size() ? keys[index].c_str() : nullptr;
}

mp_status mp_run_score(const mp_config* config) {
  MP_REQUIRE_ARG(config);
  return Guard([&] { motifpred::RunScore(config->config, std::cout, std::cerr); });
}

mp_status mp_run_export(const mp_config* config, uint64_t* n_train, uint64_t* n_val) {
  MP_REQUIRE_ARG(config);
  return Guard([&] {
    const auto counts = motifpred::RunExport(config->config, std::cerr);
    if (n_train) *n_train = counts.train;
    if (n_val) *n_val = counts.validation;
  });
}

mp_status mp_run_bench(const mp_config* config) {
  MP_REQUIRE_ARG(config);
  return Guard([&] { motifpred::RunBench(config->config, std::cout, std::cerr); });
}

mp_status mp_run_embed(const mp_config* config) {
  MP_REQUIRE_ARG(config);
  return Guard([&] { motifpred::RunEmbed(config->config, std::cerr); });
}

mp_status mp_run_auc(const mp_config* config) {
  MP_REQUIRE_ARG(config);
  return Guard([&] { motifpred::RunAuc(config->config, std::cout); });
}

mp_status mp_graph_load(const char* path, mp_graph** out) {
  MP_REQUIRE_ARG(path && out);
  return Guard([&] { *out = new mp_graph{motifpred::LoadEdgeListFile(path).graph}; });
}

mp_status mp_graph_from_edges(uint32_t n, const uint32_t* pairs, size_t m, mp_graph** out) {
  MP_REQUIRE_ARG(out && (pairs || m == 0));
  return Guard([&] { *out = new mp_graph{motifpred::Graph::FromEdges(n, Pairs(pairs, m))}; });
}

void mp_graph_destroy(mp_graph* graph) { delete graph; }

uint32_t mp_graph_num_vertices(const mp_graph* graph) {
  return graph ? graph->graph.num_vertices() : 0;
}

uint64_t mp_graph_num_edges(const mp_graph* graph) {
  return graph ? graph->graph.num_edges() : 0;
}

mp_status mp_graph_degree(const mp_graph* graph, uint32_t v, uint32_t* out) {
  MP_REQUIRE_ARG(graph && out);
  return Guard([&] { *out = graph->graph.degree(v); });
}

mp_status mp_graph_neighbors(const mp_graph* graph, uint32_t v, uint32_t* buffer,
                             size_t capacity, size_t* count) {
  MP_REQUIRE_ARG(graph && count && (buffer || capacity == 0));
  return Guard([&] {
    const auto nbrs = graph->graph.neighbors(v);
    *count = nbrs.size();
    std::memcpy(buffer, nbrs.data(), std::min(capacity, nbrs.size()) * sizeof(uint32_t));
  });
}

mp_status mp_graph_find_vertex(const mp_graph* graph, const char* id, uint32_t* out) {
  MP_REQUIRE_ARG(graph && id && out);
  if (!graph->graph.find_vertex(id, out)) {
    return Record(MP_ERR_OUT_OF_RANGE, (std::string("unknown vertex id '") + id + "'").c_str());
  }
  last_error.clear();
  return MP_OK;
}

mp_status mp_graph_bfs(const mp_graph* graph, const uint32_t* sources, size_t n_sources,
                       uint32_t h_max, uint32_t* distances) {
  MP_REQUIRE_ARG(graph && sources && distances);
  return Guard([&] {
    const auto reached = motifpred::BfsDistances(
        graph->graph, std::span<const uint32_t>(sources, n_sources), h_max);
    std::fill(distances, distances + graph->graph.num_vertices(), MP_UNREACHED);
    for (const auto& r : reached) distances[r.vertex] = r.distance;
  });
}

mp_status mp_extract_h_hop(const mp_graph* graph, const uint32_t* inner, size_t k, uint32_t h,
                           uint32_t* buffer, size_t capacity, size_t* count) {
  MP_REQUIRE_ARG(graph && inner && count && (buffer || capacity == 0));
  return Guard([&] {
    const auto sub = motifpred::ExtractHHop(graph->graph, std::span<const uint32_t>(inner, k), h);
    *count = sub.global_ids.size();
    std::memcpy(buffer, sub.global_ids.data(),
                std::min(capacity, sub.global_ids.size()) * sizeof(uint32_t));
  });
}

mp_status mp_link_score(const mp_graph* graph, const char* scorer, uint32_t u, uint32_t v,
                        double* out) {
  MP_REQUIRE_ARG(graph && scorer && out);
  return Guard([&] {
    *out = motifpred::LinkScore(motifpred::ParseScorer(scorer), graph->graph, u, v);
  });
}

mp_status mp_query_from_template(const mp_graph* graph, const char* motif, uint32_t k,
                                 double density, const uint32_t* inner, mp_query** out) {
  MP_REQUIRE_ARG(graph && motif && inner && out);
  return Guard([&] {
    const auto tmpl = motifpred::MakeTemplate(motifpred::ParseMotifKind(motif), k, density);
    *out = new mp_query{
        motifpred::InstantiateQuery(graph->graph, tmpl, std::span<const uint32_t>(inner, k))};
  });
}

mp_status mp_query_build(const mp_graph* graph, const uint32_t* inner, size_t k,
                         const uint32_t* motif_pairs, size_t n_motif, const uint32_t* db_pairs,
                         size_t n_db, mp_query** out) {
  MP_REQUIRE_ARG(graph && inner && out && (motif_pairs || n_motif == 0) &&
                 (db_pairs || n_db == 0));
  return Guard([&] {
    *out = new mp_query{motifpred::BuildQuery(graph->graph, std::span<const uint32_t>(inner, k),
                                              Pairs(motif_pairs, n_motif),
                                              Pairs(db_pairs, n_db))};
  });
}

void mp_query_destroy(mp_query* query) { delete query; }

size_t mp_query_scored_count(const mp_query* query) {
  return query ? query->query.scored_edges().size() : 0;
}

mp_status mp_query_is_instance(const mp_graph* graph, const mp_query* query, int* out) {
  MP_REQUIRE_ARG(graph && query && out);
  return Guard([&] { *out = motifpred::IsInstance(graph->graph, query->query) ? 1 : 0; });
}

mp_status mp_query_score(const mp_graph* graph, const mp_query* query, const char* scorer,
                         const char* aggregator, const double* weights, size_t n_weights,
                         double* out) {
  MP_REQUIRE_ARG(graph && query && scorer && aggregator && out);
  return Guard([&] {
    const auto& q = query->query;
    const auto links = motifpred::ScoreQueryEdges(graph->graph, q, motifpred::ParseScorer(scorer));
    const auto w = weights ? motifpred::MakeWeights(motifpred::WeightMode::kCustom, q,
                                                    std::span<const double>(weights, n_weights))
                           : motifpred::MakeWeights(motifpred::WeightMode::kUniformNonexisting, q);
    *out = motifpred::Aggregate(motifpred::ParseAggregator(aggregator), q, links, w).value;
  });
}

mp_status mp_count_possible_motifs(uint32_t k, uint64_t* out) {
  MP_REQUIRE_ARG(out);
  return Guard([&] { *out = motifpred::CountPossibleMotifs(k); });
}

mp_status mp_auc(const double* scores, const uint8_t* labels, size_t n, double* out) {
  MP_REQUIRE_ARG(out && ((scores && labels) || n == 0));
  return Guard([&] {
    *out = motifpred::Auc(std::span<const double>(scores, n), std::span<const uint8_t>(labels, n));
  });
}

mp_status mp_accuracy(const double* scores, const uint8_t* labels, size_t n, double threshold,
                      double* out) {
  MP_REQUIRE_ARG(out && ((scores && labels) || n == 0));
  return Guard([&] {
    *out = motifpred::Accuracy(std::span<const double>(scores, n),
                               std::span<const uint8_t>(labels, n), threshold);
  });
}

mp_status mp_embedding_compute(const mp_graph* graph, const mp_config* config,
                               mp_embedding** out) {
  MP_REQUIRE_ARG(graph && config && out);
  return Guard([&] {
    *out = new mp_embedding{motifpred::ObtainEmbedding(graph->graph, config->config)};
  });
}

mp_status mp_embedding_load(const mp_graph* graph, const char* path, mp_embedding** out) {
  MP_REQUIRE_ARG(graph && path && out);
  return Guard([&] {
    *out = new mp_embedding{motifpred::ReadEmbeddingFile(path, graph->graph)};
  });
}

void mp_embedding_destroy(mp_embedding* embedding) { delete embedding; }

size_t mp_embedding_dim(const mp_embedding* embedding) {
  return embedding ? embedding->matrix.dim : 0;
}

mp_status mp_embedding_row(const mp_embedding* embedding, uint32_t v, double* buffer,
                           size_t capacity) {
  MP_REQUIRE_ARG(embedding && buffer);
  if (v >= embedding->matrix.rows) return Record(MP_ERR_OUT_OF_RANGE, "vertex out of range");
  if (capacity < embedding->matrix.dim) {
    return Record(MP_ERR_INVALID_ARGUMENT, "buffer smaller than the embedding dimension");
  }
  const auto row = embedding->matrix.row(v);
  std::copy(row.begin(), row.end(), buffer);
  last_error.clear();
  return MP_OK;
}

}  // extern "C"
