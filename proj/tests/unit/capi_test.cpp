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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "motifpred/motifpred.h"

namespace {

// 0-1, 1-2, 0-3, 2-3, 0-4: the square 0-1-2-3 plus a pendant at 0.
mp_graph* MakeKite() {
  const uint32_t pairs[] = {0, 1, 1, 2, 0, 3, 2, 3, 0, 4};
  mp_graph* g = nullptr;
  EXPECT_EQ(mp_graph_from_edges(5, pairs, 5, &g), MP_OK);
  return g;
}

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(mp_version(), "0.1.0");
  EXPECT_STREQ(mp_status_name(MP_OK), "ok");
  EXPECT_STREQ(mp_status_name(MP_ERR_PARSE), "parse error");
}

TEST(CApi, GraphAccessors) {
  mp_graph* g = MakeKite();
  ASSERT_NE(g, nullptr);
  EXPECT_EQ(mp_graph_num_vertices(g), 5u);
  EXPECT_EQ(mp_graph_num_edges(g), 5u);
  uint32_t degree = 0;
  ASSERT_EQ(mp_graph_degree(g, 0, &degree), MP_OK);
  EXPECT_EQ(degree, 3u);

  uint32_t buffer[2];
  size_t count = 0;
  ASSERT_EQ(mp_graph_neighbors(g, 0, buffer, 2, &count), MP_OK);
  EXPECT_EQ(count, 3u);
  EXPECT_EQ(buffer[0], 1u);
  EXPECT_EQ(buffer[1], 3u);

  EXPECT_EQ(mp_graph_degree(g, 9, &degree), MP_ERR_OUT_OF_RANGE);
  EXPECT_STRNE(mp_last_error(), "");
  ASSERT_EQ(mp_graph_degree(g, 1, &degree), MP_OK);
  EXPECT_STREQ(mp_last_error(), "");
  mp_graph_destroy(g);
}

TEST(CApi, NullArgumentsAreRejected) {
  EXPECT_EQ(mp_config_create(nullptr), MP_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(mp_graph_degree(nullptr, 0, nullptr), MP_ERR_INVALID_ARGUMENT);
  double out = 0;
  EXPECT_EQ(mp_auc(nullptr, nullptr, 3, &out), MP_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(mp_graph_num_vertices(nullptr), 0u);
  mp_graph_destroy(nullptr);
}

TEST(CApi, BfsAndExtraction) {
  mp_graph* g = MakeKite();
  const uint32_t source = 4;
  std::vector<uint32_t> dist(5);
  ASSERT_EQ(mp_graph_bfs(g, &source, 1, 2, dist.data()), MP_OK);
  EXPECT_EQ(dist[4], 0u);
  EXPECT_EQ(dist[0], 1u);
  EXPECT_EQ(dist[1], 2u);
  EXPECT_EQ(dist[2], MP_UNREACHED);

  const uint32_t inner[] = {1, 3};
  std::vector<uint32_t> ids(8);
  size_t count = 0;
  ASSERT_EQ(mp_extract_h_hop(g, inner, 2, 1, ids.data(), ids.size(), &count), MP_OK);
  ASSERT_EQ(count, 4u);
  EXPECT_EQ(ids[0], 1u);
  EXPECT_EQ(ids[1], 3u);
  EXPECT_EQ(mp_extract_h_hop(g, inner, 2, 0, ids.data(), ids.size(), &count),
            MP_ERR_INVALID_ARGUMENT);
  mp_graph_destroy(g);
}

TEST(CApi, QueryScoresMatchLinkScore) {
  mp_graph* g = MakeKite();
  double jaccard = 0;
  ASSERT_EQ(mp_link_score(g, "jaccard", 0, 2, &jaccard), MP_OK);
  EXPECT_DOUBLE_EQ(jaccard, 2.0 / 3.0);

  const uint32_t inner[] = {0, 1, 2};
  mp_query* q = nullptr;
  ASSERT_EQ(mp_query_from_template(g, "clique", 3, 0.9, inner, &q), MP_OK);
  EXPECT_EQ(mp_query_scored_count(q), 3u);
  int instance = 1;
  ASSERT_EQ(mp_query_is_instance(g, q, &instance), MP_OK);
  EXPECT_EQ(instance, 0);
  for (const char* agg : {"mul", "avg", "min"}) {
    double score = -1;
    ASSERT_EQ(mp_query_score(g, q, "jaccard", agg, nullptr, 0, &score), MP_OK) << agg;
    EXPECT_DOUBLE_EQ(score, jaccard) << agg;
  }
  const double bad[] = {0.5, 0.5};
  double score = 0;
  EXPECT_EQ(mp_query_score(g, q, "jaccard", "avg", bad, 2, &score), MP_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(mp_query_score(g, q, "katz", "avg", nullptr, 0, &score), MP_ERR_INVALID_ARGUMENT);
  mp_query_destroy(q);

  const uint32_t motif[] = {0, 1, 1, 2};
  const uint32_t db[] = {0, 2};
  ASSERT_EQ(mp_query_build(g, inner, 3, motif, 2, db, 1, &q), MP_OK);
  ASSERT_EQ(mp_query_is_instance(g, q, &instance), MP_OK);
  EXPECT_EQ(instance, 1);
  mp_query_destroy(q);
  mp_graph_destroy(g);
}

TEST(CApi, Metrics) {
  const double scores[] = {0.9, 0.2, 0.6, 0.4};
  const uint8_t labels[] = {1, 0, 0, 1};
  double auc = 0;
  ASSERT_EQ(mp_auc(scores, labels, 4, &auc), MP_OK);
  EXPECT_DOUBLE_EQ(auc, 0.75);
  double acc = 0;
  ASSERT_EQ(mp_accuracy(scores, labels, 4, 0.5, &acc), MP_OK);
  EXPECT_DOUBLE_EQ(acc, 0.5);
  const uint8_t one_class[] = {1, 1, 1, 1};
  EXPECT_NE(mp_auc(scores, one_class, 4, &auc), MP_OK);

  uint64_t count = 0;
  ASSERT_EQ(mp_count_possible_motifs(4, &count), MP_OK);
  EXPECT_EQ(count, 63u);
}

TEST(CApi, ConfigKeysAndErrors) {
  mp_config* cfg = nullptr;
  ASSERT_EQ(mp_config_create(&cfg), MP_OK);
  ASSERT_GT(mp_config_key_count(), 10u);
  EXPECT_EQ(mp_config_key(mp_config_key_count()), nullptr);
  EXPECT_EQ(mp_config_set(cfg, "per-class", "40"), MP_OK);
  EXPECT_EQ(mp_config_set(cfg, "no-such-key", "1"), MP_ERR_INVALID_ARGUMENT);
  EXPECT_NE(mp_config_set(cfg, "per-class", "lots"), MP_OK);
  EXPECT_EQ(mp_config_load_file(cfg, "/nonexistent/motifpred.conf"), MP_ERR_IO);
  EXPECT_EQ(mp_config_set(cfg, "h", "7"), MP_OK);
  EXPECT_EQ(mp_config_validate(cfg), MP_ERR_INVALID_ARGUMENT);
  mp_config_destroy(cfg);
}

TEST(CApi, EmbeddingRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "motifpred_capi_test";
  std::filesystem::create_directories(dir);
  const auto graph_path = (dir / "ring.txt").string();
  {
    std::ofstream out(graph_path);
    for (int i = 0; i < 12; ++i) out << i << ' ' << (i + 1) % 12 << '\n';
  }
  mp_graph* g = nullptr;
  ASSERT_EQ(mp_graph_load(graph_path.c_str(), &g), MP_OK);
  uint32_t v = 0;
  ASSERT_EQ(mp_graph_find_vertex(g, "5", &v), MP_OK);
  EXPECT_EQ(mp_graph_find_vertex(g, "x", &v), MP_ERR_OUT_OF_RANGE);

  mp_config* cfg = nullptr;
  ASSERT_EQ(mp_config_create(&cfg), MP_OK);
  ASSERT_EQ(mp_config_set(cfg, "dim", "4"), MP_OK);
  ASSERT_EQ(mp_config_set(cfg, "walks-per-node", "3"), MP_OK);
  ASSERT_EQ(mp_config_set(cfg, "walk-length", "10"), MP_OK);
  mp_embedding* e = nullptr;
  ASSERT_EQ(mp_embedding_compute(g, cfg, &e), MP_OK);
  EXPECT_EQ(mp_embedding_dim(e), 4u);
  double row[4];
  EXPECT_EQ(mp_embedding_row(e, 0, row, 4), MP_OK);
  EXPECT_EQ(mp_embedding_row(e, 0, row, 3), MP_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(mp_embedding_row(e, 12, row, 4), MP_ERR_OUT_OF_RANGE);
  mp_embedding_destroy(e);

  EXPECT_EQ(mp_embedding_load(g, (dir / "missing.emb").string().c_str(), &e), MP_ERR_IO);
  mp_config_destroy(cfg);
  mp_graph_destroy(g);
  std::filesystem::remove_all(dir);
}

}  // namespace
