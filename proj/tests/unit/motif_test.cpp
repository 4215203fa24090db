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

#include "motifpred/motif.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "motifpred/error.hpp"
#include "support/oracles.hpp"

namespace motifpred {
namespace {

Graph FromRaw(Vertex n, const std::vector<testing::Edge>& raw) {
  std::vector<VertexPair> edges(raw.begin(), raw.end());
  return Graph::FromEdges(n, edges);
}

TEST(BuildQuery, ClassifiesTriangleAgainstGraph) {
  // a=0, b=1, c=2 with only a-b present.
  const std::vector<VertexPair> edges{{0, 1}};
  const auto g = Graph::FromEdges(3, edges);
  const Vertex inner[] = {0, 1, 2};
  const VertexPair motif[] = {{0, 1}, {0, 2}, {1, 2}};
  const auto q = BuildQuery(g, inner, motif, {});
  EXPECT_EQ(q.EdgesOfKind(EdgeKind::kMotifExisting),
            (std::vector<VertexPair>{{0, 1}}));
  EXPECT_EQ(q.EdgesOfKind(EdgeKind::kMotifMissing),
            (std::vector<VertexPair>{{0, 2}, {1, 2}}));
}

TEST(BuildQuery, ExistingArmEdgeBecomesExistingDealBreaker) {
  const std::vector<VertexPair> edges{{0, 1}, {0, 2}, {1, 2}};
  const auto g = Graph::FromEdges(3, edges);
  const Vertex inner[] = {0, 1, 2};
  const VertexPair motif[] = {{0, 1}, {0, 2}};
  const VertexPair db[] = {{1, 2}};
  const auto q = BuildQuery(g, inner, motif, db);
  EXPECT_EQ(q.EdgesOfKind(EdgeKind::kDealBreakerExisting),
            (std::vector<VertexPair>{{1, 2}}));
  EXPECT_TRUE(q.HasExistingDealBreaker());
}

TEST(BuildQuery, RejectsOverlapAndForeignPairs) {
  const auto g = Graph::FromEdges(4, std::vector<VertexPair>{});
  const Vertex inner[] = {0, 1, 2};
  const VertexPair motif[] = {{0, 1}};
  const VertexPair overlap[] = {{1, 0}};
  EXPECT_THROW(BuildQuery(g, inner, motif, overlap), Error);
  const VertexPair foreign[] = {{0, 3}};
  EXPECT_THROW(BuildQuery(g, inner, foreign, {}), Error);
  const Vertex dup[] = {0, 0, 1};
  EXPECT_THROW(BuildQuery(g, dup, motif, {}), Error);
}

TEST(BuildQuery, RandomQueriesPartitionAllPairs) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Vertex n = 25;
    const auto raw = testing::RandomEdges(n, 0.3, trial);
    const auto adj = testing::AdjacencyMatrix(n, raw);
    const auto g = FromRaw(n, raw);
    const std::uint32_t k = 2 + gen() % 5;
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), gen);
    std::vector<Vertex> inner(all.begin(), all.begin() + k);
    std::vector<VertexPair> motif, db;
    for (std::uint32_t i = 0; i < k; ++i) {
      for (std::uint32_t j = i + 1; j < k; ++j) {
        const auto r = gen() % 3;
        if (r == 0) motif.emplace_back(inner[i], inner[j]);
        if (r == 1) db.emplace_back(inner[j], inner[i]);
      }
    }
    if (motif.empty()) {
      motif.emplace_back(inner[0], inner[1]);
      std::erase(db, VertexPair{inner[1], inner[0]});
    }
    const auto q = BuildQuery(g, inner, motif, db);

    std::size_t total = 0;
    for (auto kind : {EdgeKind::kMotifExisting, EdgeKind::kMotifMissing,
                      EdgeKind::kDealBreakerExisting,
                      EdgeKind::kDealBreakerMissing, EdgeKind::kInert}) {
      total += q.CountOfKind(kind);
    }
    EXPECT_EQ(total, k * (k - 1) / 2);
    EXPECT_EQ(q.scored_edges().size(), motif.size() + db.size());
    for (const auto& e : q.all_pairs()) {
      const bool present = adj[e.pair.first][e.pair.second];
      if (IsMotif(e.kind) || IsDealBreaker(e.kind)) {
        EXPECT_EQ(IsExisting(e.kind), present);
      }
    }
  }
}

TEST(Template, DbStarSevenHasSixMotifAndFifteenDealBreakerPairs) {
  const auto t = MakeTemplate(MotifKind::kDbStar, 7);
  EXPECT_EQ(t.motif_pairs.size(), 6u);
  EXPECT_EQ(t.dealbreaker_pairs.size(), 15u);
}

TEST(Template, TriangleClique) {
  const auto t = MakeTemplate(MotifKind::kClique, 3);
  EXPECT_EQ(t.motif_pairs.size(), 3u);
  EXPECT_TRUE(t.dealbreaker_pairs.empty());
}

TEST(Template, DenseRequiredEdgeCount) {
  EXPECT_EQ(MakeTemplate(MotifKind::kDense, 5, 0.9).RequiredEdges(), 9u);
  EXPECT_EQ(MakeTemplate(MotifKind::kDense, 4, 0.5).RequiredEdges(), 3u);
  EXPECT_EQ(MakeTemplate(MotifKind::kDense, 7, 0.9).RequiredEdges(), 19u);
}

TEST(Template, StarWithArmPairsAsDealBreakersIsDbStar) {
  for (std::uint32_t k = 3; k <= 8; ++k) {
    auto star = MakeTemplate(MotifKind::kStar, k);
    const auto db_star = MakeTemplate(MotifKind::kDbStar, k);
    for (std::uint32_t i = 1; i < k; ++i) {
      for (std::uint32_t j = i + 1; j < k; ++j) {
        star.dealbreaker_pairs.emplace_back(i, j);
      }
    }
    EXPECT_EQ(star.motif_pairs, db_star.motif_pairs);
    EXPECT_EQ(star.dealbreaker_pairs, db_star.dealbreaker_pairs);
  }
}

TEST(Template, RejectsSmallK) {
  EXPECT_THROW(MakeTemplate(MotifKind::kClique, 1), Error);
  EXPECT_THROW(MakeTemplate(MotifKind::kStar, 2), Error);
  EXPECT_THROW(ParseMotifKind("hexagon"), Error);
}

TEST(CountPossibleMotifs, MatchesPowerSetEnumeration) {
  EXPECT_EQ(CountPossibleMotifs(2), 1u);
  EXPECT_EQ(CountPossibleMotifs(3), 7u);
  for (std::uint32_t k = 2; k <= 5; ++k) {
    EXPECT_EQ(CountPossibleMotifs(k), testing::EnumerateNonEmptyEdgeSubsets(k));
  }
  EXPECT_EQ(CountPossibleMotifs(4), 63u);
}

TEST(CountPossibleMotifs, OverflowBeyond62Pairs) {
  EXPECT_NO_THROW(CountPossibleMotifs(11));  // 55 pairs
  try {
    CountPossibleMotifs(12);  // 66 pairs
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOverflow);
  }
}

TEST(IsInstance, TriangleAndBrokenStar) {
  const std::vector<VertexPair> tri{{0, 1}, {0, 2}, {1, 2}};
  const auto k3 = Graph::FromEdges(3, tri);
  const Vertex inner[] = {0, 1, 2};
  EXPECT_TRUE(IsInstance(k3, InstantiateQuery(k3, MakeTemplate(MotifKind::kClique, 3), inner)));

  const std::vector<VertexPair> star{{0, 1}, {0, 2}};
  const auto s = Graph::FromEdges(4, star);
  const Vertex star_inner[] = {0, 1, 2, 3};
  EXPECT_FALSE(IsInstance(s, InstantiateQuery(s, MakeTemplate(MotifKind::kStar, 4), star_inner)));
}

TEST(IsInstance, AgreesWithExhaustivePairScan) {
  std::mt19937_64 gen(11);
  const MotifKind kinds[] = {MotifKind::kClique, MotifKind::kStar,
                             MotifKind::kDbStar, MotifKind::kDense};
  for (int trial = 0; trial < 300; ++trial) {
    const Vertex n = 10 + gen() % 21;
    const auto raw = testing::RandomEdges(n, 0.5, 1000 + trial);
    const auto adj = testing::AdjacencyMatrix(n, raw);
    const auto g = FromRaw(n, raw);
    const auto kind = kinds[gen() % 4];
    const std::uint32_t k = 3 + gen() % 3;
    const auto t = MakeTemplate(kind, k, 0.8);
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), gen);
    std::vector<Vertex> inner(all.begin(), all.begin() + k);

    bool expected = true;
    std::uint32_t present = 0, total = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
      for (std::uint32_t j = i + 1; j < k; ++j) {
        const bool e = adj[inner[i]][inner[j]];
        ++total;
        present += e;
        const bool hub_pair = i == 0;
        switch (kind) {
          case MotifKind::kClique:
            expected = expected && e;
            break;
          case MotifKind::kStar:
            if (hub_pair) expected = expected && e;
            break;
          case MotifKind::kDbStar:
            expected = expected && (hub_pair ? e : !e);
            break;
          default:
            break;
        }
      }
    }
    if (kind == MotifKind::kDense) {
      expected = present >= static_cast<std::uint32_t>(std::ceil(0.8 * total - 1e-9));
    }
    EXPECT_EQ(IsInstance(g, InstantiateQuery(g, t, inner)), expected);
    EXPECT_EQ(IsInstance(g, t, inner), expected);
  }
}

}  // namespace
}  // namespace motifpred
