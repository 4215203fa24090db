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

#include "motifpred/featurization.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "motifpred/error.hpp"
#include "motifpred/rng.hpp"
#include "support/oracles.hpp"

namespace motifpred {
namespace {

Graph FromRaw(Vertex n, const std::vector<testing::Edge>& raw) {
  return Graph::FromEdges(n, std::vector<VertexPair>(raw.begin(), raw.end()));
}

Graph Path(Vertex n) {
  std::vector<VertexPair> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::FromEdges(n, edges);
}

std::vector<Vertex> LocalInner(std::uint32_t k) {
  std::vector<Vertex> ids(k);
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

std::set<VertexPair> GlobalEdges(const Subgraph& sub) {
  std::set<VertexPair> out;
  for (auto [a, b] : sub.local.Edges()) {
    out.insert(MakePair(sub.global_ids[a], sub.global_ids[b]));
  }
  return out;
}

TEST(ExtractHHop, PathNeighborhood) {
  const auto sub = ExtractHHop(Path(5), std::vector<Vertex>{2}, 1);
  EXPECT_EQ(sub.global_ids, (std::vector<Vertex>{2, 1, 3}));
  EXPECT_EQ(sub.distance, (std::vector<std::uint32_t>{0, 1, 1}));
  EXPECT_EQ(sub.local.num_edges(), 2u);
}

TEST(ExtractHHop, IsolatedInnerVertices) {
  const auto g = Graph::FromEdges(4, std::vector<VertexPair>{{0, 1}});
  const auto sub = ExtractHHop(g, std::vector<Vertex>{3, 2}, 2);
  EXPECT_EQ(sub.global_ids, (std::vector<Vertex>{3, 2}));
  EXPECT_EQ(sub.local.num_edges(), 0u);
}

TEST(ExtractHHop, MatchesMatrixPowerOracle) {
  Rng rng(11);
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    const std::uint32_t n = 20 + static_cast<std::uint32_t>(rng.Below(100));
    const auto raw = testing::RandomEdges(n, 2.5 / n, trial);
    const auto g = FromRaw(n, raw);
    const auto dist = testing::AllPairsByMatrixPowers(n, raw);
    const auto pick = rng.Choose(n, 3);
    const std::vector<Vertex> inner(pick.begin(), pick.end());
    for (std::uint32_t h = 1; h <= 3; ++h) {
      const auto sub = ExtractHHop(g, inner, h);
      std::set<Vertex> expected;
      for (Vertex v = 0; v < n; ++v) {
        for (Vertex x : inner) {
          if (dist[x][v] <= h) expected.insert(v);
        }
      }
      EXPECT_EQ(std::set<Vertex>(sub.global_ids.begin(), sub.global_ids.end()), expected);
      ASSERT_EQ(sub.global_ids.size(), expected.size());
      for (std::size_t i = 0; i < inner.size(); ++i) EXPECT_EQ(sub.global_ids[i], inner[i]);
      // Ordered by (distance, id) after the inner block; distances exact.
      for (std::size_t i = 0; i < sub.global_ids.size(); ++i) {
        std::uint32_t best = testing::kUnreachable;
        for (Vertex x : inner) best = std::min(best, dist[x][sub.global_ids[i]]);
        EXPECT_EQ(sub.distance[i], best);
        if (i > inner.size()) {
          EXPECT_LT(std::make_pair(sub.distance[i - 1], sub.global_ids[i - 1]),
                    std::make_pair(sub.distance[i], sub.global_ids[i]));
        }
      }
      // Induced: every graph edge among kept vertices is present.
      std::set<VertexPair> induced;
      for (auto [u, v] : g.Edges()) {
        if (expected.count(u) && expected.count(v)) induced.insert({u, v});
      }
      EXPECT_EQ(GlobalEdges(sub), induced);
    }
  }
}

TEST(ExtractHHop, CapDropsOutermostRingFirst) {
  // Hub 0 with 10 leaves, each leaf with 5 further leaves.
  std::vector<VertexPair> edges;
  Vertex next = 11;
  for (Vertex leaf = 1; leaf <= 10; ++leaf) {
    edges.emplace_back(0, leaf);
    for (int j = 0; j < 5; ++j) edges.emplace_back(leaf, next++);
  }
  const auto g = Graph::FromEdges(next, edges);
  const std::vector<Vertex> inner{0};
  EXPECT_FALSE(ExtractHHop(g, inner, 2).capped);
  const auto sub = ExtractHHop(g, inner, 2, 31, 4);
  EXPECT_TRUE(sub.capped);
  EXPECT_EQ(sub.size(), 31u);
  EXPECT_EQ(std::count(sub.distance.begin(), sub.distance.end(), 1u), 10);
  EXPECT_EQ(std::count(sub.distance.begin(), sub.distance.end(), 2u), 20);
  EXPECT_EQ(ExtractHHop(g, inner, 2, 31, 4).global_ids, sub.global_ids);
  const auto tight = ExtractHHop(g, inner, 2, 6, 4);
  EXPECT_EQ(tight.size(), 6u);
  EXPECT_EQ(tight.global_ids[0], 0u);
  EXPECT_THROW(ExtractHHop(g, std::vector<Vertex>{0, 1}, 1, 1), Error);
}

TEST(ExtractHHop, RejectsBadInput) {
  const auto g = Path(4);
  EXPECT_THROW(ExtractHHop(g, std::vector<Vertex>{1}, 0), Error);
  EXPECT_THROW(ExtractHHop(g, std::vector<Vertex>{1, 1}, 1), Error);
}

class MaskTest : public ::testing::Test {
 protected:
  // Triangle 0,1,2 plus a pendant 3 on 0.
  Graph g = Graph::FromEdges(4, std::vector<VertexPair>{{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  MotifTemplate tmpl = MakeTemplate(MotifKind::kClique, 3);
  Subgraph sub = ExtractHHop(g, std::vector<Vertex>{0, 1, 2}, 1);

  static EdgeCountHistogram At(std::size_t c) {
    EdgeCountHistogram h;
    h.Add(c);
    return h;
  }
};

TEST_F(MaskTest, HistogramAtTwoRemovesOne) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = MaskPositive(sub, tmpl, At(2), seed);
    EXPECT_EQ(r.removed, 1u);
    EXPECT_EQ(r.sub.local.num_edges(), 3u);
    EXPECT_TRUE(r.sub.local.has_edge(0, 3));
  }
}

TEST_F(MaskTest, HistogramAtZeroRemovesAll) {
  const auto r = MaskPositive(sub, tmpl, At(0), 1);
  EXPECT_EQ(r.removed, 3u);
  EXPECT_EQ(r.sub.local.Edges(), (std::vector<VertexPair>{{0, 3}}));
}

TEST_F(MaskTest, EmptyOrUnusableHistogramRemovesOne) {
  EXPECT_EQ(MaskPositive(sub, tmpl, EdgeCountHistogram{}, 1).removed, 1u);
  EXPECT_EQ(MaskPositive(sub, tmpl, At(3), 1).removed, 1u);
}

TEST_F(MaskTest, MixedHistogramFollowsMass) {
  EdgeCountHistogram h;
  for (int i = 0; i < 3; ++i) h.Add(0);
  h.Add(2);
  for (int i = 0; i < 50; ++i) h.Add(3);  // never usable
  int all_removed = 0;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const auto r = MaskPositive(sub, tmpl, h, seed);
    ASSERT_TRUE(r.removed == 1 || r.removed == 3);
    all_removed += r.removed == 3;
  }
  EXPECT_NEAR(all_removed / 2000.0, 0.75, 0.04);
}

TEST_F(MaskTest, NoMotifEdgeLeavesUnchanged) {
  const auto empty = Graph::FromEdges(3, std::vector<VertexPair>{});
  const auto open = ExtractHHop(empty, std::vector<Vertex>{0, 1, 2}, 1);
  const auto r = MaskPositive(open, tmpl, At(0), 1);
  EXPECT_TRUE(r.unmasked);
  EXPECT_EQ(r.removed, 0u);
  EXPECT_EQ(r.sub.local, open.local);
}

TEST(MaskPositive, OnlyRemovesMotifEdges) {
  const auto raw = testing::RandomEdges(60, 0.3, 4);
  const auto g = FromRaw(60, raw);
  const auto tmpl = MakeTemplate(MotifKind::kDbStar, 4);
  const auto positives = EnumeratePositives(g, tmpl, 30, 1).samples;
  ASSERT_FALSE(positives.empty());
  EdgeCountHistogram h;
  h.Add(0);
  h.Add(1);
  h.Add(2);
  for (const auto& p : positives) {
    const auto sub = ExtractHHop(g, p.inner, 2);
    const auto r = MaskPositive(sub, tmpl, h, p.seed);
    const auto before = GlobalEdges(sub);
    const auto after = GlobalEdges(r.sub);
    EXPECT_TRUE(std::includes(before.begin(), before.end(), after.begin(), after.end()));
    EXPECT_EQ(before.size() - after.size(), r.removed);
    EXPECT_GE(r.removed, 1u);
    for (const auto& e : before) {
      if (after.count(e)) continue;
      const bool hub_arm = (e.first == p.inner[0] || e.second == p.inner[0]) &&
                           std::count(p.inner.begin(), p.inner.end(), e.first) &&
                           std::count(p.inner.begin(), p.inner.end(), e.second);
      EXPECT_TRUE(hub_arm);
    }
  }
}

TEST(StripDealBreakers, RemovesArmEdges) {
  // Hub 0 with arms 1,2,3; arms 1-2 joined.
  const auto g = Graph::FromEdges(5, std::vector<VertexPair>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {3, 4}});
  const auto tmpl = MakeTemplate(MotifKind::kDbStar, 4);
  const auto sub = ExtractHHop(g, std::vector<Vertex>{0, 1, 2, 3}, 1);
  std::size_t removed = 0;
  const auto stripped = StripDealBreakers(sub, tmpl, &removed);
  EXPECT_EQ(removed, 1u);
  EXPECT_EQ(stripped.local.num_edges(), sub.local.num_edges() - 1);
  EXPECT_FALSE(stripped.local.has_edge(1, 2));

  const auto clean = ExtractHHop(g, std::vector<Vertex>{0, 1, 3, 2}, 1);
  const auto clique = MakeTemplate(MotifKind::kClique, 4);
  EXPECT_EQ(StripDealBreakers(clean, clique, &removed).local, clean.local);
  EXPECT_EQ(removed, 0u);
}

TEST(StripDealBreakers, CountMatchesExistingDealBreakers) {
  const auto raw = testing::RandomEdges(40, 0.4, 9);
  const auto g = FromRaw(40, raw);
  const auto tmpl = MakeTemplate(MotifKind::kDbStar, 5);
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto pick = rng.Choose(40, 5);
    const std::vector<Vertex> inner(pick.begin(), pick.end());
    const auto q = InstantiateQuery(g, tmpl, inner);
    const auto sub = ExtractHHop(g, inner, 1);
    std::size_t removed = 0;
    const auto stripped = StripDealBreakers(sub, tmpl, &removed);
    EXPECT_EQ(removed, q.CountOfKind(EdgeKind::kDealBreakerExisting));
    EXPECT_EQ(sub.local.num_edges() - stripped.local.num_edges(), removed);
    EXPECT_FALSE(InstantiateQuery(stripped.local, tmpl, LocalInner(5)).HasExistingDealBreaker());
  }
}

TEST(LabelInner, IdentityOverZeros) {
  const auto sub = ExtractHHop(Path(6), std::vector<Vertex>{2, 3, 1}, 1);
  const auto x = LabelInner(sub);
  ASSERT_EQ(x.size(), sub.size() * 3u);
  for (std::size_t r = 0; r < sub.size(); ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      EXPECT_EQ(x[r * 3 + c], (r == c) ? 1.0f : 0.0f);
    }
  }
}

TEST(LabelOuter, PathMiddleVertex) {
  // a-b-c with inner {a, c}: after dropping inner edges b is 1 from both.
  const auto sub = ExtractHHop(Path(3), std::vector<Vertex>{0, 2}, 1);
  const auto x = LabelOuter(sub);
  ASSERT_EQ(sub.global_ids[2], 1u);
  EXPECT_EQ(x[4], 1.0f);
  EXPECT_EQ(x[5], 1.0f);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(x[i], 0.0f);
}

TEST(LabelOuter, InnerEdgesAreIgnoredAndSentinelApplies) {
  // Triangle 0,1,2 with pendant 3 on 0. From 1 the pendant is only reachable
  // through the inner edge 1-0, so it gets the sentinel 2h+1.
  const auto g = Graph::FromEdges(4, std::vector<VertexPair>{{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  const auto sub = ExtractHHop(g, std::vector<Vertex>{0, 1, 2}, 1);
  const auto x = LabelOuter(sub);
  EXPECT_EQ(x[9], 1.0f);
  EXPECT_EQ(x[10], 3.0f);
  EXPECT_EQ(x[11], 3.0f);
}

TEST(LabelOuter, MatchesOracleOnModifiedGraph) {
  Rng rng(5);
  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    const std::uint32_t n = 30 + static_cast<std::uint32_t>(rng.Below(60));
    const auto g = FromRaw(n, testing::RandomEdges(n, 3.0 / n, 100 + trial));
    const std::uint32_t k = 2 + static_cast<std::uint32_t>(rng.Below(3));
    const auto pick = rng.Choose(n, k);
    const std::vector<Vertex> inner(pick.begin(), pick.end());
    const std::uint32_t h = 1 + trial % 3;
    const auto sub = ExtractHHop(g, inner, h);
    std::vector<testing::Edge> kept;
    for (auto [a, b] : sub.local.Edges()) {
      if (a >= k || b >= k) kept.emplace_back(a, b);
    }
    const auto dist = testing::AllPairsByMatrixPowers(sub.size(), kept);
    const auto x = LabelOuter(sub);
    bool one_hop_ok = true;
    for (Vertex v = 0; v < sub.size(); ++v) {
      bool has_one = false;
      for (std::uint32_t i = 0; i < k; ++i) {
        const float got = x[v * k + i];
        if (v < k) {
          EXPECT_EQ(got, 0.0f);
          continue;
        }
        const std::uint32_t d = dist[i][v];
        EXPECT_EQ(got, static_cast<float>(d > 2 * h ? 2 * h + 1 : d));
        has_one = has_one || got == 1.0f;
      }
      if (v >= k && h == 1) one_hop_ok = one_hop_ok && has_one;
    }
    EXPECT_TRUE(one_hop_ok);
  }
}

class AssembleTest : public ::testing::Test {
 protected:
  // Triangle 0,1,2 with seven pendants spread over the three corners.
  Graph g = Graph::FromEdges(
      10, std::vector<VertexPair>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {1, 5},
                                  {1, 6}, {2, 7}, {2, 8}, {2, 9}});
  MotifTemplate tmpl = MakeTemplate(MotifKind::kClique, 3);
  Sample positive{{0, 1, 2}, true, SampleStrategy::kPositive, 0};
  EmbeddingMatrix emb;

  void SetUp() override {
    emb.rows = 10;
    emb.dim = 128;
    for (std::size_t i = 0; i < 10 * 128; ++i) emb.values.push_back(0.25 * (i % 7));
  }
};

TEST_F(AssembleTest, FullShape) {
  const auto x = Assemble(g, tmpl, positive, &emb, {}, {}, 1);
  EXPECT_EQ(x.sub.size(), 10u);
  EXPECT_EQ(x.cols, 134u);
  EXPECT_EQ(x.features.size(), 10u * 134u);
  for (std::size_t r = 0; r < 10; ++r) {
    const Vertex v = x.sub.global_ids[r];
    for (std::size_t c = 0; c < 128; ++c) {
      EXPECT_EQ(x.at(r, c), static_cast<float>(emb.row(v)[c]));
    }
    for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(x.at(r, 128 + c), r == c ? 1.0f : 0.0f);
  }
  EXPECT_EQ(x.edges_removed, 1u);
}

TEST_F(AssembleTest, AblationShapes) {
  FeaturizeOptions no_labels;
  no_labels.labels = false;
  EXPECT_EQ(Assemble(g, tmpl, positive, &emb, {}, no_labels, 1).cols, 128u);
  FeaturizeOptions no_emb;
  no_emb.embedding = false;
  EXPECT_EQ(Assemble(g, tmpl, positive, nullptr, {}, no_emb, 1).cols, 6u);
  EXPECT_THROW(Assemble(g, tmpl, positive, nullptr, {}, {}, 1), Error);
}

TEST_F(AssembleTest, InputFeaturesComeFirst) {
  std::vector<float> values;
  for (int v = 0; v < 10; ++v) {
    values.push_back(static_cast<float>(v));
    values.push_back(-static_cast<float>(v));
  }
  const auto gf = g.WithFeatures(values, 2);
  FeaturizeOptions no_emb;
  no_emb.embedding = false;
  const auto x = Assemble(gf, tmpl, positive, nullptr, {}, no_emb, 1);
  EXPECT_EQ(x.cols, 2u + 6u);
  for (std::size_t r = 0; r < x.sub.size(); ++r) {
    EXPECT_EQ(x.at(r, 0), static_cast<float>(x.sub.global_ids[r]));
    EXPECT_EQ(x.at(r, 1), -static_cast<float>(x.sub.global_ids[r]));
  }
}

TEST(FeaturizeSet, ShapesMaskingAndThreadInvariance) {
  const auto g = FromRaw(150, testing::RandomEdges(150, 0.25, 21));
  for (const auto& tmpl : {MakeTemplate(MotifKind::kClique, 3),
                           MakeTemplate(MotifKind::kDbStar, 4),
                           MakeTemplate(MotifKind::kDense, 5, 0.8)}) {
    SamplingOptions so;
    so.per_class = 60;
    const auto set = BuildSampleSet(g, tmpl, so);
    FeaturizeOptions fo;
    fo.embedding = false;
    const auto one = FeaturizeSet(g, tmpl, set, nullptr, fo, 7, 1);
    const auto four = FeaturizeSet(g, tmpl, set, nullptr, fo, 7, 4);
    ASSERT_EQ(one.train.size(), set.train.size());
    ASSERT_EQ(one.validation.size(), set.validation.size());
    for (const auto* part : {&one.train, &one.validation}) {
      for (const auto& x : *part) {
        EXPECT_EQ(x.features.size(), x.sub.size() * (2u * tmpl.k));
        const auto q = InstantiateQuery(x.sub.local, tmpl, LocalInner(tmpl.k));
        if (x.label) {
          EXPECT_GE(q.CountOfKind(EdgeKind::kMotifMissing), 1u) << tmpl.Tag();
        } else {
          EXPECT_FALSE(q.HasExistingDealBreaker());
        }
      }
    }
    for (std::size_t i = 0; i < one.train.size(); ++i) {
      EXPECT_EQ(one.train[i].features, four.train[i].features);
      EXPECT_EQ(one.train[i].sub.local, four.train[i].sub.local);
    }
  }
}

}  // namespace
}  // namespace motifpred
