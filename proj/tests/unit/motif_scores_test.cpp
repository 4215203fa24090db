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

#include "motifpred/motif_scores.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "motifpred/error.hpp"

namespace motifpred {
namespace {

// Query plus a score vector whose normalized values are set by hand.
struct Fixture {
  Graph graph;
  MotifQuery query;
  LinkScoreVector scores;
};

Fixture Make(Vertex n, std::vector<VertexPair> edges, MotifKind kind,
             std::vector<Vertex> inner, std::vector<double> values) {
  Fixture f;
  f.graph = Graph::FromEdges(n, edges);
  f.query = InstantiateQuery(f.graph, MakeTemplate(kind, inner.size()), inner);
  f.scores = ScoreQueryEdges(f.graph, f.query, Scorer::kJaccard);
  EXPECT_EQ(values.size(), f.scores.size());
  f.scores.normalized = values;
  return f;
}

TEST(ScoreMul, ProductOfMissingEdges) {
  auto f = Make(3, {{0, 1}}, MotifKind::kClique, {0, 1, 2}, {1.0, 0.5, 0.5});
  EXPECT_DOUBLE_EQ(ScoreMul(f.query, f.scores).value, 0.25);
}

TEST(ScoreMul, ExistingDealBreakerZeroes) {
  auto f = Make(3, {{0, 1}, {0, 2}, {1, 2}}, MotifKind::kDbStar, {0, 1, 2},
                {1.0, 1.0, 1.0});
  EXPECT_EQ(ScoreMul(f.query, f.scores).value, 0.0);
}

TEST(ScoreMul, MissingDealBreakerContributesComplement) {
  auto f = Make(3, {{0, 1}, {0, 2}}, MotifKind::kDbStar, {0, 1, 2},
                {1.0, 1.0, 0.3});
  EXPECT_DOUBLE_EQ(ScoreMul(f.query, f.scores).value, 0.7);
}

TEST(ScoreMul, MisalignedScoresAreAnError) {
  auto f = Make(3, {}, MotifKind::kClique, {0, 1, 2}, {0.1, 0.2, 0.3});
  f.scores.normalized.pop_back();
  EXPECT_THROW(ScoreMul(f.query, f.scores), Error);
}

TEST(ScoreAvg, UniformMeanAndWeightedDot) {
  auto f = Make(3, {{0, 1}}, MotifKind::kClique, {0, 1, 2}, {1.0, 0.5, 0.5});
  const auto uniform = MakeWeights(WeightMode::kUniformNonexisting, f.query);
  EXPECT_DOUBLE_EQ(ScoreAvg(f.query, f.scores, uniform).value, 0.5);

  auto g = Make(3, {{0, 1}}, MotifKind::kClique, {0, 1, 2}, {1.0, 0.2, 0.8});
  const double custom[] = {0.0, 0.75, 0.25};
  const auto w = MakeWeights(WeightMode::kCustom, g.query, custom);
  EXPECT_DOUBLE_EQ(ScoreAvg(g.query, g.scores, w).value, 0.35);
}

TEST(ScoreAvg, AllOnesGiveOneForAnyWeights) {
  std::mt19937_64 gen(1);
  auto f = Make(4, {}, MotifKind::kClique, {0, 1, 2, 3}, std::vector<double>(6, 1.0));
  for (int i = 0; i < 50; ++i) {
    std::vector<double> w(6);
    double sum = 0;
    for (auto& x : w) sum += (x = std::uniform_real_distribution<double>(0, 1)(gen));
    for (auto& x : w) x /= sum;
    EXPECT_NEAR(ScoreAvg(f.query, f.scores, WeightVector{w}).value, 1.0, 1e-12);
  }
}

TEST(ScoreAvg, WeightLengthMismatchIsAnError) {
  auto f = Make(3, {}, MotifKind::kClique, {0, 1, 2}, {0.1, 0.2, 0.3});
  EXPECT_THROW(ScoreAvg(f.query, f.scores, WeightVector{{0.5, 0.5}}), Error);
}

TEST(ScoreAvgDb, ExistingDealBreakerZeroes) {
  auto f = Make(3, {{1, 2}}, MotifKind::kDbStar, {0, 1, 2}, {0.9, 0.9, 1.0});
  const auto w = MakeWeights(WeightMode::kUniformAll, f.query);
  EXPECT_EQ(ScoreAvgDb(f.query, f.scores, w).value, 0.0);
}

TEST(ScoreAvgDb, NegatedDealBreakerIsRectified) {
  auto f = Make(3, {}, MotifKind::kDbStar, {0, 1, 2}, {0.2, 0.2, 0.9});
  const auto w = MakeWeights(WeightMode::kUniformNonexisting, f.query);
  EXPECT_EQ(ScoreAvgDb(f.query, f.scores, w).value, 0.0);

  auto g = Make(3, {}, MotifKind::kDbStar, {0, 1, 2}, {0.9, 0.9, 0.3});
  const auto wg = MakeWeights(WeightMode::kUniformNonexisting, g.query);
  EXPECT_NEAR(ScoreAvgDb(g.query, g.scores, wg).value, 0.5, 1e-15);
}

TEST(ScoreMin, SmallestScore) {
  auto f = Make(3, {}, MotifKind::kClique, {0, 1, 2}, {0.5, 0.2, 0.9});
  EXPECT_EQ(ScoreMin(f.query, f.scores).value, 0.2);
  auto g = Make(3, {{0, 1}, {0, 2}, {1, 2}}, MotifKind::kClique, {0, 1, 2},
                {1.0, 1.0, 1.0});
  EXPECT_EQ(ScoreMin(g.query, g.scores).value, 1.0);
}

TEST(ScoreMin, MissingDealBreakerDrivesToZero) {
  auto f = Make(3, {{0, 1}, {0, 2}}, MotifKind::kDbStar, {0, 1, 2},
                {1.0, 1.0, 0.4});
  EXPECT_EQ(ScoreMin(f.query, f.scores).value, 0.0);
}

TEST(MakeWeights, UniformModes) {
  auto f = Make(3, {}, MotifKind::kClique, {0, 1, 2}, {0.1, 0.1, 0.1});
  const auto all = MakeWeights(WeightMode::kUniformAll, f.query);
  for (double w : all.weights) EXPECT_DOUBLE_EQ(w, 1.0 / 3.0);

  auto g = Make(3, {{0, 1}}, MotifKind::kClique, {0, 1, 2}, {1.0, 0.1, 0.1});
  const auto missing = MakeWeights(WeightMode::kUniformNonexisting, g.query);
  EXPECT_EQ(missing.weights, (std::vector<double>{0.0, 0.5, 0.5}));
}

TEST(MakeWeights, CustomMustBeOnSimplex) {
  auto f = Make(3, {{0, 1}, {0, 2}}, MotifKind::kStar, {0, 1, 2}, {1.0, 1.0});
  const double bad[] = {0.6, 0.6};
  EXPECT_THROW(MakeWeights(WeightMode::kCustom, f.query, bad), Error);
  const double negative[] = {1.5, -0.5};
  EXPECT_THROW(MakeWeights(WeightMode::kCustom, f.query, negative), Error);
  const double ok[] = {0.25, 0.75};
  EXPECT_NO_THROW(MakeWeights(WeightMode::kCustom, f.query, ok));
}

TEST(MakeWeights, FullyExistingFallsBackToUniformAll) {
  auto f = Make(3, {{0, 1}, {0, 2}, {1, 2}}, MotifKind::kClique, {0, 1, 2},
                {1.0, 1.0, 1.0});
  const auto w = MakeWeights(WeightMode::kUniformNonexisting, f.query);
  EXPECT_DOUBLE_EQ(ScoreAvgDb(f.query, f.scores, w).value, 1.0);
}

// Random motif queries over random graphs, with random normalized scores.
class ScoreProperties : public ::testing::Test {
 protected:
  std::mt19937_64 gen{2024};
  std::uniform_real_distribution<double> unit{0.0, 1.0};

  Fixture RandomFixture(MotifKind kind) {
    const std::uint32_t k = 3 + gen() % 4;
    std::vector<VertexPair> edges;
    for (Vertex u = 0; u < k; ++u) {
      for (Vertex v = u + 1; v < k; ++v) {
        if (unit(gen) < 0.4) edges.emplace_back(u, v);
      }
    }
    std::vector<Vertex> inner(k);
    std::iota(inner.begin(), inner.end(), 0);
    Fixture f;
    f.graph = Graph::FromEdges(k, edges);
    f.query = InstantiateQuery(f.graph, MakeTemplate(kind, k), inner);
    f.scores = ScoreQueryEdges(f.graph, f.query, Scorer::kJaccard);
    for (std::size_t i = 0; i < f.scores.size(); ++i) {
      f.scores.normalized[i] = IsExisting(f.scores.kinds[i]) ? 1.0 : unit(gen);
    }
    return f;
  }
};

TEST_F(ScoreProperties, OrderingMulMinAvgWithoutDealBreakers) {
  for (int i = 0; i < 2000; ++i) {
    auto f = RandomFixture(i % 2 ? MotifKind::kClique : MotifKind::kStar);
    const auto w = MakeWeights(WeightMode::kUniformNonexisting, f.query);
    const double mul = ScoreMul(f.query, f.scores).value;
    const double mn = ScoreMin(f.query, f.scores).value;
    const double avg = ScoreAvg(f.query, f.scores, w).value;
    EXPECT_LE(mul, mn + 1e-12);
    EXPECT_LE(mn, avg + 1e-12);
    EXPECT_EQ(avg, ScoreAvgDb(f.query, f.scores, w).value);
  }
}

TEST_F(ScoreProperties, RangeAndZeroPropagation) {
  for (int i = 0; i < 2000; ++i) {
    auto f = RandomFixture(MotifKind::kDbStar);
    const auto w = MakeWeights(WeightMode::kUniformAll, f.query);
    for (auto agg : {Aggregator::kMul, Aggregator::kAvg, Aggregator::kMin}) {
      const double v = Aggregate(agg, f.query, f.scores, w).value;
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
      if (f.query.HasExistingDealBreaker()) {
        EXPECT_EQ(v, 0.0);
      }
    }
  }
}

TEST_F(ScoreProperties, MonotoneInMissingMotifScores) {
  for (int i = 0; i < 1000; ++i) {
    auto f = RandomFixture(i % 3 == 0 ? MotifKind::kDbStar : MotifKind::kClique);
    const auto w = MakeWeights(WeightMode::kUniformAll, f.query);
    std::vector<std::size_t> missing;
    for (std::size_t j = 0; j < f.scores.size(); ++j) {
      if (f.scores.kinds[j] == EdgeKind::kMotifMissing) missing.push_back(j);
    }
    if (missing.empty()) continue;
    const auto j = missing[gen() % missing.size()];
    auto bumped = f.scores;
    bumped.normalized[j] = bumped.normalized[j] + (1.0 - bumped.normalized[j]) * unit(gen);
    for (auto agg : {Aggregator::kMul, Aggregator::kAvg, Aggregator::kMin}) {
      EXPECT_GE(Aggregate(agg, f.query, bumped, w).value,
                Aggregate(agg, f.query, f.scores, w).value);
    }
  }
}

}  // namespace
}  // namespace motifpred
