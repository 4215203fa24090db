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

#ifndef MOTIFPRED_LINK_SCORES_HPP_
#define MOTIFPRED_LINK_SCORES_HPP_

#include <span>
#include <string_view>
#include <vector>

#include "motifpred/graph.hpp"
#include "motifpred/motif.hpp"

namespace motifpred {

enum class Scorer { kJaccard, kCommonNeighbors, kAdamicAdar };

// CLI names: "jaccard", "cn", "aa".
std::string_view ScorerName(Scorer scorer);
Scorer ParseScorer(std::string_view name);

// |N_u ∩ N_v| / |N_u ∪ N_v|, 0 when both neighborhoods are empty.
double Jaccard(const Graph& g, Vertex u, Vertex v);
double CommonNeighbors(const Graph& g, Vertex u, Vertex v);
// Sum over common neighbors z of 1 / ln d(z).
double AdamicAdar(const Graph& g, Vertex u, Vertex v);
double LinkScore(Scorer scorer, const Graph& g, Vertex u, Vertex v);

// Per-edge scores aligned with a query's scored_edges(). `raw` holds the
// scorer output for missing pairs and 1 for existing ones; only missing
// pairs enter the normalization constant.
struct LinkScoreVector {
  std::vector<VertexPair> edges;
  std::vector<EdgeKind> kinds;
  std::vector<double> raw;
  std::vector<double> normalized;
  double c = 1.0;

  std::size_t size() const noexcept { return normalized.size(); }
};

// c = max(1, ceil(max raw)); normalized = raw / c. Rejects negative or
// non-finite input.
LinkScoreVector Normalize(std::span<const double> raw);

LinkScoreVector ScoreQueryEdges(const Graph& g, const MotifQuery& q,
                                Scorer scorer);

}  // namespace motifpred

#endif  // MOTIFPRED_LINK_SCORES_HPP_
