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

#ifndef MOTIFPRED_MOTIF_HPP_
#define MOTIFPRED_MOTIF_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "motifpred/graph.hpp"

namespace motifpred {

enum class MotifKind { kClique, kStar, kDbStar, kDense, kCustom };

// "clique", "star", "db-star", "dense", "custom".
std::string_view MotifKindName(MotifKind kind);
MotifKind ParseMotifKind(std::string_view name);

using RolePair = std::pair<std::uint32_t, std::uint32_t>;

// A motif shape over role indices 0..k-1. Stars put the hub at role 0 and
// count k as the total number of vertices (hub plus k-1 arms).
struct MotifTemplate {
  MotifKind kind = MotifKind::kCustom;
  std::uint32_t k = 0;
  double density = 0.0;  // only for kDense
  std::vector<RolePair> motif_pairs;
  std::vector<RolePair> dealbreaker_pairs;

  // Minimum number of present pairs for a dense instance: ceil(rho*C(k,2)).
  std::uint32_t RequiredEdges() const;
  std::string Tag() const;  // e.g. "3-clique", "5-dense(0.9)"
};

MotifTemplate MakeTemplate(MotifKind kind, std::uint32_t k,
                           double density = 0.9);

enum class EdgeKind : std::uint8_t {
  kMotifExisting,
  kMotifMissing,
  kDealBreakerExisting,
  kDealBreakerMissing,
  kInert,
};

inline bool IsMotif(EdgeKind kind) {
  return kind == EdgeKind::kMotifExisting || kind == EdgeKind::kMotifMissing;
}
inline bool IsDealBreaker(EdgeKind kind) {
  return kind == EdgeKind::kDealBreakerExisting ||
         kind == EdgeKind::kDealBreakerMissing;
}
inline bool IsExisting(EdgeKind kind) {
  return kind == EdgeKind::kMotifExisting ||
         kind == EdgeKind::kDealBreakerExisting;
}

struct QueryEdge {
  VertexPair pair;  // graph ids, first < second
  RolePair roles;   // role indices, first < second
  EdgeKind kind;
};

// A vertex set with every one of its C(k,2) pairs classified against a
// graph into motif / deal-breaker / inert, existing or not.
class MotifQuery {
 public:
  const std::vector<Vertex>& inner() const noexcept { return inner_; }
  std::uint32_t k() const noexcept {
    return static_cast<std::uint32_t>(inner_.size());
  }
  MotifKind kind() const noexcept { return kind_; }
  std::uint32_t required_edges() const noexcept { return required_edges_; }

  // All pairs in role order (0,1),(0,2),...,(k-2,k-1).
  const std::vector<QueryEdge>& all_pairs() const noexcept { return pairs_; }

  // E*_M: motif entries followed by deal-breaker entries, role order within
  // each group. Score and weight vectors align with this sequence.
  const std::vector<QueryEdge>& scored_edges() const noexcept {
    return scored_;
  }

  std::vector<VertexPair> EdgesOfKind(EdgeKind kind) const;
  std::size_t CountOfKind(EdgeKind kind) const;
  bool HasExistingDealBreaker() const {
    return CountOfKind(EdgeKind::kDealBreakerExisting) > 0;
  }

 private:
  friend MotifQuery BuildQuery(const Graph&, std::span<const Vertex>,
                               std::span<const VertexPair>,
                               std::span<const VertexPair>);
  friend MotifQuery InstantiateQuery(const Graph&, const MotifTemplate&,
                                     std::span<const Vertex>);

  std::vector<Vertex> inner_;
  std::vector<QueryEdge> pairs_;
  std::vector<QueryEdge> scored_;
  MotifKind kind_ = MotifKind::kCustom;
  std::uint32_t required_edges_ = 0;
};

// Classifies explicit graph-id pairs. Remaining pairs become inert.
MotifQuery BuildQuery(const Graph& g, std::span<const Vertex> inner,
                      std::span<const VertexPair> motif_pairs,
                      std::span<const VertexPair> dealbreaker_pairs);

// Maps template roles onto `inner` (inner[i] plays role i).
MotifQuery InstantiateQuery(const Graph& g, const MotifTemplate& tmpl,
                            std::span<const Vertex> inner);

// Re-checks the query's pairs against `g`. Dense queries need at least
// required_edges() present pairs.
bool IsInstance(const Graph& g, const MotifQuery& q);

// Same test without materializing a query; used in the samplers' hot loops.
bool IsInstance(const Graph& g, const MotifTemplate& tmpl,
                std::span<const Vertex> inner);

// Number of motif pairs of `tmpl` present among `inner` in `g`.
std::uint32_t CountPresentMotifPairs(const Graph& g, const MotifTemplate& tmpl,
                                     std::span<const Vertex> inner);

// 2^C(k,2) - 1. Throws kOverflow when C(k,2) > 62.
std::uint64_t CountPossibleMotifs(std::uint32_t k);

}  // namespace motifpred

#endif  // MOTIFPRED_MOTIF_HPP_
