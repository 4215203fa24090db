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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "motifpred/error.hpp"

namespace motifpred {

namespace {

std::uint32_t PairCount(std::uint32_t k) { return k * (k - 1) / 2; }

std::vector<RolePair> AllRolePairs(std::uint32_t k) {
  std::vector<RolePair> out;
  for (std::uint32_t i = 0; i < k; ++i) {
    for (std::uint32_t j = i + 1; j < k; ++j) out.emplace_back(i, j);
  }
  return out;
}

void CheckInner(const Graph& g, std::span<const Vertex> inner) {
  Require(inner.size() >= 2, "a motif needs at least two vertices");
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] >= g.num_vertices()) {
      Fail(ErrorCode::kOutOfRange, "inner vertex out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      Require(inner[i] != inner[j], "inner vertices must be distinct");
    }
  }
}

}  // namespace

std::string_view MotifKindName(MotifKind kind) {
  switch (kind) {
    case MotifKind::kClique:
      return "clique";
    case MotifKind::kStar:
      return "star";
    case MotifKind::kDbStar:
      return "db-star";
    case MotifKind::kDense:
      return "dense";
    case MotifKind::kCustom:
      return "custom";
  }
  return "custom";
}

MotifKind ParseMotifKind(std::string_view name) {
  if (name == "clique") return MotifKind::kClique;
  if (name == "star") return MotifKind::kStar;
  if (name == "db-star" || name == "dbstar") return MotifKind::kDbStar;
  if (name == "dense") return MotifKind::kDense;
  if (name == "custom") return MotifKind::kCustom;
  Fail(ErrorCode::kInvalidArgument,
       "unknown motif '" + std::string(name) +
           "' (valid: clique, star, db-star, dense)");
}

std::uint32_t MotifTemplate::RequiredEdges() const {
  if (kind != MotifKind::kDense) {
    return static_cast<std::uint32_t>(motif_pairs.size());
  }
  // The epsilon absorbs representation error in products like 0.9 * 10.
  const double exact = density * PairCount(k);
  return static_cast<std::uint32_t>(std::ceil(exact - 1e-9));
}

std::string MotifTemplate::Tag() const {
  std::string tag = std::to_string(k) + "-" + std::string(MotifKindName(kind));
  if (kind == MotifKind::kDense) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "(%g)", density);
    tag += buf;
  }
  return tag;
}

MotifTemplate MakeTemplate(MotifKind kind, std::uint32_t k, double density) {
  MotifTemplate t;
  t.kind = kind;
  t.k = k;
  switch (kind) {
    case MotifKind::kClique:
      Require(k >= 2, "clique needs k >= 2");
      t.motif_pairs = AllRolePairs(k);
      break;
    case MotifKind::kStar:
    case MotifKind::kDbStar:
      Require(k >= 3, "star needs k >= 3 (hub plus at least two arms)");
      for (std::uint32_t arm = 1; arm < k; ++arm) t.motif_pairs.emplace_back(0, arm);
      if (kind == MotifKind::kDbStar) {
        for (std::uint32_t i = 1; i < k; ++i) {
          for (std::uint32_t j = i + 1; j < k; ++j) {
            t.dealbreaker_pairs.emplace_back(i, j);
          }
        }
      }
      break;
    case MotifKind::kDense:
      Require(k >= 2, "dense motif needs k >= 2");
      Require(density > 0.0 && density <= 1.0, "density must lie in (0, 1]");
      t.density = density;
      t.motif_pairs = AllRolePairs(k);
      break;
    case MotifKind::kCustom:
      Fail(ErrorCode::kInvalidArgument,
           "custom motifs are built from explicit pairs, not a template");
  }
  return t;
}

std::vector<VertexPair> MotifQuery::EdgesOfKind(EdgeKind kind) const {
  std::vector<VertexPair> out;
  for (const auto& e : pairs_) {
    if (e.kind == kind) out.push_back(e.pair);
  }
  return out;
}

std::size_t MotifQuery::CountOfKind(EdgeKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      pairs_.begin(), pairs_.end(),
      [kind](const QueryEdge& e) { return e.kind == kind; }));
}

namespace {

// Shared by BuildQuery and InstantiateQuery once pairs are in role space.
void Classify(const Graph& g, std::span<const Vertex> inner,
              const std::set<RolePair>& motif, const std::set<RolePair>& db,
              std::vector<QueryEdge>* pairs, std::vector<QueryEdge>* scored) {
  const auto k = static_cast<std::uint32_t>(inner.size());
  std::vector<QueryEdge> motif_entries, db_entries;
  for (const auto& roles : AllRolePairs(k)) {
    const Vertex a = inner[roles.first];
    const Vertex b = inner[roles.second];
    const bool present = g.has_edge(a, b);
    EdgeKind kind = EdgeKind::kInert;
    if (motif.count(roles)) {
      kind = present ? EdgeKind::kMotifExisting : EdgeKind::kMotifMissing;
    } else if (db.count(roles)) {
      kind = present ? EdgeKind::kDealBreakerExisting
                     : EdgeKind::kDealBreakerMissing;
    }
    QueryEdge e{MakePair(a, b), roles, kind};
    pairs->push_back(e);
    if (IsMotif(kind)) motif_entries.push_back(e);
    if (IsDealBreaker(kind)) db_entries.push_back(e);
  }
  *scored = std::move(motif_entries);
  scored->insert(scored->end(), db_entries.begin(), db_entries.end());
}

}  // namespace

MotifQuery BuildQuery(const Graph& g, std::span<const Vertex> inner,
                      std::span<const VertexPair> motif_pairs,
                      std::span<const VertexPair> dealbreaker_pairs) {
  CheckInner(g, inner);
  auto role_of = [&](Vertex v) -> std::uint32_t {
    const auto it = std::find(inner.begin(), inner.end(), v);
    if (it == inner.end()) {
      Fail(ErrorCode::kInvalidArgument,
           "pair endpoint " + std::to_string(v) + " is not an inner vertex");
    }
    return static_cast<std::uint32_t>(it - inner.begin());
  };
  auto to_roles = [&](std::span<const VertexPair> pairs) {
    std::set<RolePair> out;
    for (const auto& [a, b] : pairs) {
      Require(a != b, "a motif pair needs two distinct vertices");
      const auto ra = role_of(a);
      const auto rb = role_of(b);
      out.insert({std::min(ra, rb), std::max(ra, rb)});
    }
    return out;
  };
  const auto motif = to_roles(motif_pairs);
  Require(!motif.empty(), "a motif query needs at least one motif pair");
  const auto db = to_roles(dealbreaker_pairs);
  for (const auto& p : motif) {
    Require(!db.count(p), "motif and deal-breaker pair sets overlap");
  }
  MotifQuery q;
  q.inner_.assign(inner.begin(), inner.end());
  Classify(g, inner, motif, db, &q.pairs_, &q.scored_);
  q.kind_ = MotifKind::kCustom;
  q.required_edges_ = static_cast<std::uint32_t>(motif.size());
  return q;
}

MotifQuery InstantiateQuery(const Graph& g, const MotifTemplate& tmpl,
                            std::span<const Vertex> inner) {
  CheckInner(g, inner);
  Require(inner.size() == tmpl.k, "inner vertex count must equal template k");
  MotifQuery q;
  q.inner_.assign(inner.begin(), inner.end());
  const std::set<RolePair> motif(tmpl.motif_pairs.begin(),
                                 tmpl.motif_pairs.end());
  const std::set<RolePair> db(tmpl.dealbreaker_pairs.begin(),
                              tmpl.dealbreaker_pairs.end());
  Classify(g, inner, motif, db, &q.pairs_, &q.scored_);
  q.kind_ = tmpl.kind;
  q.required_edges_ = tmpl.RequiredEdges();
  return q;
}

bool IsInstance(const Graph& g, const MotifQuery& q) {
  std::uint32_t motif_present = 0;
  for (const auto& e : q.all_pairs()) {
    const bool present = g.has_edge(e.pair.first, e.pair.second);
    if (IsDealBreaker(e.kind) && present) return false;
    if (IsMotif(e.kind) && present) ++motif_present;
  }
  return motif_present >= q.required_edges();
}

bool IsInstance(const Graph& g, const MotifTemplate& tmpl,
                std::span<const Vertex> inner) {
  for (const auto& [a, b] : tmpl.dealbreaker_pairs) {
    if (g.has_edge(inner[a], inner[b])) return false;
  }
  if (tmpl.kind == MotifKind::kDense) {
    return CountPresentMotifPairs(g, tmpl, inner) >= tmpl.RequiredEdges();
  }
  for (const auto& [a, b] : tmpl.motif_pairs) {
    if (!g.has_edge(inner[a], inner[b])) return false;
  }
  return true;
}

std::uint32_t CountPresentMotifPairs(const Graph& g, const MotifTemplate& tmpl,
                                     std::span<const Vertex> inner) {
  std::uint32_t present = 0;
  for (const auto& [a, b] : tmpl.motif_pairs) {
    if (g.has_edge(inner[a], inner[b])) ++present;
  }
  return present;
}

std::uint64_t CountPossibleMotifs(std::uint32_t k) {
  Require(k >= 2, "motif count needs k >= 2");
  const std::uint64_t pairs = std::uint64_t{k} * (k - 1) / 2;
  if (pairs > 62) {
    Fail(ErrorCode::kOverflow, "2^C(k,2) exceeds 64-bit range for k = " +
                                   std::to_string(k));
  }
  return (std::uint64_t{1} << pairs) - 1;
}

}  // namespace motifpred
