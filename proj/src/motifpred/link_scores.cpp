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

#include "motifpred/link_scores.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "motifpred/error.hpp"

namespace motifpred {

namespace {

template <typename Fn>
std::size_t ForEachCommon(std::span<const Vertex> a, std::span<const Vertex> b,
                          Fn&& fn) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      fn(*ia);
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

void CheckPair(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.num_vertices() || v >= g.num_vertices()) {
    Fail(ErrorCode::kOutOfRange, "vertex out of range");
  }
  Require(u != v, "link scores need two distinct vertices");
}

}  // namespace

std::string_view ScorerName(Scorer scorer) {
  switch (scorer) {
    case Scorer::kJaccard:
      return "jaccard";
    case Scorer::kCommonNeighbors:
      return "cn";
    case Scorer::kAdamicAdar:
      return "aa";
  }
  return "jaccard";
}

Scorer ParseScorer(std::string_view name) {
  if (name == "jaccard") return Scorer::kJaccard;
  if (name == "cn") return Scorer::kCommonNeighbors;
  if (name == "aa") return Scorer::kAdamicAdar;
  Fail(ErrorCode::kInvalidArgument, "unknown scorer '" + std::string(name) +
                                        "' (valid: jaccard, cn, aa)");
}

double Jaccard(const Graph& g, Vertex u, Vertex v) {
  CheckPair(g, u, v);
  const auto nu = g.neighbors(u);
  const auto nv = g.neighbors(v);
  const std::size_t common = ForEachCommon(nu, nv, [](Vertex) {});
  const std::size_t uni = nu.size() + nv.size() - common;
  if (uni == 0) return 0.0;
  return static_cast<double>(common) / static_cast<double>(uni);
}

double CommonNeighbors(const Graph& g, Vertex u, Vertex v) {
  CheckPair(g, u, v);
  return static_cast<double>(
      ForEachCommon(g.neighbors(u), g.neighbors(v), [](Vertex) {}));
}

double AdamicAdar(const Graph& g, Vertex u, Vertex v) {
  CheckPair(g, u, v);
  double sum = 0.0;
  // A common neighbor is adjacent to both u and v, so its degree is >= 2.
  ForEachCommon(g.neighbors(u), g.neighbors(v), [&](Vertex z) {
    sum += 1.0 / std::log(static_cast<double>(g.degree(z)));
  });
  return sum;
}

double LinkScore(Scorer scorer, const Graph& g, Vertex u, Vertex v) {
  switch (scorer) {
    case Scorer::kJaccard:
      return Jaccard(g, u, v);
    case Scorer::kCommonNeighbors:
      return CommonNeighbors(g, u, v);
    case Scorer::kAdamicAdar:
      return AdamicAdar(g, u, v);
  }
  return 0.0;
}

LinkScoreVector Normalize(std::span<const double> raw) {
  LinkScoreVector out;
  double max_raw = 0.0;
  for (double x : raw) {
    if (!std::isfinite(x) || x < 0.0) {
      Fail(ErrorCode::kInvalidArgument,
           "raw link scores must be finite and non-negative");
    }
    max_raw = std::max(max_raw, x);
  }
  out.c = std::max(1.0, std::ceil(max_raw));
  out.raw.assign(raw.begin(), raw.end());
  out.normalized.reserve(raw.size());
  for (double x : raw) out.normalized.push_back(x / out.c);
  return out;
}

LinkScoreVector ScoreQueryEdges(const Graph& g, const MotifQuery& q,
                                Scorer scorer) {
  const auto& entries = q.scored_edges();
  std::vector<double> missing_raw;
  for (const auto& e : entries) {
    if (!IsExisting(e.kind)) {
      missing_raw.push_back(LinkScore(scorer, g, e.pair.first, e.pair.second));
    }
  }
  const LinkScoreVector scaled = Normalize(missing_raw);

  LinkScoreVector out;
  out.c = scaled.c;
  std::size_t next = 0;
  for (const auto& e : entries) {
    out.edges.push_back(e.pair);
    out.kinds.push_back(e.kind);
    if (IsExisting(e.kind)) {
      out.raw.push_back(1.0);
      out.normalized.push_back(1.0);
    } else {
      out.raw.push_back(scaled.raw[next]);
      out.normalized.push_back(scaled.normalized[next]);
      ++next;
    }
  }
  return out;
}

}  // namespace motifpred
