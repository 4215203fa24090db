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

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "motifpred/error.hpp"
#include "motifpred/parallel.hpp"
#include "motifpred/rng.hpp"

namespace motifpred {
namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

Subgraph WithoutEdges(const Subgraph& sub, std::span<const VertexPair> drop) {
  std::vector<VertexPair> kept;
  for (const auto& e : sub.local.Edges()) {
    if (std::find(drop.begin(), drop.end(), e) == drop.end()) kept.push_back(e);
  }
  Subgraph out = sub;
  out.local = Graph::FromEdges(sub.size(), kept);
  return out;
}

std::vector<Vertex> LocalInner(std::uint32_t k) {
  std::vector<Vertex> ids(k);
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

}  // namespace

Subgraph ExtractHHop(const Graph& g, std::span<const Vertex> inner,
                     std::uint32_t h, std::size_t cap, std::uint64_t seed) {
  Require(h >= 1, "h must be at least 1");
  Require(!inner.empty(), "inner vertex set is empty");
  Require(cap >= inner.size(), "subgraph cap is smaller than the motif");
  const auto reached = BfsDistances(g, inner, h);

  std::unordered_map<Vertex, std::uint32_t> role;
  for (std::uint32_t i = 0; i < inner.size(); ++i) {
    if (!role.emplace(inner[i], i).second) {
      Fail(ErrorCode::kInvalidArgument, "inner vertices must be distinct");
    }
  }
  // Rings by distance, each sorted by global id since `reached` is.
  std::vector<std::vector<Vertex>> rings(h + 1);
  for (const auto& [v, d] : reached) {
    if (d > 0) rings[d].push_back(v);
  }

  Subgraph sub;
  sub.k = static_cast<std::uint32_t>(inner.size());
  sub.h = h;
  std::size_t budget = cap - inner.size();
  Rng rng(DeriveSeed(seed, Stream::kSubgraphCap, 0));
  for (std::uint32_t d = 1; d <= h; ++d) {
    auto& ring = rings[d];
    if (ring.size() > budget) {
      sub.capped = true;
      auto keep = rng.Choose(static_cast<std::uint32_t>(ring.size()),
                             static_cast<std::uint32_t>(budget));
      std::sort(keep.begin(), keep.end());
      std::vector<Vertex> kept;
      kept.reserve(keep.size());
      for (auto i : keep) kept.push_back(ring[i]);
      ring = std::move(kept);
    }
    budget -= ring.size();
  }

  sub.global_ids.assign(inner.begin(), inner.end());
  sub.distance.assign(inner.size(), 0);
  for (std::uint32_t d = 1; d <= h; ++d) {
    for (Vertex v : rings[d]) {
      sub.global_ids.push_back(v);
      sub.distance.push_back(d);
    }
  }
  std::unordered_map<Vertex, Vertex> local;
  local.reserve(sub.global_ids.size());
  for (Vertex i = 0; i < sub.global_ids.size(); ++i) local.emplace(sub.global_ids[i], i);

  std::vector<VertexPair> edges;
  for (Vertex i = 0; i < sub.global_ids.size(); ++i) {
    for (Vertex w : g.neighbors(sub.global_ids[i])) {
      auto it = local.find(w);
      if (it != local.end() && i < it->second) edges.emplace_back(i, it->second);
    }
  }
  sub.local = Graph::FromEdges(static_cast<Vertex>(sub.global_ids.size()), edges);
  return sub;
}

void EdgeCountHistogram::Add(std::size_t present) {
  if (counts.size() <= present) counts.resize(present + 1, 0);
  ++counts[present];
}

std::uint64_t EdgeCountHistogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

EdgeCountHistogram NegativeEdgeHistogram(const Graph& g,
                                         const MotifTemplate& tmpl,
                                         std::span<const Sample> samples) {
  EdgeCountHistogram hist;
  hist.counts.assign(tmpl.motif_pairs.size() + 1, 0);
  for (const auto& s : samples) {
    if (!s.positive) hist.Add(CountPresentMotifPairs(g, tmpl, s.inner));
  }
  return hist;
}

MaskResult MaskPositive(const Subgraph& sub, const MotifTemplate& tmpl,
                        const EdgeCountHistogram& histogram,
                        std::uint64_t seed) {
  const auto q = InstantiateQuery(sub.local, tmpl, LocalInner(sub.k));
  const auto present = q.EdgesOfKind(EdgeKind::kMotifExisting);
  MaskResult result{sub, 0, false};
  if (present.empty()) {
    result.unmasked = true;
    return result;
  }
  Rng rng(DeriveSeed(seed, Stream::kMasking, 0));
  std::uint64_t mass = 0;
  const std::size_t usable = std::min(present.size(), histogram.counts.size());
  for (std::size_t c = 0; c < usable; ++c) mass += histogram.counts[c];

  std::size_t target = present.size() - 1;
  if (mass > 0) {
    std::uint64_t draw = rng.Below(mass);
    for (std::size_t c = 0; c < usable; ++c) {
      if (draw < histogram.counts[c]) {
        target = c;
        break;
      }
      draw -= histogram.counts[c];
    }
  }
  const auto drop_idx = rng.Choose(static_cast<std::uint32_t>(present.size()),
                                   static_cast<std::uint32_t>(present.size() - target));
  std::vector<VertexPair> drop;
  for (auto i : drop_idx) drop.push_back(present[i]);
  result.sub = WithoutEdges(sub, drop);
  result.removed = drop.size();
  return result;
}

Subgraph StripDealBreakers(const Subgraph& sub, const MotifTemplate& tmpl,
                           std::size_t* removed) {
  const auto q = InstantiateQuery(sub.local, tmpl, LocalInner(sub.k));
  const auto drop = q.EdgesOfKind(EdgeKind::kDealBreakerExisting);
  if (removed != nullptr) *removed = drop.size();
  if (drop.empty()) return sub;
  return WithoutEdges(sub, drop);
}

std::vector<float> LabelInner(const Subgraph& sub) {
  std::vector<float> x(static_cast<std::size_t>(sub.size()) * sub.k, 0.0f);
  for (std::uint32_t i = 0; i < sub.k; ++i) x[static_cast<std::size_t>(i) * sub.k + i] = 1.0f;
  return x;
}

std::vector<float> LabelOuter(const Subgraph& sub) {
  const Vertex s = sub.size();
  const std::uint32_t k = sub.k;
  const std::uint32_t sentinel = 2 * sub.h + 1;
  std::vector<float> x(static_cast<std::size_t>(s) * k, 0.0f);
  std::vector<std::uint32_t> dist(s);
  std::queue<Vertex> frontier;
  for (std::uint32_t i = 0; i < k; ++i) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    dist[i] = 0;
    frontier.push(i);
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      if (dist[u] >= sentinel) continue;
      for (Vertex w : sub.local.neighbors(u)) {
        if (u < k && w < k) continue;  // inner-inner edges are ignored
        if (dist[w] == kUnreached) {
          dist[w] = dist[u] + 1;
          frontier.push(w);
        }
      }
    }
    for (Vertex v = k; v < s; ++v) {
      x[static_cast<std::size_t>(v) * k + i] =
          static_cast<float>(std::min(dist[v], sentinel));
    }
  }
  return x;
}

LabeledSubgraph Assemble(const Graph& g, const MotifTemplate& tmpl,
                         const Sample& sample, const EmbeddingMatrix* emb,
                         const EdgeCountHistogram& histogram,
                         const FeaturizeOptions& opts, std::uint64_t seed) {
  Require(sample.inner.size() == tmpl.k, "sample size differs from motif size");
  if (opts.embedding) {
    Require(emb != nullptr, "embedding requested but not provided");
    Require(emb->rows == g.num_vertices(), "embedding row count differs from graph");
  }
  LabeledSubgraph out;
  out.label = sample.positive;
  out.strategy = sample.strategy;
  auto sub = ExtractHHop(g, sample.inner, opts.h, opts.cap, seed);
  if (sample.positive) {
    auto masked = MaskPositive(sub, tmpl, histogram, seed);
    out.sub = std::move(masked.sub);
    out.edges_removed = masked.removed;
    out.unmasked = masked.unmasked;
  } else {
    out.sub = StripDealBreakers(sub, tmpl, &out.edges_removed);
  }

  const std::size_t s = out.sub.size();
  const std::size_t k = tmpl.k;
  out.input_dim = g.feature_dim();
  out.embedding_dim = opts.embedding ? emb->dim : 0;
  out.has_labels = opts.labels;
  out.cols = out.input_dim + out.embedding_dim + (opts.labels ? 2 * k : 0);
  out.features.assign(s * out.cols, 0.0f);

  std::vector<float> xh, xl;
  if (opts.labels) {
    xh = LabelInner(out.sub);
    xl = LabelOuter(out.sub);
  }
  for (std::size_t r = 0; r < s; ++r) {
    float* row = out.features.data() + r * out.cols;
    const Vertex v = out.sub.global_ids[r];
    if (out.input_dim > 0) {
      auto fr = g.feature_row(v);
      row = std::copy(fr.begin(), fr.end(), row);
    }
    if (out.embedding_dim > 0) {
      for (double x : emb->row(v)) *row++ = static_cast<float>(x);
    }
    if (opts.labels) {
      row = std::copy_n(xh.data() + r * k, k, row);
      std::copy_n(xl.data() + r * k, k, row);
    }
  }
  return out;
}

FeaturizedSet FeaturizeSet(const Graph& g, const MotifTemplate& tmpl,
                           const SampleSet& set, const EmbeddingMatrix* emb,
                           const FeaturizeOptions& opts, std::uint64_t seed,
                           unsigned threads) {
  FeaturizedSet out;
  out.histogram = NegativeEdgeHistogram(g, tmpl, set.train);
  if (out.histogram.total() == 0) {
    auto all = set.train;
    all.insert(all.end(), set.validation.begin(), set.validation.end());
    out.histogram = NegativeEdgeHistogram(g, tmpl, all);
  }
  const std::size_t n_train = set.train.size();
  const std::size_t total = n_train + set.validation.size();
  std::vector<LabeledSubgraph> all(total);
  ParallelFor(total, threads, [&](std::size_t i) {
    const Sample& s = i < n_train ? set.train[i] : set.validation[i - n_train];
    all[i] = Assemble(g, tmpl, s, emb, out.histogram, opts,
                      DeriveSeed(seed, Stream::kMasking, i));
  });
  out.train.assign(std::make_move_iterator(all.begin()),
                   std::make_move_iterator(all.begin() + n_train));
  out.validation.assign(std::make_move_iterator(all.begin() + n_train),
                        std::make_move_iterator(all.end()));
  return out;
}

}  // namespace motifpred
