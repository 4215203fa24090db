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

#ifndef MOTIFPRED_FEATURIZATION_HPP_
#define MOTIFPRED_FEATURIZATION_HPP_

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "motifpred/embedding.hpp"
#include "motifpred/graph.hpp"
#include "motifpred/motif.hpp"
#include "motifpred/sampling.hpp"

namespace motifpred {

inline constexpr std::size_t kDefaultSubgraphCap = 2000;

// Induced subgraph around an inner vertex set. Local ids 0..k-1 are the
// inner vertices in role order; the rest follow by (distance, global id).
struct Subgraph {
  Graph local;
  std::vector<Vertex> global_ids;
  std::vector<std::uint32_t> distance;  // to the inner set, in the full graph
  std::uint32_t k = 0;
  std::uint32_t h = 0;
  bool capped = false;

  std::uint32_t size() const { return local.num_vertices(); }
};

// All vertices within h hops of some inner vertex. Above `cap` vertices the
// outermost rings are uniformly down-sampled; inner vertices always stay.
Subgraph ExtractHHop(const Graph& g, std::span<const Vertex> inner,
                     std::uint32_t h,
                     std::size_t cap = std::numeric_limits<std::size_t>::max(),
                     std::uint64_t seed = 0);

// counts[c] = number of negatives with exactly c motif pairs present.
struct EdgeCountHistogram {
  std::vector<std::uint64_t> counts;

  void Add(std::size_t present);
  std::uint64_t total() const;
};

EdgeCountHistogram NegativeEdgeHistogram(const Graph& g,
                                         const MotifTemplate& tmpl,
                                         std::span<const Sample> samples);

struct MaskResult {
  Subgraph sub;
  std::size_t removed = 0;
  bool unmasked = false;  // positive had no motif edge to remove
};

// Removes motif edges among the inner vertices so that the number left is
// drawn from `histogram`, restricted to counts below the current one. With
// no usable mass a single uniformly chosen edge is removed.
MaskResult MaskPositive(const Subgraph& sub, const MotifTemplate& tmpl,
                        const EdgeCountHistogram& histogram,
                        std::uint64_t seed);

// Removes every existing deal-breaker edge among the inner vertices.
Subgraph StripDealBreakers(const Subgraph& sub, const MotifTemplate& tmpl,
                           std::size_t* removed = nullptr);

// Row-major s x k blocks.
std::vector<float> LabelInner(const Subgraph& sub);
// Distances from each outer vertex to each inner vertex after deleting all
// inner-inner edges. Unreachable or farther than 2h maps to 2h+1.
std::vector<float> LabelOuter(const Subgraph& sub);

struct FeaturizeOptions {
  std::uint32_t h = 1;
  bool labels = true;
  bool embedding = true;
  std::size_t cap = kDefaultSubgraphCap;
};

struct LabeledSubgraph {
  Subgraph sub;  // after masking or stripping
  bool label = false;
  SampleStrategy strategy = SampleStrategy::kPositive;
  std::size_t input_dim = 0;      // d
  std::size_t embedding_dim = 0;  // f
  bool has_labels = true;
  std::size_t cols = 0;
  std::vector<float> features;  // row-major s x cols: [X_si | X_E | X_H | X_L]
  std::size_t edges_removed = 0;
  bool unmasked = false;

  float at(std::size_t row, std::size_t col) const {
    return features[row * cols + col];
  }
};

LabeledSubgraph Assemble(const Graph& g, const MotifTemplate& tmpl,
                         const Sample& sample, const EmbeddingMatrix* emb,
                         const EdgeCountHistogram& histogram,
                         const FeaturizeOptions& opts, std::uint64_t seed);

struct FeaturizedSet {
  std::vector<LabeledSubgraph> train;
  std::vector<LabeledSubgraph> validation;
  EdgeCountHistogram histogram;
};

// The histogram comes from the training negatives, or from all negatives
// when training has none. Sample i of the concatenated train+validation
// sequence uses seed DeriveSeed(seed, kMasking, i).
FeaturizedSet FeaturizeSet(const Graph& g, const MotifTemplate& tmpl,
                           const SampleSet& set, const EmbeddingMatrix* emb,
                           const FeaturizeOptions& opts, std::uint64_t seed,
                           unsigned threads = 1);

}  // namespace motifpred

#endif  // MOTIFPRED_FEATURIZATION_HPP_
