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

#ifndef MOTIFPRED_EMBEDDING_HPP_
#define MOTIFPRED_EMBEDDING_HPP_

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "motifpred/graph.hpp"

namespace motifpred {

enum class EmbeddingSource { kWalkFactorization, kImported };

struct EmbeddingMatrix {
  std::size_t rows = 0;
  std::size_t dim = 0;
  std::vector<double> values;  // row-major
  EmbeddingSource source = EmbeddingSource::kWalkFactorization;

  std::span<const double> row(Vertex v) const {
    return {values.data() + static_cast<std::size_t>(v) * dim, dim};
  }
  bool operator==(const EmbeddingMatrix&) const = default;
};

using Walk = std::vector<Vertex>;

// Uniform random walks, `walks_per_node` starting at every vertex. A walk
// stops early at a vertex without neighbors. Ordered by round, then start.
std::vector<Walk> GenerateWalks(const Graph& g, std::uint32_t walks_per_node,
                                std::uint32_t walk_length, std::uint64_t seed,
                                unsigned threads = 1);

// Windowed co-occurrence counts, PPMI weighting, then the `dim` eigenpairs
// of largest magnitude. Row v is U[v] * sqrt(|lambda|).
EmbeddingMatrix EmbedFromWalks(std::span<const Walk> corpus, Vertex n,
                               std::size_t dim, std::uint32_t window,
                               std::uint64_t seed);

struct EmbeddingOptions {
  std::uint32_t walks_per_node = 10;
  std::uint32_t walk_length = 80;
  std::uint32_t window = 10;
  std::size_t dim = 128;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string cache_dir;  // empty disables caching
};

// Walks plus factorization, read from or written to the cache when set.
EmbeddingMatrix ComputeEmbedding(const Graph& g, const EmbeddingOptions& opts);

std::string EmbeddingCacheKey(const Graph& g, const EmbeddingOptions& opts);

// Text format: "n f" then one "<source id> <f values>" line per vertex.
void WriteEmbedding(std::ostream& out, const Graph& g,
                    const EmbeddingMatrix& emb);
void WriteEmbeddingFile(const std::string& path, const Graph& g,
                        const EmbeddingMatrix& emb);
EmbeddingMatrix ReadEmbedding(std::istream& in, const Graph& g);
EmbeddingMatrix ReadEmbeddingFile(const std::string& path, const Graph& g);

}  // namespace motifpred

#endif  // MOTIFPRED_EMBEDDING_HPP_
