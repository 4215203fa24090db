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

#ifndef MOTIFPRED_GRAPH_HPP_
#define MOTIFPRED_GRAPH_HPP_

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace motifpred {

using Vertex = std::uint32_t;
using VertexPair = std::pair<Vertex, Vertex>;

// Orders a pair so that first < second.
constexpr VertexPair MakePair(Vertex a, Vertex b) noexcept {
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

// Immutable undirected simple graph in CSR form. Vertices are dense ids
// 0..n-1; the id map keeps the identifiers used by the source file.
class Graph {
 public:
  Graph() = default;

  // Builds from arbitrary pairs over [0, n). Self loops and duplicates are
  // dropped. Source ids default to the decimal internal id.
  static Graph FromEdges(Vertex n, std::span<const VertexPair> edges);
  static Graph FromEdges(Vertex n, std::span<const VertexPair> edges,
                         std::vector<std::string> source_ids);

  Vertex num_vertices() const noexcept {
    return static_cast<Vertex>(offsets_.empty() ? 0 : offsets_.size() - 1);
  }
  std::uint64_t num_edges() const noexcept { return targets_.size() / 2; }

  // Throws kOutOfRange for v >= n.
  std::span<const Vertex> neighbors(Vertex v) const;
  std::uint32_t degree(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;

  const std::string& source_id(Vertex v) const;
  // Returns false when the id is unknown.
  bool find_vertex(std::string_view source_id, Vertex* out) const;

  // Row-major n x d input features; d == 0 when none were attached.
  std::size_t feature_dim() const noexcept { return feature_dim_; }
  std::span<const float> feature_row(Vertex v) const;
  Graph WithFeatures(std::vector<float> values, std::size_t dim) const;

  // Copy of this graph with extra edges; ids and features carry over.
  Graph WithAddedEdges(std::span<const VertexPair> extra) const;

  // Every edge once with first < second, in ascending order.
  std::vector<VertexPair> Edges() const;

  // FNV-1a over the adjacency structure.
  std::uint64_t StructureHash() const noexcept;

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<std::string> source_ids_;
  std::unordered_map<std::string, Vertex> id_index_;
  std::vector<float> features_;
  std::size_t feature_dim_ = 0;
};

struct EdgeListLoad {
  Graph graph;
  std::uint64_t self_loops_dropped = 0;
  std::uint64_t duplicates_dropped = 0;
};

// One edge per line, two whitespace separated ids; lines starting with '#'
// or '%' are comments. Ids are densified in order of first appearance.
// Extra columns (weights, timestamps) are ignored.
EdgeListLoad LoadEdgeList(std::istream& in);
EdgeListLoad LoadEdgeListFile(const std::string& path);

// One line per vertex: source id followed by d floats. Vertices missing
// from the file are an error.
Graph LoadFeatures(const Graph& g, std::istream& in);
Graph LoadFeaturesFile(const Graph& g, const std::string& path);

struct VertexDistance {
  Vertex vertex;
  std::uint32_t distance;
  bool operator==(const VertexDistance&) const = default;
};

// Multi-source BFS truncated at h_max hops. Result is sorted by vertex id.
std::vector<VertexDistance> BfsDistances(const Graph& g,
                                         std::span<const Vertex> sources,
                                         std::uint32_t h_max);

// Same traversal, in discovery order (non-decreasing distance).
std::vector<VertexDistance> BfsDiscoveryOrder(const Graph& g,
                                              std::span<const Vertex> sources,
                                              std::uint32_t h_max);

}  // namespace motifpred

#endif  // MOTIFPRED_GRAPH_HPP_
