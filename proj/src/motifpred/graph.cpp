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

#include "motifpred/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <limits>
#include <sstream>

#include "motifpred/error.hpp"

namespace motifpred {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

std::vector<std::string> DecimalIds(Vertex n) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (Vertex v = 0; v < n; ++v) ids.push_back(std::to_string(v));
  return ids;
}

bool IsCommentOrBlank(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return true;
  return line[first] == '#' || line[first] == '%';
}

}  // namespace

Graph Graph::FromEdges(Vertex n, std::span<const VertexPair> edges) {
  return FromEdges(n, edges, DecimalIds(n));
}

Graph Graph::FromEdges(Vertex n, std::span<const VertexPair> edges,
                       std::vector<std::string> source_ids) {
  Require(source_ids.size() == n, "source id count must equal vertex count");
  std::vector<VertexPair> directed;
  directed.reserve(edges.size() * 2);
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      Fail(ErrorCode::kOutOfRange, "edge endpoint out of range");
    }
    if (a == b) continue;
    directed.emplace_back(a, b);
    directed.emplace_back(b, a);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()),
                 directed.end());

  Graph g;
  g.offsets_.assign(std::size_t{n} + 1, 0);
  g.targets_.reserve(directed.size());
  for (const auto& [a, b] : directed) {
    ++g.offsets_[a + 1];
    g.targets_.push_back(b);
  }
  for (std::size_t i = 1; i < g.offsets_.size(); ++i) {
    g.offsets_[i] += g.offsets_[i - 1];
  }
  g.source_ids_ = std::move(source_ids);
  g.id_index_.reserve(g.source_ids_.size());
  for (Vertex v = 0; v < n; ++v) g.id_index_.emplace(g.source_ids_[v], v);
  return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v >= num_vertices()) Fail(ErrorCode::kOutOfRange, "vertex out of range");
  return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
}

std::uint32_t Graph::degree(Vertex v) const {
  return static_cast<std::uint32_t>(neighbors(v).size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto nu = neighbors(u);
  if (v >= num_vertices()) Fail(ErrorCode::kOutOfRange, "vertex out of range");
  return std::binary_search(nu.begin(), nu.end(), v);
}

const std::string& Graph::source_id(Vertex v) const {
  if (v >= num_vertices()) Fail(ErrorCode::kOutOfRange, "vertex out of range");
  return source_ids_[v];
}

bool Graph::find_vertex(std::string_view source_id, Vertex* out) const {
  const auto it = id_index_.find(std::string(source_id));
  if (it == id_index_.end()) return false;
  if (out != nullptr) *out = it->second;
  return true;
}

std::span<const float> Graph::feature_row(Vertex v) const {
  if (v >= num_vertices()) Fail(ErrorCode::kOutOfRange, "vertex out of range");
  return {features_.data() + std::size_t{v} * feature_dim_, feature_dim_};
}

Graph Graph::WithFeatures(std::vector<float> values, std::size_t dim) const {
  Require(values.size() == std::size_t{num_vertices()} * dim,
          "feature matrix must have n rows of d values");
  Graph g = *this;
  g.features_ = std::move(values);
  g.feature_dim_ = dim;
  return g;
}

Graph Graph::WithAddedEdges(std::span<const VertexPair> extra) const {
  auto edges = Edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  Graph g = FromEdges(num_vertices(), edges, source_ids_);
  g.features_ = features_;
  g.feature_dim_ = feature_dim_;
  return g;
}

std::vector<VertexPair> Graph::Edges() const {
  std::vector<VertexPair> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::uint64_t Graph::StructureHash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  feed(num_vertices());
  for (auto o : offsets_) feed(o);
  for (auto t : targets_) feed(t);
  return h;
}

EdgeListLoad LoadEdgeList(std::istream& in) {
  std::vector<std::string> ids;
  std::unordered_map<std::string, Vertex> index;
  std::vector<VertexPair> pairs;
  EdgeListLoad result;

  auto intern = [&](const std::string& id) {
    auto [it, inserted] = index.emplace(id, static_cast<Vertex>(ids.size()));
    if (inserted) ids.push_back(id);
    return it->second;
  };

  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsCommentOrBlank(line)) continue;
    std::istringstream fields(line);
    std::string a, b;
    if (!(fields >> a >> b)) {
      Fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                  ": expected two vertex ids");
    }
    const Vertex u = intern(a);
    const Vertex v = intern(b);
    if (u == v) {
      ++result.self_loops_dropped;
      continue;
    }
    pairs.push_back(MakePair(u, v));
  }
  if (ids.empty()) Fail(ErrorCode::kParse, "edge list is empty");

  std::sort(pairs.begin(), pairs.end());
  const auto before = pairs.size();
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  result.duplicates_dropped = before - pairs.size();
  const auto n = static_cast<Vertex>(ids.size());
  result.graph = Graph::FromEdges(n, pairs, std::move(ids));
  return result;
}

EdgeListLoad LoadEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open graph file: " + path);
  return LoadEdgeList(in);
}

Graph LoadFeatures(const Graph& g, std::istream& in) {
  const Vertex n = g.num_vertices();
  std::vector<std::vector<float>> rows(n);
  std::vector<bool> seen(n, false);
  std::size_t dim = 0;
  bool dim_known = false;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsCommentOrBlank(line)) continue;
    std::istringstream fields(line);
    std::string id;
    fields >> id;
    Vertex v = 0;
    if (!g.find_vertex(id, &v)) {
      Fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                  ": unknown vertex id '" + id + "'");
    }
    std::vector<float> row;
    std::string token;
    while (fields >> token) {
      float value = 0;
      const auto* end = token.data() + token.size();
      auto [ptr, ec] = std::from_chars(token.data(), end, value);
      if (ec != std::errc() || ptr != end) {
        Fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                    ": bad feature value '" + token + "'");
      }
      row.push_back(value);
    }
    if (!dim_known) {
      dim = row.size();
      dim_known = true;
    } else if (row.size() != dim) {
      Fail(ErrorCode::kParse,
           "line " + std::to_string(line_no) + ": feature dimension mismatch");
    }
    rows[v] = std::move(row);
    seen[v] = true;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v]) {
      Fail(ErrorCode::kParse, "no feature row for vertex '" + g.source_id(v) +
                                  "'");
    }
  }
  std::vector<float> flat;
  flat.reserve(std::size_t{n} * dim);
  for (auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return g.WithFeatures(std::move(flat), dim);
}

Graph LoadFeaturesFile(const Graph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open feature file: " + path);
  return LoadFeatures(g, in);
}

std::vector<VertexDistance> BfsDiscoveryOrder(const Graph& g,
                                              std::span<const Vertex> sources,
                                              std::uint32_t h_max) {
  Require(!sources.empty(), "BFS needs at least one source");
  const Vertex n = g.num_vertices();
  std::vector<std::uint32_t> dist(n, kUnvisited);
  std::vector<VertexDistance> order;
  for (Vertex s : sources) {
    if (s >= n) Fail(ErrorCode::kOutOfRange, "BFS source out of range");
    if (dist[s] == kUnvisited) {
      dist[s] = 0;
      order.push_back({s, 0});
    }
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    const auto [u, du] = order[head];
    if (du >= h_max) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnvisited) {
        dist[w] = du + 1;
        order.push_back({w, du + 1});
      }
    }
  }
  return order;
}

std::vector<VertexDistance> BfsDistances(const Graph& g,
                                         std::span<const Vertex> sources,
                                         std::uint32_t h_max) {
  auto order = BfsDiscoveryOrder(g, sources, h_max);
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.vertex < b.vertex; });
  return order;
}

}  // namespace motifpred
