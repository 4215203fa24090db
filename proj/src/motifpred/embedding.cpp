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

#include "motifpred/embedding.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "motifpred/error.hpp"
#include "motifpred/parallel.hpp"
#include "motifpred/rng.hpp"

namespace motifpred {
namespace {

// Above this many vertices the eigenpairs come from subspace iteration
// instead of a full dense solve.
constexpr Vertex kDenseSolveLimit = 1500;
constexpr int kSubspaceIterations = 30;
constexpr std::size_t kOversample = 16;

Eigen::SparseMatrix<double> PpmiMatrix(std::span<const Walk> corpus, Vertex n,
                                       std::uint32_t window) {
  std::unordered_map<std::uint64_t, std::uint64_t> counts;
  for (const auto& walk : corpus) {
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const std::size_t end = std::min(walk.size(), i + window + 1);
      for (std::size_t j = i + 1; j < end; ++j) {
        const Vertex a = std::min(walk[i], walk[j]);
        const Vertex b = std::max(walk[i], walk[j]);
        counts[static_cast<std::uint64_t>(a) * n + b] += 1;
      }
    }
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries(counts.begin(),
                                                               counts.end());
  std::sort(entries.begin(), entries.end());

  // The symmetric count matrix gets c at (a,b) and (b,a), or 2c on the
  // diagonal.
  std::vector<double> row_sum(n, 0.0);
  double total = 0.0;
  for (const auto& [key, c] : entries) {
    const Vertex a = static_cast<Vertex>(key / n);
    const Vertex b = static_cast<Vertex>(key % n);
    row_sum[a] += static_cast<double>(c);
    row_sum[b] += static_cast<double>(c);
    total += 2.0 * static_cast<double>(c);
  }

  std::vector<Eigen::Triplet<double>> triplets;
  for (const auto& [key, c] : entries) {
    const Vertex a = static_cast<Vertex>(key / n);
    const Vertex b = static_cast<Vertex>(key % n);
    const double cij = a == b ? 2.0 * c : static_cast<double>(c);
    const double pmi = std::log(cij * total / (row_sum[a] * row_sum[b]));
    if (pmi <= 0.0) continue;
    triplets.emplace_back(a, b, pmi);
    if (a != b) triplets.emplace_back(b, a, pmi);
  }
  Eigen::SparseMatrix<double> m(n, n);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

struct Eigenpairs {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

Eigenpairs TopByMagnitude(const Eigen::VectorXd& values,
                          const Eigen::MatrixXd& vectors, std::size_t dim) {
  std::vector<Eigen::Index> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return std::abs(values[a]) > std::abs(values[b]);
  });
  Eigenpairs out{Eigen::VectorXd(dim), Eigen::MatrixXd(vectors.rows(), dim)};
  for (std::size_t j = 0; j < dim; ++j) {
    out.values[j] = values[order[j]];
    out.vectors.col(j) = vectors.col(order[j]);
  }
  return out;
}

Eigenpairs SubspaceIteration(const Eigen::SparseMatrix<double>& m,
                             std::size_t dim, std::uint64_t seed) {
  const auto n = m.rows();
  const auto p = static_cast<Eigen::Index>(
      std::min<std::size_t>(n, dim + kOversample));
  Rng rng(DeriveSeed(seed, Stream::kFactorization, 0));
  Eigen::MatrixXd q(n, p);
  for (Eigen::Index j = 0; j < p; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) q(i, j) = rng.Uniform() - 0.5;
  }
  for (int it = 0; it < kSubspaceIterations; ++it) {
    Eigen::MatrixXd z = m * q;
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
    q = qr.householderQ() * Eigen::MatrixXd::Identity(n, p);
  }
  Eigen::MatrixXd t = q.transpose() * (m * q);
  t = 0.5 * (t + t.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t);
  return TopByMagnitude(solver.eigenvalues(), q * solver.eigenvectors(), dim);
}

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::vector<Walk> GenerateWalks(const Graph& g, std::uint32_t walks_per_node,
                                std::uint32_t walk_length, std::uint64_t seed,
                                unsigned threads) {
  Require(walks_per_node >= 1, "walks_per_node must be at least 1");
  Require(walk_length >= 2, "walk_length must be at least 2");
  const Vertex n = g.num_vertices();
  std::vector<Walk> corpus(static_cast<std::size_t>(n) * walks_per_node);
  ParallelFor(n, threads, [&](std::size_t start) {
    for (std::uint32_t r = 0; r < walks_per_node; ++r) {
      Rng rng(DeriveSeed(seed, Stream::kWalks,
                         static_cast<std::uint64_t>(start) * walks_per_node + r));
      Walk& walk = corpus[static_cast<std::size_t>(r) * n + start];
      walk.reserve(walk_length);
      walk.push_back(static_cast<Vertex>(start));
      while (walk.size() < walk_length) {
        auto nbrs = g.neighbors(walk.back());
        if (nbrs.empty()) break;
        walk.push_back(nbrs[rng.Below(nbrs.size())]);
      }
    }
  });
  return corpus;
}

EmbeddingMatrix EmbedFromWalks(std::span<const Walk> corpus, Vertex n,
                               std::size_t dim, std::uint32_t window,
                               std::uint64_t seed) {
  Require(!corpus.empty(), "walk corpus is empty");
  Require(dim >= 1, "embedding dimension must be at least 1");
  Require(window >= 1, "window must be at least 1");
  if (dim > n) {
    Fail(ErrorCode::kInvalidArgument,
         "embedding dimension " + std::to_string(dim) + " exceeds vertex count " +
             std::to_string(n));
  }
  for (const auto& walk : corpus) {
    for (Vertex v : walk) {
      if (v >= n) Fail(ErrorCode::kOutOfRange, "walk vertex out of range");
    }
  }
  const auto m = PpmiMatrix(corpus, n, window);

  Eigenpairs pairs;
  if (n <= kDenseSolveLimit) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver{Eigen::MatrixXd(m)};
    pairs = TopByMagnitude(solver.eigenvalues(), solver.eigenvectors(), dim);
  } else {
    pairs = SubspaceIteration(m, dim, seed);
  }

  EmbeddingMatrix out;
  out.rows = n;
  out.dim = dim;
  out.values.assign(static_cast<std::size_t>(n) * dim, 0.0);
  for (std::size_t j = 0; j < dim; ++j) {
    auto col = pairs.vectors.col(static_cast<Eigen::Index>(j));
    Eigen::Index pivot = 0;
    col.cwiseAbs().maxCoeff(&pivot);
    const double sign = col[pivot] < 0 ? -1.0 : 1.0;
    const double scale = sign * std::sqrt(std::abs(pairs.values[j]));
    for (Vertex v = 0; v < n; ++v) {
      out.values[static_cast<std::size_t>(v) * dim + j] = col[v] * scale;
    }
  }
  return out;
}

std::string EmbeddingCacheKey(const Graph& g, const EmbeddingOptions& opts) {
  std::uint64_t h = g.StructureHash();
  for (std::uint64_t part : {std::uint64_t{opts.walks_per_node},
                             std::uint64_t{opts.walk_length},
                             std::uint64_t{opts.window},
                             std::uint64_t{opts.dim}, opts.seed}) {
    h = Mix64(h ^ part);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("emb-") + buf + ".txt";
}

EmbeddingMatrix ComputeEmbedding(const Graph& g, const EmbeddingOptions& opts) {
  std::filesystem::path cached;
  if (!opts.cache_dir.empty()) {
    cached = std::filesystem::path(opts.cache_dir) / EmbeddingCacheKey(g, opts);
    if (std::filesystem::exists(cached)) {
      auto emb = ReadEmbeddingFile(cached.string(), g);
      emb.source = EmbeddingSource::kWalkFactorization;
      return emb;
    }
  }
  const auto corpus = GenerateWalks(g, opts.walks_per_node, opts.walk_length,
                                    opts.seed, opts.threads);
  auto emb = EmbedFromWalks(corpus, g.num_vertices(), opts.dim, opts.window,
                            opts.seed);
  if (!cached.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(cached.parent_path(), ec);
    const auto tmp = cached.string() + ".tmp";
    WriteEmbeddingFile(tmp, g, emb);
    std::filesystem::rename(tmp, cached, ec);
  }
  return emb;
}

void WriteEmbedding(std::ostream& out, const Graph& g,
                    const EmbeddingMatrix& emb) {
  Require(emb.rows == g.num_vertices(), "embedding row count differs from graph");
  out << emb.rows << ' ' << emb.dim << '\n';
  for (Vertex v = 0; v < emb.rows; ++v) {
    out << g.source_id(v);
    for (double x : emb.row(v)) out << ' ' << FormatDouble(x);
    out << '\n';
  }
}

void WriteEmbeddingFile(const std::string& path, const Graph& g,
                        const EmbeddingMatrix& emb) {
  std::ofstream out(path);
  if (!out) Fail(ErrorCode::kIo, "cannot write embedding file: " + path);
  WriteEmbedding(out, g, emb);
  if (!out) Fail(ErrorCode::kIo, "write failed: " + path);
}

EmbeddingMatrix ReadEmbedding(std::istream& in, const Graph& g) {
  const Vertex n = g.num_vertices();
  std::size_t rows = 0, dim = 0;
  std::string line;
  if (!std::getline(in, line) || !(std::istringstream(line) >> rows >> dim)) {
    Fail(ErrorCode::kParse, "line 1: expected header 'n f'");
  }
  if (rows != n) {
    Fail(ErrorCode::kParse, "embedding has " + std::to_string(rows) +
                                " rows, graph has " + std::to_string(n) +
                                " vertices");
  }
  EmbeddingMatrix emb;
  emb.rows = n;
  emb.dim = dim;
  emb.source = EmbeddingSource::kImported;
  emb.values.assign(static_cast<std::size_t>(n) * dim, 0.0);
  std::vector<bool> seen(n, false);
  std::uint64_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    std::istringstream fields(line);
    std::string id;
    fields >> id;
    Vertex v = 0;
    if (!g.find_vertex(id, &v)) Fail(ErrorCode::kParse, where + "unknown vertex id '" + id + "'");
    if (seen[v]) Fail(ErrorCode::kParse, where + "duplicate vertex id '" + id + "'");
    seen[v] = true;
    std::size_t j = 0;
    std::string token;
    while (fields >> token) {
      if (j == dim) Fail(ErrorCode::kParse, where + "dimension mismatch");
      double x = 0;
      const char* end = token.data() + token.size();
      auto [ptr, ec] = std::from_chars(token.data(), end, x);
      if (ec != std::errc() || ptr != end || !std::isfinite(x)) {
        Fail(ErrorCode::kParse, where + "bad value '" + token + "'");
      }
      emb.values[static_cast<std::size_t>(v) * dim + j++] = x;
    }
    if (j != dim) Fail(ErrorCode::kParse, where + "dimension mismatch");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v]) Fail(ErrorCode::kParse, "missing row for vertex '" + g.source_id(v) + "'");
  }
  return emb;
}

EmbeddingMatrix ReadEmbeddingFile(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open embedding file: " + path);
  return ReadEmbedding(in, g);
}

}  // namespace motifpred
