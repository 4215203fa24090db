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

#ifndef MOTIFPRED_PIPELINE_HPP_
#define MOTIFPRED_PIPELINE_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "motifpred/config.hpp"
#include "motifpred/dataset_io.hpp"
#include "motifpred/embedding.hpp"
#include "motifpred/graph.hpp"
#include "motifpred/motif.hpp"

namespace motifpred {

struct LoadedGraph {
  Graph graph;
  std::string name;
};

// Edge list plus optional input features. Dropped self loops and
// duplicates are reported to `log`.
LoadedGraph LoadGraph(const RunConfig& config, std::ostream& log);

// Imported when embedding-file is set, otherwise computed from walks over
// `g` plus `extra_edges`. The cache directory falls back to $MOTIF_CACHE_DIR.
EmbeddingMatrix ObtainEmbedding(const Graph& g, const RunConfig& config,
                                const std::vector<VertexPair>& extra_edges = {});

// Either "inner=a,b,c;motif=a-b,b-c;db=a-c" with source ids, or a plain list
// of source ids read against the configured motif kind.
MotifQuery ParseQueryLine(const Graph& g, const RunConfig& config,
                          const std::string& line);

// One row of numbers per line; commas or whitespace separate entries.
std::vector<std::vector<double>> ReadWeightsFile(const std::string& path);

// Command bodies. `out` receives the primary result when no output file is
// configured; progress and notes go to `log`.
void RunScore(const RunConfig& config, std::ostream& out, std::ostream& log);
ExportCounts RunExport(const RunConfig& config, std::ostream& log);
void RunBench(const RunConfig& config, std::ostream& out, std::ostream& log);
void RunEmbed(const RunConfig& config, std::ostream& log);
// AUC per group of rows sharing every column except id, label and score.
void RunAuc(const RunConfig& config, std::ostream& out);

}  // namespace motifpred

#endif  // MOTIFPRED_PIPELINE_HPP_
