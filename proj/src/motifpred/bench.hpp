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

#ifndef MOTIFPRED_BENCH_HPP_
#define MOTIFPRED_BENCH_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "motifpred/config.hpp"
#include "motifpred/featurization.hpp"
#include "motifpred/graph.hpp"

namespace motifpred {

struct BenchRow {
  std::string graph;
  std::string motif;
  std::uint32_t k = 0;
  Scorer scorer = Scorer::kJaccard;
  Aggregator aggregator = Aggregator::kMul;
  std::uint32_t trial = 0;
  std::optional<double> auc;  // empty when the cell is unavailable
  std::optional<double> accuracy;
  std::size_t n_train = 0;
  std::size_t n_val = 0;
  std::uint32_t h = 1;
  std::uint64_t seed = 0;
};

struct BenchSummaryRow {
  std::string graph;
  std::string motif;
  std::uint32_t k = 0;
  Scorer scorer = Scorer::kJaccard;
  Aggregator aggregator = Aggregator::kMul;
  std::uint32_t trials = 0;  // trials with a result
  std::optional<double> auc_mean, auc_std, accuracy_mean, accuracy_std;
};

struct SampleScoreRow {
  std::uint32_t k = 0;
  Scorer scorer = Scorer::kJaccard;
  Aggregator aggregator = Aggregator::kMul;
  std::uint32_t trial = 0;
  std::uint64_t id = 0;  // position in the validation split
  std::uint8_t label = 0;
  double score = 0.0;
};

// Homogeneity of the motif-edge count distributions of masked positives
// and stripped negatives. Reported, never enforced.
struct MaskingCheck {
  std::uint32_t k = 0;
  std::uint32_t trial = 0;
  double chi_square = 0.0;
  std::uint32_t dof = 0;
};

struct BenchmarkReport {
  std::vector<BenchRow> rows;
  std::vector<BenchSummaryRow> summary;
  std::vector<SampleScoreRow> scores;
  std::vector<MaskingCheck> checks;
  std::vector<std::string> notes;
};

// Scores a query over `g` with each aggregator.
std::vector<double> ScoreWith(const Graph& g, const MotifQuery& q, Scorer scorer,
                              std::span<const Aggregator> aggregators,
                              WeightMode mode, std::span<const double> custom);

MaskingCheck CheckMasking(const FeaturizedSet& set, const MotifTemplate& tmpl);

// Every (k, trial) cell runs sampling, masking and scoring with seed
// config.seed + trial. A cell without enough positives is unavailable.
BenchmarkReport RunBenchmark(const Graph& g, const std::string& graph_name,
                             const RunConfig& config,
                             std::span<const double> custom_weights = {});

std::vector<BenchSummaryRow> Summarize(const std::vector<BenchRow>& rows);

void WriteBenchCsv(std::ostream& out, const std::vector<BenchRow>& rows);
void WriteSummaryCsv(std::ostream& out, const std::vector<BenchSummaryRow>& rows);
void WriteScoresCsv(std::ostream& out, const BenchmarkReport& report,
                    const std::string& graph_name, MotifKind motif);

std::string FormatReal(double value);

}  // namespace motifpred

#endif  // MOTIFPRED_BENCH_HPP_
