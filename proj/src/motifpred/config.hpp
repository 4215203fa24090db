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

#ifndef MOTIFPRED_CONFIG_HPP_
#define MOTIFPRED_CONFIG_HPP_

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "motifpred/featurization.hpp"
#include "motifpred/link_scores.hpp"
#include "motifpred/motif.hpp"
#include "motifpred/motif_scores.hpp"
#include "motifpred/sampling.hpp"

namespace motifpred {

enum class ScoreOn { kMasked, kFull };

struct RunConfig {
  std::string graph;
  std::string features;
  std::string graph_name;  // defaults to the graph file stem
  MotifKind motif = MotifKind::kClique;
  std::vector<std::uint32_t> ks{3};
  double density = 0.9;

  std::vector<Scorer> scorers{Scorer::kJaccard, Scorer::kCommonNeighbors,
                              Scorer::kAdamicAdar};
  std::vector<Aggregator> aggregators{Aggregator::kMul, Aggregator::kAvg,
                                      Aggregator::kMin};
  WeightMode weight_mode = WeightMode::kUniformNonexisting;
  std::string weights_file;

  std::size_t per_class = 1000;
  SampleMix mix;
  double split = 0.9;
  std::uint64_t seed = 1;
  std::uint32_t trials = 5;

  FeaturizeOptions featurize;
  ScoreOn score_on = ScoreOn::kMasked;

  std::string embedding_file;
  bool inject_candidates = false;
  std::uint32_t walks_per_node = 10;
  std::uint32_t walk_length = 80;
  std::uint32_t window = 10;
  std::size_t dim = 128;
  std::string cache_dir;

  std::string queries;
  std::string scores;
  std::string output;
  std::string summary;
  std::string scores_output;

  unsigned threads = 0;  // 0 means all hardware threads
};

// Sets one key. Keys match the long command line flags without dashes.
void ApplyConfigKey(RunConfig* config, std::string_view key,
                    std::string_view value);

// Flat "key = value" lines; '#' starts a comment.
void ApplyConfigText(RunConfig* config, std::istream& in);
void ApplyConfigFile(RunConfig* config, const std::string& path);

std::vector<std::string> ConfigKeys();

// Cross-field checks run before any work starts.
void ValidateConfig(const RunConfig& config);

unsigned EffectiveThreads(const RunConfig& config);

}  // namespace motifpred

#endif  // MOTIFPRED_CONFIG_HPP_
