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

#ifndef MOTIFPRED_MOTIF_SCORES_HPP_
#define MOTIFPRED_MOTIF_SCORES_HPP_

#include <span>
#include <string_view>
#include <vector>

#include "motifpred/link_scores.hpp"
#include "motifpred/motif.hpp"

namespace motifpred {

enum class Aggregator { kMul, kAvg, kMin };

std::string_view AggregatorName(Aggregator aggregator);
Aggregator ParseAggregator(std::string_view name);

enum class WeightMode {
  kUniformAll,          // equal weight on every entry of the support
  kUniformNonexisting,  // equal weight on missing entries, zero on existing
  kCustom,
};

// Convex weights aligned with MotifQuery::scored_edges().
struct WeightVector {
  std::vector<double> weights;
};

// Non-negative, sums to one within 1e-12.
void ValidateWeights(std::span<const double> weights);

// With `over_dealbreakers` false the support is E_M only and deal-breaker
// entries get weight zero. kUniformNonexisting falls back to kUniformAll
// when the support has no missing entry (every such entry scores 1).
WeightVector MakeWeights(WeightMode mode, const MotifQuery& q,
                         std::span<const double> custom = {},
                         bool over_dealbreakers = true);

struct MotifScore {
  double value = 0.0;
  Aggregator aggregator = Aggregator::kMul;
  bool dealbreaker_mode = false;
};

// Product of motif-edge scores times product of (1 - s) over deal-breakers.
MotifScore ScoreMul(const MotifQuery& q, const LinkScoreVector& scores);

// <w, s> over motif entries only; deal-breakers are ignored and must carry
// zero weight.
MotifScore ScoreAvg(const MotifQuery& q, const LinkScoreVector& scores,
                    const WeightVector& w);

// max(0, <w, s*>) where s* negates missing deal-breaker scores and is the
// zero vector as soon as one deal-breaker edge exists.
MotifScore ScoreAvgDb(const MotifQuery& q, const LinkScoreVector& scores,
                      const WeightVector& w);

// max(0, min s*). Without deal-breakers this is the smallest missing
// motif-edge score, or 1 when every motif edge exists.
MotifScore ScoreMin(const MotifQuery& q, const LinkScoreVector& scores);

// Dispatch used by the benchmark; kAvg routes to ScoreAvgDb, which equals
// ScoreAvg on deal-breaker-free queries.
MotifScore Aggregate(Aggregator aggregator, const MotifQuery& q,
                     const LinkScoreVector& scores, const WeightVector& w);

}  // namespace motifpred

#endif  // MOTIFPRED_MOTIF_SCORES_HPP_
