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

#include "motifpred/motif_scores.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "motifpred/error.hpp"

namespace motifpred {

namespace {

constexpr double kSimplexTolerance = 1e-12;

void CheckAligned(const MotifQuery& q, const LinkScoreVector& scores) {
  const auto& entries = q.scored_edges();
  if (scores.normalized.size() != entries.size() ||
      scores.kinds.size() != entries.size()) {
    Fail(ErrorCode::kInvalidArgument,
         "score vector is not aligned with the query's edges");
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (scores.kinds[i] != entries[i].kind) {
      Fail(ErrorCode::kInvalidArgument,
           "score vector edge kinds do not match the query");
    }
  }
}

void CheckWeights(const LinkScoreVector& scores, const WeightVector& w) {
  if (w.weights.size() != scores.size()) {
    Fail(ErrorCode::kInvalidArgument,
         "weight vector length " + std::to_string(w.weights.size()) +
             " does not match " + std::to_string(scores.size()) + " scores");
  }
}

bool HasDealBreakers(const MotifQuery& q) {
  return q.CountOfKind(EdgeKind::kDealBreakerExisting) +
             q.CountOfKind(EdgeKind::kDealBreakerMissing) >
         0;
}

}  // namespace

std::string_view AggregatorName(Aggregator aggregator) {
  switch (aggregator) {
    case Aggregator::kMul:
      return "mul";
    case Aggregator::kAvg:
      return "avg";
    case Aggregator::kMin:
      return "min";
  }
  return "mul";
}

Aggregator ParseAggregator(std::string_view name) {
  if (name == "mul") return Aggregator::kMul;
  if (name == "avg") return Aggregator::kAvg;
  if (name == "min") return Aggregator::kMin;
  Fail(ErrorCode::kInvalidArgument, "unknown aggregator '" +
                                        std::string(name) +
                                        "' (valid: mul, avg, min)");
}

void ValidateWeights(std::span<const double> weights) {
  double sum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      Fail(ErrorCode::kInvalidArgument, "weights must be non-negative");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kSimplexTolerance) {
    Fail(ErrorCode::kInvalidArgument,
         "weights must sum to 1 (got " + std::to_string(sum) + ")");
  }
}

WeightVector MakeWeights(WeightMode mode, const MotifQuery& q,
                         std::span<const double> custom,
                         bool over_dealbreakers) {
  const auto& entries = q.scored_edges();
  WeightVector w;
  if (mode == WeightMode::kCustom) {
    if (custom.size() != entries.size()) {
      Fail(ErrorCode::kInvalidArgument,
           "custom weights need one value per motif/deal-breaker edge (" +
               std::to_string(entries.size()) + ")");
    }
    ValidateWeights(custom);
    w.weights.assign(custom.begin(), custom.end());
    return w;
  }

  auto in_support = [&](const QueryEdge& e) {
    return IsMotif(e.kind) || (over_dealbreakers && IsDealBreaker(e.kind));
  };
  std::vector<bool> chosen(entries.size(), false);
  std::size_t count = 0;
  if (mode == WeightMode::kUniformNonexisting) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (in_support(entries[i]) && !IsExisting(entries[i].kind)) {
        chosen[i] = true;
        ++count;
      }
    }
  }
  if (count == 0) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (in_support(entries[i])) {
        chosen[i] = true;
        ++count;
      }
    }
  }
  Require(count > 0, "query has no motif edges to weight");
  w.weights.assign(entries.size(), 0.0);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (chosen[i]) w.weights[i] = 1.0 / static_cast<double>(count);
  }
  return w;
}

MotifScore ScoreMul(const MotifQuery& q, const LinkScoreVector& scores) {
  CheckAligned(q, scores);
  double product = 1.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const double s = scores.normalized[i];
    if (IsMotif(scores.kinds[i])) {
      product *= IsExisting(scores.kinds[i]) ? 1.0 : s;
    } else if (scores.kinds[i] == EdgeKind::kDealBreakerExisting) {
      product = 0.0;
    } else {
      product *= 1.0 - s;
    }
  }
  return {product, Aggregator::kMul, HasDealBreakers(q)};
}

MotifScore ScoreAvg(const MotifQuery& q, const LinkScoreVector& scores,
                    const WeightVector& w) {
  CheckAligned(q, scores);
  CheckWeights(scores, w);
  std::vector<double> motif_weights;
  double sum = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (IsMotif(scores.kinds[i])) {
      motif_weights.push_back(w.weights[i]);
      const double s = IsExisting(scores.kinds[i]) ? 1.0 : scores.normalized[i];
      sum += w.weights[i] * s;
    } else if (w.weights[i] != 0.0) {
      Fail(ErrorCode::kInvalidArgument,
           "plain average puts no weight on deal-breaker edges");
    }
  }
  ValidateWeights(motif_weights);
  return {std::clamp(sum, 0.0, 1.0), Aggregator::kAvg, false};
}

MotifScore ScoreAvgDb(const MotifQuery& q, const LinkScoreVector& scores,
                      const WeightVector& w) {
  CheckAligned(q, scores);
  CheckWeights(scores, w);
  ValidateWeights(w.weights);
  if (q.HasExistingDealBreaker()) return {0.0, Aggregator::kAvg, true};
  double sum = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const EdgeKind kind = scores.kinds[i];
    double s = scores.normalized[i];
    if (kind == EdgeKind::kMotifExisting) s = 1.0;
    if (kind == EdgeKind::kDealBreakerMissing) s = -s;
    sum += w.weights[i] * s;
  }
  return {std::clamp(sum, 0.0, 1.0), Aggregator::kAvg, true};
}

MotifScore ScoreMin(const MotifQuery& q, const LinkScoreVector& scores) {
  CheckAligned(q, scores);
  const bool db_mode = HasDealBreakers(q);
  if (q.HasExistingDealBreaker()) return {0.0, Aggregator::kMin, db_mode};
  double smallest = 1.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const EdgeKind kind = scores.kinds[i];
    double s = scores.normalized[i];
    if (kind == EdgeKind::kMotifExisting) s = 1.0;
    if (kind == EdgeKind::kDealBreakerMissing) s = -s;
    smallest = std::min(smallest, s);
  }
  return {std::max(0.0, smallest), Aggregator::kMin, db_mode};
}

MotifScore Aggregate(Aggregator aggregator, const MotifQuery& q,
                     const LinkScoreVector& scores, const WeightVector& w) {
  switch (aggregator) {
    case Aggregator::kMul:
      return ScoreMul(q, scores);
    case Aggregator::kAvg:
      return ScoreAvgDb(q, scores, w);
    case Aggregator::kMin:
      return ScoreMin(q, scores);
  }
  return ScoreMul(q, scores);
}

}  // namespace motifpred
