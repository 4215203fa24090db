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

#include "motifpred/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "motifpred/error.hpp"

namespace motifpred {
namespace {

void CheckInputs(std::span<const double> scores,
                 std::span<const std::uint8_t> labels) {
  if (scores.size() != labels.size()) {
    Fail(ErrorCode::kInvalidArgument, "scores and labels differ in length");
  }
  for (double s : scores) {
    if (std::isnan(s)) Fail(ErrorCode::kInvalidArgument, "score is NaN");
  }
  for (auto l : labels) {
    if (l > 1) Fail(ErrorCode::kInvalidArgument, "labels must be 0 or 1");
  }
}

}  // namespace

double Auc(std::span<const double> scores, std::span<const std::uint8_t> labels) {
  CheckInputs(scores, labels);
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  // Sum of 1-based average ranks over the positives.
  double rank_sum = 0.0;
  std::uint64_t positives = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    std::uint64_t pos_in_run = 0;
    while (j < n && scores[order[j]] == scores[order[i]]) pos_in_run += labels[order[j++]];
    const double avg_rank = 0.5 * static_cast<double>(i + 1 + j);
    rank_sum += avg_rank * static_cast<double>(pos_in_run);
    positives += pos_in_run;
    i = j;
  }
  const std::uint64_t negatives = n - positives;
  if (positives == 0 || negatives == 0) {
    Fail(ErrorCode::kInvalidArgument, "AUC needs both positive and negative labels");
  }
  const double p = static_cast<double>(positives);
  const double u = rank_sum - p * (p + 1.0) / 2.0;
  return u / (p * static_cast<double>(negatives));
}

double Accuracy(std::span<const double> scores,
                std::span<const std::uint8_t> labels, double threshold) {
  CheckInputs(scores, labels);
  Require(!scores.empty(), "accuracy of an empty sample");
  std::size_t correct = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    correct += (scores[i] >= threshold) == (labels[i] == 1);
  }
  return static_cast<double>(correct) / static_cast<double>(scores.size());
}

double Mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

double StdDev(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  const double mean = Mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

}  // namespace motifpred
