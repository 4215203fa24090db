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

#ifndef MOTIFPRED_METRICS_HPP_
#define MOTIFPRED_METRICS_HPP_

#include <cstdint>
#include <span>

namespace motifpred {

// Mann-Whitney AUC from average ranks; tied pairs count one half. Labels
// are 0 or 1 and both classes must be present.
double Auc(std::span<const double> scores, std::span<const std::uint8_t> labels);

// Fraction of samples with (score >= threshold) == label.
double Accuracy(std::span<const double> scores,
                std::span<const std::uint8_t> labels, double threshold = 0.5);

double Mean(std::span<const double> values);
// Sample standard deviation; zero for fewer than two values.
double StdDev(std::span<const double> values);

}  // namespace motifpred

#endif  // MOTIFPRED_METRICS_HPP_
