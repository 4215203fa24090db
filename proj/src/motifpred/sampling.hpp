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

#ifndef MOTIFPRED_SAMPLING_HPP_
#define MOTIFPRED_SAMPLING_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "motifpred/graph.hpp"
#include "motifpred/motif.hpp"

namespace motifpred {

enum class SampleStrategy { kPositive, kPerturb, kRandom, kGrow, kDense };

std::string_view StrategyName(SampleStrategy strategy);
SampleStrategy ParseStrategy(std::string_view name);

struct Sample {
  std::vector<Vertex> inner;  // role order
  bool positive = false;
  SampleStrategy strategy = SampleStrategy::kPositive;
  std::uint64_t seed = 0;

  bool operator==(const Sample&) const = default;
};

// Fractions of negatives drawn by perturbation, uniform random choice and
// neighborhood growth. Must sum to one.
struct SampleMix {
  double perturb = 0.8;
  double random = 0.1;
  double grow = 0.1;
};

struct SampleSet {
  std::vector<Sample> train;
  std::vector<Sample> validation;
  SampleMix mix;
  double split_ratio = 0.9;

  bool operator==(const SampleSet& other) const {
    return train == other.train && validation == other.validation;
  }
};

struct PositiveEnumeration {
  std::vector<Sample> samples;
  // Instances seen. Exact when `exhaustive`, otherwise the number of
  // distinct instances drawn before the limit or attempt cap was hit.
  std::uint64_t instances_seen = 0;
  bool exhaustive = true;
};

// Up to `limit` distinct instances of `tmpl`, uniformly subsampled when
// there are more. An empty result means the graph holds no instance.
PositiveEnumeration EnumeratePositives(const Graph& g,
                                       const MotifTemplate& tmpl,
                                       std::size_t limit, std::uint64_t seed);

// Negative strategies. Each returns nullopt after its bounded retries fail.
std::optional<Sample> NegativePerturb(const Graph& g, const MotifTemplate& tmpl,
                                      const Sample& positive,
                                      std::uint64_t seed);
std::optional<Sample> NegativeRandom(const Graph& g, const MotifTemplate& tmpl,
                                     std::uint64_t seed);
std::optional<Sample> NegativeGrow(const Graph& g, const MotifTemplate& tmpl,
                                   std::uint64_t seed);

enum class DenseSide {
  kPositive,  // greedy densest growth, kept only if density >= rho
  kNegative,  // 80% near / 20% far, kept only if density < rho
  kNear,      // greedy densest growth, kept only if density < rho
  kFar,       // greedy sparsest growth, kept only if density < rho
};

// Grows a vertex set from a random seed vertex by repeatedly adding the
// frontier vertex with the most (near) or fewest (far) edges into the set.
std::optional<Sample> SampleDense(const Graph& g, std::uint32_t k, double rho,
                                  DenseSide side, std::uint64_t seed);

// Internal edge count over C(k,2).
double InternalDensity(const Graph& g, std::span<const Vertex> vertices);

struct SamplingOptions {
  std::size_t per_class = 1000;
  SampleMix mix;
  double split = 0.9;
  std::uint64_t seed = 1;
};

// Balanced positives and negatives, permuted, then split into train and
// validation. Throws kInsufficientSamples when the graph lacks positives.
SampleSet BuildSampleSet(const Graph& g, const MotifTemplate& tmpl,
                         const SamplingOptions& options);

// Key under which two samples count as the same vertex set: hub first for
// stars, otherwise sorted.
std::vector<Vertex> CanonicalKey(const MotifTemplate& tmpl,
                                 std::span<const Vertex> inner);

}  // namespace motifpred

#endif  // MOTIFPRED_SAMPLING_HPP_
