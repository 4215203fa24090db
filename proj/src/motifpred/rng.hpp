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

#ifndef MOTIFPRED_RNG_HPP_
#define MOTIFPRED_RNG_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace motifpred {

// splitmix64 finalizer; used to derive independent streams from one seed.
constexpr std::uint64_t Mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stream identifiers keep the per-purpose generators apart even when they
// share a master seed and an index.
enum class Stream : std::uint64_t {
  kPositives = 1,
  kNegatives = 2,
  kShuffle = 3,
  kMasking = 4,
  kWalks = 5,
  kFactorization = 6,
  kSubgraphCap = 7,
  kDense = 8,
};

constexpr std::uint64_t DeriveSeed(std::uint64_t master, Stream stream,
                                   std::uint64_t index) noexcept {
  return Mix64(Mix64(master ^ Mix64(static_cast<std::uint64_t>(stream))) +
               index);
}

// Thin wrapper over mt19937_64 with the handful of draws the samplers need.
// Bounded draws use Lemire's rejection method instead of
// std::uniform_int_distribution so streams are identical across standard
// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t master, Stream stream, std::uint64_t index)
      : engine_(DeriveSeed(master, stream, index)) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, bound).
  std::uint64_t Below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    while (true) {
      const std::uint64_t x = engine_();
      const unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
      const auto low = static_cast<std::uint64_t>(m);
      if (low >= bound) return static_cast<std::uint64_t>(m >> 64);
      const std::uint64_t threshold = (0 - bound) % bound;
      if (low >= threshold) return static_cast<std::uint64_t>(m >> 64);
    }
  }

  // Uniform in [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Below(i)]);
    }
  }
  template <typename T>
  void Shuffle(std::vector<T>& items) {
    Shuffle(std::span<T>(items));
  }

  // `count` distinct values from [0, population), in draw order (Floyd's
  // algorithm followed by a shuffle).
  std::vector<std::uint32_t> Choose(std::uint32_t population,
                                    std::uint32_t count);

 private:
  std::mt19937_64 engine_;
};

inline std::vector<std::uint32_t> Rng::Choose(std::uint32_t population,
                                              std::uint32_t count) {
  std::vector<std::uint32_t> picked;
  if (count > population) count = population;
  picked.reserve(count);
  for (std::uint32_t j = population - count; j < population; ++j) {
    const auto t = static_cast<std::uint32_t>(Below(std::uint64_t{j} + 1));
    bool seen = false;
    for (auto p : picked) {
      if (p == t) {
        seen = true;
        break;
      }
    }
    picked.push_back(seen ? j : t);
  }
  Shuffle(picked);
  return picked;
}

}  // namespace motifpred

#endif  // MOTIFPRED_RNG_HPP_
