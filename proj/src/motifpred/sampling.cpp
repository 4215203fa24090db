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

#include "motifpred/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <string>

#include "motifpred/error.hpp"
#include "motifpred/rng.hpp"

namespace motifpred {

namespace {

constexpr int kStrategyRetries = 50;
constexpr std::uint32_t kMaxReplaced = 2;
constexpr std::uint32_t kPerturbHops = 2;
constexpr double kNearFraction = 0.8;
// Above this many (hub, arm-set) combinations stars are sampled instead of
// enumerated.
constexpr double kStarEnumerationLimit = 4e6;
// Node budget for the independent-set backtracking behind db-stars.
constexpr std::uint64_t kDbStarVisitBudget = 20'000'000;
constexpr int kNegativeAttempts = 20;

bool IsStarKind(MotifKind kind) {
  return kind == MotifKind::kStar || kind == MotifKind::kDbStar;
}

bool Contains(std::span<const Vertex> set, Vertex v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

// Uniform reservoir of fixed capacity (Algorithm R).
class Reservoir {
 public:
  Reservoir(std::size_t capacity, std::uint64_t seed)
      : capacity_(capacity), rng_(seed) {}

  void Offer(std::span<const Vertex> item) {
    ++seen_;
    if (items_.size() < capacity_) {
      items_.emplace_back(item.begin(), item.end());
      return;
    }
    const auto j = rng_.Below(seen_);
    if (j < capacity_) items_[j].assign(item.begin(), item.end());
  }

  std::uint64_t seen() const { return seen_; }
  std::vector<std::vector<Vertex>> Take() { return std::move(items_); }

 private:
  std::size_t capacity_;
  Rng rng_;
  std::uint64_t seen_ = 0;
  std::vector<std::vector<Vertex>> items_;
};

void EnumerateCliques(const Graph& g, std::uint32_t k,
                      const std::function<void(std::span<const Vertex>)>& visit) {
  std::vector<Vertex> clique;
  std::function<void(const std::vector<Vertex>&)> extend =
      [&](const std::vector<Vertex>& candidates) {
        if (clique.size() == k) {
          visit(clique);
          return;
        }
        const std::size_t need = k - clique.size();
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          if (candidates.size() - i < need) break;
          const Vertex w = candidates[i];
          const auto nw = g.neighbors(w);
          std::vector<Vertex> next;
          std::set_intersection(candidates.begin() + i + 1, candidates.end(),
                                nw.begin(), nw.end(), std::back_inserter(next));
          clique.push_back(w);
          extend(next);
          clique.pop_back();
        }
      };
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto nv = g.neighbors(v);
    std::vector<Vertex> later(std::upper_bound(nv.begin(), nv.end(), v),
                              nv.end());
    if (later.size() + 1 < k) continue;
    clique.assign(1, v);
    extend(later);
  }
}

double Binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0.0;
  double out = 1.0;
  for (std::uint64_t i = 1; i <= r; ++i) {
    out *= static_cast<double>(n - r + i) / static_cast<double>(i);
  }
  return out;
}

// Visits every (hub, arms) star; arms ascending. Returns false when the
// visit budget ran out before completion.
bool EnumerateStars(const Graph& g, std::uint32_t k, bool independent_arms,
                    std::uint64_t budget,
                    const std::function<void(std::span<const Vertex>)>& visit) {
  std::vector<Vertex> star;
  std::uint64_t visited = 0;
  std::function<bool(std::span<const Vertex>, std::size_t)> extend =
      [&](std::span<const Vertex> nbrs, std::size_t from) -> bool {
    if (star.size() == k) {
      visit(star);
      return true;
    }
    const std::size_t need = k - star.size();
    for (std::size_t i = from; i < nbrs.size(); ++i) {
      if (nbrs.size() - i < need) break;
      if (++visited > budget) return false;
      const Vertex arm = nbrs[i];
      if (independent_arms) {
        bool clash = false;
        for (std::size_t a = 1; a < star.size() && !clash; ++a) {
          clash = g.has_edge(star[a], arm);
        }
        if (clash) continue;
      }
      star.push_back(arm);
      const bool ok = extend(nbrs, i + 1);
      star.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  for (Vertex hub = 0; hub < g.num_vertices(); ++hub) {
    if (g.degree(hub) + 1 < k) continue;
    star.assign(1, hub);
    if (!extend(g.neighbors(hub), 0)) return false;
  }
  return true;
}

// Uniform draws over (hub, arm set) pairs: hub with probability
// proportional to C(d, k-1), then a uniform arm subset.
std::vector<std::vector<Vertex>> SampleStars(const Graph& g,
                                             const MotifTemplate& tmpl,
                                             std::size_t limit, Rng& rng,
                                             std::uint64_t* distinct) {
  const std::uint32_t arms = tmpl.k - 1;
  std::vector<double> cumulative(g.num_vertices());
  double total = 0.0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    total += Binomial(g.degree(v), arms);
    cumulative[v] = total;
  }
  std::vector<std::vector<Vertex>> out;
  if (total <= 0.0) return out;
  std::set<std::vector<Vertex>> seen;
  const std::uint64_t attempts = 200 * std::uint64_t{limit} + 10000;
  for (std::uint64_t a = 0; a < attempts && out.size() < limit; ++a) {
    const double x = rng.Uniform() * total;
    auto hub = static_cast<Vertex>(
        std::upper_bound(cumulative.begin(), cumulative.end(), x) -
        cumulative.begin());
    if (hub >= g.num_vertices()) hub = g.num_vertices() - 1;
    const auto nbrs = g.neighbors(hub);
    if (nbrs.size() < arms) continue;
    std::vector<Vertex> star{hub};
    for (auto idx : rng.Choose(static_cast<std::uint32_t>(nbrs.size()), arms)) {
      star.push_back(nbrs[idx]);
    }
    std::sort(star.begin() + 1, star.end());
    if (!IsInstance(g, tmpl, star)) continue;
    if (seen.insert(star).second) out.push_back(std::move(star));
  }
  *distinct = seen.size();
  return out;
}

// Shuffles role positions that the template treats symmetrically.
void RandomizeRoles(const MotifTemplate& tmpl, std::vector<Vertex>& inner,
                    Rng& rng) {
  if (IsStarKind(tmpl.kind)) {
    rng.Shuffle(std::span<Vertex>(inner).subspan(1));
  } else {
    rng.Shuffle(inner);
  }
}

std::vector<Vertex> UnionFrontier(const Graph& g, std::span<const Vertex> set) {
  std::vector<Vertex> out;
  for (Vertex v : set) {
    for (Vertex w : g.neighbors(v)) {
      if (!Contains(set, w)) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::string_view StrategyName(SampleStrategy strategy) {
  switch (strategy) {
    case SampleStrategy::kPositive:
      return "positive";
    case SampleStrategy::kPerturb:
      return "perturb";
    case SampleStrategy::kRandom:
      return "random";
    case SampleStrategy::kGrow:
      return "grow";
    case SampleStrategy::kDense:
      return "dense";
  }
  return "positive";
}

SampleStrategy ParseStrategy(std::string_view name) {
  for (auto s : {SampleStrategy::kPositive, SampleStrategy::kPerturb,
                 SampleStrategy::kRandom, SampleStrategy::kGrow,
                 SampleStrategy::kDense}) {
    if (StrategyName(s) == name) return s;
  }
  Fail(ErrorCode::kParse, "unknown sample strategy '" + std::string(name) + "'");
}

std::vector<Vertex> CanonicalKey(const MotifTemplate& tmpl,
                                 std::span<const Vertex> inner) {
  std::vector<Vertex> key(inner.begin(), inner.end());
  if (IsStarKind(tmpl.kind)) {
    std::sort(key.begin() + 1, key.end());
  } else {
    std::sort(key.begin(), key.end());
  }
  return key;
}

double InternalDensity(const Graph& g, std::span<const Vertex> vertices) {
  const std::size_t k = vertices.size();
  if (k < 2) return 0.0;
  std::size_t present = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      present += g.has_edge(vertices[i], vertices[j]);
    }
  }
  return static_cast<double>(present) / static_cast<double>(k * (k - 1) / 2);
}

PositiveEnumeration EnumeratePositives(const Graph& g,
                                       const MotifTemplate& tmpl,
                                       std::size_t limit, std::uint64_t seed) {
  PositiveEnumeration result;
  std::vector<std::vector<Vertex>> found;
  Rng rng(seed, Stream::kPositives, 0);

  switch (tmpl.kind) {
    case MotifKind::kClique: {
      Reservoir reservoir(limit, DeriveSeed(seed, Stream::kPositives, 0));
      EnumerateCliques(g, tmpl.k,
                       [&](std::span<const Vertex> c) { reservoir.Offer(c); });
      result.instances_seen = reservoir.seen();
      found = reservoir.Take();
      break;
    }
    case MotifKind::kStar:
    case MotifKind::kDbStar: {
      const bool db = tmpl.kind == MotifKind::kDbStar;
      double combos = 0.0;
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        combos += Binomial(g.degree(v), tmpl.k - 1);
      }
      bool complete = false;
      if (db || combos <= kStarEnumerationLimit) {
        Reservoir reservoir(limit, DeriveSeed(seed, Stream::kPositives, 0));
        const std::uint64_t budget =
            db ? kDbStarVisitBudget : static_cast<std::uint64_t>(-1);
        complete = EnumerateStars(g, tmpl.k, db, budget,
                                  [&](std::span<const Vertex> s) {
                                    reservoir.Offer(s);
                                  });
        if (complete) {
          result.instances_seen = reservoir.seen();
          found = reservoir.Take();
        }
      }
      if (!complete) {
        result.exhaustive = false;
        found = SampleStars(g, tmpl, limit, rng, &result.instances_seen);
      }
      break;
    }
    case MotifKind::kDense: {
      result.exhaustive = false;
      std::set<std::vector<Vertex>> seen;
      const std::uint64_t attempts = 50 * std::uint64_t{limit} + 1000;
      for (std::uint64_t a = 0; a < attempts && found.size() < limit; ++a) {
        auto s = SampleDense(g, tmpl.k, tmpl.density, DenseSide::kPositive,
                             DeriveSeed(seed, Stream::kDense, a));
        if (!s) continue;
        if (seen.insert(CanonicalKey(tmpl, s->inner)).second) {
          found.push_back(std::move(s->inner));
        }
      }
      result.instances_seen = seen.size();
      break;
    }
    case MotifKind::kCustom:
      Fail(ErrorCode::kInvalidArgument, "cannot enumerate a custom motif");
  }

  // Enumeration order is structural; sort so the output does not depend on
  // reservoir slot order, then assign per-sample role orders.
  std::sort(found.begin(), found.end());
  result.samples.reserve(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    Sample s;
    s.seed = DeriveSeed(seed, Stream::kPositives, i + 1);
    Rng roles(s.seed);
    s.inner = std::move(found[i]);
    RandomizeRoles(tmpl, s.inner, roles);
    s.positive = true;
    s.strategy = SampleStrategy::kPositive;
    result.samples.push_back(std::move(s));
  }
  return result;
}

std::optional<Sample> NegativePerturb(const Graph& g, const MotifTemplate& tmpl,
                                      const Sample& positive,
                                      std::uint64_t seed) {
  Require(positive.inner.size() == tmpl.k, "positive sample size must equal k");
  Rng rng(seed);
  std::vector<Vertex> nearby;
  for (const auto& [v, d] : BfsDiscoveryOrder(g, positive.inner, kPerturbHops)) {
    if (d > 0) nearby.push_back(v);
  }
  if (nearby.empty()) return std::nullopt;
  for (int attempt = 0; attempt < kStrategyRetries; ++attempt) {
    std::uint32_t replaced = 1 + static_cast<std::uint32_t>(rng.Below(kMaxReplaced));
    replaced = std::min<std::uint32_t>(
        {replaced, tmpl.k - 1, static_cast<std::uint32_t>(nearby.size())});
    const auto positions = rng.Choose(tmpl.k, replaced);
    const auto picks =
        rng.Choose(static_cast<std::uint32_t>(nearby.size()), replaced);
    std::vector<Vertex> inner = positive.inner;
    for (std::uint32_t j = 0; j < replaced; ++j) {
      inner[positions[j]] = nearby[picks[j]];
    }
    if (!IsInstance(g, tmpl, inner)) {
      return Sample{std::move(inner), false, SampleStrategy::kPerturb, seed};
    }
  }
  return std::nullopt;
}

std::optional<Sample> NegativeRandom(const Graph& g, const MotifTemplate& tmpl,
                                     std::uint64_t seed) {
  if (g.num_vertices() < tmpl.k) return std::nullopt;
  Rng rng(seed);
  for (int attempt = 0; attempt < kStrategyRetries; ++attempt) {
    auto picks = rng.Choose(g.num_vertices(), tmpl.k);
    std::vector<Vertex> inner(picks.begin(), picks.end());
    if (!IsInstance(g, tmpl, inner)) {
      return Sample{std::move(inner), false, SampleStrategy::kRandom, seed};
    }
  }
  return std::nullopt;
}

std::optional<Sample> NegativeGrow(const Graph& g, const MotifTemplate& tmpl,
                                   std::uint64_t seed) {
  if (g.num_vertices() < tmpl.k) return std::nullopt;
  Rng rng(seed);
  for (int attempt = 0; attempt < kStrategyRetries; ++attempt) {
    std::vector<Vertex> inner{static_cast<Vertex>(rng.Below(g.num_vertices()))};
    while (inner.size() < tmpl.k) {
      const auto frontier = UnionFrontier(g, inner);
      if (frontier.empty()) break;
      inner.push_back(frontier[rng.Below(frontier.size())]);
    }
    if (inner.size() == tmpl.k && !IsInstance(g, tmpl, inner)) {
      return Sample{std::move(inner), false, SampleStrategy::kGrow, seed};
    }
  }
  return std::nullopt;
}

std::optional<Sample> SampleDense(const Graph& g, std::uint32_t k, double rho,
                                  DenseSide side, std::uint64_t seed) {
  Require(k >= 2, "dense sampling needs k >= 2");
  Require(rho > 0.0 && rho <= 1.0, "density threshold must lie in (0, 1]");
  if (g.num_vertices() < k) return std::nullopt;
  const auto required = MakeTemplate(MotifKind::kDense, k, rho).RequiredEdges();
  Rng rng(seed);
  bool far = side == DenseSide::kFar;
  if (side == DenseSide::kNegative) far = rng.Uniform() >= kNearFraction;

  for (int attempt = 0; attempt < kStrategyRetries; ++attempt) {
    std::vector<Vertex> set{static_cast<Vertex>(rng.Below(g.num_vertices()))};
    while (set.size() < k) {
      const auto frontier = UnionFrontier(g, set);
      if (frontier.empty()) break;
      // Edges from each frontier vertex into the set; pick the extreme,
      // breaking ties uniformly.
      std::vector<Vertex> best;
      std::uint32_t best_links = far ? UINT32_MAX : 0;
      for (Vertex w : frontier) {
        std::uint32_t links = 0;
        for (Vertex v : set) links += g.has_edge(v, w);
        const bool better = far ? links < best_links : links > best_links;
        if (better || best.empty()) {
          best.assign(1, w);
          best_links = links;
        } else if (links == best_links) {
          best.push_back(w);
        }
      }
      set.push_back(best[rng.Below(best.size())]);
    }
    if (set.size() < k) continue;
    std::uint32_t present = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) present += g.has_edge(set[i], set[j]);
    }
    const bool dense = present >= required;
    if (side == DenseSide::kPositive && dense) {
      return Sample{std::move(set), true, SampleStrategy::kPositive, seed};
    }
    if (side != DenseSide::kPositive && !dense) {
      return Sample{std::move(set), false, SampleStrategy::kDense, seed};
    }
  }
  return std::nullopt;
}

SampleSet BuildSampleSet(const Graph& g, const MotifTemplate& tmpl,
                         const SamplingOptions& options) {
  Require(options.per_class >= 1, "need at least one sample per class");
  Require(options.split > 0.0 && options.split <= 1.0,
          "split ratio must lie in (0, 1]");
  const auto& mix = options.mix;
  Require(mix.perturb >= 0 && mix.random >= 0 && mix.grow >= 0 &&
              std::abs(mix.perturb + mix.random + mix.grow - 1.0) < 1e-9,
          "negative strategy mix must be non-negative and sum to 1");
  const std::size_t n = options.per_class;

  auto positives = EnumeratePositives(g, tmpl, n, options.seed);
  if (positives.samples.size() < n) {
    Fail(ErrorCode::kInsufficientSamples,
         "graph has " + std::to_string(positives.samples.size()) +
             " distinct " + tmpl.Tag() + " instances available, " +
             std::to_string(n) + " requested");
  }

  const bool dense = tmpl.kind == MotifKind::kDense;
  const auto n_perturb = static_cast<std::size_t>(std::llround(mix.perturb * n));
  const auto n_random = std::min(
      n - std::min(n, n_perturb),
      static_cast<std::size_t>(std::llround(mix.random * n)));
  const auto n_near = static_cast<std::size_t>(std::llround(kNearFraction * n));

  std::set<std::vector<Vertex>> keys;
  for (const auto& s : positives.samples) keys.insert(CanonicalKey(tmpl, s.inner));

  std::vector<Sample> negatives;
  negatives.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<Sample> sample;
    for (int attempt = 0; attempt < kNegativeAttempts && !sample; ++attempt) {
      const std::uint64_t seed =
          DeriveSeed(options.seed, Stream::kNegatives, i + attempt * n);
      if (dense) {
        DenseSide side = i < n_near ? DenseSide::kNear : DenseSide::kFar;
        if (attempt >= kNegativeAttempts / 2) side = DenseSide::kFar;
        sample = SampleDense(g, tmpl.k, tmpl.density, side, seed);
        if (!sample && attempt >= kNegativeAttempts * 3 / 4) {
          sample = NegativeRandom(g, tmpl, seed);
        }
      } else {
        // Fall back to the cheaper strategies when perturbation keeps
        // failing (e.g. a motif with no nearby non-instances).
        SampleStrategy planned = i < n_perturb              ? SampleStrategy::kPerturb
                                 : i < n_perturb + n_random ? SampleStrategy::kRandom
                                                            : SampleStrategy::kGrow;
        if (planned == SampleStrategy::kPerturb && attempt >= kNegativeAttempts / 2) {
          planned = SampleStrategy::kGrow;
        }
        if (attempt >= kNegativeAttempts * 3 / 4) planned = SampleStrategy::kRandom;
        switch (planned) {
          case SampleStrategy::kPerturb:
            sample = NegativePerturb(
                g, tmpl, positives.samples[(i + attempt) % n], seed);
            break;
          case SampleStrategy::kRandom:
            sample = NegativeRandom(g, tmpl, seed);
            break;
          default:
            sample = NegativeGrow(g, tmpl, seed);
            break;
        }
      }
      if (sample && !keys.insert(CanonicalKey(tmpl, sample->inner)).second) {
        sample.reset();
      }
    }
    if (!sample) {
      Fail(ErrorCode::kInsufficientSamples,
           "could only generate " + std::to_string(negatives.size()) + " of " +
               std::to_string(n) + " distinct negatives");
    }
    if (!IsStarKind(tmpl.kind)) {
      Rng roles(sample->seed ^ 0x5bd1e995ULL);
      RandomizeRoles(tmpl, sample->inner, roles);
    }
    negatives.push_back(std::move(*sample));
  }

  std::vector<Sample> all = std::move(positives.samples);
  all.resize(n);
  all.insert(all.end(), std::make_move_iterator(negatives.begin()),
             std::make_move_iterator(negatives.end()));
  Rng shuffle(options.seed, Stream::kShuffle, 0);
  shuffle.Shuffle(all);

  SampleSet set;
  set.mix = mix;
  set.split_ratio = options.split;
  const auto n_train = static_cast<std::size_t>(
      std::llround(options.split * static_cast<double>(all.size())));
  set.train.assign(std::make_move_iterator(all.begin()),
                   std::make_move_iterator(all.begin() + n_train));
  set.validation.assign(std::make_move_iterator(all.begin() + n_train),
                        std::make_move_iterator(all.end()));
  return set;
}

}  // namespace motifpred
