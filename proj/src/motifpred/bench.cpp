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

#include "motifpred/bench.hpp"

#include <array>
#include <cstdio>
#include <map>
#include <numeric>
#include <tuple>

#include "motifpred/csv.hpp"
#include "motifpred/error.hpp"
#include "motifpred/metrics.hpp"
#include "motifpred/parallel.hpp"

namespace motifpred {
namespace {

std::vector<Vertex> LocalInner(std::uint32_t k) {
  std::vector<Vertex> ids(k);
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

std::string Optional(const std::optional<double>& v) {
  return v ? FormatReal(*v) : "NA";
}

struct CellResult {
  bool available = false;
  std::string note;
  std::size_t n_train = 0;
  std::size_t n_val = 0;
  // [scorer][aggregator] -> per validation sample
  std::vector<std::vector<std::vector<double>>> scores;
  std::vector<std::uint8_t> labels;
  MaskingCheck check;
};

CellResult RunCell(const Graph& g, const MotifTemplate& tmpl,
                   const RunConfig& config, std::uint32_t trial,
                   std::span<const double> custom) {
  CellResult cell;
  const std::uint64_t seed = config.seed + trial;
  SamplingOptions so;
  so.per_class = config.per_class;
  so.mix = config.mix;
  so.split = config.split;
  so.seed = seed;
  SampleSet set;
  try {
    set = BuildSampleSet(g, tmpl, so);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInsufficientSamples) throw;
    cell.note = tmpl.Tag() + " trial " + std::to_string(trial) + " unavailable: " + e.what();
    return cell;
  }
  // Scoring needs only the prepared subgraphs.
  FeaturizeOptions fo = config.featurize;
  fo.embedding = false;
  fo.labels = false;
  const auto fs = FeaturizeSet(g, tmpl, set, nullptr, fo, seed, 1);

  cell.available = true;
  cell.n_train = fs.train.size();
  cell.n_val = fs.validation.size();
  cell.check = CheckMasking(fs, tmpl);
  cell.check.k = tmpl.k;
  cell.check.trial = trial;
  cell.scores.assign(config.scorers.size(),
                     std::vector<std::vector<double>>(config.aggregators.size()));
  for (std::size_t i = 0; i < fs.validation.size(); ++i) {
    const auto& x = fs.validation[i];
    cell.labels.push_back(x.label ? 1 : 0);
    const bool masked = config.score_on == ScoreOn::kMasked;
    const Graph& where = masked ? x.sub.local : g;
    const auto q = masked ? InstantiateQuery(where, tmpl, LocalInner(tmpl.k))
                          : InstantiateQuery(where, tmpl, set.validation[i].inner);
    for (std::size_t s = 0; s < config.scorers.size(); ++s) {
      const auto values = ScoreWith(where, q, config.scorers[s], config.aggregators,
                                    config.weight_mode, custom);
      for (std::size_t a = 0; a < values.size(); ++a) cell.scores[s][a].push_back(values[a]);
    }
  }
  return cell;
}

}  // namespace

std::string FormatReal(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

std::vector<double> ScoreWith(const Graph& g, const MotifQuery& q, Scorer scorer,
                              std::span<const Aggregator> aggregators,
                              WeightMode mode, std::span<const double> custom) {
  const auto links = ScoreQueryEdges(g, q, scorer);
  const auto weights = MakeWeights(mode, q, custom);
  std::vector<double> out;
  out.reserve(aggregators.size());
  for (auto a : aggregators) out.push_back(Aggregate(a, q, links, weights).value);
  return out;
}

MaskingCheck CheckMasking(const FeaturizedSet& set, const MotifTemplate& tmpl) {
  std::vector<std::array<double, 2>> table(tmpl.motif_pairs.size() + 1, {0.0, 0.0});
  for (const auto* part : {&set.train, &set.validation}) {
    for (const auto& x : *part) {
      const auto present = CountPresentMotifPairs(x.sub.local, tmpl, LocalInner(tmpl.k));
      table[present][x.label ? 0 : 1] += 1.0;
    }
  }
  double col[2] = {0, 0};
  for (const auto& r : table) {
    col[0] += r[0];
    col[1] += r[1];
  }
  MaskingCheck check;
  const double total = col[0] + col[1];
  if (col[0] == 0 || col[1] == 0) return check;
  std::uint32_t used = 0;
  for (const auto& r : table) {
    const double row = r[0] + r[1];
    if (row == 0) continue;
    ++used;
    for (int c = 0; c < 2; ++c) {
      const double expected = row * col[c] / total;
      check.chi_square += (r[c] - expected) * (r[c] - expected) / expected;
    }
  }
  check.dof = used > 0 ? used - 1 : 0;
  return check;
}

BenchmarkReport RunBenchmark(const Graph& g, const std::string& graph_name,
                             const RunConfig& config,
                             std::span<const double> custom_weights) {
  ValidateConfig(config);
  std::vector<MotifTemplate> templates;
  for (auto k : config.ks) templates.push_back(MakeTemplate(config.motif, k, config.density));
  const std::size_t cells = templates.size() * config.trials;
  std::vector<CellResult> results(cells);
  ParallelFor(cells, EffectiveThreads(config), [&](std::size_t c) {
    const auto t = static_cast<std::uint32_t>(c % config.trials);
    results[c] = RunCell(g, templates[c / config.trials], config, t, custom_weights);
  });

  BenchmarkReport report;
  for (const auto& r : results) {
    if (!r.note.empty()) report.notes.push_back(r.note);
    if (r.available) report.checks.push_back(r.check);
  }
  for (std::size_t ti = 0; ti < templates.size(); ++ti) {
    const auto& tmpl = templates[ti];
    for (std::size_t s = 0; s < config.scorers.size(); ++s) {
      for (std::size_t a = 0; a < config.aggregators.size(); ++a) {
        for (std::uint32_t t = 0; t < config.trials; ++t) {
          const auto& cell = results[ti * config.trials + t];
          BenchRow row;
          row.graph = graph_name;
          row.motif = std::string(MotifKindName(tmpl.kind));
          row.k = tmpl.k;
          row.scorer = config.scorers[s];
          row.aggregator = config.aggregators[a];
          row.trial = t;
          row.h = config.featurize.h;
          row.seed = config.seed + t;
          if (cell.available) {
            const auto& scores = cell.scores[s][a];
            row.auc = Auc(scores, cell.labels);
            row.accuracy = Accuracy(scores, cell.labels);
            row.n_train = cell.n_train;
            row.n_val = cell.n_val;
            for (std::size_t i = 0; i < scores.size(); ++i) {
              report.scores.push_back({tmpl.k, row.scorer, row.aggregator, t, i,
                                       cell.labels[i], scores[i]});
            }
          }
          report.rows.push_back(std::move(row));
        }
      }
    }
  }
  report.summary = Summarize(report.rows);
  return report;
}

std::vector<BenchSummaryRow> Summarize(const std::vector<BenchRow>& rows) {
  using Key = std::tuple<std::string, std::string, std::uint32_t, int, int>;
  std::vector<Key> order;
  std::map<Key, std::pair<std::vector<double>, std::vector<double>>> groups;
  for (const auto& r : rows) {
    Key key{r.graph, r.motif, r.k, static_cast<int>(r.scorer), static_cast<int>(r.aggregator)};
    if (!groups.count(key)) order.push_back(key);
    auto& g = groups[key];
    if (r.auc) g.first.push_back(*r.auc);
    if (r.accuracy) g.second.push_back(*r.accuracy);
  }
  std::vector<BenchSummaryRow> out;
  for (const auto& key : order) {
    const auto& [aucs, accs] = groups[key];
    BenchSummaryRow s;
    s.graph = std::get<0>(key);
    s.motif = std::get<1>(key);
    s.k = std::get<2>(key);
    s.scorer = static_cast<Scorer>(std::get<3>(key));
    s.aggregator = static_cast<Aggregator>(std::get<4>(key));
    s.trials = static_cast<std::uint32_t>(aucs.size());
    if (!aucs.empty()) {
      s.auc_mean = Mean(aucs);
      s.auc_std = StdDev(aucs);
      s.accuracy_mean = Mean(accs);
      s.accuracy_std = StdDev(accs);
    }
    out.push_back(std::move(s));
  }
  return out;
}

void WriteBenchCsv(std::ostream& out, const std::vector<BenchRow>& rows) {
  WriteCsvRow(out, {"graph", "motif", "k", "scorer", "aggregator", "trial", "auc",
                    "accuracy", "n_train", "n_val", "h", "seed"});
  for (const auto& r : rows) {
    WriteCsvRow(out, {r.graph, r.motif, std::to_string(r.k), std::string(ScorerName(r.scorer)),
                      std::string(AggregatorName(r.aggregator)), std::to_string(r.trial),
                      Optional(r.auc), Optional(r.accuracy), std::to_string(r.n_train),
                      std::to_string(r.n_val), std::to_string(r.h), std::to_string(r.seed)});
  }
}

void WriteSummaryCsv(std::ostream& out, const std::vector<BenchSummaryRow>& rows) {
  WriteCsvRow(out, {"graph", "motif", "k", "scorer", "aggregator", "trials", "auc_mean",
                    "auc_std", "accuracy_mean", "accuracy_std"});
  for (const auto& r : rows) {
    WriteCsvRow(out, {r.graph, r.motif, std::to_string(r.k), std::string(ScorerName(r.scorer)),
                      std::string(AggregatorName(r.aggregator)), std::to_string(r.trials),
                      Optional(r.auc_mean), Optional(r.auc_std), Optional(r.accuracy_mean),
                      Optional(r.accuracy_std)});
  }
}

void WriteScoresCsv(std::ostream& out, const BenchmarkReport& report,
                    const std::string& graph_name, MotifKind motif) {
  WriteCsvRow(out, {"graph", "motif", "k", "scorer", "aggregator", "trial", "id", "label",
                    "score"});
  for (const auto& s : report.scores) {
    char score[32];
    std::snprintf(score, sizeof score, "%.17g", s.score);
    WriteCsvRow(out, {graph_name, std::string(MotifKindName(motif)), std::to_string(s.k),
                      std::string(ScorerName(s.scorer)), std::string(AggregatorName(s.aggregator)),
                      std::to_string(s.trial), std::to_string(s.id), std::to_string(s.label),
                      score});
  }
}

}  // namespace motifpred
