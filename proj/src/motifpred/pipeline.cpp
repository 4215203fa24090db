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

#include "motifpred/pipeline.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "motifpred/bench.hpp"
#include "motifpred/csv.hpp"
#include "motifpred/error.hpp"
#include "motifpred/featurization.hpp"
#include "motifpred/metrics.hpp"
#include "motifpred/sampling.hpp"

namespace motifpred {
namespace {

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> Tokens(std::string_view s, std::string_view seps) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto start = s.find_first_not_of(seps, i);
    if (start == std::string_view::npos) break;
    auto end = s.find_first_of(seps, start);
    if (end == std::string_view::npos) end = s.size();
    out.emplace_back(s.substr(start, end - start));
    i = end;
  }
  return out;
}

Vertex Lookup(const Graph& g, const std::string& id) {
  Vertex v = 0;
  if (!g.find_vertex(id, &v)) Fail(ErrorCode::kInvalidArgument, "unknown vertex id '" + id + "'");
  return v;
}

std::vector<VertexPair> ParsePairs(const Graph& g, const std::string& text) {
  std::vector<VertexPair> pairs;
  for (const auto& item : Tokens(text, ", ")) {
    const auto dash = item.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == item.size()) {
      Fail(ErrorCode::kInvalidArgument, "expected a pair 'u-v', got '" + item + "'");
    }
    pairs.push_back(MakePair(Lookup(g, item.substr(0, dash)), Lookup(g, item.substr(dash + 1))));
  }
  return pairs;
}

// Writes to the named file, or to `fallback` when the name is empty or "-".
template <typename Fn>
void WithOutput(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(fallback);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) Fail(ErrorCode::kIo, "cannot write " + path);
  fn(out);
  out.flush();
  if (!out) Fail(ErrorCode::kIo, "write failed: " + path);
}

std::vector<double> WeightsFor(const std::vector<std::vector<double>>& rows,
                               std::size_t index, std::size_t count) {
  if (rows.empty()) return {};
  if (rows.size() == 1) return rows[0];
  if (rows.size() != count) {
    Fail(ErrorCode::kInvalidArgument, "weights file has " + std::to_string(rows.size()) +
                                          " rows; expected 1 or " + std::to_string(count));
  }
  return rows[index];
}

}  // namespace

LoadedGraph LoadGraph(const RunConfig& config, std::ostream& log) {
  Require(!config.graph.empty(), "graph: no graph file given");
  auto load = LoadEdgeListFile(config.graph);
  if (load.self_loops_dropped > 0 || load.duplicates_dropped > 0) {
    log << "graph: dropped " << load.self_loops_dropped << " self loops and "
        << load.duplicates_dropped << " duplicate edges\n";
  }
  LoadedGraph out;
  out.graph = config.features.empty() ? std::move(load.graph)
                                      : LoadFeaturesFile(load.graph, config.features);
  out.name = config.graph_name.empty() ? std::filesystem::path(config.graph).stem().string()
                                       : config.graph_name;
  return out;
}

EmbeddingMatrix ObtainEmbedding(const Graph& g, const RunConfig& config,
                                const std::vector<VertexPair>& extra_edges) {
  if (!config.embedding_file.empty()) return ReadEmbeddingFile(config.embedding_file, g);
  EmbeddingOptions opts;
  opts.walks_per_node = config.walks_per_node;
  opts.walk_length = config.walk_length;
  opts.window = config.window;
  opts.dim = config.dim;
  opts.seed = config.seed;
  opts.threads = EffectiveThreads(config);
  opts.cache_dir = config.cache_dir;
  if (opts.cache_dir.empty()) {
    if (const char* env = std::getenv("MOTIF_CACHE_DIR")) opts.cache_dir = env;
  }
  if (extra_edges.empty()) return ComputeEmbedding(g, opts);
  return ComputeEmbedding(g.WithAddedEdges(extra_edges), opts);
}

MotifQuery ParseQueryLine(const Graph& g, const RunConfig& config,
                          const std::string& line) {
  if (line.find('=') == std::string::npos) {
    std::vector<Vertex> inner;
    for (const auto& id : Tokens(line, ", \t")) inner.push_back(Lookup(g, id));
    const auto tmpl = MakeTemplate(config.motif, static_cast<std::uint32_t>(inner.size()),
                                   config.density);
    return InstantiateQuery(g, tmpl, inner);
  }
  std::vector<Vertex> inner;
  std::vector<VertexPair> motif, db;
  bool have_inner = false, have_motif = false;
  for (const auto& part : Tokens(line, ";")) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) Fail(ErrorCode::kInvalidArgument, "expected key=value, got '" + part + "'");
    const auto key = Trim(part.substr(0, eq));
    const auto value = part.substr(eq + 1);
    if (key == "inner") {
      for (const auto& id : Tokens(value, ", ")) inner.push_back(Lookup(g, id));
      have_inner = true;
    } else if (key == "motif") {
      motif = ParsePairs(g, value);
      have_motif = true;
    } else if (key == "db") {
      db = ParsePairs(g, value);
    } else {
      Fail(ErrorCode::kInvalidArgument, "unknown query key '" + key + "'");
    }
  }
  Require(have_inner && have_motif, "query needs both inner= and motif=");
  return BuildQuery(g, inner, motif, db);
}

std::vector<std::vector<double>> ReadWeightsFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open weights file: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty() || Trim(line)[0] == '#') continue;
    std::vector<double> row;
    for (const auto& tok : Tokens(line, ", \t\r")) {
      double x = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        Fail(ErrorCode::kParse, path + ": line " + std::to_string(line_no) +
                                    ": bad weight '" + tok + "'");
      }
      row.push_back(x);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) Fail(ErrorCode::kParse, path + ": no weights found");
  return rows;
}

void RunScore(const RunConfig& config, std::ostream& out, std::ostream& log) {
  ValidateConfig(config);
  Require(!config.queries.empty(), "queries: no query file given");
  const auto loaded = LoadGraph(config, log);
  const Graph& g = loaded.graph;

  std::ifstream in(config.queries);
  if (!in) Fail(ErrorCode::kIo, "cannot open query file: " + config.queries);
  std::vector<MotifQuery> queries;
  std::vector<std::string> texts;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty() || Trim(line)[0] == '#') continue;
    try {
      queries.push_back(ParseQueryLine(g, config, line));
    } catch (const Error& e) {
      Fail(e.code(), config.queries + ": line " + std::to_string(line_no) + ": " + e.what());
    }
    texts.push_back(Trim(line));
  }
  Require(!queries.empty(), "query file has no queries");

  std::vector<std::vector<double>> weight_rows;
  if (config.weight_mode == WeightMode::kCustom) weight_rows = ReadWeightsFile(config.weights_file);

  // Nothing is written unless every query scores.
  std::ostringstream body;
  WriteCsvRow(body, {"query", "inner", "scorer", "aggregator", "score"});
  for (std::size_t i = 0; i < queries.size(); ++i) {
    const auto& q = queries[i];
    std::string inner;
    for (Vertex v : q.inner()) inner += (inner.empty() ? "" : " ") + g.source_id(v);
    const auto custom = WeightsFor(weight_rows, i, queries.size());
    for (auto scorer : config.scorers) {
      const auto values = ScoreWith(g, q, scorer, config.aggregators, config.weight_mode, custom);
      for (std::size_t a = 0; a < values.size(); ++a) {
        char score[32];
        std::snprintf(score, sizeof score, "%.17g", values[a]);
        WriteCsvRow(body, {std::to_string(i), inner, std::string(ScorerName(scorer)),
                           std::string(AggregatorName(config.aggregators[a])), score});
      }
    }
  }
  WithOutput(config.output, out, [&](std::ostream& os) { os << body.str(); });
}

ExportCounts RunExport(const RunConfig& config, std::ostream& log) {
  ValidateConfig(config);
  Require(config.ks.size() == 1, "export takes exactly one motif size");
  Require(!config.output.empty() && config.output != "-",
          "output: export needs a path prefix");
  const auto loaded = LoadGraph(config, log);
  const Graph& g = loaded.graph;
  const auto tmpl = MakeTemplate(config.motif, config.ks[0], config.density);

  SamplingOptions so;
  so.per_class = config.per_class;
  so.mix = config.mix;
  so.split = config.split;
  so.seed = config.seed;
  const auto set = BuildSampleSet(g, tmpl, so);

  EmbeddingMatrix emb;
  if (config.featurize.embedding) {
    std::vector<VertexPair> extra;
    if (config.inject_candidates) {
      for (const auto& s : set.train) {
        for (auto [a, b] : tmpl.motif_pairs) extra.push_back(MakePair(s.inner[a], s.inner[b]));
      }
    }
    emb = ObtainEmbedding(g, config, extra);
  }
  const auto fs = FeaturizeSet(g, tmpl, set, config.featurize.embedding ? &emb : nullptr,
                               config.featurize, config.seed, EffectiveThreads(config));
  RecordMeta meta;
  meta.h = config.featurize.h;
  meta.seed = config.seed;
  meta.graph_name = loaded.name;
  const auto counts = ExportDataset(fs, tmpl, meta, config.output);
  const auto check = CheckMasking(fs, tmpl);
  log << "export: " << counts.train << " train and " << counts.validation
      << " validation records for " << tmpl.Tag() << "; masking chi-square "
      << FormatReal(check.chi_square) << " on " << check.dof << " dof\n";
  return counts;
}

void RunBench(const RunConfig& config, std::ostream& out, std::ostream& log) {
  ValidateConfig(config);
  const auto loaded = LoadGraph(config, log);
  std::vector<double> custom;
  if (config.weight_mode == WeightMode::kCustom) {
    const auto rows = ReadWeightsFile(config.weights_file);
    Require(rows.size() == 1, "bench takes a single row of custom weights");
    custom = rows[0];
  }
  const auto report = RunBenchmark(loaded.graph, loaded.name, config, custom);
  for (const auto& note : report.notes) log << note << '\n';
  for (const auto& c : report.checks) {
    log << "masking check k=" << c.k << " trial " << c.trial << ": chi-square "
        << FormatReal(c.chi_square) << " on " << c.dof << " dof\n";
  }
  WithOutput(config.output, out, [&](std::ostream& os) { WriteBenchCsv(os, report.rows); });
  if (!config.summary.empty()) {
    WithOutput(config.summary, out, [&](std::ostream& os) { WriteSummaryCsv(os, report.summary); });
  }
  if (!config.scores_output.empty()) {
    WithOutput(config.scores_output, out, [&](std::ostream& os) {
      WriteScoresCsv(os, report, loaded.name, config.motif);
    });
  }
}

void RunEmbed(const RunConfig& config, std::ostream& log) {
  ValidateConfig(config);
  Require(!config.output.empty() && config.output != "-", "output: embed needs a file path");
  const auto loaded = LoadGraph(config, log);
  const auto emb = ObtainEmbedding(loaded.graph, config);
  WriteEmbeddingFile(config.output, loaded.graph, emb);
  log << "embed: " << emb.rows << " x " << emb.dim << " written to " << config.output << '\n';
}

void RunAuc(const RunConfig& config, std::ostream& out) {
  Require(!config.scores.empty(), "scores: no score file given");
  const auto table = ReadCsvFile(config.scores);
  const auto score_col = table.Column("score");
  const auto label_col = table.Column("label");
  std::vector<std::size_t> group_cols;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c != score_col && c != label_col && table.header[c] != "id") group_cols.push_back(c);
  }
  std::vector<std::vector<std::string>> order;
  std::map<std::vector<std::string>, std::pair<std::vector<double>, std::vector<std::uint8_t>>> groups;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    std::vector<std::string> key;
    for (auto c : group_cols) key.push_back(row[c]);
    if (!groups.count(key)) order.push_back(key);
    auto& [scores, labels] = groups[key];
    const auto& s = row[score_col];
    const auto& l = row[label_col];
    double x = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      Fail(ErrorCode::kParse, "row " + std::to_string(r + 2) + ": bad score '" + s + "'");
    }
    if (l != "0" && l != "1") {
      Fail(ErrorCode::kParse, "row " + std::to_string(r + 2) + ": label must be 0 or 1");
    }
    scores.push_back(x);
    labels.push_back(l == "1" ? 1 : 0);
  }
  Require(!order.empty(), "score file has no rows");
  WithOutput(config.output, out, [&](std::ostream& os) {
    std::vector<std::string> header;
    for (auto c : group_cols) header.push_back(table.header[c]);
    for (const char* h : {"n_pos", "n_neg", "auc"}) header.emplace_back(h);
    WriteCsvRow(os, header);
    for (const auto& key : order) {
      const auto& [scores, labels] = groups[key];
      std::size_t pos = 0;
      for (auto l : labels) pos += l;
      char auc[32];
      std::snprintf(auc, sizeof auc, "%.17g", Auc(scores, labels));
      auto row = key;
      row.push_back(std::to_string(pos));
      row.push_back(std::to_string(labels.size() - pos));
      row.push_back(auc);
      WriteCsvRow(os, row);
    }
  });
}

}  // namespace motifpred
