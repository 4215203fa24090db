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

#include "motifpred/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <thread>

#include "motifpred/error.hpp"

namespace motifpred {
namespace {

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> SplitList(std::string_view value) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    const auto comma = value.find(',', start);
    const auto end = comma == std::string_view::npos ? value.size() : comma;
    auto item = Trim(value.substr(start, end - start));
    if (!item.empty()) out.push_back(std::move(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
T ParseNumber(std::string_view key, std::string_view value) {
  T out{};
  const auto trimmed = Trim(value);
  const char* end = trimmed.data() + trimmed.size();
  auto [ptr, ec] = std::from_chars(trimmed.data(), end, out);
  if (ec != std::errc() || ptr != end || trimmed.empty()) {
    Fail(ErrorCode::kInvalidArgument,
         std::string(key) + ": expected a number, got '" + std::string(value) + "'");
  }
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(out)) {
      Fail(ErrorCode::kInvalidArgument, std::string(key) + ": value must be finite");
    }
  }
  return out;
}

bool ParseBool(std::string_view key, std::string_view value) {
  const auto v = Trim(value);
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  Fail(ErrorCode::kInvalidArgument,
       std::string(key) + ": expected true or false, got '" + v + "'");
}

using Setter = std::function<void(RunConfig*, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& Setters() {
  static const auto* table = new std::map<std::string, Setter, std::less<>>{
      {"graph", [](RunConfig* c, std::string_view v) { c->graph = Trim(v); }},
      {"features", [](RunConfig* c, std::string_view v) { c->features = Trim(v); }},
      {"graph-name", [](RunConfig* c, std::string_view v) { c->graph_name = Trim(v); }},
      {"motif", [](RunConfig* c, std::string_view v) { c->motif = ParseMotifKind(Trim(v)); }},
      {"k",
       [](RunConfig* c, std::string_view v) {
         c->ks.clear();
         for (const auto& item : SplitList(v)) c->ks.push_back(ParseNumber<std::uint32_t>("k", item));
       }},
      {"density", [](RunConfig* c, std::string_view v) { c->density = ParseNumber<double>("density", v); }},
      {"h", [](RunConfig* c, std::string_view v) { c->featurize.h = ParseNumber<std::uint32_t>("h", v); }},
      {"scorers",
       [](RunConfig* c, std::string_view v) {
         c->scorers.clear();
         for (const auto& item : SplitList(v)) c->scorers.push_back(ParseScorer(item));
       }},
      {"aggregators",
       [](RunConfig* c, std::string_view v) {
         c->aggregators.clear();
         for (const auto& item : SplitList(v)) c->aggregators.push_back(ParseAggregator(item));
       }},
      {"weights",
       [](RunConfig* c, std::string_view v) {
         const auto s = Trim(v);
         if (s == "all" || s == "uniform-all") {
           c->weight_mode = WeightMode::kUniformAll;
         } else if (s == "nonexisting" || s == "uniform-nonexisting") {
           c->weight_mode = WeightMode::kUniformNonexisting;
         } else if (s.rfind("file:", 0) == 0 && s.size() > 5) {
           c->weight_mode = WeightMode::kCustom;
           c->weights_file = s.substr(5);
         } else {
           Fail(ErrorCode::kInvalidArgument,
                "weights: expected all, nonexisting or file:PATH, got '" + s + "'");
         }
       }},
      {"per-class", [](RunConfig* c, std::string_view v) { c->per_class = ParseNumber<std::size_t>("per-class", v); }},
      {"samples", [](RunConfig* c, std::string_view v) { c->per_class = ParseNumber<std::size_t>("samples", v); }},
      {"mix",
       [](RunConfig* c, std::string_view v) {
         const auto items = SplitList(v);
         if (items.size() != 3) {
           Fail(ErrorCode::kInvalidArgument, "mix: expected three fractions perturb,random,grow");
         }
         c->mix = {ParseNumber<double>("mix", items[0]), ParseNumber<double>("mix", items[1]),
                   ParseNumber<double>("mix", items[2])};
       }},
      {"split", [](RunConfig* c, std::string_view v) { c->split = ParseNumber<double>("split", v); }},
      {"seed", [](RunConfig* c, std::string_view v) { c->seed = ParseNumber<std::uint64_t>("seed", v); }},
      {"trials", [](RunConfig* c, std::string_view v) { c->trials = ParseNumber<std::uint32_t>("trials", v); }},
      {"labels", [](RunConfig* c, std::string_view v) { c->featurize.labels = ParseBool("labels", v); }},
      {"embedding", [](RunConfig* c, std::string_view v) { c->featurize.embedding = ParseBool("embedding", v); }},
      {"cap", [](RunConfig* c, std::string_view v) { c->featurize.cap = ParseNumber<std::size_t>("cap", v); }},
      {"score-on",
       [](RunConfig* c, std::string_view v) {
         const auto s = Trim(v);
         if (s == "masked") {
           c->score_on = ScoreOn::kMasked;
         } else if (s == "full") {
           c->score_on = ScoreOn::kFull;
         } else {
           Fail(ErrorCode::kInvalidArgument, "score-on: expected full or masked, got '" + s + "'");
         }
       }},
      {"embedding-file", [](RunConfig* c, std::string_view v) { c->embedding_file = Trim(v); }},
      {"inject-candidates",
       [](RunConfig* c, std::string_view v) { c->inject_candidates = ParseBool("inject-candidates", v); }},
      {"walks-per-node",
       [](RunConfig* c, std::string_view v) { c->walks_per_node = ParseNumber<std::uint32_t>("walks-per-node", v); }},
      {"walk-length",
       [](RunConfig* c, std::string_view v) { c->walk_length = ParseNumber<std::uint32_t>("walk-length", v); }},
      {"window", [](RunConfig* c, std::string_view v) { c->window = ParseNumber<std::uint32_t>("window", v); }},
      {"dim", [](RunConfig* c, std::string_view v) { c->dim = ParseNumber<std::size_t>("dim", v); }},
      {"cache-dir", [](RunConfig* c, std::string_view v) { c->cache_dir = Trim(v); }},
      {"queries", [](RunConfig* c, std::string_view v) { c->queries = Trim(v); }},
      {"scores", [](RunConfig* c, std::string_view v) { c->scores = Trim(v); }},
      {"output", [](RunConfig* c, std::string_view v) { c->output = Trim(v); }},
      {"summary", [](RunConfig* c, std::string_view v) { c->summary = Trim(v); }},
      {"scores-output", [](RunConfig* c, std::string_view v) { c->scores_output = Trim(v); }},
      {"threads", [](RunConfig* c, std::string_view v) { c->threads = ParseNumber<unsigned>("threads", v); }},
  };
  return *table;
}

}  // namespace

void ApplyConfigKey(RunConfig* config, std::string_view key,
                    std::string_view value) {
  const auto& table = Setters();
  auto it = table.find(Trim(key));
  if (it == table.end()) {
    Fail(ErrorCode::kInvalidArgument, "unknown configuration key '" + Trim(key) + "'");
  }
  it->second(config, value);
}

void ApplyConfigText(RunConfig* config, std::istream& in) {
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (Trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      Fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected key = value");
    }
    try {
      ApplyConfigKey(config, std::string_view(line).substr(0, eq),
                     std::string_view(line).substr(eq + 1));
    } catch (const Error& e) {
      Fail(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void ApplyConfigFile(RunConfig* config, const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open config file: " + path);
  try {
    ApplyConfigText(config, in);
  } catch (const Error& e) {
    Fail(e.code(), path + ": " + e.what());
  }
}

std::vector<std::string> ConfigKeys() {
  std::vector<std::string> keys;
  for (const auto& [key, setter] : Setters()) keys.push_back(key);
  return keys;
}

void ValidateConfig(const RunConfig& c) {
  Require(!c.ks.empty(), "k: at least one motif size is required");
  for (auto k : c.ks) MakeTemplate(c.motif, k, c.density);
  Require(c.featurize.h >= 1 && c.featurize.h <= 3, "h must be between 1 and 3");
  Require(!c.scorers.empty(), "scorers: at least one scorer is required");
  Require(!c.aggregators.empty(), "aggregators: at least one aggregator is required");
  Require(c.per_class >= 1, "per-class must be at least 1");
  Require(c.split > 0.0 && c.split < 1.0, "split must lie strictly between 0 and 1");
  Require(c.trials >= 1, "trials must be at least 1");
  Require(c.mix.perturb >= 0 && c.mix.random >= 0 && c.mix.grow >= 0 &&
              std::abs(c.mix.perturb + c.mix.random + c.mix.grow - 1.0) <= 1e-9,
          "mix fractions must be non-negative and sum to 1");
  Require(c.featurize.cap >= 1, "cap must be at least 1");
  Require(c.walks_per_node >= 1, "walks-per-node must be at least 1");
  Require(c.walk_length >= 2, "walk-length must be at least 2");
  Require(c.window >= 1, "window must be at least 1");
  Require(c.dim >= 1, "dim must be at least 1");
}

unsigned EffectiveThreads(const RunConfig& config) {
  if (config.threads > 0) return config.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace motifpred
