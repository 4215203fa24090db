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

#include "motifpred/dataset_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

#include <json.hpp>

#include "motifpred/error.hpp"

namespace motifpred {
namespace {

using Json = nlohmann::json;

void AppendFloat(std::string* out, float v) {
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.9g", static_cast<double>(v));
  out->append(buf, static_cast<std::size_t>(len));
}

void AppendString(std::string* out, const std::string& s) {
  out->append(Json(s).dump());
}

template <typename T>
T Field(const Json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) Fail(ErrorCode::kParse, std::string("missing field '") + name + "'");
  try {
    return it->get<T>();
  } catch (const Json::exception&) {
    Fail(ErrorCode::kParse, std::string("field '") + name + "' has the wrong type");
  }
}

void WarnUnknown(const Json& obj, const std::set<std::string>& known,
                 const std::string& prefix, std::vector<std::string>* warnings) {
  if (warnings == nullptr) return;
  for (const auto& [key, value] : obj.items()) {
    if (!known.count(key)) warnings->push_back("ignoring unknown field '" + prefix + key + "'");
  }
}

}  // namespace

std::string StrategyTag(const LabeledSubgraph& x) {
  std::string tag(StrategyName(x.strategy));
  if (x.unmasked) tag += "+unmasked";
  if (x.sub.capped) tag += "+capped";
  return tag;
}

DatasetRecord MakeRecord(std::uint64_t id, const LabeledSubgraph& x,
                         const MotifTemplate& tmpl, RecordMeta meta) {
  DatasetRecord r;
  r.id = id;
  r.label = x.label ? 1 : 0;
  r.k = tmpl.k;
  r.motif = tmpl.Tag();
  r.inner.resize(tmpl.k);
  for (std::uint32_t i = 0; i < tmpl.k; ++i) r.inner[i] = i;
  r.num_nodes = x.sub.size();
  for (auto [u, v] : x.sub.local.Edges()) r.edges.emplace_back(u, v);
  r.features.resize(r.num_nodes);
  for (std::uint32_t row = 0; row < r.num_nodes; ++row) {
    auto begin = x.features.begin() + static_cast<std::ptrdiff_t>(row * x.cols);
    r.features[row].assign(begin, begin + static_cast<std::ptrdiff_t>(x.cols));
  }
  meta.strategy_tag = StrategyTag(x);
  r.meta = std::move(meta);
  return r;
}

void ValidateRecord(const DatasetRecord& r) {
  auto bad = [&](const std::string& why) {
    Fail(ErrorCode::kInvalidArgument, "record " + std::to_string(r.id) + ": " + why);
  };
  if (r.label > 1) bad("label must be 0 or 1");
  if (r.inner.size() != r.k) bad("inner has " + std::to_string(r.inner.size()) + " ids, k is " + std::to_string(r.k));
  for (std::uint32_t i = 0; i < r.inner.size(); ++i) {
    if (r.inner[i] != i) bad("inner ids must be 0..k-1");
  }
  if (r.num_nodes < r.k) bad("num_nodes is smaller than k");
  for (std::size_t i = 0; i < r.edges.size(); ++i) {
    auto [u, v] = r.edges[i];
    if (!(u < v)) bad("edge endpoints must satisfy u < v");
    if (v >= r.num_nodes) bad("edge endpoint out of range");
    if (i > 0 && !(r.edges[i - 1] < r.edges[i])) bad("edges must be unique and sorted");
  }
  if (r.features.size() != r.num_nodes) bad("feature row count differs from num_nodes");
  for (const auto& row : r.features) {
    if (row.size() != r.features.front().size()) bad("feature rows differ in length");
    for (float x : row) {
      if (!std::isfinite(x)) bad("non-finite feature value");
    }
  }
}

std::string RecordToJson(const DatasetRecord& r) {
  std::string out;
  out.reserve(64 + r.edges.size() * 12 +
              r.features.size() * (r.features.empty() ? 0 : r.features[0].size()) * 12);
  out += "{\"id\":" + std::to_string(r.id);
  out += ",\"label\":" + std::to_string(r.label);
  out += ",\"k\":" + std::to_string(r.k);
  out += ",\"motif\":";
  AppendString(&out, r.motif);
  out += ",\"inner\":[";
  for (std::size_t i = 0; i < r.inner.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(r.inner[i]);
  }
  out += "],\"num_nodes\":" + std::to_string(r.num_nodes);
  out += ",\"edges\":[";
  for (std::size_t i = 0; i < r.edges.size(); ++i) {
    if (i > 0) out += ',';
    out += '[' + std::to_string(r.edges[i].first) + ',' + std::to_string(r.edges[i].second) + ']';
  }
  out += "],\"features\":[";
  for (std::size_t i = 0; i < r.features.size(); ++i) {
    if (i > 0) out += ',';
    out += '[';
    for (std::size_t j = 0; j < r.features[i].size(); ++j) {
      if (j > 0) out += ',';
      AppendFloat(&out, r.features[i][j]);
    }
    out += ']';
  }
  out += "],\"meta\":{\"h\":" + std::to_string(r.meta.h);
  out += ",\"seed\":" + std::to_string(r.meta.seed);
  out += ",\"strategy_tag\":";
  AppendString(&out, r.meta.strategy_tag);
  out += ",\"graph_name\":";
  AppendString(&out, r.meta.graph_name);
  out += "}}";
  return out;
}

DatasetRecord RecordFromJson(const std::string& line,
                             std::vector<std::string>* warnings) {
  Json obj;
  try {
    obj = Json::parse(line);
  } catch (const Json::parse_error& e) {
    Fail(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  if (!obj.is_object()) Fail(ErrorCode::kParse, "record is not a JSON object");
  DatasetRecord r;
  r.id = Field<std::uint64_t>(obj, "id");
  const auto label = Field<int>(obj, "label");
  if (label != 0 && label != 1) Fail(ErrorCode::kParse, "label must be 0 or 1");
  r.label = static_cast<std::uint8_t>(label);
  r.k = Field<std::uint32_t>(obj, "k");
  r.motif = Field<std::string>(obj, "motif");
  r.inner = Field<std::vector<std::uint32_t>>(obj, "inner");
  r.num_nodes = Field<std::uint32_t>(obj, "num_nodes");
  r.edges = Field<std::vector<std::pair<std::uint32_t, std::uint32_t>>>(obj, "edges");
  r.features = Field<std::vector<std::vector<float>>>(obj, "features");
  const auto meta = Field<Json>(obj, "meta");
  if (!meta.is_object()) Fail(ErrorCode::kParse, "field 'meta' has the wrong type");
  r.meta.h = Field<std::uint32_t>(meta, "h");
  r.meta.seed = Field<std::uint64_t>(meta, "seed");
  r.meta.strategy_tag = Field<std::string>(meta, "strategy_tag");
  r.meta.graph_name = Field<std::string>(meta, "graph_name");
  WarnUnknown(obj, {"id", "label", "k", "motif", "inner", "num_nodes", "edges", "features", "meta"},
              "", warnings);
  WarnUnknown(meta, {"h", "seed", "strategy_tag", "graph_name"}, "meta.", warnings);
  try {
    ValidateRecord(r);
  } catch (const Error& e) {
    Fail(ErrorCode::kParse, e.what());
  }
  return r;
}

void WriteRecords(std::ostream& out, const std::vector<DatasetRecord>& records) {
  for (const auto& r : records) {
    ValidateRecord(r);
    out << RecordToJson(r) << '\n';
  }
}

ExportCounts ExportDataset(const FeaturizedSet& set, const MotifTemplate& tmpl,
                           const RecordMeta& meta, const std::string& path) {
  ExportCounts counts;
  std::uint64_t id = 0;
  auto write = [&](const std::vector<LabeledSubgraph>& part, const std::string& file) {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) Fail(ErrorCode::kIo, "cannot write dataset file: " + file);
    for (const auto& x : part) {
      const auto r = MakeRecord(id++, x, tmpl, meta);
      ValidateRecord(r);
      out << RecordToJson(r) << '\n';
    }
    out.flush();
    if (!out) Fail(ErrorCode::kIo, "write failed: " + file);
    return part.size();
  };
  counts.train = write(set.train, path + ".train.jsonl");
  counts.validation = write(set.validation, path + ".val.jsonl");
  return counts;
}

std::vector<DatasetRecord> ReadRecords(std::istream& in,
                                       std::vector<std::string>* warnings) {
  std::vector<DatasetRecord> records;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> local;
    try {
      records.push_back(RecordFromJson(line, warnings ? &local : nullptr));
    } catch (const Error& e) {
      Fail(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
    if (warnings != nullptr) {
      for (auto& w : local) warnings->push_back("line " + std::to_string(line_no) + ": " + w);
    }
  }
  return records;
}

std::vector<DatasetRecord> ReadRecordsFile(const std::string& file,
                                           std::vector<std::string>* warnings) {
  std::ifstream in(file);
  if (!in) Fail(ErrorCode::kIo, "cannot open dataset file: " + file);
  return ReadRecords(in, warnings);
}

}  // namespace motifpred
