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

#ifndef MOTIFPRED_DATASET_IO_HPP_
#define MOTIFPRED_DATASET_IO_HPP_

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "motifpred/featurization.hpp"
#include "motifpred/motif.hpp"

namespace motifpred {

struct RecordMeta {
  std::uint32_t h = 1;
  std::uint64_t seed = 0;
  std::string strategy_tag;
  std::string graph_name;

  bool operator==(const RecordMeta&) const = default;
};

// One line of a .jsonl dataset file.
struct DatasetRecord {
  std::uint64_t id = 0;
  std::uint8_t label = 0;
  std::uint32_t k = 0;
  std::string motif;
  std::vector<std::uint32_t> inner;
  std::uint32_t num_nodes = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<std::vector<float>> features;
  RecordMeta meta;

  bool operator==(const DatasetRecord&) const = default;
};

// Strategy name plus "+unmasked" / "+capped" markers.
std::string StrategyTag(const LabeledSubgraph& x);

DatasetRecord MakeRecord(std::uint64_t id, const LabeledSubgraph& x,
                         const MotifTemplate& tmpl, RecordMeta meta);

// Throws kInvalidArgument naming the record id.
void ValidateRecord(const DatasetRecord& r);

// Single line, no trailing newline. Floats use 9 significant digits.
std::string RecordToJson(const DatasetRecord& r);
DatasetRecord RecordFromJson(const std::string& line,
                             std::vector<std::string>* warnings = nullptr);

struct ExportCounts {
  std::size_t train = 0;
  std::size_t validation = 0;
};

// Writes <path>.train.jsonl and <path>.val.jsonl. Ids run over training
// records first, then validation records.
ExportCounts ExportDataset(const FeaturizedSet& set, const MotifTemplate& tmpl,
                           const RecordMeta& meta, const std::string& path);

void WriteRecords(std::ostream& out, const std::vector<DatasetRecord>& records);
// Errors carry the line number. Unknown fields are skipped and reported
// through `warnings` when given.
std::vector<DatasetRecord> ReadRecords(std::istream& in,
                                       std::vector<std::string>* warnings = nullptr);
std::vector<DatasetRecord> ReadRecordsFile(const std::string& file,
                                           std::vector<std::string>* warnings = nullptr);

}  // namespace motifpred

#endif  // MOTIFPRED_DATASET_IO_HPP_
