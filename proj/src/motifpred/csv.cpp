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

#include "motifpred/csv.hpp"

#include <fstream>

#include "motifpred/error.hpp"

namespace motifpred {
namespace {

bool NextLine(std::istream& in, std::string* line) {
  if (!std::getline(in, *line)) return false;
  if (!line->empty() && line->back() == '\r') line->pop_back();
  return true;
}

}  // namespace

std::string CsvField(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(value);
  }
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void WriteCsvRow(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << ',';
    out << CsvField(fields[i]);
  }
  out << "\r\n";
}

bool ReadCsvRecord(std::istream& in, std::vector<std::string>* fields,
                   std::uint64_t* line_no) {
  fields->clear();
  std::string line;
  if (!NextLine(in, &line)) return false;
  ++*line_no;
  const std::uint64_t first_line = *line_no;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0;; ++i) {
    if (i == line.size()) {
      if (!quoted) break;
      if (!NextLine(in, &line)) {
        Fail(ErrorCode::kParse,
             "line " + std::to_string(first_line) + ": unterminated quoted field");
      }
      ++*line_no;
      field += '\n';
      i = static_cast<std::size_t>(-1);
      continue;
    }
    const char c = line[i];
    if (quoted) {
      if (c != '"') {
        field += c;
      } else if (i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else {
        quoted = false;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields->push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields->push_back(std::move(field));
  return true;
}

std::size_t CsvTable::Column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  std::string known;
  for (const auto& h : header) known += (known.empty() ? "" : ", ") + h;
  Fail(ErrorCode::kParse, "no column '" + std::string(name) + "' (have: " + known + ")");
}

CsvTable ReadCsv(std::istream& in) {
  CsvTable table;
  std::uint64_t line_no = 0;
  if (!ReadCsvRecord(in, &table.header, &line_no)) {
    Fail(ErrorCode::kParse, "CSV input is empty");
  }
  std::vector<std::string> fields;
  while (ReadCsvRecord(in, &fields, &line_no)) {
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() != table.header.size()) {
      Fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(table.header.size()) + " fields, got " +
                                  std::to_string(fields.size()));
    }
    table.rows.push_back(fields);
  }
  return table;
}

CsvTable ReadCsvFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open CSV file: " + path);
  return ReadCsv(in);
}

}  // namespace motifpred
