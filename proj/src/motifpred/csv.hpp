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

#ifndef MOTIFPRED_CSV_HPP_
#define MOTIFPRED_CSV_HPP_

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace motifpred {

// Quotes a field when it holds a comma, quote or line break.
std::string CsvField(std::string_view value);
void WriteCsvRow(std::ostream& out, const std::vector<std::string>& fields);

// Reads one record, following quoted fields across line breaks. Returns
// false at end of input. `line_no` advances by the physical lines consumed.
bool ReadCsvRecord(std::istream& in, std::vector<std::string>* fields,
                   std::uint64_t* line_no);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a header column, or throws kParse listing the header.
  std::size_t Column(std::string_view name) const;
};

CsvTable ReadCsv(std::istream& in);
CsvTable ReadCsvFile(const std::string& path);

}  // namespace motifpred

#endif  // MOTIFPRED_CSV_HPP_
