// Copyright 2026 The fleetplan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Minimal reader for the numeric, unquoted CSV files this library consumes.

#ifndef FLEETPLAN_SRC_CSV_H_
#define FLEETPLAN_SRC_CSV_H_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace fleetplan::internal {

class CsvReader {
 public:
  // Reads the header line and checks that every name in `required` is
  // present. Extra columns are ignored.
  CsvReader(std::istream& in, const std::vector<std::string>& required);

  // Advances to the next non-blank row. Returns false at end of input.
  bool Next();

  int line() const { return line_; }
  double GetDouble(int column) const;
  long long GetInt(int column) const;

 private:
  std::string_view Field(int column) const;

  std::istream& in_;
  std::vector<int> column_index_;  // required column -> position in row
  std::string current_;
  std::vector<std::string_view> fields_;
  int line_ = 0;
};

std::vector<std::string_view> SplitCsvLine(std::string_view line);

// "%.17g"; round-trip safe for every finite double.
std::string FormatDouble(double value);

}  // namespace fleetplan::internal

#endif  // FLEETPLAN_SRC_CSV_H_
