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

#include "csv.h"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "fleetplan/error.h"

namespace fleetplan::internal {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::vector<std::string_view> SplitCsvLine(std::string_view line) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(Trim(line.substr(start)));
      break;
    }
    out.push_back(Trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

CsvReader::CsvReader(std::istream& in, const std::vector<std::string>& required)
    : in_(in) {
  std::string header;
  while (std::getline(in_, header)) {
    ++line_;
    if (!Trim(header).empty()) break;
  }
  if (Trim(header).empty()) throw InputError("empty CSV input: missing header");
  // Strip a UTF-8 byte order mark.
  if (header.size() >= 3 && header.compare(0, 3, "\xEF\xBB\xBF") == 0) {
    header.erase(0, 3);
  }
  const auto names = SplitCsvLine(header);
  for (const std::string& want : required) {
    int found = -1;
    for (size_t i = 0; i < names.size(); ++i) {
      if (names[i] == want) found = static_cast<int>(i);
    }
    if (found < 0) {
      throw RowError(line_, "missing column '" + want + "' in header");
    }
    column_index_.push_back(found);
  }
}

bool CsvReader::Next() {
  while (std::getline(in_, current_)) {
    ++line_;
    if (Trim(current_).empty()) continue;
    fields_ = SplitCsvLine(current_);
    for (int idx : column_index_) {
      if (idx >= static_cast<int>(fields_.size())) {
        throw RowError(line_, "expected at least " + std::to_string(idx + 1) +
                                  " fields, got " +
                                  std::to_string(fields_.size()));
      }
    }
    return true;
  }
  return false;
}

std::string_view CsvReader::Field(int column) const {
  return fields_[column_index_[column]];
}

double CsvReader::GetDouble(int column) const {
  const std::string_view f = Field(column);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
  if (ec != std::errc() || ptr != f.data() + f.size() || f.empty() ||
      !std::isfinite(value)) {
    throw RowError(line_, "not a number: '" + std::string(f) + "'");
  }
  return value;
}

long long CsvReader::GetInt(int column) const {
  const std::string_view f = Field(column);
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
  if (ec != std::errc() || ptr != f.data() + f.size() || f.empty()) {
    throw RowError(line_, "not an integer: '" + std::string(f) + "'");
  }
  return value;
}

std::string FormatDouble(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace fleetplan::internal
