// Copyright 2026 The reas-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REAS_CSV_HPP
#define REAS_CSV_HPP

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace reas {

// Shortest round-trip decimal form; identical across runs and thread counts.
std::string format_double(double v);

using CsvValue = std::variant<std::string, double, int64_t>;

class CsvWriter {
public:
  explicit CsvWriter(std::ostream& out, std::vector<std::string> header);
  void row(const std::vector<CsvValue>& values);

private:
  std::ostream& out_;
  size_t columns_;
};

// RFC-style quoting: fields containing commas, quotes or newlines are
// quoted, embedded quotes doubled.
std::string csv_escape(const std::string& field);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const;  // -1 when absent
};

CsvTable read_csv(std::istream& in);

}  // namespace reas

#endif  // REAS_CSV_HPP
