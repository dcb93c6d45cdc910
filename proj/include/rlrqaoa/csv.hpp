// Copyright 2026 The rlrqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace rlrqaoa {

/// Shortest round-trip text for a double ("%.17g"); "NA" for nullopt.
std::string format_number(double x);
std::string format_number(std::optional<double> x);

/// Comma-separated file with a fixed header. Cells are written verbatim, so
/// callers must not pass text containing commas, quotes or newlines.
class CsvWriter {
public:
  CsvWriter(const std::filesystem::path &path, std::vector<std::string> columns);

  void row(const std::vector<std::string> &cells);
  const std::vector<std::string> &columns() const { return columns_; }

private:
  std::ofstream out_;
  std::vector<std::string> columns_;
  std::filesystem::path path_;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column position, or header.size() when absent.
  std::size_t column(const std::string &name) const;
};

CsvTable read_csv(const std::filesystem::path &path);

} // namespace rlrqaoa
