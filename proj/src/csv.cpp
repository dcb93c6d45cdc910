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

#include "rlrqaoa/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "rlrqaoa/error.hpp"

namespace rlrqaoa {

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_number(std::optional<double> x) {
  return x ? format_number(*x) : std::string("NA");
}

CsvWriter::CsvWriter(const std::filesystem::path &path,
                     std::vector<std::string> columns)
    : out_(path, std::ios::binary), columns_(std::move(columns)), path_(path) {
  if (!out_)
    throw Error(ErrorKind::io_error, "cannot write " + path.string());
  row(columns_);
}

void CsvWriter::row(const std::vector<std::string> &cells) {
  if (cells.size() != columns_.size())
    throw Error(ErrorKind::invalid_argument,
                "row width " + std::to_string(cells.size()) + " does not match " +
                    path_.filename().string() + " header");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i)
      out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
  if (!out_)
    throw Error(ErrorKind::io_error, "write failed on " + path_.string());
}

std::size_t CsvTable::column(const std::string &name) const {
  return static_cast<std::size_t>(
      std::find(header.begin(), header.end(), name) - header.begin());
}

CsvTable read_csv(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::io_error, "cannot read " + path.string());
  CsvTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
      cells.push_back(cell);
    if (!line.empty() && line.back() == ',')
      cells.emplace_back();
    if (first) {
      table.header = std::move(cells);
      first = false;
    } else {
      if (cells.size() != table.header.size())
        throw Error(ErrorKind::parse_error,
                    path.string() + ": row width differs from header");
      table.rows.push_back(std::move(cells));
    }
  }
  return table;
}

} // namespace rlrqaoa
