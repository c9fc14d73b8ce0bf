// Copyright 2026 The floquet-walk Authors
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

#include "floquet_walk/csv.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

#include "floquet_walk/error.hpp"

namespace floquet_walk {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

void CsvTable::add_column(std::string name, std::vector<double> data) {
  columns.push_back(std::move(name));
  values.push_back(std::move(data));
}

std::size_t CsvTable::rows() const { return values.empty() ? 0 : values.front().size(); }

std::string format_number(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 15);
  return std::string(buf, result.ptr);
}

std::string to_csv(const CsvTable& table) {
  if (table.columns.size() != table.values.size()) {
    throw Error(ErrorCode::kSizeMismatch, "column names and data differ in count");
  }
  const std::size_t rows = table.rows();
  for (const auto& col : table.values) {
    if (col.size() != rows) throw Error(ErrorCode::kSizeMismatch, "columns differ in length");
  }
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < table.values.size(); ++c) {
      if (c) out += ',';
      out += format_number(table.values[c][r]);
    }
    out += '\n';
  }
  return out;
}

void emit_csv(const CsvTable& table, const std::filesystem::path& path) {
  const std::string text = to_csv(table);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string() + " for writing");
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!file) throw Error(ErrorCode::kIoFailure, "failed writing " + path.string());
}

CsvTable parse_csv(std::string_view text) {
  auto lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw Error(ErrorCode::kInvalidArgument, "CSV without header");
  CsvTable table;
  for (auto name : split(lines.front(), ',')) table.add_column(std::string(name), {});
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto cells = split(lines[r], ',');
    if (cells.size() != table.columns.size()) {
      throw Error(ErrorCode::kInvalidArgument, "CSV row " + std::to_string(r) + " has wrong width");
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      double v = 0.0;
      const auto* end = cells[c].data() + cells[c].size();
      const auto [ptr, ec] = std::from_chars(cells[c].data(), end, v);
      if (ec != std::errc() || ptr != end) {
        throw Error(ErrorCode::kInvalidArgument, "CSV cell '" + std::string(cells[c]) + "' is not a number");
      }
      table.values[c].push_back(v);
    }
  }
  return table;
}

}  // namespace floquet_walk
