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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace floquet_walk {

/// Named columns of reals, all of equal length.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> values;  // values[c][row]

  void add_column(std::string name, std::vector<double> data);
  std::size_t rows() const;
};

/// 15 significant digits, shortest form, independent of the global locale.
std::string format_number(double value);

/// Header line plus one line per row, every line newline-terminated.
/// Throws kSizeMismatch for ragged tables.
std::string to_csv(const CsvTable& table);

/// Throws kIoFailure when the file cannot be written.
void emit_csv(const CsvTable& table, const std::filesystem::path& path);

/// Inverse of to_csv. Throws kInvalidArgument on malformed input.
CsvTable parse_csv(std::string_view text);

}  // namespace floquet_walk
