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


#include <gtest/gtest.h>

#include <clocale>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <locale>
#include <random>
#include <sstream>

#include "floquet_walk/csv.hpp"
#include "floquet_walk/error.hpp"

namespace fw = floquet_walk;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Csv, FormatNumber) {
  EXPECT_EQ(fw::format_number(0.5), "0.5");
  EXPECT_EQ(fw::format_number(-2.0), "-2");
  EXPECT_EQ(fw::format_number(1.0 / 3.0), "0.333333333333333");
  EXPECT_EQ(fw::format_number(1e-20), "1e-20");
}

TEST(Csv, EmptyAndSingleCell) {
  fw::CsvTable empty;
  empty.columns = {"a", "b"};
  empty.values = {{}, {}};
  EXPECT_EQ(fw::to_csv(empty), "a,b\n");
  fw::CsvTable one;
  one.add_column("col", {0.5});
  EXPECT_EQ(fw::to_csv(one), "col\n0.5\n");
}

TEST(Csv, RaggedRejected) {
  fw::CsvTable t;
  t.add_column("a", {1.0, 2.0});
  t.add_column("b", {1.0});
  EXPECT_THROW(fw::to_csv(t), fw::Error);
}

TEST(Csv, RoundTripAtFifteenDigits) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  fw::CsvTable t;
  for (const char* name : {"A", "T", "phi"}) {
    std::vector<double> col;
    for (int k = 0; k < 50; ++k) col.push_back(u(rng));
    t.add_column(name, col);
  }
  const auto back = fw::parse_csv(fw::to_csv(t));
  ASSERT_EQ(back.columns, t.columns);
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t r = 0; r < 50; ++r) {
      EXPECT_EQ(fw::format_number(back.values[c][r]), fw::format_number(t.values[c][r]));
      EXPECT_NEAR(back.values[c][r], t.values[c][r], 1e-13 * std::abs(t.values[c][r]));
    }
  }
  EXPECT_EQ(fw::to_csv(back), fw::to_csv(t));
}

TEST(Csv, LocaleIndependent) {
  fw::CsvTable t;
  t.add_column("x", {1.25, -3.5e-7});
  const std::string before = fw::to_csv(t);
  const char* names[] = {"de_DE.UTF-8", "fr_FR.UTF-8", "de_DE", "C.UTF-8"};
  for (const char* name : names) {
    if (std::setlocale(LC_ALL, name) != nullptr) break;
  }
  try {
    std::locale::global(std::locale(""));
  } catch (const std::exception&) {
  }
  EXPECT_EQ(fw::to_csv(t), before);
  std::setlocale(LC_ALL, "C");
  std::locale::global(std::locale::classic());
}

TEST(Csv, EmitAndIoFailure) {
  const auto dir = std::filesystem::temp_directory_path() / "floquet_walk_csv_test";
  std::filesystem::create_directories(dir);
  fw::CsvTable t;
  t.add_column("v", {0.1, 0.2});
  fw::emit_csv(t, dir / "t.csv");
  EXPECT_EQ(slurp(dir / "t.csv"), "v\n0.1\n0.2\n");
  try {
    fw::emit_csv(t, dir / "missing" / "deeper" / "t.csv");
    ADD_FAILURE();
  } catch (const fw::Error& e) {
    EXPECT_EQ(e.code(), fw::ErrorCode::kIoFailure);
  }
  std::filesystem::remove_all(dir);
}

TEST(Csv, ParseRejectsGarbage) {
  EXPECT_THROW(fw::parse_csv("a,b\n1,x\n"), fw::Error);
  EXPECT_THROW(fw::parse_csv("a,b\n1\n"), fw::Error);
}
