// Copyright 2026 The pqlucas Authors.
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
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + PQLUCAS_CLI_PATH + " " + args +
                          " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (char ch : line) {
      if (ch == '"') {
        quoted = !quoted;
      } else if (ch == ',' && !quoted) {
        cells.push_back(cell);
        cell.clear();
      } else {
        cell += ch;
      }
    }
    cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  ADD_FAILURE() << "missing column " << name;
  return 0;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "pqlucas_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

TEST(Cli, LucasFibonacciRow) {
  const CliResult r = run("lucas --p 0,1 --q 1 --x 1 --k 12");
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 14u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"k", "L_k", "L_k_series", "abs_diff"}));
  EXPECT_EQ(rows[13][1], "322");
  EXPECT_EQ(rows[13][2], "322");
}

TEST(Cli, LucasUsesCrlfRecords) {
  const CliResult r = run("lucas --p 1 --q 1 --k 1");
  EXPECT_NE(r.out.find("k,L_k,L_k_series,abs_diff\r\n"), std::string::npos);
}

TEST(Cli, MalformedPolynomialIsUsageError) {
  EXPECT_EQ(run("lucas --p 0,x --q 1").code, 2);
  EXPECT_EQ(run("lucas --p , --q 1").code, 2);
  EXPECT_EQ(run("lucas --q 1").code, 2);
}

TEST(Cli, UnknownSubcommandAndOptionAreUsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("bounds --no-such-option 1").code, 2);
  EXPECT_EQ(run("bounds --format xml").code, 2);
}

TEST(Cli, BoundsBistarlikeSinglePoint) {
  const CliResult r = run("bounds --preset bistarlike --p 1 --q 1 --upsilon 1");
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1][column(rows[0], "bound_a2")], "1");
  EXPECT_EQ(rows[1][column(rows[0], "bound_a3")], "1.5");
  EXPECT_EQ(rows[1][column(rows[0], "fs_bound")], "0.5");
}

TEST(Cli, BoundsDegenerateRowRendersInf) {
  const CliResult r = run("bounds --preset bistarlike --p 1 --q 0");
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1][column(rows[0], "bound_a2")], "inf");
  EXPECT_EQ(rows[1][column(rows[0], "regime")], "degenerate");
  EXPECT_NE(rows[1][column(rows[0], "flags")], "");
  EXPECT_EQ(r.out.find("nan"), std::string::npos);
}

TEST(Cli, BoundsRangeGrid) {
  const CliResult r = run("bounds --lambda 1:2:3 --mu 0:1:2 --x 0:1:2 --p 0.5,1 --q 1");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(csv_rows(r.out).size(), 1u + 3 * 2 * 2);
}

TEST(Cli, BoundsRangeValidation) {
  EXPECT_EQ(run("bounds --lambda 2:1:3").code, 2);
  EXPECT_EQ(run("bounds --lambda 1:2:0").code, 2);
  EXPECT_EQ(run("bounds --lambda 1:2").code, 2);
  EXPECT_EQ(run("bounds --lambda 0.5").code, 2);
  EXPECT_EQ(run("bounds --preset bistarlike --mu 1").code, 2);
}

TEST(Cli, FeketeSweepIsNondecreasingPastBoundary) {
  const CliResult r = run("fekete --preset bistarlike --p 1 --q 1 --upsilon 0:3:31");
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 32u);
  const std::size_t fs_col = column(rows[0], "fs_bound");
  const std::size_t reg_col = column(rows[0], "regime");
  bool seen_boundary = false;
  double last = -1;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double v = std::stod(rows[i][fs_col]);
    if (rows[i][reg_col] == "boundary") seen_boundary = true;
    if (seen_boundary) {
      EXPECT_GE(v, last - 1e-12) << i;
      last = v;
    }
  }
  EXPECT_TRUE(seen_boundary);
  EXPECT_EQ(rows.back()[reg_col], "case2");
}

TEST(Cli, OperatorJsonCarriesSeriesArrays) {
  const CliResult r = run("operator --lambda 2 --mu 1 --delta 0.5 --a 0.3,-0.2 --order 5 --format json");
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc["pass"].get<bool>());
  EXPECT_NEAR(doc["coeff_z"].get<double>(), 4 * 0.3, 1e-12);
  EXPECT_EQ(doc["series_z"].size(), 6u);
  EXPECT_EQ(doc["residuals"].size(), 4u);
  EXPECT_EQ(doc["rows"].size(), 4u);
}

TEST(Cli, OperatorRandomIsSeeded) {
  const CliResult a = run("operator --random --seed 5 --format json");
  const CliResult b = run("operator --random --seed 5 --format json");
  const CliResult c = run("operator --random --seed 6 --format json");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, MemberPassAndFail) {
  EXPECT_EQ(run("member --a 0 --radii 8 --angles 16").code, 0);
  const CliResult bad = run("member --a 0.9,0.9 --radii 8 --angles 16 --format json");
  EXPECT_EQ(bad.code, 1);
  const auto doc = nlohmann::json::parse(bad.out);
  EXPECT_FALSE(doc["pass"].get<bool>());
  EXPECT_LT(doc["min_margin"].get<double>(), 0);
  EXPECT_EQ(run("member --radii 0").code, 2);
}

TEST(Cli, VerifyJsonShape) {
  const CliResult r = run("verify --draws 4 --grid-n 5 --seed 9");
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc["pass"].get<bool>());
  ASSERT_EQ(doc["rows"].size(), 12u);
  for (const auto& row : doc["rows"]) {
    for (const char* key : {"functional", "supremum", "argmax_r1", "argmax_s2", "bound",
                            "ratio", "mode", "pass"}) {
      EXPECT_TRUE(row.contains(key)) << key;
    }
  }
  for (const char* f : {"abs_a2", "abs_a3", "fekete"}) {
    EXPECT_TRUE(doc["summary"][f].contains("median")) << f;
  }
  EXPECT_NEAR(doc["summary"]["abs_a2"]["max"].get<double>(), 1 / std::sqrt(2.0), 1e-6);
}

TEST(Cli, VerifyIsByteIdenticalAcrossThreads) {
  const CliResult one = run("verify --draws 6 --grid-n 7 --threads 1");
  const CliResult many = run("verify --draws 6 --grid-n 7 --threads 3");
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.out, many.out);
}

TEST(Cli, VerifySinglePoint) {
  const CliResult r = run("verify --point --lambda 2 --mu 1 --p 1 --q 0.5 --upsilon 2 --grid-n 5 "
                    "--format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(csv_rows(r.out).size(), 4u);
  EXPECT_EQ(run("verify --grid-n 1").code, 2);
}

TEST(Cli, ConfigFileSuppliesDefaults) {
  const fs::path cfg = scratch("verify.ini");
  std::ofstream(cfg) << "# small run\ndraws = 2\ngrid-n=5\nformat=csv\n";
  const CliResult r = run("verify --config " + cfg.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(csv_rows(r.out).size(), 1u + 2 * 3);
  const CliResult overridden = run("verify --config " + cfg.string() + " --draws 3");
  EXPECT_EQ(csv_rows(overridden.out).size(), 1u + 3 * 3);

  const fs::path bounds_cfg = scratch("bounds.ini");
  std::ofstream(bounds_cfg) << "preset=bistarlike\np=1\nq=1\n";
  const auto rows = csv_rows(run("bounds --config " + bounds_cfg.string()).out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1][column(rows[0], "bound_a3")], "1.5");
}

TEST(Cli, ConfigErrors) {
  EXPECT_EQ(run("verify --config /nonexistent/pqlucas.ini").code, 3);
  const fs::path cfg = scratch("broken.ini");
  std::ofstream(cfg) << "draws\n";
  EXPECT_EQ(run("verify --config " + cfg.string()).code, 2);
}

TEST(Cli, OutputFileAndDirectoryVariable) {
  const fs::path dir = scratch("outdir");
  fs::create_directories(dir);
  fs::remove(dir / "lucas.csv");
  const CliResult r = run("lucas --p 1 --q 1 --k 3 --out lucas.csv",
                    "PQLUCAS_OUTPUT_DIR=" + dir.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(dir / "lucas.csv");
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(csv_rows(text.str()).size(), 5u);
}

TEST(Cli, UnwritableOutputIsIoError) {
  EXPECT_EQ(run("lucas --p 1 --q 1 --out /nonexistent/dir/out.csv").code, 3);
}

}  // namespace
