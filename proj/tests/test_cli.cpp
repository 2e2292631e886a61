// Copyright 2026 The spoofrelay Authors
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


// Runs the spoofrelay executable as a subprocess.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliRun {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(SPOOFRELAY_CLI) + " " + args + " 2>&1";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) {
  return std::string(SPOOFRELAY_TEST_DATA) + "/" + name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("spoofrelay_cli_" + name);
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(CliSolve, JammingFixture) {
  const CliRun r = run_cli("solve --scenario " + data("case2_jamming.txt"));
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(contains(r.output, "strategy:       jamming\n")) << r.output;
  EXPECT_TRUE(contains(r.output, "leakage_bps_hz: 2.58496250072\n")) << r.output;
  EXPECT_TRUE(contains(r.output, "\njamming,0,1,3.14159265,5,5,2.5849625,0,1\n")) << r.output;
}

TEST(CliSolve, InfeasibleFixtureExitsZero) {
  const CliRun r = run_cli("solve --scenario " + data("infeasible_no_relay_path.txt"));
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(contains(r.output, "strategy:       infeasible\n"));
  EXPECT_TRUE(contains(r.output, "leakage_bps_hz: 0\n"));
}

TEST(CliSolve, GeometryFixture) {
  const CliRun r = run_cli("solve --scenario " + data("geometry_500m.txt"));
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(contains(r.output, "strategy:       constructive\n"));
}

TEST(CliSolve, WritesRecordFile) {
  const auto out = temp_file("solve.csv");
  const CliRun r = run_cli("solve --scenario " + data("case1_no_relay_path.json") + " --out " +
                        out.string());
  ASSERT_EQ(r.exit_code, 0) << r.output;
  const std::string csv = slurp(out);
  EXPECT_EQ(csv.rfind("strategy,rho_star,v_mag,v_phase_rad,gamma_d,gamma_e,leakage_bps_hz,"
                      "residual,jam_power\nconstructive,0.75,",
                      0),
            0u)
      << csv;
  std::filesystem::remove(out);
}

TEST(CliSolve, MalformedFileDiagnostics) {
  const CliRun r = run_cli("solve --scenario " + data("malformed_value.txt"));
  EXPECT_NE(r.exit_code, 0);
  EXPECT_TRUE(contains(r.output, "malformed_value.txt:3: field 'h_se_re'")) << r.output;
}

TEST(CliSolve, MissingFile) {
  const CliRun r = run_cli("solve --scenario " + data("absent.txt"));
  EXPECT_NE(r.exit_code, 0);
}

TEST(CliSweep, DefaultConfig) {
  const auto out = temp_file("sweep.csv");
  const CliRun r = run_cli("sweep --config " + data("sweep_default.txt") + " --out " + out.string());
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(contains(r.output, "points: 591\n"));
  EXPECT_TRUE(contains(r.output, "constructive         [50, 1000) m")) << r.output;
  EXPECT_TRUE(contains(r.output, "dominance violations: 0\n"));

  std::istringstream csv(slurp(out));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "d_se_m,passive_bps_hz,active_bps_hz,strategy,rho_star,v_mag,jam_power");
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    double d = 0, passive = 0;
    ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf", &d, &passive), 2);
    if (d <= 1000.0) EXPECT_EQ(line.substr(line.find(',') + 1, 10), "3.45943162");
  }
  EXPECT_EQ(rows, 591);
  std::filesystem::remove(out);
}

TEST(CliSweep, ByteIdenticalRuns) {
  const auto a = temp_file("sweep_a.csv");
  const auto b = temp_file("sweep_b.csv");
  const CliRun ra = run_cli("sweep --config " + data("sweep_default.txt") + " --out " + a.string());
  const CliRun rb = run_cli("sweep --config " + data("sweep_default.txt") + " --out " + b.string());
  ASSERT_EQ(ra.exit_code, 0);
  ASSERT_EQ(rb.exit_code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(CliSweep, NeedsOutputPath) {
  const CliRun r = run_cli("sweep --config " + data("sweep_default.txt"));
  EXPECT_NE(r.exit_code, 0);
  EXPECT_TRUE(contains(r.output, "--out")) << r.output;
}

TEST(CliVerify, ZeroScenariosIsUsageError) {
  const CliRun r = run_cli("verify --seed 42 --scenarios 0");
  EXPECT_NE(r.exit_code, 0);
  EXPECT_TRUE(contains(r.output, "usage error")) << r.output;
}

TEST(CliVerify, BadGrid) {
  EXPECT_NE(run_cli("verify --grid 10,10").exit_code, 0);
  EXPECT_NE(run_cli("verify --grid 1,10,10").exit_code, 0);
}

TEST(CliVerify, DefaultRunPasses) {
  const CliRun r = run_cli("verify --seed 42 --scenarios 100");
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(contains(r.output, "result: PASS\n")) << r.output;
}

TEST(CliVerify, ByteIdenticalRuns) {
  const std::string args = "verify --seed 7 --scenarios 6 --grid 128,128,48";
  const CliRun a = run_cli(args);
  const CliRun b = run_cli(args);
  EXPECT_EQ(a.exit_code, b.exit_code);
  EXPECT_EQ(a.output, b.output);
}

TEST(Cli, RequiresSubcommand) {
  EXPECT_NE(run_cli("").exit_code, 0);
  EXPECT_NE(run_cli("frobnicate").exit_code, 0);
  EXPECT_EQ(run_cli("--help").exit_code, 0);
}

}  // namespace
