// Copyright 2026 The corrqaoa Authors
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


#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <iterator>
#include <string>

#ifndef CORRQAOA_CLI_PATH
#error "CORRQAOA_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(CORRQAOA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  CliResult r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TEST(Cli, BruteForceTypicalInstance) {
  const CliResult r = run("brute-force --instance +-++-+-++-----+");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("C_star -7"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("minimizers 4"), std::string::npos) << r.out;
}

TEST(Cli, ValidationErrorsExitOne) {
  EXPECT_EQ(run("brute-force --instance +-x").code, 1);
  EXPECT_EQ(run("brute-force").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("symmetry-check --n 4 --noise temporal --p 2").code, 1);
}

TEST(Cli, SymmetryCheck) {
  const CliResult r = run("symmetry-check --n 4 --r 2 --noise temporal --p 0.1 --kappa 0.5 --trials 20");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos) << r.out;
}

TEST(Cli, Susceptibility) {
  const CliResult r = run("susceptibility --instance +-++-+ --r 1 --model temporal --kappa 1 --params 0.3,0.4");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("chi "), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("length"), std::string::npos);
  EXPECT_EQ(run("susceptibility --instance +-++-+ --r 1 --params 0.3").code, 1);
}

TEST(Cli, SweepWritesOutputs) {
  const std::string dir = ::testing::TempDir();
  const std::string cfg = dir + "/cli_sweep.json";
  std::ofstream(cfg) << R"({"instances": ["+-++-+"], "n": 4, "r": 1, "models": ["spatial"],
      "p_values": [0.01], "kappa_values": [0.5], "optimizer": {"restarts": 2, "hops": 1}})";
  const CliResult r = run("sweep --quiet --no-wall-time --config " + cfg + " --csv " + dir + "/a.csv --json " + dir +
                    "/a.json --plot " + dir + "/a.svg");
  EXPECT_EQ(r.code, 0);
  // Rerun from the emitted results file.
  EXPECT_EQ(run("sweep --quiet --no-wall-time --config " + dir + "/a.json --csv " + dir + "/b.csv").code, 0);
  EXPECT_EQ(slurp(dir + "/b.csv"), slurp(dir + "/a.csv"));
  EXPECT_NE(slurp(dir + "/a.csv").find("wall_time_s"), std::string::npos);
  EXPECT_TRUE(std::ifstream(dir + "/a.svg").good());
  EXPECT_EQ(run("sweep --config " + dir + "/missing.json").code, 1);
  // Unwritable output is a runtime failure.
  EXPECT_EQ(run("sweep --quiet --config " + cfg + " --csv /nonexistent/dir/out.csv").code, 2);
}

}  // namespace
