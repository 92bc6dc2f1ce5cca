// Copyright 2026 The omegalab Authors
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

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" OMEGALAB_CLI "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  Result r;
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// File contents without comment or blank lines.
std::string slurp_data(const fs::path& p) {
  std::ifstream in(p);
  std::string out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.front() != '#') out += line + "\n";
  }
  return out;
}

const std::string kFixtures = OMEGALAB_FIXTURES;

}  // namespace

TEST(Cli, VmRunEchoOne) {
  const Result r = run("vm run --program 000001101001 --input 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
  EXPECT_EQ(run("vm run --asm 'READ OUTR HALT' --input 10").out, "halted-early\n");
}

TEST(Cli, KraftSumDivergesSlowly) {
  const Result r = run("kc sum --f floorlog:1 --N 1023");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "10/2^0 exact\n");
}

TEST(Cli, HaltingListReproducesShippedDomain) {
  const fs::path out = fs::temp_directory_path() / "omegalab_cli_halting";
  fs::remove_all(out);
  const Result r = run("reduce fact1 --registry '" + kFixtures + "/closed_world/manifest.txt' --n 5 --out '" +
                       out.string() + "'");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(slurp(out / "domain.txt"), slurp_data(fs::path(kFixtures) / "closed_world/expected_domain_n5.txt"));
  EXPECT_FALSE(slurp(out / "transcript.txt").empty());
  EXPECT_NE(slurp(out / "report.txt").find("exact: yes"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 64);
  EXPECT_EQ(run("vm frobnicate").code, 64);
  EXPECT_EQ(run("kc alloc --f const:0 --N 2 --shift 0").code, 2);
  EXPECT_EQ(run("reduce fact1 --registry '" + kFixtures + "/closed_world/manifest.txt' --n 3 --prefix 111").code, 2);
  EXPECT_EQ(run("vm run --asm 'PUSH1 JMP 0' --budget 50").code, 3);
  // The environment cap overrides a generous budget.
  EXPECT_EQ(run("vm run --program 000001101001 --input 1 --budget 100", "OMEGALAB_MAX_STEPS=2").code, 3);
  EXPECT_EQ(run("vm run --program 000001101001 --input 1 --budget 100", "OMEGALAB_MAX_STEPS=3").code, 0);
}

TEST(Cli, RegistryAddAndList) {
  const fs::path dir = fs::temp_directory_path() / "omegalab_cli_registry";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ofstream(dir / "t.txt") << "0 1\n1 ^\n";
  const std::string manifest = (dir / "m.txt").string();
  EXPECT_EQ(run("registry add --registry '" + manifest + "' --table '" + (dir / "t.txt").string() + "'").out, "1\n");
  EXPECT_EQ(run("registry add --registry '" + manifest + "' --program 000001101001").out, "2\n");
  EXPECT_EQ(slurp(manifest), "1 table t.txt\n2 program 000001101001\n");
  const Result list = run("registry list --registry '" + manifest + "'");
  EXPECT_EQ(list.code, 0);
  EXPECT_EQ(list.out, "1 table 1 table{0->1,1->^}\n2 program 3 000001101001\n");
  EXPECT_EQ(run("enum omega --registry '" + manifest + "'").out, "5/2^3 exact\n");
}
