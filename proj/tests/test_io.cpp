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

#include <filesystem>

#include "omegalab/error.hpp"
#include "omegalab/io.hpp"

using namespace omegalab;
namespace fs = std::filesystem;

namespace {

BitString B(const char* s) { return BitString::from_text(s); }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "omegalab_io_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Io, SnapshotRoundTrip) {
  DomainSnapshot s;
  s.computer = 2;
  s.budget = 64;
  s.depth = 5;
  s.entries = {{B("^"), B("1"), 1}, {B("01"), B("^"), 7}};
  const std::string text = io::format_snapshot(s);
  EXPECT_EQ(text, "computer=2 budget=64 depth=5\n^ 1 1\n01 ^ 7\n");
  const DomainSnapshot back = io::parse_snapshot(text);
  EXPECT_EQ(back.entries, s.entries);
  EXPECT_EQ(back.depth, 5u);
  EXPECT_THROW(io::parse_snapshot("budget=1\n"), Error);
  EXPECT_THROW(io::parse_snapshot("computer=0 budget=1 depth=1\n0 1\n"), Error);
}

TEST(Io, DomainListAndTables) {
  const BitSet d{B("0"), B("10"), B("^")};
  EXPECT_EQ(io::format_domain(d), "^\n0\n10\n");
  EXPECT_EQ(io::parse_domain("10\n# comment\n\n0\n^\n"), d);
  const auto t = io::parse_table("0 1\n10 ^  # trailing comment\n");
  EXPECT_EQ(t.at(B("10")), BitString());
  EXPECT_THROW(io::parse_table("0 1\n0 0\n"), Error);
  EXPECT_THROW(io::parse_table("0 1 1\n"), Error);
  EXPECT_EQ(io::format_allocation({B("00"), B("010")}), "1 2 00\n2 3 010\n");
}

TEST(Io, RegistryManifest) {
  io::write_file(scratch("t.txt"), "0 1\n10 ^\n");
  io::write_file(scratch("manifest.txt"), "1 table t.txt\n2 program 000001101001\n");
  const auto reg = io::load_registry(scratch("manifest.txt"));
  ASSERT_EQ(reg->size(), 2u);
  EXPECT_EQ(reg->at(1).kind(), Computer::Kind::FiniteTable);
  EXPECT_EQ(reg->at(2).run(B("1"), 10).output, B("1"));
  io::write_file(scratch("bad.txt"), "2 table t.txt\n");
  EXPECT_THROW(io::load_registry(scratch("bad.txt")), Error);
  io::write_file(scratch("bad2.txt"), "1 lambda x\n");
  EXPECT_THROW(io::load_registry(scratch("bad2.txt")), Error);
  EXPECT_THROW(io::load_registry(scratch("missing.txt")), Error);
}

TEST(Io, OracleFiles) {
  io::write_file(scratch("snap.txt"), "computer=0 budget=10 depth=3\n0 ^ 1\n10 1 1\n");
  const HaltingList h = io::load_oracle(scratch("snap.txt"), std::nullopt);
  EXPECT_EQ(h.bound(), 3u);
  EXPECT_EQ(h.members().size(), 2u);
  EXPECT_EQ(io::load_oracle(scratch("snap.txt"), 1).members(), BitSet{B("0")});
  io::write_file(scratch("dom.txt"), "0\n10\n");
  EXPECT_THROW(io::load_oracle(scratch("dom.txt"), std::nullopt), Error);
  EXPECT_EQ(io::load_oracle(scratch("dom.txt"), 4).bound(), 4u);
}
