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

#pragma once

// Deterministic closed-world computers shared by the reduction tests and the
// acceptance suite.

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "omegalab/computer.hpp"
#include "omegalab/enumerator.hpp"

namespace fixtures {

struct Fixture {
  std::string name;
  omegalab::ComputerPtr computer;
  omegalab::BitSet domain;  // ground truth
  std::uint64_t max_length = 0;
};

/// A prefix-free set of `size` strings: grow a full binary tree by splitting
/// random leaves, then drop leaves so the Kraft sum is not a round number.
inline std::map<omegalab::BitString, omegalab::BitString> random_table(std::size_t size, std::uint32_t seed,
                                                                       std::size_t max_depth = 9) {
  using omegalab::BitString;
  std::mt19937 rng(seed);
  std::vector<BitString> leaves{BitString()};
  const std::size_t target = size + size / 3 + 1;
  while (leaves.size() < target) {
    std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);
    const std::size_t i = pick(rng);
    if (leaves[i].size() >= max_depth) continue;
    BitString left = leaves[i], right = leaves[i];
    left.push_back(false);
    right.push_back(true);
    leaves[i] = left;
    leaves.push_back(right);
  }
  std::shuffle(leaves.begin(), leaves.end(), rng);
  leaves.resize(size);
  std::map<BitString, BitString> table;
  std::uniform_int_distribution<std::uint64_t> out(0, 30);
  for (const auto& leaf : leaves) table.emplace(leaf, omegalab::nat_to_string(out(rng)));
  return table;
}

inline Fixture from_table(std::string name, std::map<omegalab::BitString, omegalab::BitString> table) {
  Fixture f;
  f.name = std::move(name);
  for (const auto& [k, v] : table) {
    f.domain.insert(k);
    f.max_length = std::max<std::uint64_t>(f.max_length, k.size());
  }
  f.computer = std::make_shared<omegalab::FiniteTableComputer>(std::move(table));
  return f;
}

inline Fixture from_program(std::string name, const char* source, std::uint64_t depth) {
  Fixture f;
  f.name = std::move(name);
  f.computer = std::make_shared<omegalab::LProgramComputer>(omegalab::vm::assemble(source));
  const auto snap = omegalab::explore(*f.computer, 4096, depth);
  if (!snap.closed()) throw std::logic_error("fixture " + f.name + " is not closed");
  f.domain = snap.inputs();
  for (const auto& s : f.domain) f.max_length = std::max<std::uint64_t>(f.max_length, s.size());
  return f;
}

/// Tables with 2 to 64 strings plus a few machine-code computers.
inline std::vector<Fixture> closed_world() {
  std::vector<Fixture> out;
  std::uint32_t seed = 11;
  for (std::size_t size : {2u, 3u, 4u, 6u, 8u, 12u, 16u, 24u, 32u, 48u, 64u})
    out.push_back(from_table("table" + std::to_string(size), random_table(size, seed++)));
  out.push_back(from_program("echo-one", "READ OUTR HALT", 8));
  // Reads two bits and echoes the second; domain is every 2-bit string.
  out.push_back(from_program("second-bit", "READ JZ 4 READ JMP 5 READ OUTR HALT", 8));
  // 1^k 0 for k <= 2; 111 loops.
  out.push_back(from_program("short-unary", "READ JZ 7 READ JZ 7 READ JZ 7 JMP 6 HALT", 8));
  return out;
}

}  // namespace fixtures
