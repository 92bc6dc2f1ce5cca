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

#include <cstdint>
#include <optional>
#include <vector>

#include "omegalab/bits.hpp"
#include "omegalab/computer.hpp"
#include "omegalab/dyadic.hpp"

namespace omegalab {

struct SnapshotEntry {
  BitString input;
  BitString output;
  std::uint64_t steps = 0;
  friend bool operator==(const SnapshotEntry&, const SnapshotEntry&) = default;
};

/// Halting inputs found by demand-tree exploration, sorted in canonical order.
struct DomainSnapshot {
  std::int64_t computer = 0;
  std::uint64_t budget = 0;
  std::uint64_t depth = 0;
  std::vector<SnapshotEntry> entries;
  /// Nodes within depth whose run exhausted the budget without a verdict.
  std::uint64_t frontier = 0;
  /// Nodes at the depth limit still asking for input.
  std::uint64_t pruned = 0;

  /// Every input of length <= depth is accounted for.
  bool complete_to_depth() const noexcept { return frontier == 0; }
  /// The whole domain is known.
  bool closed() const noexcept { return frontier == 0 && pruned == 0; }

  BitSet inputs() const;
  /// Sum of 2^-|p| over the entries.
  DyadicRational omega_lower() const;

  friend bool operator==(const DomainSnapshot&, const DomainSnapshot&) = default;
};

/// Breadth-first walk of the input tree: the empty prefix first, forking
/// p0/p1 whenever the computer asks for another bit, never past `depth`.
/// Each node is run from scratch with `budget` steps.
DomainSnapshot explore(const Computer& c, std::uint64_t budget, std::uint64_t depth,
                       std::int64_t label = 0);

struct OmegaApproximation {
  DyadicRational lower;
  std::uint64_t budget = 0;
  std::int64_t computer = 0;
  /// The snapshot was closed, so `lower` is the halting probability itself.
  bool exact = false;
};

OmegaApproximation omega_approx(const Computer& c, std::uint64_t budget, std::uint64_t depth,
                                std::int64_t label = 0);

struct RunningTime {
  std::uint64_t steps = 0;
  bool exact = false;
};

/// Maximum steps over halting inputs of length <= n. Throws NoHaltingInput
/// when none is found.
RunningTime max_running_time(const Computer& c, std::uint64_t n, std::uint64_t budget);

struct HaltingLength {
  std::optional<std::uint64_t> length;  // nullopt: nothing found
  bool exact = false;
};

HaltingLength min_halting_length(const Computer& c, std::uint64_t budget, std::uint64_t depth);

/// Inputs of length <= n that halt within `time_bound` steps.
BitSet domain_from_time_bound(const Computer& c, std::uint64_t n, std::uint64_t time_bound);

}  // namespace omegalab
