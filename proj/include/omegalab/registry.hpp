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
#include <string>
#include <vector>

#include "omegalab/computer.hpp"
#include "omegalab/dyadic.hpp"
#include "omegalab/gamma.hpp"

namespace omegalab {

class Registry;

/// U'(gamma(i) p) = C_i(p). Decoding the index is free; the remainder runs
/// with the full budget and reports consumed bits including the index code.
class UniversalComputer final : public Computer {
 public:
  explicit UniversalComputer(const Registry& registry) : registry_(registry) {}
  Kind kind() const noexcept override { return Kind::Universal; }
  std::string describe() const override { return "universal"; }
  RunOutcome run(const BitString& input, std::uint64_t budget, Trace* trace = nullptr) const override;

 private:
  const Registry& registry_;
};

struct Registration {
  std::uint32_t index = 0;
  /// |gamma(index)|: the overhead of simulating this entry through U'.
  std::uint64_t simulation_constant = 0;
};

/// Append-only list of computers with stable 1-based indices.
class Registry {
 public:
  Registry() : universal_(*this) {}
  Registry(const Registry&) = delete;
  Registry& operator=(const Registry&) = delete;

  Registration add(ComputerPtr computer, std::string name = {});

  std::size_t size() const noexcept { return entries_.size(); }
  /// Entry i, 1-based; nullptr for 0 or out of range.
  const Computer* find(std::uint64_t index) const noexcept;
  const Computer& at(std::uint64_t index) const;
  ComputerPtr shared(std::uint64_t index) const;
  const std::string& name(std::uint64_t index) const;

  const Computer& universal() const noexcept { return universal_; }

  static std::uint64_t simulation_constant(std::uint64_t index) {
    return elias_gamma_encode(index).size();
  }

 private:
  struct Entry {
    ComputerPtr computer;
    std::string name;
  };
  std::vector<Entry> entries_;
  UniversalComputer universal_;
};

/// Limits for the demand-tree walks behind the closed-world quantities.
struct ClosureLimits {
  std::uint64_t budget = 4096;
  std::uint64_t depth = 32;
};

struct OmegaValue {
  DyadicRational value;
  bool exact = false;
};

/// Exact halting probability. Finite tables are summed directly; anything
/// else must close within `limits`, otherwise NotClosedWorld.
OmegaValue omega_exact(const Computer& c, const ClosureLimits& limits = {});

struct Complexity {
  std::optional<std::uint64_t> value;  // nullopt: no producer found
  std::optional<BitString> witness;    // canonical-first shortest program
  bool exact = false;
};

Complexity complexity(const BitString& s, const Computer& c, const ClosureLimits& limits = {});
Complexity pair_complexity(const BitString& s, const BitString& t, const Computer& c,
                           const ClosureLimits& limits = {});

struct Probability {
  DyadicRational value;
  bool exact = false;
};

/// Sum of 2^-|p| over discovered p with C(p) = s.
Probability output_probability(const BitString& s, const Computer& c,
                               const ClosureLimits& limits = {});

}  // namespace omegalab
