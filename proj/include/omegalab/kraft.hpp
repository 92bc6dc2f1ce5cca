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
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "omegalab/bits.hpp"
#include "omegalab/dyadic.hpp"

namespace omegalab {

/// Codeword length function f on the positive integers.
class LengthFunction {
 public:
  struct Table {
    std::vector<std::uint64_t> values;  // f(1), f(2), ...
  };
  /// f(n) = floor(a * log2 n) with a = numerator / denominator >= 0.
  struct FloorLog {
    std::uint64_t numerator = 1;
    std::uint64_t denominator = 1;
  };
  struct Constant {
    std::uint64_t k = 0;
  };

  static LengthFunction table(std::vector<std::uint64_t> values) { return LengthFunction(Table{std::move(values)}); }
  static LengthFunction floor_log(std::uint64_t numerator, std::uint64_t denominator = 1);
  static LengthFunction constant(std::uint64_t k) { return LengthFunction(Constant{k}); }

  /// "const:k", "floorlog:a" with a a decimal ("1.5") or fraction ("3/2"),
  /// "table:<path>" (whitespace separated values; relative to `base_dir`).
  static LengthFunction parse(std::string_view text, const std::filesystem::path& base_dir = {});

  /// Throws OutOfHorizon for n = 0 or past the end of a table.
  std::uint64_t operator()(std::uint64_t n) const;
  /// Upper bound of f when it is bounded and known to be (tables and constants).
  std::optional<std::uint64_t> known_bound() const;

  std::string to_string() const;

 private:
  explicit LengthFunction(std::variant<Table, FloorLog, Constant> v) : kind_(std::move(v)) {}
  std::variant<Table, FloorLog, Constant> kind_;
};

/// Online prefix-free codeword allocation. Requests are served from the free
/// subtree root with the greatest length not exceeding the request, leftmost
/// among equals, split along its all-zeros path. Free roots then have pairwise
/// distinct lengths, so a request fails exactly when the Kraft sum would pass 1.
class Allocator {
 public:
  Allocator() : free_{BitString()} {}

  /// Throws KraftExceeded when no free root can host the length.
  BitString allocate(std::uint64_t length);

  const std::set<BitString>& free_nodes() const noexcept { return free_; }
  const std::vector<std::pair<std::uint64_t, BitString>>& issued() const noexcept { return issued_; }
  const DyadicRational& kraft_spent() const noexcept { return spent_; }

 private:
  std::set<BitString> free_;
  std::vector<std::pair<std::uint64_t, BitString>> issued_;  // (request number, codeword)
  DyadicRational spent_;
};

/// g(1..count) with |g(n)| = f(n) + shift.
std::vector<BitString> allocate_for(const LengthFunction& f, std::uint64_t shift, std::uint64_t count);

/// Exact sum of 2^-f(n) for n = 1..count.
DyadicRational kraft_partial_sum(const LengthFunction& f, std::uint64_t count);

/// Smallest shift with sum_{n<=horizon} 2^-(f(n)+shift) <= 1/2.
std::uint64_t choose_shift(const LengthFunction& f, std::uint64_t horizon);

}  // namespace omegalab
