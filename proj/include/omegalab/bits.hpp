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

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace omegalab {

/// Finite binary string. Ordered length-first, then lexicographically, which
/// is the enumeration lambda, 0, 1, 00, 01, 10, 11, 000, ...
class BitString {
 public:
  BitString() = default;

  /// Builds from ASCII '0'/'1'. The token "^" denotes the empty string.
  static BitString from_text(std::string_view text);
  /// Builds the low `width` bits of `value`, most significant first.
  static BitString from_uint(std::uint64_t value, std::size_t width);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[](std::size_t i) const noexcept { return bits_[i] == '1'; }

  void push_back(bool bit) { bits_.push_back(bit ? '1' : '0'); }
  void append(const BitString& other) { bits_ += other.bits_; }
  BitString substr(std::size_t pos, std::size_t len = std::string::npos) const;

  bool is_prefix_of(const BitString& other) const noexcept;

  /// ASCII form with "^" for the empty string.
  std::string text() const { return bits_.empty() ? std::string("^") : bits_; }
  /// Raw digits; empty for the empty string.
  const std::string& digits() const noexcept { return bits_; }

  /// Value of the digits as a binary integer; throws Overflow above 64 bits.
  std::uint64_t to_uint() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) noexcept {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.bits_.compare(b.bits_) <=> 0;
  }

 private:
  explicit BitString(std::string bits) : bits_(std::move(bits)) {}
  std::string bits_;
};

BitString operator+(BitString a, const BitString& b);

using BitSet = std::set<BitString>;

/// Rank of `s` in the canonical enumeration, i.e. the integer 1s minus one.
/// Throws Overflow when |s| > 63.
std::uint64_t string_to_nat(const BitString& s);
BitString nat_to_string(std::uint64_t n);

BitSet restrict(const BitSet& set, std::int64_t n);
bool is_prefix_free(const BitSet& set);

/// Cantor pairing transported to strings through the canonical enumeration.
BitString pairing(const BitString& s, const BitString& t);
std::pair<BitString, BitString> unpairing(const BitString& z);

}  // namespace omegalab

template <>
struct std::hash<omegalab::BitString> {
  std::size_t operator()(const omegalab::BitString& s) const noexcept {
    return std::hash<std::string>{}(s.digits());
  }
};
