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

#include "omegalab/bits.hpp"

#include <algorithm>

#include "omegalab/error.hpp"

namespace omegalab {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::PrefixViolation: return "PrefixViolation";
    case ErrorCode::NotClosedWorld: return "NotClosedWorld";
    case ErrorCode::NoHaltingInput: return "NoHaltingInput";
    case ErrorCode::KraftExceeded: return "KraftExceeded";
    case ErrorCode::OracleBoundTooSmall: return "OracleBoundTooSmall";
    case ErrorCode::InvalidPrefix: return "InvalidPrefix";
    case ErrorCode::InconsistentOracle: return "InconsistentOracle";
    case ErrorCode::OutOfHorizon: return "OutOfHorizon";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
  }
  return "Unknown";
}

BitString BitString::from_text(std::string_view text) {
  if (text == "^") return BitString();
  for (char c : text) {
    if (c != '0' && c != '1')
      throw Error(ErrorCode::ParseError, "not a bit string: '" + std::string(text) + "'");
  }
  return BitString(std::string(text));
}

BitString BitString::from_uint(std::uint64_t value, std::size_t width) {
  std::string bits(width, '0');
  for (std::size_t i = 0; i < width && i < 64; ++i) {
    if ((value >> i) & 1U) bits[width - 1 - i] = '1';
  }
  return BitString(std::move(bits));
}

BitString BitString::substr(std::size_t pos, std::size_t len) const {
  if (pos >= bits_.size()) return BitString();
  return BitString(bits_.substr(pos, len));
}

bool BitString::is_prefix_of(const BitString& other) const noexcept {
  return bits_.size() <= other.bits_.size() &&
         other.bits_.compare(0, bits_.size(), bits_) == 0;
}

std::uint64_t BitString::to_uint() const {
  if (bits_.size() > 64) throw Error(ErrorCode::Overflow, "bit string longer than 64 bits");
  std::uint64_t v = 0;
  for (char c : bits_) v = (v << 1) | static_cast<std::uint64_t>(c == '1');
  return v;
}

BitString operator+(BitString a, const BitString& b) {
  a.append(b);
  return a;
}

std::uint64_t string_to_nat(const BitString& s) {
  if (s.size() > 63) throw Error(ErrorCode::Overflow, "string too long for a 64-bit natural");
  return ((std::uint64_t{1} << s.size()) | s.to_uint()) - 1;
}

BitString nat_to_string(std::uint64_t n) {
  if (n == UINT64_MAX) throw Error(ErrorCode::Overflow, "natural too large");
  const std::uint64_t v = n + 1;
  std::size_t width = 63;
  while (((v >> width) & 1U) == 0) --width;
  return BitString::from_uint(v, width);
}

BitSet restrict(const BitSet& set, std::int64_t n) {
  BitSet out;
  if (n < 0) return out;
  for (const auto& s : set) {
    if (static_cast<std::int64_t>(s.size()) <= n) out.insert(s);
  }
  return out;
}

bool is_prefix_free(const BitSet& set) {
  // Any prefix relation shows up between lexicographic neighbours.
  std::vector<const std::string*> lex;
  lex.reserve(set.size());
  for (const auto& s : set) lex.push_back(&s.digits());
  std::sort(lex.begin(), lex.end(), [](auto* a, auto* b) { return *a < *b; });
  for (std::size_t i = 1; i < lex.size(); ++i) {
    if (lex[i]->compare(0, lex[i - 1]->size(), *lex[i - 1]) == 0) return false;
  }
  return true;
}

namespace {

std::uint64_t isqrt(unsigned __int128 x) {
  std::uint64_t lo = 0, hi = UINT64_MAX >> 1;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (static_cast<unsigned __int128>(mid) * mid <= x) lo = mid; else hi = mid - 1;
  }
  return lo;
}

}  // namespace

BitString pairing(const BitString& s, const BitString& t) {
  const unsigned __int128 x = string_to_nat(s);
  const unsigned __int128 y = string_to_nat(t);
  const unsigned __int128 z = (x + y) * (x + y + 1) / 2 + y;
  if (z >= UINT64_MAX) throw Error(ErrorCode::Overflow, "pairing exceeds 64 bits");
  return nat_to_string(static_cast<std::uint64_t>(z));
}

std::pair<BitString, BitString> unpairing(const BitString& zs) {
  const unsigned __int128 z = string_to_nat(zs);
  const std::uint64_t w = (isqrt(8 * z + 1) - 1) / 2;
  const unsigned __int128 tri = static_cast<unsigned __int128>(w) * (w + 1) / 2;
  const auto y = static_cast<std::uint64_t>(z - tri);
  const std::uint64_t x = w - y;
  return {nat_to_string(x), nat_to_string(y)};
}

}  // namespace omegalab
