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

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "omegalab/bits.hpp"

namespace omegalab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact value numerator / 2^exponent, kept with an odd (or zero) numerator.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(BigInt numerator, std::uint64_t exponent);

  static DyadicRational integer(std::int64_t v) { return DyadicRational(BigInt(v), 0); }
  /// 2^-k.
  static DyadicRational pow2_neg(std::uint64_t k) { return DyadicRational(BigInt(1), k); }
  /// 0.b1b2...bn read as a binary fraction.
  static DyadicRational from_fraction_bits(const BitString& bits);
  /// Parses "<integer>/2^<k>"; a bare integer is accepted as k = 0.
  static DyadicRational parse(std::string_view text);

  const BigInt& numerator() const noexcept { return num_; }
  std::uint64_t exponent() const noexcept { return exp_; }
  bool is_zero() const noexcept { return num_ == 0; }

  /// floor(value * 2^m).
  BigInt floor_scaled(std::uint64_t m) const;
  Rational to_rational() const;

  std::string to_string() const;

  DyadicRational& operator+=(const DyadicRational& o);
  DyadicRational& operator-=(const DyadicRational& o);
  friend DyadicRational operator+(DyadicRational a, const DyadicRational& b) { return a += b; }
  friend DyadicRational operator-(DyadicRational a, const DyadicRational& b) { return a -= b; }
  DyadicRational operator-() const { return DyadicRational(-num_, exp_); }

  friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
  friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b);

 private:
  void canonicalize();
  BigInt num_ = 0;
  std::uint64_t exp_ = 0;
};

/// A real number given either exactly or as a non-decreasing rational
/// sequence h(1), h(2), ... converging to it from below.
class RealSource {
 public:
  struct Monotone {
    std::function<Rational(std::uint64_t)> approx;
    /// floor of the limit; needed to compare fractional parts.
    BigInt integer_part = 0;
    std::optional<Rational> limit;
  };

  static RealSource exact(Rational value) { return RealSource(std::move(value)); }
  static RealSource exact(const DyadicRational& value) { return RealSource(value.to_rational()); }
  static RealSource monotone(Monotone seq) { return RealSource(std::move(seq)); }
  /// "5/8", "1/3", "0.625" or "<n>/2^<k>".
  static RealSource parse(std::string_view text);

  /// Exact value when known: the Exact kind, or a Monotone with a certified limit.
  std::optional<Rational> exact_value() const;
  BigInt integer_part() const;

  /// Decides 0.s <= frac(x) where `s` is read as a binary fraction. Exact
  /// sources answer directly; monotone sources search h(k) for k <= max_terms
  /// and return nullopt when no witness appears.
  std::optional<bool> fraction_at_least(const BitString& s, std::uint64_t max_terms) const;
  /// Whether the k-th approximation already certifies 0.s <= frac(x). For
  /// exact sources every k answers the exact question.
  bool term_at_least(std::uint64_t k, const BitString& s) const;
  bool is_exact() const { return exact_value().has_value(); }

  std::string describe() const;

 private:
  explicit RealSource(Rational v) : value_(std::move(v)) {}
  explicit RealSource(Monotone m) : value_(std::move(m)) {}
  std::variant<Rational, Monotone> value_;
};

/// First n bits of the fractional part of x, taking the expansion that ends in
/// zeros. Empty for n <= 0. Monotone sources without an exact limit are
/// rejected with NotClosedWorld.
BitString real_prefix(const RealSource& x, std::int64_t n);
BitString real_prefix(const Rational& x, std::int64_t n);

/// floor(x) for a rational.
BigInt floor_rational(const Rational& x);

}  // namespace omegalab
