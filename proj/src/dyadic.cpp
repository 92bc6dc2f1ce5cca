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

#include "omegalab/dyadic.hpp"

#include <sstream>

#include "omegalab/error.hpp"

namespace omegalab {

namespace mp = boost::multiprecision;

namespace {

BigInt pow2(std::uint64_t k) { return BigInt(1) << static_cast<unsigned>(k); }

BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty integer");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw Error(ErrorCode::ParseError, "bad integer '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9')
      throw Error(ErrorCode::ParseError, "bad integer '" + std::string(text) + "'");
  }
  return BigInt(std::string(text[0] == '+' ? text.substr(1) : text));
}

BitString bigint_to_bits(const BigInt& v, std::uint64_t width) {
  BitString out;
  for (std::uint64_t i = width; i-- > 0;) out.push_back(mp::bit_test(v, static_cast<unsigned>(i)));
  return out;
}

}  // namespace

DyadicRational::DyadicRational(BigInt numerator, std::uint64_t exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  canonicalize();
}

void DyadicRational::canonicalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  const BigInt mag = mp::abs(num_);
  const std::uint64_t tz = std::min<std::uint64_t>(mp::lsb(mag), exp_);
  if (tz > 0) {
    BigInt shifted = mag >> static_cast<unsigned>(tz);
    num_ = (num_ < 0) ? BigInt(-shifted) : shifted;
    exp_ -= tz;
  }
}

DyadicRational DyadicRational::from_fraction_bits(const BitString& bits) {
  BigInt v = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    v <<= 1;
    if (bits[i]) v += 1;
  }
  return DyadicRational(v, bits.size());
}

DyadicRational DyadicRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return DyadicRational(parse_integer(text), 0);
  const auto den = text.substr(slash + 1);
  if (den.substr(0, 2) != "2^")
    throw Error(ErrorCode::ParseError, "expected '<n>/2^<k>', got '" + std::string(text) + "'");
  const BigInt k = parse_integer(den.substr(2));
  if (k < 0 || k > 1'000'000) throw Error(ErrorCode::ParseError, "exponent out of range");
  return DyadicRational(parse_integer(text.substr(0, slash)), k.convert_to<std::uint64_t>());
}

BigInt DyadicRational::floor_scaled(std::uint64_t m) const {
  if (m >= exp_) return num_ << static_cast<unsigned>(m - exp_);
  const auto shift = static_cast<unsigned>(exp_ - m);
  if (num_ >= 0) return num_ >> shift;
  // floor for negatives: -ceil(|n| / 2^shift)
  const BigInt mag = -num_;
  BigInt q = mag >> shift;
  if ((q << shift) != mag) q += 1;
  return -q;
}

Rational DyadicRational::to_rational() const { return Rational(num_, pow2(exp_)); }

std::string DyadicRational::to_string() const {
  std::ostringstream os;
  os << num_ << "/2^" << exp_;
  return os.str();
}

DyadicRational& DyadicRational::operator+=(const DyadicRational& o) {
  const std::uint64_t e = std::max(exp_, o.exp_);
  num_ = (num_ << static_cast<unsigned>(e - exp_)) + (o.num_ << static_cast<unsigned>(e - o.exp_));
  exp_ = e;
  canonicalize();
  return *this;
}

DyadicRational& DyadicRational::operator-=(const DyadicRational& o) { return *this += -o; }

std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
  const std::uint64_t e = std::max(a.exp_, b.exp_);
  const BigInt lhs = a.num_ << static_cast<unsigned>(e - a.exp_);
  const BigInt rhs = b.num_ << static_cast<unsigned>(e - b.exp_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt floor_rational(const Rational& x) {
  const BigInt num = mp::numerator(x);
  const BigInt den = mp::denominator(x);
  BigInt q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

RealSource RealSource::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty real");
  if (text.find("/2^") != std::string_view::npos) return exact(DyadicRational::parse(text));
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
    return exact(Rational(parse_integer(text.substr(0, slash)), den));
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return exact(Rational(parse_integer(text)));
  const auto frac = text.substr(dot + 1);
  const BigInt whole = dot == 0 ? BigInt(0) : parse_integer(text.substr(0, dot));
  BigInt scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  const BigInt f = frac.empty() ? BigInt(0) : parse_integer(frac);
  const bool negative = !text.empty() && text[0] == '-';
  return exact(Rational(whole * scale + (negative ? -f : f), scale));
}

std::optional<Rational> RealSource::exact_value() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  return std::get<Monotone>(value_).limit;
}

BigInt RealSource::integer_part() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return floor_rational(*r);
  return std::get<Monotone>(value_).integer_part;
}

std::optional<bool> RealSource::fraction_at_least(const BitString& s, std::uint64_t max_terms) const {
  const Rational target = DyadicRational::from_fraction_bits(s).to_rational();
  if (auto v = exact_value()) return (*v - Rational(floor_rational(*v))) >= target;
  for (std::uint64_t k = 1; k <= max_terms; ++k) {
    if (term_at_least(k, s)) return true;
  }
  return std::nullopt;
}

bool RealSource::term_at_least(std::uint64_t k, const BitString& s) const {
  const Rational target = DyadicRational::from_fraction_bits(s).to_rational();
  if (auto v = exact_value()) return (*v - Rational(floor_rational(*v))) >= target;
  const auto& seq = std::get<Monotone>(value_);
  return seq.approx(k) - Rational(seq.integer_part) >= target;
}

std::string RealSource::describe() const {
  std::ostringstream os;
  if (auto v = exact_value()) {
    os << mp::numerator(*v) << "/" << mp::denominator(*v);
  } else {
    os << "monotone";
  }
  return os.str();
}

BitString real_prefix(const Rational& x, std::int64_t n) {
  if (n <= 0) return {};
  const Rational frac = x - Rational(floor_rational(x));
  const BigInt scaled = floor_rational(frac * Rational(pow2(static_cast<std::uint64_t>(n))));
  return bigint_to_bits(scaled, static_cast<std::uint64_t>(n));
}

BitString real_prefix(const RealSource& x, std::int64_t n) {
  if (n <= 0) return {};
  const auto v = x.exact_value();
  if (!v) throw Error(ErrorCode::NotClosedWorld, "real has no certified exact value");
  return real_prefix(*v, n);
}

}  // namespace omegalab
