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

#include "omegalab/dyadic.hpp"
#include "omegalab/error.hpp"
#include "oracles.hpp"

using namespace omegalab;

TEST(Dyadic, CanonicalFormHasOddNumerator) {
  const DyadicRational a(BigInt(12), 5);  // 12/32 = 3/8
  EXPECT_EQ(a.numerator(), 3);
  EXPECT_EQ(a.exponent(), 3u);
  EXPECT_EQ(a.to_string(), "3/2^3");
  EXPECT_EQ(DyadicRational(BigInt(0), 9).to_string(), "0/2^0");
  EXPECT_EQ(DyadicRational(BigInt(-4), 1).to_string(), "-2/2^0");
}

TEST(Dyadic, ArithmeticIsExact) {
  DyadicRational sum;
  for (int k = 1; k <= 200; ++k) sum += DyadicRational::pow2_neg(k);
  EXPECT_LT(sum, DyadicRational::integer(1));
  EXPECT_EQ(DyadicRational::integer(1) - sum, DyadicRational::pow2_neg(200));
  EXPECT_EQ(DyadicRational::parse("5/2^3") + DyadicRational::parse("3/2^3"), DyadicRational::integer(1));
  EXPECT_GT(DyadicRational::parse("1/2^1"), DyadicRational::parse("1/2^2"));
  EXPECT_EQ(-DyadicRational::parse("1/2^1") + DyadicRational::pow2_neg(1), DyadicRational());
}

TEST(Dyadic, ParseAndPrintRoundTrip) {
  for (const char* text : {"0/2^0", "1/2^0", "5/2^3", "-7/2^10", "123456789012345678901/2^70"}) {
    EXPECT_EQ(DyadicRational::parse(text).to_string(), text);
  }
  EXPECT_EQ(DyadicRational::parse("6").to_string(), "6/2^0");
  EXPECT_THROW(DyadicRational::parse("1/3"), Error);
  EXPECT_THROW(DyadicRational::parse("x/2^1"), Error);
}

TEST(Dyadic, FractionBitsAndFloor) {
  const auto x = DyadicRational::from_fraction_bits(BitString::from_text("101"));
  EXPECT_EQ(x, DyadicRational::parse("5/2^3"));
  EXPECT_EQ(x.floor_scaled(2), 2);
  EXPECT_EQ(x.floor_scaled(5), 20);
  EXPECT_EQ(DyadicRational::from_fraction_bits(BitString()), DyadicRational());
}

TEST(RealPrefix, WorkedExamples) {
  EXPECT_EQ(real_prefix(RealSource::parse("5/8"), 6).text(), "101000");
  EXPECT_EQ(real_prefix(RealSource::parse("5/8"), 0), BitString());
  EXPECT_EQ(real_prefix(RealSource::parse("5/8"), -2), BitString());
  EXPECT_EQ(real_prefix(RealSource::parse("1/3"), 4).text(), "0101");
  EXPECT_EQ(real_prefix(RealSource::parse("0.625"), 3).text(), "101");
  EXPECT_EQ(real_prefix(RealSource::parse("5/2^3"), 4).text(), "1010");
}

TEST(RealPrefix, IntegerPartIsDropped) {
  EXPECT_EQ(real_prefix(RealSource::parse("1"), 3).text(), "000");
  EXPECT_EQ(real_prefix(RealSource::parse("7/3"), 4).text(), "0101");
}

TEST(RealPrefix, AgreesWithLongDivision) {
  for (std::uint64_t q = 1; q <= 40; ++q) {
    for (std::uint64_t p = 0; p < q; ++p) {
      const auto got = real_prefix(Rational(p, q), 48);
      ASSERT_EQ(got.digits(), oracle::long_division(p, q, 48)) << p << "/" << q;
    }
  }
}

TEST(RealSource, MonotoneWithoutLimitIsNotClosedWorld) {
  // h(k) = 1/3 - 1/3 * 4^-k climbs towards 1/3 from below.
  RealSource::Monotone m;
  m.approx = [](std::uint64_t k) {
    Rational step(1, 3);
    for (std::uint64_t i = 0; i < k; ++i) step /= 4;
    return Rational(1, 3) - step;
  };
  const auto src = RealSource::monotone(m);
  EXPECT_FALSE(src.is_exact());
  EXPECT_THROW(real_prefix(src, 3), Error);
  EXPECT_EQ(src.fraction_at_least(BitString::from_text("0101"), 100), std::optional<bool>(true));
  EXPECT_EQ(src.fraction_at_least(BitString::from_text("011"), 50), std::nullopt);
  m.limit = Rational(1, 3);
  EXPECT_EQ(real_prefix(RealSource::monotone(m), 6).text(), "010101");
}

TEST(RealSource, NonStrictComparisonAtDyadicValues) {
  const auto five_eighths = RealSource::parse("5/8");
  EXPECT_TRUE(five_eighths.term_at_least(1, BitString::from_text("101")));
  EXPECT_FALSE(five_eighths.term_at_least(1, BitString::from_text("1011")));
  EXPECT_TRUE(five_eighths.term_at_least(1, BitString()));
}
