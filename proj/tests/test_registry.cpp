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

#include "omegalab/error.hpp"
#include "omegalab/gamma.hpp"
#include "omegalab/registry.hpp"
#include "oracles.hpp"

using namespace omegalab;

namespace {

BitString B(const char* s) { return BitString::from_text(s); }

ComputerPtr table(std::initializer_list<std::pair<const char*, const char*>> rows) {
  std::map<BitString, BitString> t;
  for (const auto& [k, v] : rows) t.emplace(B(k), B(v));
  return std::make_shared<FiniteTableComputer>(std::move(t));
}

ComputerPtr echo_one() { return std::make_shared<LProgramComputer>(vm::assemble("READ OUTR HALT")); }

}  // namespace

TEST(Gamma, Examples) {
  EXPECT_EQ(elias_gamma_encode(1).text(), "0");
  EXPECT_EQ(elias_gamma_encode(2).text(), "100");
  EXPECT_EQ(elias_gamma_encode(5).text(), "11001");
  EXPECT_THROW(elias_gamma_encode(0), Error);
}

TEST(Gamma, RoundTripAndPrefixFree) {
  BitSet codes;
  for (std::uint64_t i = 1; i <= 4096; ++i) {
    const BitString g = elias_gamma_encode(i);
    EXPECT_EQ(g.size(), 2 * oracle::floor_log2(i) + 1);
    const GammaDecode d = elias_gamma_decode(g + B("0110"));
    ASSERT_EQ(d.status, GammaDecode::Status::Complete);
    ASSERT_EQ(d.value, i);
    ASSERT_EQ(d.length, g.size());
    EXPECT_EQ(elias_gamma_decode(g.substr(0, g.size() - 1)).status, GammaDecode::Status::Incomplete);
    codes.insert(g);
  }
  EXPECT_TRUE(is_prefix_free(codes));
}

TEST(Registry, SimulationConstants) {
  Registry r;
  EXPECT_EQ(r.add(echo_one()).index, 1u);
  EXPECT_EQ(r.add(echo_one()).simulation_constant, 3u);
  const Registration third = r.add(echo_one());
  EXPECT_EQ(third.index, 3u);
  EXPECT_EQ(third.simulation_constant, 3u);
  EXPECT_EQ(r.find(0), nullptr);
  EXPECT_EQ(r.find(4), nullptr);
  EXPECT_THROW(r.at(9), Error);
}

TEST(Registry, FiniteTablesMustBePrefixFree) {
  EXPECT_THROW(table({{"0", "^"}, {"01", "^"}}), Error);
  try {
    table({{"0", "^"}, {"01", "^"}});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PrefixViolation);
  }
}

TEST(Universal, Dispatch) {
  Registry r;
  r.add(table({{"0", "^"}}));
  r.add(echo_one());
  const Computer& u = r.universal();
  const RunOutcome ok = u.run(elias_gamma_encode(2) + B("1"), 100);
  EXPECT_EQ(ok.kind, RunOutcome::Kind::Halted);
  EXPECT_EQ(ok.output.text(), "1");
  EXPECT_EQ(ok.consumed, 4u);
  EXPECT_EQ(u.run(B("1"), 100).kind, RunOutcome::Kind::NeedsInput);
  EXPECT_EQ(u.run(elias_gamma_encode(2) + B("10"), 100).kind, RunOutcome::Kind::HaltedEarly);
  // Index 3 is unregistered, and so is anything that only a larger index completes.
  EXPECT_EQ(u.run(elias_gamma_encode(3), 100).kind, RunOutcome::Kind::Diverged);
  EXPECT_EQ(u.run(B("11"), 100).kind, RunOutcome::Kind::Diverged);
  EXPECT_EQ(u.run(B("10"), 100).kind, RunOutcome::Kind::NeedsInput);
}

TEST(Universal, ReachabilityFollowsRegistrySize) {
  Registry r;
  for (int i = 0; i < 5; ++i) r.add(echo_one());
  const Computer& u = r.universal();
  EXPECT_EQ(u.run(B("11"), 10).kind, RunOutcome::Kind::NeedsInput);    // 4..7
  EXPECT_EQ(u.run(B("1100"), 10).kind, RunOutcome::Kind::NeedsInput);  // 4 or 5
  EXPECT_EQ(u.run(B("1101"), 10).kind, RunOutcome::Kind::Diverged);    // 6 or 7
  EXPECT_EQ(u.run(B("111"), 10).kind, RunOutcome::Kind::Diverged);     // >= 8
}

TEST(Omega, FiniteTables) {
  EXPECT_EQ(omega_exact(*table({{"0", "^"}, {"10", "^"}, {"11", "^"}})).value, DyadicRational::integer(1));
  EXPECT_EQ(omega_exact(*table({{"00", "^"}, {"01", "^"}})).value, DyadicRational::pow2_neg(1));
  const OmegaValue empty = omega_exact(*table({}));
  EXPECT_TRUE(empty.exact);
  EXPECT_TRUE(empty.value.is_zero());
}

TEST(Omega, ProgramsNeedClosure) {
  const OmegaValue v = omega_exact(*echo_one());
  EXPECT_TRUE(v.exact);
  EXPECT_EQ(v.value, DyadicRational::integer(1));
  const auto grow = std::make_shared<LProgramComputer>(vm::assemble("READ JZ 3 JMP 0 HALT"));
  // Halts on 1^k 0 for every k: the domain is infinite.
  EXPECT_THROW(omega_exact(*grow, {256, 12}), Error);
}

TEST(Omega, UniversalSumsWeightedDomains) {
  Registry r;
  r.add(table({{"0", "^"}, {"10", "^"}, {"11", "^"}}));
  r.add(echo_one());
  // 2^-1 * 1 + 2^-3 * 1
  EXPECT_EQ(omega_exact(r.universal()).value, DyadicRational::parse("5/2^3"));
}

TEST(Complexity, Examples) {
  const Complexity a = complexity(BitString(), *table({{"0", "^"}, {"10", "1"}}));
  EXPECT_EQ(a.value, 1u);
  EXPECT_EQ(a.witness, B("0"));
  EXPECT_TRUE(a.exact);
  const Complexity none = complexity(B("1"), *table({{"0", "^"}}));
  EXPECT_FALSE(none.value.has_value());
  EXPECT_FALSE(none.witness.has_value());
  EXPECT_TRUE(none.exact);
  EXPECT_EQ(complexity(B("1"), *table({{"00", "1"}, {"01", "1"}})).witness, B("00"));
}

TEST(Complexity, OutputProbability) {
  const auto t = table({{"0", "^"}, {"10", "^"}});
  const Probability p = output_probability(BitString(), *t);
  EXPECT_EQ(p.value, DyadicRational::parse("3/2^2"));
  EXPECT_TRUE(p.exact);
  EXPECT_TRUE(output_probability(B("1"), *table({{"0", "^"}})).value.is_zero());
  const Complexity h = complexity(BitString(), *t);
  EXPECT_GE(p.value, DyadicRational::pow2_neg(*h.value));
}

TEST(Complexity, Pairs) {
  const BitString z = pairing(B("1"), B("0"));
  const auto t = std::make_shared<FiniteTableComputer>(std::map<BitString, BitString>{{B("01"), z}, {B("1"), B("^")}});
  EXPECT_EQ(pair_complexity(B("1"), B("0"), *t).value, 2u);
  const auto lam = table({{"1", "^"}});
  EXPECT_EQ(pair_complexity(BitString(), BitString(), *lam).value, complexity(BitString(), *lam).value);
  // An infinite domain cannot certify absence.
  const auto grow = std::make_shared<LProgramComputer>(vm::assemble("READ JZ 3 JMP 0 HALT"));
  EXPECT_FALSE(pair_complexity(B("1"), B("1"), *grow, {256, 10}).exact);
}
