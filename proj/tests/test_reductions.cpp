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

#include "fixtures.hpp"
#include "omegalab/constructions.hpp"
#include "omegalab/error.hpp"
#include "omegalab/reductions.hpp"

using namespace omegalab;

namespace {

BitString B(const char* s) { return BitString::from_text(s); }

ComputerPtr table(std::initializer_list<std::pair<const char*, const char*>> rows) {
  std::map<BitString, BitString> t;
  for (const auto& [k, v] : rows) t.emplace(B(k), B(v));
  return std::make_shared<FiniteTableComputer>(std::move(t));
}

ComputerPtr echo_one() { return std::make_shared<LProgramComputer>(vm::assemble("READ OUTR HALT")); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

// Registry {C, history(C)}; the history computer's constant is |gamma(2)| = 3.
struct WeakSimWorld {
  Registry registry;
  std::uint64_t d = 0;
  explicit WeakSimWorld(ComputerPtr c) {
    registry.add(c, "c");
    d = registry.add(std::make_shared<HistoryComputer>(c), "history").simulation_constant;
  }
  OracleView view(std::uint64_t bound) const {
    return OracleView(registry.universal(), closed_world_oracle(registry, bound, 4096), 1 << 16);
  }
};

DyadicRational dy(const char* s) { return DyadicRational::parse(s); }

}  // namespace

TEST(Threshold, Verdicts) {
  using V = ThresholdVerdict;
  EXPECT_EQ(omega_threshold(dy("5/2^3"), B("10"), false), V::Crossed);
  EXPECT_EQ(omega_threshold(dy("1/2^1"), B("10"), false), V::Wait);  // equality is not yet proof
  EXPECT_EQ(omega_threshold(dy("1/2^1"), B("10"), true), V::Crossed);
  EXPECT_EQ(omega_threshold(dy("3/2^2"), B("10"), false), V::Invalid);
  EXPECT_EQ(omega_threshold(dy("1/2^2"), B("10"), true), V::Invalid);
  // Zero prefixes: Omega is tiny or exactly 1.
  EXPECT_EQ(omega_threshold(dy("1/2^2"), B("00"), false), V::Wait);
  EXPECT_EQ(omega_threshold(dy("7/2^3"), B("00"), false), V::Crossed);
  EXPECT_EQ(omega_threshold(dy("1"), B("00"), true), V::Crossed);
  EXPECT_EQ(omega_threshold(dy("1/2^3"), B("00"), true), V::Crossed);
  EXPECT_EQ(omega_threshold(dy("1/2^2"), B("00"), true), V::Invalid);
  EXPECT_EQ(omega_threshold(dy("0"), BitString(), true), V::Crossed);
}

TEST(HaltingList, Validation) {
  EXPECT_EQ(code_of([] { HaltingList({B("0"), B("01")}, 2); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { HaltingList({B("0110")}, 3); }), ErrorCode::InvalidArgument);
  const HaltingList h({B("0"), B("10"), B("110")}, 3);
  EXPECT_EQ(h.restricted(2).members(), (BitSet{B("0"), B("10")}));
  EXPECT_EQ(code_of([&] { h.restricted(4); }), ErrorCode::OracleBoundTooSmall);
}

TEST(HaltingFromOmega, Examples) {
  const auto full = table({{"0", "^"}, {"10", "^"}, {"11", "^"}});
  EXPECT_EQ(halting_from_omega(*full, real_prefix(RealSource::parse("1"), 2), 1024),
            (BitSet{B("0"), B("10"), B("11")}));
  const auto half = table({{"00", "^"}, {"01", "^"}});
  EXPECT_EQ(halting_from_omega(*half, B("10"), 1024), (BitSet{B("00"), B("01")}));
  const auto none = table({});
  EXPECT_TRUE(halting_from_omega(*none, B("000"), 1024).empty());
  EXPECT_EQ(code_of([&] { halting_from_omega(*half, B("11"), 1024); }), ErrorCode::InvalidPrefix);
  Transcript tr;
  halting_from_omega(*half, B("1"), 1024, &tr);
  EXPECT_FALSE(tr.lines().empty());
  EXPECT_NE(tr.text().find("omega-lower"), std::string::npos);
}

TEST(HaltingFromOmega, RoundTripOnFixtures) {
  for (const auto& fx : fixtures::closed_world()) {
    const RealSource omega = RealSource::exact(omega_exact(*fx.computer).value);
    for (std::uint64_t n = 0; n <= fx.max_length + 1; ++n) {
      ASSERT_EQ(halting_from_omega(*fx.computer, real_prefix(omega, static_cast<std::int64_t>(n)), 1 << 14),
                restrict(fx.domain, static_cast<std::int64_t>(n)))
          << fx.name << " n=" << n;
    }
  }
}

TEST(IndexedHalting, FullDomainAtMaxLength) {
  const auto w = table({{"0", "1"}, {"10", "^"}, {"110", "0"}, {"111", "11"}});
  const IndexSetup setup = build_index_setup(w, {echo_one()});
  EXPECT_EQ(setup.index_entry, 2u);
  EXPECT_EQ(setup.d, 3u);
  const RealSource omega = RealSource::exact(omega_exact(setup.registry->universal()).value);
  for (std::uint64_t n = 0; n <= 4; ++n) {
    const BitString prefix = real_prefix(omega, static_cast<std::int64_t>(n + setup.d));
    EXPECT_EQ(indexed_halting_from_omega(setup, n, prefix, 1 << 14),
              restrict(BitSet{B("0"), B("10"), B("110"), B("111")}, static_cast<std::int64_t>(n)))
        << n;
  }
  EXPECT_EQ(code_of([&] { indexed_halting_from_omega(setup, 2, B("1"), 1024); }), ErrorCode::InvalidArgument);
}

TEST(IndexedHalting, RejectsOpenTargets) {
  const auto grow = std::make_shared<LProgramComputer>(vm::assemble("READ JZ 3 JMP 0 HALT"));
  EXPECT_EQ(code_of([&] { build_index_setup(grow, {}, {256, 10}); }), ErrorCode::NotClosedWorld);
}

TEST(BoundedLoss, Examples) {
  const auto w = table({{"0", "1"}, {"10", "^"}, {"110", "0"}, {"111", "11"}});
  const IndexSetup setup = build_index_setup(w, {});
  const RealSource omega = RealSource::exact(omega_exact(setup.registry->universal()).value);
  const auto f0 = LengthFunction::constant(0);
  const auto f2 = LengthFunction::constant(2);
  for (std::uint64_t n = 1; n <= 8; ++n) {
    const BitString prefix = real_prefix(omega, static_cast<std::int64_t>(n));
    const BitSet got = bounded_loss_domain_from_omega(setup, n, prefix, f0, 0, 1 << 14);
    EXPECT_EQ(got, restrict(fixtures::from_table("w", {{B("0"), B("1")}, {B("10"), B("^")}, {B("110"), B("0")},
                                                      {B("111"), B("11")}}).domain,
                            static_cast<std::int64_t>(n) - static_cast<std::int64_t>(setup.d)))
        << n;
    if (n <= setup.d) EXPECT_TRUE(got.empty());
    // With d1 = 2, the loss shrinks to c - f(n) = d2.
    const BitSet wide = bounded_loss_domain_from_omega(setup, n, prefix, f2, 2, 1 << 14);
    EXPECT_TRUE(std::ranges::includes(BitSet{B("0"), B("10"), B("110"), B("111")}, wide));
  }
  EXPECT_EQ(code_of([&] { bounded_loss_domain_from_omega(setup, 3, B("000"), f2, 1, 1024); }), ErrorCode::InvalidArgument);
}

TEST(WeakSim, EchoOne) {
  WeakSimWorld world(echo_one());
  EXPECT_EQ(world.d, 3u);
  const OracleView view = world.view(2 + world.d);
  EXPECT_TRUE(weaksim_decide(world.registry.at(1), B("1"), view, world.d));
  EXPECT_TRUE(weaksim_decide(world.registry.at(1), B("0"), view, world.d));
  EXPECT_FALSE(weaksim_decide(world.registry.at(1), B("10"), view, world.d));
  EXPECT_FALSE(weaksim_decide(world.registry.at(1), BitString(), view, world.d));
  const OracleView small = world.view(1 + world.d - 1);
  EXPECT_EQ(code_of([&] { weaksim_decide(world.registry.at(1), B("1"), small, world.d); }),
            ErrorCode::OracleBoundTooSmall);
}

TEST(WeakSim, AgreesWithGroundTruthOnFixtures) {
  for (const auto& fx : fixtures::closed_world()) {
    WeakSimWorld world(fx.computer);
    const OracleView view = world.view(6 + world.d);
    for (std::uint64_t len = 0; len <= 6; ++len) {
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
        const BitString p = BitString::from_uint(v, len);
        ASSERT_EQ(weaksim_decide(*fx.computer, p, view, world.d), fx.domain.contains(p)) << fx.name << " " << p.text();
      }
    }
  }
}

TEST(Occ, EchoOne) {
  WeakSimWorld world(echo_one());
  EXPECT_EQ(occ_domain_from_domain(world.registry.at(1), 1, world.view(1 + world.d), world.d),
            (BitSet{B("0"), B("1")}));
  EXPECT_TRUE(occ_domain_from_domain(world.registry.at(1), 0, world.view(world.d), world.d).empty());
  EXPECT_EQ(code_of([&] { occ_domain_from_domain(world.registry.at(1), 2, world.view(4), world.d); }),
            ErrorCode::OracleBoundTooSmall);
}

TEST(Occ, LargerOraclesGiveTheSameAnswer) {
  const auto fx = fixtures::closed_world()[6];  // 16 strings
  WeakSimWorld world(fx.computer);
  for (std::uint64_t n = 0; n <= fx.max_length; ++n) {
    const BitSet tight = occ_domain_from_domain(*fx.computer, n, world.view(n + world.d), world.d);
    const BitSet loose = occ_domain_from_domain(*fx.computer, n, world.view(n + world.d + 2), world.d);
    EXPECT_EQ(tight, loose) << n;
    EXPECT_EQ(tight, restrict(fx.domain, static_cast<std::int64_t>(n))) << n;
    EXPECT_TRUE(is_prefix_free(tight));
  }
}

TEST(OracleView, RejectsListsWithNonHaltingMembers) {
  Registry r;
  r.add(echo_one());
  // U'("0") dispatches to EchoOne, which still wants a bit.
  EXPECT_EQ(code_of([&] { OracleView(r.universal(), HaltingList({B("0")}, 2), 1024); }),
            ErrorCode::InconsistentOracle);
  const OracleView ok(r.universal(), HaltingList({B("00"), B("01")}, 2), 1024);
  EXPECT_TRUE(ok.produces(B("1"), 2));
  EXPECT_FALSE(ok.produces(B("1"), 1));
  EXPECT_EQ(ok.max_history_states(2), 0u);
}

TEST(ThresholdExtract, Examples) {
  const auto below = [](std::uint64_t x, std::uint64_t m) {
    return [x, m](const BitString& s) { return s.size() == m && s.to_uint() <= x; };
  };
  EXPECT_EQ(threshold_bit_extract(below(5, 3), 3).text(), "101");
  EXPECT_EQ(threshold_bit_extract(below(0, 1), 1).text(), "0");
  EXPECT_EQ(threshold_bit_extract([](const BitString&) { return true; }, 0), BitString());
  EXPECT_EQ(code_of([] { threshold_bit_extract([](const BitString& s) { return s.to_uint() != 2; }, 3); }),
            ErrorCode::InconsistentOracle);
}

TEST(ThresholdExtract, ExhaustiveUpToTenBits) {
  for (std::uint64_t m = 1; m <= 10; ++m) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
      const BitString got = threshold_bit_extract([x](const BitString& s) { return s.to_uint() <= x; }, m);
      ASSERT_EQ(got, BitString::from_uint(x, m)) << m << " " << x;
    }
  }
}

TEST(Comparison, AcceptsExactlyTheStringsBelowAlpha) {
  Registry r;
  r.add(std::make_shared<FiniteTableComputer>(std::map<BitString, BitString>{{B("00"), nat_to_string(0)},
                                                                              {B("01"), nat_to_string(1)}}));
  const std::vector<BitString> codewords{B("0"), B("10"), B("110")};
  const ComparisonComputer c(r.universal(), codewords, RealSource::parse("5/8"));
  // n = 3, g(3) = "110", l = 0 via program "000": m = 3 - 0 - (3 + 3) < 0 diverges.
  EXPECT_EQ(c.run(B("110000"), 100).kind, RunOutcome::Kind::Diverged);
  // n = 3 with an empty remainder is still within bounds only if |g| + |p| <= n - l.
  const ComparisonComputer wide(r.universal(), {B("0"), B("1")}, RealSource::parse("5/8"));
  // g(2) = "1", p = "001" (l = 1): m = 2 - 1 - 4 < 0.
  EXPECT_EQ(wide.run(B("1001"), 100).kind, RunOutcome::Kind::Diverged);
  EXPECT_EQ(wide.run(B("1"), 100).kind, RunOutcome::Kind::NeedsInput);
  EXPECT_EQ(wide.run(B("11"), 100).kind, RunOutcome::Kind::Diverged);
}

TEST(Ire, SmallNGivesEmptyString) {
  const IreSetup setup = build_ire_setup(RealSource::parse("5/8"), LengthFunction::constant(1), 8);
  EXPECT_EQ(setup.d, 3u);
  EXPECT_EQ(setup.d_complexity, 3u);
  EXPECT_EQ(setup.c, setup.shift + setup.d + setup.d_complexity);
  const HaltingList oracle = closed_world_oracle(*setup.registry, 2, 4096);
  EXPECT_EQ(ire_extract_bits(setup, oracle, 2, 1 << 16), BitString());
  EXPECT_EQ(code_of([&] { ire_extract_bits(setup, oracle, 9, 1 << 16); }), ErrorCode::OutOfHorizon);
  EXPECT_EQ(code_of([&] { ire_extract_bits(setup, oracle, 8, 1 << 16); }), ErrorCode::OracleBoundTooSmall);
}

TEST(Ire, RecoversPrefixes) {
  for (const char* alpha : {"5/8", "1/3"}) {
    const RealSource a = RealSource::parse(alpha);
    const IreSetup setup = build_ire_setup(a, LengthFunction::constant(1), 14);
    EXPECT_EQ(setup.shift, 4u);
    const HaltingList full = closed_world_oracle(*setup.registry, 14, 4096);
    for (std::uint64_t n = 1; n <= 14; ++n) {
      const std::int64_t keep = static_cast<std::int64_t>(n) - 1 - static_cast<std::int64_t>(setup.c);
      const BitString got = ire_extract_bits(setup, full.restricted(n), n, 1 << 16);
      EXPECT_EQ(got, real_prefix(a, keep)) << alpha << " n=" << n;
      EXPECT_EQ(got.size(), static_cast<std::size_t>(std::max<std::int64_t>(0, keep)));
    }
  }
}

TEST(Iire, ShortProgramsForN) {
  const RealSource a = RealSource::parse("1/3");
  const IireSetup setup = build_iire_setup(a, {3, 12, 16, 20});
  EXPECT_EQ(setup.d, 3u);
  const HaltingList oracle = closed_world_oracle(*setup.registry, 12, 4096);
  const auto bits = iire_extract_bits(setup, oracle, 12, LengthFunction::constant(3), 1 << 16);
  ASSERT_TRUE(bits.has_value());
  EXPECT_EQ(*bits, real_prefix(a, 12 - 3 - static_cast<std::int64_t>(setup.d + setup.d_complexity)));
  EXPECT_FALSE(iire_extract_bits(setup, oracle, 12, LengthFunction::constant(0), 1 << 16).has_value());
  // 13 has no program at all.
  const HaltingList o13 = closed_world_oracle(*setup.registry, 13, 4096);
  EXPECT_FALSE(iire_extract_bits(setup, o13, 13, LengthFunction::constant(3), 1 << 16).has_value());
}

TEST(Transcript, Lines) {
  Transcript t;
  t.record("kind", "payload", "answer");
  t.record("a", "b", "c");
  EXPECT_EQ(t.text(), "kind payload answer\na b c\n");
}
