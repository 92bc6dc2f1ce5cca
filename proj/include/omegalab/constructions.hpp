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

#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "omegalab/computer.hpp"
#include "omegalab/dyadic.hpp"

namespace omegalab {

/// Accepts g(n) p s when U(p) = l, |g(n) p s| = n - l and 0.s <= frac(alpha).
/// The codewords g(1..N) must be prefix-free; inputs naming n > N diverge.
class ComparisonComputer final : public NativeComputer {
 public:
  ComparisonComputer(const Computer& universal, std::vector<BitString> codewords, RealSource alpha);
  std::string describe() const override { return "comparison"; }

 protected:
  void execute(NativeContext& ctx) const override;

 private:
  const Computer& universal_;
  std::vector<BitString> codewords_;
  std::unordered_map<BitString, std::uint64_t> index_;
  std::unordered_set<BitString> prefixes_;
  RealSource alpha_;
};

/// Accepts p q s when U(p) = n, U(q) = l, |p q s| = n - l and
/// 0.s <= frac(alpha).
class PairComparisonComputer final : public NativeComputer {
 public:
  PairComparisonComputer(const Computer& universal, RealSource alpha)
      : universal_(universal), alpha_(std::move(alpha)) {}
  std::string describe() const override { return "pair-comparison"; }

 protected:
  void execute(NativeContext& ctx) const override;

 private:
  const Computer& universal_;
  RealSource alpha_;
};

/// Halts after one tick per monotone term tried, or diverges. Shared by both
/// comparison computers.
void accept_if_below(NativeContext& ctx, const RealSource& alpha, const BitString& s);

}  // namespace omegalab
