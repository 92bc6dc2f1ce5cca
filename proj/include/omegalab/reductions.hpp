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

// Oracle procedures relating halting lists, halting probabilities and the
// bits of left-computable reals. Every oracle is a finite object, so each
// procedure runs to completion on closed-world fixtures.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "omegalab/bits.hpp"
#include "omegalab/computer.hpp"
#include "omegalab/dyadic.hpp"
#include "omegalab/kraft.hpp"
#include "omegalab/registry.hpp"

namespace omegalab {

/// Dom V restricted to length <= bound.
class HaltingList {
 public:
  /// Throws InvalidArgument unless prefix-free with every member within bound.
  HaltingList(BitSet members, std::uint64_t bound);

  const BitSet& members() const noexcept { return members_; }
  std::uint64_t bound() const noexcept { return bound_; }
  /// The same oracle cut down to a smaller bound.
  HaltingList restricted(std::uint64_t bound) const;

 private:
  BitSet members_;
  std::uint64_t bound_;
};

/// Audit log: one line per oracle consultation, "<kind> <payload> <answer>".
class Transcript {
 public:
  void record(std::string_view kind, std::string_view payload, std::string_view answer);
  const std::vector<std::string>& lines() const noexcept { return lines_; }
  std::string text() const;

 private:
  std::vector<std::string> lines_;
};

/// Whether a lower bound on Omega certifies completeness of the halting list
/// below the prefix length, given the prefix it must agree with.
enum class ThresholdVerdict { Wait, Crossed, Invalid };

/// `exhausted` means the lower bound is the exact value. A prefix of zeros
/// also admits Omega = 1, whose expansion ending in zeros is all zeros.
ThresholdVerdict omega_threshold(const DyadicRational& lower, const BitString& prefix,
                                 bool exhausted);

/// Given the first n bits of Omega_V, returns Dom V restricted to length n.
/// Dovetails with budget and depth doubling up to `budget_cap`.
BitSet halting_from_omega(const Computer& v, const BitString& omega_prefix,
                                std::uint64_t budget_cap, Transcript* transcript = nullptr);

/// Universal machine over a registry that also holds D with D(p_i) = i for the
/// canonical enumeration p_0, p_1, ... of Dom C.
struct IndexSetup {
  std::unique_ptr<Registry> registry;
  ComputerPtr target;
  std::vector<BitString> enumeration;
  std::uint32_t index_entry = 0;
  std::uint64_t d = 0;
};

/// Registers `fillers` first, then the index computer of `target`, whose
/// domain must close within `limits`.
IndexSetup build_index_setup(ComputerPtr target, const std::vector<ComputerPtr>& fillers,
                             const ClosureLimits& limits = {});

/// Dom C restricted to n from the first n + d bits of Omega_V.
BitSet indexed_halting_from_omega(const IndexSetup& setup, std::uint64_t n,
                                    const BitString& omega_prefix, std::uint64_t budget_cap,
                                    Transcript* transcript = nullptr);

/// Dom W restricted to n + f(n) - c from the first n bits of Omega_V, with
/// c = d1 + d2 and d2 the index-computer constant of `setup`.
BitSet bounded_loss_domain_from_omega(const IndexSetup& setup, std::uint64_t n,
                               const BitString& omega_prefix, const LengthFunction& f,
                               std::uint64_t d1, std::uint64_t budget_cap,
                               Transcript* transcript = nullptr);

/// Outputs of V over a halting list.
class OracleView {
 public:
  OracleView(const Computer& v, const HaltingList& oracle, std::uint64_t budget_cap);

  std::uint64_t bound() const noexcept { return bound_; }
  /// Whether some listed q with |q| <= max_len has V(q) = x.
  bool produces(const BitString& x, std::uint64_t max_len) const;
  /// Largest state count among listed outputs (|q| <= max_len) that parse as
  /// computation histories; 0 when none.
  std::uint64_t max_history_states(std::uint64_t max_len) const;
  /// (q, V(q)) in canonical order of q.
  const std::vector<std::pair<BitString, BitString>>& pairs() const noexcept { return pairs_; }

 private:
  std::uint64_t bound_;
  std::vector<std::pair<BitString, BitString>> pairs_;
  std::unordered_map<BitString, std::uint64_t> shortest_;
};

/// Decides p in Dom C using the outputs of V on the listed inputs of length
/// at most |p| + d, where d is the constant of the history computer of C.
bool weaksim_decide(const Computer& c, const BitString& p, const OracleView& view,
                    std::uint64_t d, Transcript* transcript = nullptr);

/// Dom C restricted to n, decided through the oracle as in weaksim_decide.
BitSet occ_domain_from_domain(const Computer& c, std::uint64_t n, const OracleView& view,
                              std::uint64_t d, Transcript* transcript = nullptr);

/// Recovers the m-bit x from a predicate equivalent to s <= x. Scans every
/// candidate and throws InconsistentOracle when the answers are not of that
/// shape.
BitString threshold_bit_extract(const std::function<bool(const BitString&)>& member,
                                std::uint64_t m, Transcript* transcript = nullptr);

/// Registry and constants for extracting bits of alpha from halting lists.
/// Entries: 1 numerals table, 2 comparison computer, 3 its history computer.
struct IreSetup {
  std::unique_ptr<Registry> registry;
  RealSource alpha;
  LengthFunction f;
  std::uint64_t horizon = 0;
  std::uint64_t shift = 0;             // d0
  std::vector<BitString> codewords;    // g(1..horizon), |g(n)| = f(n) + d0
  std::uint32_t comparison_entry = 2;
  std::uint32_t history_entry = 3;
  std::uint64_t d = 0;                 // constant of the history computer
  BitString d_program;                 // shortest program for d on U'
  std::uint64_t d_complexity = 0;      // |d_program|
  std::uint64_t c = 0;                 // d0 + d + H(d)
};

/// Builds the closed-world registry. `shift` overrides the horizon-based
/// choice of d0. Throws NotClosedWorld when H(d) cannot be certified.
IreSetup build_ire_setup(RealSource alpha, LengthFunction f, std::uint64_t horizon,
                         std::optional<std::uint64_t> shift = std::nullopt,
                         const ClosureLimits& limits = {});

/// The first n - f(n) - c bits of alpha from Dom U' restricted to n.
BitString ire_extract_bits(const IreSetup& setup, const HaltingList& oracle, std::uint64_t n,
                           std::uint64_t budget_cap, Transcript* transcript = nullptr);

/// Entries: 1 numerals table, 2 pair-comparison computer, 3 its history computer.
struct IireSetup {
  std::unique_ptr<Registry> registry;
  RealSource alpha;
  std::uint32_t comparison_entry = 2;
  std::uint32_t history_entry = 3;
  std::uint64_t d = 0;
  BitString d_program;
  std::uint64_t d_complexity = 0;
};

/// `numerals` are the values of the 2^k-entry table keyed by k-bit strings;
/// it must contain the history constant 3 so H(d) is finite.
IireSetup build_iire_setup(RealSource alpha, const std::vector<std::uint64_t>& numerals,
                           const ClosureLimits& limits = {});

/// nullopt when no program p with U'(p) = n, |p| <= f(n) and
/// n - |p| - d - H(d) >= 1 is in the oracle.
std::optional<BitString> iire_extract_bits(const IireSetup& setup, const HaltingList& oracle,
                                           std::uint64_t n, const LengthFunction& f,
                                           std::uint64_t budget_cap,
                                           Transcript* transcript = nullptr);

/// Dom U' restricted to n for a closed-world registry, as an oracle.
HaltingList closed_world_oracle(const Registry& registry, std::uint64_t n, std::uint64_t budget);

}  // namespace omegalab
