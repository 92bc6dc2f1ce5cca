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

#include "omegalab/registry.hpp"

#include "omegalab/enumerator.hpp"
#include "omegalab/error.hpp"

namespace omegalab {

namespace {

// Whether some index in [1, count] has a gamma code extending `head`.
bool index_reachable(const BitString& head, std::uint64_t count) {
  std::size_t k = 0;
  while (k < head.size() && head[k]) ++k;
  if (k >= 63) return false;
  const std::uint64_t low = std::uint64_t{1} << k;
  if (k == head.size()) return low <= count;
  std::uint64_t v = 1;
  const std::size_t digits = head.size() - k - 1;
  for (std::size_t j = 0; j < digits; ++j) v = (v << 1) | static_cast<std::uint64_t>(head[k + 1 + j]);
  return (v << (k - digits)) <= count;
}

}  // namespace

RunOutcome UniversalComputer::run(const BitString& input, std::uint64_t budget,
                                  Trace* trace) const {
  const GammaDecode head = elias_gamma_decode(input);
  if (head.status == GammaDecode::Status::Incomplete) {
    // A code no registered index can complete is as divergent as an unknown index.
    if (!index_reachable(input, registry_.size()))
      return RunOutcome{RunOutcome::Kind::Diverged, {}, input.size(), 0};
    return RunOutcome{RunOutcome::Kind::NeedsInput, {}, input.size(), 0};
  }
  const Computer* entry = registry_.find(head.value);
  if (entry == nullptr) return RunOutcome{RunOutcome::Kind::Diverged, {}, head.length, 0};
  RunOutcome out = entry->run(input.substr(head.length), budget, trace);
  out.consumed += head.length;
  return out;
}

Registration Registry::add(ComputerPtr computer, std::string name) {
  if (!computer) throw Error(ErrorCode::InvalidArgument, "null computer");
  if (name.empty()) name = computer_kind_name(computer->kind());
  entries_.push_back({std::move(computer), std::move(name)});
  const auto index = static_cast<std::uint32_t>(entries_.size());
  return {index, simulation_constant(index)};
}

const Computer* Registry::find(std::uint64_t index) const noexcept {
  if (index == 0 || index > entries_.size()) return nullptr;
  return entries_[index - 1].computer.get();
}

const Computer& Registry::at(std::uint64_t index) const {
  const Computer* c = find(index);
  if (c == nullptr) throw Error(ErrorCode::InvalidArgument, "no registry entry " + std::to_string(index));
  return *c;
}

ComputerPtr Registry::shared(std::uint64_t index) const {
  at(index);
  return entries_[index - 1].computer;
}

const std::string& Registry::name(std::uint64_t index) const {
  at(index);
  return entries_[index - 1].name;
}

OmegaValue omega_exact(const Computer& c, const ClosureLimits& limits) {
  if (const auto* table = dynamic_cast<const FiniteTableComputer*>(&c)) {
    DyadicRational sum;
    for (const auto& [key, value] : table->table()) sum += DyadicRational::pow2_neg(key.size());
    return {sum, true};
  }
  const DomainSnapshot snap = explore(c, limits.budget, limits.depth);
  if (!snap.closed())
    throw Error(ErrorCode::NotClosedWorld, "domain not certified finite within the given limits");
  return {snap.omega_lower(), true};
}

Complexity complexity(const BitString& s, const Computer& c, const ClosureLimits& limits) {
  const DomainSnapshot snap = explore(c, limits.budget, limits.depth);
  for (const auto& e : snap.entries) {
    // canonical order: the first producer is the shortest, ties broken lexicographically
    if (e.output == s) return {e.input.size(), e.input, snap.complete_to_depth()};
  }
  return {std::nullopt, std::nullopt, snap.closed()};
}

Complexity pair_complexity(const BitString& s, const BitString& t, const Computer& c,
                           const ClosureLimits& limits) {
  return complexity(pairing(s, t), c, limits);
}

Probability output_probability(const BitString& s, const Computer& c, const ClosureLimits& limits) {
  const DomainSnapshot snap = explore(c, limits.budget, limits.depth);
  DyadicRational sum;
  for (const auto& e : snap.entries) {
    if (e.output == s) sum += DyadicRational::pow2_neg(e.input.size());
  }
  return {sum, snap.closed()};
}

}  // namespace omegalab
