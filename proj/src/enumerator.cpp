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

#include "omegalab/enumerator.hpp"

#include <algorithm>
#include <deque>

#include "omegalab/error.hpp"

namespace omegalab {

BitSet DomainSnapshot::inputs() const {
  BitSet out;
  for (const auto& e : entries) out.insert(e.input);
  return out;
}

DyadicRational DomainSnapshot::omega_lower() const {
  DyadicRational sum;
  for (const auto& e : entries) sum += DyadicRational::pow2_neg(e.input.size());
  return sum;
}

DomainSnapshot explore(const Computer& c, std::uint64_t budget, std::uint64_t depth,
                       std::int64_t label) {
  DomainSnapshot snap;
  snap.computer = label;
  snap.budget = budget;
  snap.depth = depth;
  std::deque<BitString> queue{BitString()};
  while (!queue.empty()) {
    BitString node = std::move(queue.front());
    queue.pop_front();
    const RunOutcome out = c.run(node, budget);
    switch (out.kind) {
      case RunOutcome::Kind::Halted:
        snap.entries.push_back({node, out.output, out.steps});
        break;
      case RunOutcome::Kind::NeedsInput:
        if (node.size() >= depth) {
          ++snap.pruned;
        } else {
          BitString zero = node, one = std::move(node);
          zero.push_back(false);
          one.push_back(true);
          queue.push_back(std::move(zero));
          queue.push_back(std::move(one));
        }
        break;
      case RunOutcome::Kind::BudgetExhausted:
        ++snap.frontier;
        break;
      case RunOutcome::Kind::HaltedEarly:  // only reachable from a parent that never asked
      case RunOutcome::Kind::Diverged:
        break;
    }
  }
  std::sort(snap.entries.begin(), snap.entries.end(),
            [](const auto& a, const auto& b) { return a.input < b.input; });
  return snap;
}

OmegaApproximation omega_approx(const Computer& c, std::uint64_t budget, std::uint64_t depth,
                                std::int64_t label) {
  const DomainSnapshot snap = explore(c, budget, depth, label);
  return {snap.omega_lower(), budget, label, snap.closed()};
}

RunningTime max_running_time(const Computer& c, std::uint64_t n, std::uint64_t budget) {
  const DomainSnapshot snap = explore(c, budget, n);
  if (snap.entries.empty())
    throw Error(ErrorCode::NoHaltingInput, "no halting input of length <= " + std::to_string(n));
  std::uint64_t worst = 0;
  for (const auto& e : snap.entries) worst = std::max(worst, e.steps);
  return {worst, snap.complete_to_depth()};
}

HaltingLength min_halting_length(const Computer& c, std::uint64_t budget, std::uint64_t depth) {
  const DomainSnapshot snap = explore(c, budget, depth);
  if (snap.entries.empty()) return {std::nullopt, snap.closed()};
  // Entries are canonical, so the first is a shortest one; it is the true
  // minimum when every shorter node was resolved.
  return {snap.entries.front().input.size(), snap.complete_to_depth()};
}

BitSet domain_from_time_bound(const Computer& c, std::uint64_t n, std::uint64_t time_bound) {
  return explore(c, time_bound, n).inputs();
}

}  // namespace omegalab
