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

#include "omegalab/reductions.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "omegalab/constructions.hpp"
#include "omegalab/enumerator.hpp"
#include "omegalab/error.hpp"

namespace omegalab {

// ---------------------------------------------------------------------------
// Constructions

ComparisonComputer::ComparisonComputer(const Computer& universal, std::vector<BitString> codewords,
                                       RealSource alpha)
    : universal_(universal), codewords_(std::move(codewords)), alpha_(std::move(alpha)) {
  for (std::size_t i = 0; i < codewords_.size(); ++i) {
    const auto& g = codewords_[i];
    index_.emplace(g, i + 1);
    for (std::size_t len = 0; len < g.size(); ++len) prefixes_.insert(g.substr(0, len));
  }
}

void accept_if_below(NativeContext& ctx, const RealSource& alpha, const BitString& s) {
  if (alpha.is_exact()) {
    ctx.tick();
    if (!alpha.term_at_least(1, s)) ctx.stop(RunOutcome::Kind::Diverged);
    return;
  }
  // Semi-decision: keep asking later approximations until one covers 0.s.
  for (std::uint64_t k = 1;; ++k) {
    ctx.tick();
    if (alpha.term_at_least(k, s)) return;
  }
}

namespace {

// U(p) read as a natural; outputs too long to be small naturals diverge.
// nullopt means the run has been stopped.
std::optional<std::uint64_t> read_program_value(NativeContext& ctx, const Computer& universal) {
  const RunOutcome sub = ctx.call(universal);
  if (sub.kind != RunOutcome::Kind::Halted && sub.kind != RunOutcome::Kind::HaltedEarly) {
    ctx.stop(sub.kind);
    return std::nullopt;
  }
  if (sub.output.size() > 62) {
    ctx.stop(RunOutcome::Kind::Diverged);
    return std::nullopt;
  }
  return string_to_nat(sub.output);
}

// Reads `count` bits, stopping quietly when the input runs out.
std::optional<BitString> read_quietly(NativeContext& ctx, std::uint64_t count) {
  BitString s;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (ctx.at_end()) {
      ctx.stop(RunOutcome::Kind::NeedsInput);
      return std::nullopt;
    }
    s.push_back(ctx.read());
  }
  return s;
}

}  // namespace

void ComparisonComputer::execute(NativeContext& ctx) const {
  const std::uint64_t start = ctx.consumed();
  BitString head;
  std::uint64_t n = 0;
  while (true) {
    if (auto it = index_.find(head); it != index_.end()) {
      n = it->second;
      break;
    }
    if (!prefixes_.contains(head)) return ctx.stop(RunOutcome::Kind::Diverged);
    if (ctx.at_end()) return ctx.stop(RunOutcome::Kind::NeedsInput);
    head.push_back(ctx.read());
  }
  const auto l = read_program_value(ctx, universal_);
  if (!l) return;
  const std::uint64_t used = ctx.consumed() - start;
  if (*l > n || n - *l < used) return ctx.stop(RunOutcome::Kind::Diverged);
  const auto s = read_quietly(ctx, n - *l - used);
  if (s) accept_if_below(ctx, alpha_, *s);
}

void PairComparisonComputer::execute(NativeContext& ctx) const {
  const std::uint64_t start = ctx.consumed();
  const auto n = read_program_value(ctx, universal_);
  if (!n) return;
  const auto l = read_program_value(ctx, universal_);
  if (!l) return;
  const std::uint64_t used = ctx.consumed() - start;
  if (*l > *n || *n - *l < used) return ctx.stop(RunOutcome::Kind::Diverged);
  const auto s = read_quietly(ctx, *n - *l - used);
  if (s) accept_if_below(ctx, alpha_, *s);
}

// ---------------------------------------------------------------------------
// Oracles and transcripts

HaltingList::HaltingList(BitSet members, std::uint64_t bound)
    : members_(std::move(members)), bound_(bound) {
  if (!is_prefix_free(members_)) throw Error(ErrorCode::InvalidArgument, "halting list is not prefix-free");
  for (const auto& m : members_) {
    if (m.size() > bound_)
      throw Error(ErrorCode::InvalidArgument, "halting list member " + m.text() + " exceeds its bound");
  }
}

HaltingList HaltingList::restricted(std::uint64_t bound) const {
  if (bound > bound_)
    throw Error(ErrorCode::OracleBoundTooSmall, "cannot widen a halting list from " +
                                                    std::to_string(bound_) + " to " + std::to_string(bound));
  return HaltingList(restrict(members_, static_cast<std::int64_t>(bound)), bound);
}

void Transcript::record(std::string_view kind, std::string_view payload, std::string_view answer) {
  std::string line;
  line.reserve(kind.size() + payload.size() + answer.size() + 2);
  line.append(kind).append(" ").append(payload).append(" ").append(answer);
  lines_.push_back(std::move(line));
}

std::string Transcript::text() const {
  std::string out;
  for (const auto& l : lines_) out.append(l).append("\n");
  return out;
}

HaltingList closed_world_oracle(const Registry& registry, std::uint64_t n, std::uint64_t budget) {
  const DomainSnapshot snap = explore(registry.universal(), budget, n);
  if (!snap.complete_to_depth())
    throw Error(ErrorCode::NotClosedWorld, std::to_string(snap.frontier) +
                                               " nodes unresolved below depth " + std::to_string(n));
  return HaltingList(snap.inputs(), n);
}

// ---------------------------------------------------------------------------
// Halting lists from Omega prefixes

ThresholdVerdict omega_threshold(const DyadicRational& lower, const BitString& prefix, bool exhausted) {
  const DyadicRational x = DyadicRational::from_fraction_bits(prefix);
  const DyadicRational width = DyadicRational::pow2_neg(prefix.size());
  const DyadicRational one = DyadicRational::integer(1);
  const bool zeros = std::all_of(prefix.digits().begin(), prefix.digits().end(),
                                 [](char c) { return c == '0'; });
  if (exhausted) {
    const bool inside = x <= lower && lower < x + width;
    return (inside || (zeros && lower == one)) ? ThresholdVerdict::Crossed : ThresholdVerdict::Invalid;
  }
  if (lower > one) return ThresholdVerdict::Invalid;
  if (!zeros) {
    if (lower >= x + width) return ThresholdVerdict::Invalid;
    return lower > x ? ThresholdVerdict::Crossed : ThresholdVerdict::Wait;
  }
  // Omega lies in [0, width) or equals 1; only the second survives a lower
  // bound of at least width, and then the missing mass is below width once
  // the bound passes 1 - width.
  return lower > one - width ? ThresholdVerdict::Crossed : ThresholdVerdict::Wait;
}

namespace {

const char* verdict_name(ThresholdVerdict v) {
  switch (v) {
    case ThresholdVerdict::Wait: return "wait";
    case ThresholdVerdict::Crossed: return "crossed";
    case ThresholdVerdict::Invalid: return "invalid";
  }
  return "?";
}

std::string round_label(std::uint64_t t) { return "t=" + std::to_string(t); }

}  // namespace

BitSet halting_from_omega(const Computer& v, const BitString& omega_prefix,
                                std::uint64_t budget_cap, Transcript* transcript) {
  const auto n = static_cast<std::int64_t>(omega_prefix.size());
  for (std::uint64_t t = 1; t <= budget_cap; t *= 2) {
    const DomainSnapshot snap = explore(v, t, t);
    const DyadicRational lower = snap.omega_lower();
    const ThresholdVerdict verdict = omega_threshold(lower, omega_prefix, snap.closed());
    if (transcript) transcript->record("omega-lower", round_label(t) + " " + lower.to_string(), verdict_name(verdict));
    if (verdict == ThresholdVerdict::Invalid)
      throw Error(ErrorCode::InvalidPrefix, "no real with prefix " + omega_prefix.text() +
                                                " is consistent with lower bound " + lower.to_string());
    if (verdict == ThresholdVerdict::Crossed) return restrict(snap.inputs(), n);
    if (t > budget_cap / 2) break;
  }
  throw Error(ErrorCode::BudgetExhausted, "threshold not crossed within " + std::to_string(budget_cap) + " steps");
}

IndexSetup build_index_setup(ComputerPtr target, const std::vector<ComputerPtr>& fillers,
                             const ClosureLimits& limits) {
  const DomainSnapshot snap = explore(*target, limits.budget, limits.depth);
  if (!snap.closed()) throw Error(ErrorCode::NotClosedWorld, "target domain does not close within the limits");
  IndexSetup setup;
  setup.registry = std::make_unique<Registry>();
  setup.target = std::move(target);
  for (const auto& f : fillers) setup.registry->add(f, "filler");
  std::map<BitString, BitString> index;
  for (const auto& e : snap.entries) {
    index.emplace(e.input, nat_to_string(setup.enumeration.size()));
    setup.enumeration.push_back(e.input);
  }
  const Registration reg =
      setup.registry->add(std::make_shared<FiniteTableComputer>(std::move(index)), "index");
  setup.index_entry = reg.index;
  setup.d = reg.simulation_constant;
  return setup;
}

BitSet indexed_halting_from_omega(const IndexSetup& setup, std::uint64_t n,
                                    const BitString& omega_prefix, std::uint64_t budget_cap,
                                    Transcript* transcript) {
  if (omega_prefix.size() != n + setup.d)
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(n + setup.d) + " prefix bits, got " +
                                                std::to_string(omega_prefix.size()));
  const Computer& v = setup.registry->universal();
  for (std::uint64_t t = 1; t <= budget_cap; t *= 2) {
    const DomainSnapshot snap = explore(v, t, t);
    // P_V(i) grouped by output; canonical string order is the order of i.
    std::map<BitString, DyadicRational> by_output;
    for (const auto& e : snap.entries) by_output[e.output] += DyadicRational::pow2_neg(e.input.size());
    const DyadicRational total = snap.omega_lower();
    std::optional<BitString> k_e;
    if (snap.closed()) {
      if (omega_threshold(total, omega_prefix, true) == ThresholdVerdict::Invalid)
        throw Error(ErrorCode::InvalidPrefix, "exact Omega " + total.to_string() + " disagrees with " + omega_prefix.text());
      if (!by_output.empty()) k_e = by_output.rbegin()->first;
      else k_e = BitString();
    } else {
      if (omega_threshold(total, omega_prefix, false) == ThresholdVerdict::Invalid)
        throw Error(ErrorCode::InvalidPrefix, "lower bound " + total.to_string() + " exceeds prefix " + omega_prefix.text());
      DyadicRational cum;
      for (const auto& [out, weight] : by_output) {
        cum += weight;
        if (omega_threshold(cum, omega_prefix, false) == ThresholdVerdict::Crossed) {
          k_e = out;
          break;
        }
      }
    }
    if (!k_e) {
      if (transcript) transcript->record("index-sum", round_label(t) + " " + total.to_string(), "wait");
      if (t > budget_cap / 2) break;
      continue;
    }
    if (transcript) transcript->record("index-sum", round_label(t) + " " + total.to_string(), "k_e=" + k_e->text());
    BitSet out;
    for (std::size_t i = 0; i < setup.enumeration.size(); ++i) {
      if (nat_to_string(i) > *k_e) break;
      if (setup.enumeration[i].size() <= n) out.insert(setup.enumeration[i]);
    }
    return out;
  }
  throw Error(ErrorCode::BudgetExhausted, "no k_e found within " + std::to_string(budget_cap) + " steps");
}

BitSet bounded_loss_domain_from_omega(const IndexSetup& setup, std::uint64_t n,
                               const BitString& omega_prefix, const LengthFunction& f,
                               std::uint64_t d1, std::uint64_t budget_cap, Transcript* transcript) {
  if (omega_prefix.size() != n)
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(n) + " prefix bits");
  const std::uint64_t fn = f(n);
  if (fn > d1) throw Error(ErrorCode::InvalidArgument, "f(n) = " + std::to_string(fn) + " exceeds d1");
  const std::uint64_t d2 = setup.d;
  if (n <= d2) return {};
  const BitSet dom = indexed_halting_from_omega(setup, n - d2, omega_prefix, budget_cap, transcript);
  const std::int64_t cut = static_cast<std::int64_t>(n + fn) - static_cast<std::int64_t>(d1 + d2);
  return restrict(dom, cut);
}

// ---------------------------------------------------------------------------
// Halting lists of one computer from those of another

OracleView::OracleView(const Computer& v, const HaltingList& oracle, std::uint64_t budget_cap)
    : bound_(oracle.bound()) {
  for (const auto& q : oracle.members()) {
    std::optional<RunOutcome> halted;
    for (std::uint64_t t = 64;; t *= 2) {
      const std::uint64_t b = std::min(t, budget_cap);
      RunOutcome out = v.run(q, b);
      if (out.kind == RunOutcome::Kind::Halted) {
        halted = std::move(out);
        break;
      }
      if (out.kind != RunOutcome::Kind::BudgetExhausted)
        throw Error(ErrorCode::InconsistentOracle, "listed input " + q.text() + " does not halt (" +
                                                       outcome_kind_name(out.kind) + ")");
      if (b == budget_cap)
        throw Error(ErrorCode::BudgetExhausted, "listed input " + q.text() + " needs more than " +
                                                    std::to_string(budget_cap) + " steps");
    }
    auto [it, fresh] = shortest_.emplace(halted->output, q.size());
    if (!fresh) it->second = std::min<std::uint64_t>(it->second, q.size());
    pairs_.emplace_back(q, std::move(halted->output));
  }
}

bool OracleView::produces(const BitString& x, std::uint64_t max_len) const {
  const auto it = shortest_.find(x);
  return it != shortest_.end() && it->second <= max_len;
}

std::uint64_t OracleView::max_history_states(std::uint64_t max_len) const {
  std::uint64_t best = 0;
  for (const auto& [q, out] : pairs_) {
    if (q.size() > max_len || out.size() < 8) continue;
    const std::uint64_t count = out.substr(0, 8).to_uint();
    if (out.size() == 8 + count * 49) best = std::max(best, count);
  }
  return best;
}

namespace {

// Runs c on p for at most `budget` steps and checks the history against the
// listed outputs of length at most |p| + d.
bool history_listed(const Computer& c, const BitString& p, const OracleView& view, std::uint64_t d,
                    std::uint64_t budget, RunOutcome::Kind* kind = nullptr) {
  Trace trace;
  const RunOutcome out = c.run(p, budget, &trace);
  if (kind) *kind = out.kind;
  if (!out.halted()) return false;
  const auto bits = encode_history(trace);
  return bits && view.produces(*bits, p.size() + d);
}

}  // namespace

bool weaksim_decide(const Computer& c, const BitString& p, const OracleView& view, std::uint64_t d,
                    Transcript* transcript) {
  const std::uint64_t need = p.size() + d;
  if (view.bound() < need)
    throw Error(ErrorCode::OracleBoundTooSmall, "need halting inputs up to length " + std::to_string(need) +
                                                    ", oracle covers " + std::to_string(view.bound()));
  const std::uint64_t budget = view.max_history_states(need);
  const bool member = budget > 0 && history_listed(c, p, view, d, budget);
  if (transcript) transcript->record("weaksim", p.text(), member ? "1" : "0");
  return member;
}

BitSet occ_domain_from_domain(const Computer& c, std::uint64_t n, const OracleView& view,
                              std::uint64_t d, Transcript* transcript) {
  const std::uint64_t need = n + d;
  if (view.bound() < need)
    throw Error(ErrorCode::OracleBoundTooSmall, "need halting inputs up to length " + std::to_string(need) +
                                                    ", oracle covers " + std::to_string(view.bound()));
  // No listed history is longer than `budget` states, so a node that has not
  // asked for more input within that many steps cannot have a member below it.
  const std::uint64_t budget = view.max_history_states(need);
  BitSet out;
  if (budget == 0) {
    if (transcript) transcript->record("occ", "n=" + std::to_string(n), "size=0");
    return out;
  }
  std::deque<BitString> queue{BitString()};
  while (!queue.empty()) {
    BitString p = std::move(queue.front());
    queue.pop_front();
    RunOutcome::Kind kind;
    if (history_listed(c, p, view, d, budget, &kind)) {
      out.insert(p);
    } else if (kind == RunOutcome::Kind::NeedsInput && p.size() < n) {
      BitString zero = p;
      zero.push_back(false);
      p.push_back(true);
      queue.push_back(std::move(zero));
      queue.push_back(std::move(p));
    }
  }
  if (transcript) transcript->record("occ", "n=" + std::to_string(n), "size=" + std::to_string(out.size()));
  return out;
}

BitString threshold_bit_extract(const std::function<bool(const BitString&)>& member, std::uint64_t m,
                                Transcript* transcript) {
  if (m > 24) throw Error(ErrorCode::InvalidArgument, "threshold width too large for a full scan");
  const std::uint64_t count = std::uint64_t{1} << m;
  std::optional<std::uint64_t> first_out;
  for (std::uint64_t v = 0; v < count; ++v) {
    const bool in = member(BitString::from_uint(v, m));
    if (!first_out && !in) {
      first_out = v;
    } else if (first_out && in) {
      throw Error(ErrorCode::InconsistentOracle, "member set is not downward closed at " +
                                                     BitString::from_uint(v, m).text());
    }
  }
  if (first_out == std::uint64_t{0})
    throw Error(ErrorCode::InconsistentOracle, "the all-zero string must be a member");
  const std::uint64_t x = first_out ? *first_out - 1 : count - 1;
  const BitString bits = BitString::from_uint(x, m);
  if (transcript) transcript->record("threshold", "m=" + std::to_string(m), bits.text());
  return bits;
}

// ---------------------------------------------------------------------------
// Bits of alpha from halting lists

namespace {

std::map<BitString, BitString> numerals_table(const std::vector<std::uint64_t>& values) {
  std::size_t width = 0;
  while ((std::size_t{1} << width) < values.size()) ++width;
  if ((std::size_t{1} << width) != values.size())
    throw Error(ErrorCode::InvalidArgument, "numeral table size must be a power of two");
  std::map<BitString, BitString> table;
  for (std::size_t i = 0; i < values.size(); ++i)
    table.emplace(BitString::from_uint(i, width), nat_to_string(values[i]));
  return table;
}

// Shortest program for s on U', certified by a fully resolved tree below it.
BitString certified_shortest(const Registry& registry, const BitString& s, const ClosureLimits& limits) {
  for (std::uint64_t depth = 0; depth <= limits.depth; ++depth) {
    const DomainSnapshot snap = explore(registry.universal(), limits.budget, depth);
    for (const auto& e : snap.entries) {
      if (e.output != s) continue;
      if (!snap.complete_to_depth())
        throw Error(ErrorCode::NotClosedWorld, "cannot certify the shortest program for " + s.text());
      return e.input;
    }
    if (snap.closed()) break;
  }
  throw Error(ErrorCode::NotClosedWorld, "no program for " + s.text() + " within the limits");
}

std::int64_t signed_diff(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b);
}

}  // namespace

IreSetup build_ire_setup(RealSource alpha, LengthFunction f, std::uint64_t horizon,
                         std::optional<std::uint64_t> shift, const ClosureLimits& limits) {
  if (horizon == 0) throw Error(ErrorCode::InvalidArgument, "horizon must be positive");
  IreSetup s{.registry = std::make_unique<Registry>(), .alpha = std::move(alpha), .f = std::move(f),
             .codewords = {}, .d_program = {}};
  s.horizon = horizon;
  s.shift = shift ? *shift : choose_shift(s.f, horizon);
  s.codewords = allocate_for(s.f, s.shift, horizon);
  s.registry->add(std::make_shared<FiniteTableComputer>(numerals_table({0, 1, 2, 3})), "numerals");
  auto comparison = std::make_shared<ComparisonComputer>(s.registry->universal(), s.codewords, s.alpha);
  s.comparison_entry = s.registry->add(comparison, "comparison").index;
  const Registration hist = s.registry->add(std::make_shared<HistoryComputer>(comparison), "history");
  s.history_entry = hist.index;
  s.d = hist.simulation_constant;
  s.d_program = certified_shortest(*s.registry, nat_to_string(s.d), limits);
  s.d_complexity = s.d_program.size();
  s.c = s.shift + s.d + s.d_complexity;
  return s;
}

BitString ire_extract_bits(const IreSetup& setup, const HaltingList& oracle, std::uint64_t n,
                           std::uint64_t budget_cap, Transcript* transcript) {
  if (n == 0 || n > setup.horizon)
    throw Error(ErrorCode::OutOfHorizon, "n = " + std::to_string(n) + " outside 1.." + std::to_string(setup.horizon));
  const BitString& g = setup.codewords[n - 1];
  const std::int64_t m = signed_diff(n, g.size() + setup.d + setup.d_complexity);
  if (oracle.bound() < n)
    throw Error(ErrorCode::OracleBoundTooSmall, "need Dom restricted to " + std::to_string(n));
  if (m <= 0) {
    if (transcript) transcript->record("short", "n=" + std::to_string(n), "^");
    return {};
  }
  const OracleView view(setup.registry->universal(), oracle.restricted(n), budget_cap);
  const Computer& comparison = setup.registry->at(setup.comparison_entry);
  const BitSet dom = occ_domain_from_domain(comparison, n - setup.d, view, setup.d, transcript);
  const BitString head = g + setup.d_program;
  return threshold_bit_extract([&](const BitString& s) { return dom.contains(head + s); },
                               static_cast<std::uint64_t>(m), transcript);
}

IireSetup build_iire_setup(RealSource alpha, const std::vector<std::uint64_t>& numerals,
                           const ClosureLimits& limits) {
  IireSetup s{.registry = std::make_unique<Registry>(), .alpha = std::move(alpha), .d_program = {}};
  s.registry->add(std::make_shared<FiniteTableComputer>(numerals_table(numerals)), "numerals");
  auto comparison = std::make_shared<PairComparisonComputer>(s.registry->universal(), s.alpha);
  s.comparison_entry = s.registry->add(comparison, "pair-comparison").index;
  const Registration hist = s.registry->add(std::make_shared<HistoryComputer>(comparison), "history");
  s.history_entry = hist.index;
  s.d = hist.simulation_constant;
  s.d_program = certified_shortest(*s.registry, nat_to_string(s.d), limits);
  s.d_complexity = s.d_program.size();
  return s;
}

std::optional<BitString> iire_extract_bits(const IireSetup& setup, const HaltingList& oracle,
                                           std::uint64_t n, const LengthFunction& f,
                                           std::uint64_t budget_cap, Transcript* transcript) {
  if (oracle.bound() < n)
    throw Error(ErrorCode::OracleBoundTooSmall, "need Dom restricted to " + std::to_string(n));
  const OracleView view(setup.registry->universal(), oracle.restricted(n), budget_cap);
  const std::uint64_t fn = f(n);
  const BitString target = nat_to_string(n);
  std::optional<BitString> program;
  for (const auto& [q, out] : view.pairs()) {
    if (out == target && q.size() <= fn && signed_diff(n, q.size() + setup.d + setup.d_complexity) >= 1) {
      program = q;
      break;
    }
  }
  if (transcript) transcript->record("search-p", "n=" + std::to_string(n), program ? program->text() : "none");
  if (!program) return std::nullopt;
  const Computer& comparison = setup.registry->at(setup.comparison_entry);
  const BitSet dom = occ_domain_from_domain(comparison, n - setup.d, view, setup.d, transcript);
  const auto m = static_cast<std::uint64_t>(signed_diff(n, program->size() + setup.d + setup.d_complexity));
  const BitString head = *program + setup.d_program;
  const BitString bits = threshold_bit_extract([&](const BitString& s) { return dom.contains(head + s); },
                                               m, transcript);
  const std::int64_t keep = signed_diff(n, fn + setup.d + setup.d_complexity);
  if (keep <= 0) return BitString();
  return bits.substr(0, static_cast<std::size_t>(keep));
}

}  // namespace omegalab
