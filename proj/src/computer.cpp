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

#include "omegalab/computer.hpp"

#include <sstream>

#include "omegalab/error.hpp"

namespace omegalab {

const char* computer_kind_name(Computer::Kind kind) noexcept {
  switch (kind) {
    case Computer::Kind::LProgram: return "program";
    case Computer::Kind::Native: return "native";
    case Computer::Kind::FiniteTable: return "table";
    case Computer::Kind::Universal: return "universal";
  }
  return "unknown";
}

FiniteTableComputer::FiniteTableComputer(std::map<BitString, BitString> table)
    : table_(std::move(table)) {
  if (!is_prefix_free(domain()))
    throw Error(ErrorCode::PrefixViolation, "finite table keys are not prefix-free");
  for (const auto& [key, value] : table_) {
    for (std::size_t len = 0; len < key.size(); ++len) proper_prefixes_.insert(key.substr(0, len));
  }
}

BitSet FiniteTableComputer::domain() const {
  BitSet out;
  for (const auto& [key, value] : table_) out.insert(key);
  return out;
}

std::string FiniteTableComputer::describe() const {
  std::ostringstream os;
  os << "table{";
  bool first = true;
  for (const auto& [key, value] : table_) {
    os << (first ? "" : ",") << key.text() << "->" << value.text();
    first = false;
  }
  os << "}";
  return os.str();
}

RunOutcome FiniteTableComputer::run(const BitString& input, std::uint64_t budget,
                                    Trace* trace) const {
  using Kind = RunOutcome::Kind;
  auto halt_on = [&](const BitString& key, const BitString& value, Kind kind) {
    if (budget < 1) return RunOutcome{Kind::BudgetExhausted, {}, key.size(), 0};
    if (trace) {
      const bool last = !key.empty() && key[key.size() - 1];
      trace->push_back(TraceState{0, last, key.size(), value.size()});
    }
    return RunOutcome{kind, value, key.size(), 1};
  };
  if (auto it = table_.find(input); it != table_.end()) return halt_on(it->first, it->second, Kind::Halted);
  if (proper_prefixes_.contains(input)) return RunOutcome{Kind::NeedsInput, {}, input.size(), 0};
  for (std::size_t len = 0; len < input.size(); ++len) {
    if (auto it = table_.find(input.substr(0, len)); it != table_.end())
      return halt_on(it->first, it->second, Kind::HaltedEarly);
  }
  return RunOutcome{Kind::Diverged, {}, 0, 0};
}

namespace {

struct Stop {
  RunOutcome::Kind kind;
};

}  // namespace

void NativeContext::charge() {
  if (steps_ >= budget_) throw Stop{RunOutcome::Kind::BudgetExhausted};
  if (trace_) trace_->push_back(TraceState{phase_, last_bit_, consumed_, output_.size()});
  ++steps_;
}

bool NativeContext::read() {
  if (consumed_ == input_.size()) throw Stop{RunOutcome::Kind::NeedsInput};
  charge();
  last_bit_ = input_[consumed_++];
  return last_bit_;
}

BitString NativeContext::read_bits(std::size_t count) {
  BitString out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(read());
  return out;
}

void NativeContext::tick() { charge(); }

void NativeContext::diverge() { throw Stop{RunOutcome::Kind::Diverged}; }

RunOutcome NativeContext::sub_run(const Computer& callee, Trace* callee_trace) {
  RunOutcome out = call(callee, callee_trace);
  if (out.kind == RunOutcome::Kind::Halted || out.kind == RunOutcome::Kind::HaltedEarly) return out;
  throw Stop{out.kind};
}

RunOutcome NativeContext::call(const Computer& callee, Trace* callee_trace) {
  const BitString rest = input_.substr(consumed_);
  Trace local;
  const bool tracing = trace_ != nullptr || callee_trace != nullptr;
  RunOutcome out = callee.run(rest, remaining(), tracing ? &local : nullptr);
  steps_ += out.steps;
  if (trace_) {
    for (auto s : local) {
      s.consumed += consumed_;
      trace_->push_back(s);
    }
  }
  if (callee_trace) *callee_trace = std::move(local);
  switch (out.kind) {
    case RunOutcome::Kind::Halted:
    case RunOutcome::Kind::HaltedEarly:
      if (out.consumed > 0) last_bit_ = rest[out.consumed - 1];
      consumed_ += out.consumed;
      return out;
    case RunOutcome::Kind::NeedsInput:
      consumed_ = input_.size();
      return out;
    case RunOutcome::Kind::BudgetExhausted:
    case RunOutcome::Kind::Diverged:
      return out;
  }
  return out;
}

RunOutcome NativeComputer::run(const BitString& input, std::uint64_t budget, Trace* trace) const {
  NativeContext ctx(input, budget, trace);
  try {
    execute(ctx);
    if (ctx.stopped_) return RunOutcome{*ctx.stopped_, ctx.output_, ctx.consumed_, ctx.steps_};
    ctx.charge();  // the halting step
  } catch (const Stop& stop) {
    return RunOutcome{stop.kind, ctx.output_, ctx.consumed_, ctx.steps_};
  }
  const auto kind = ctx.consumed_ == input.size() ? RunOutcome::Kind::Halted
                                                  : RunOutcome::Kind::HaltedEarly;
  return RunOutcome{kind, ctx.output_, ctx.consumed_, ctx.steps_};
}

void HistoryComputer::execute(NativeContext& ctx) const {
  Trace trace;
  const RunOutcome sub = ctx.call(*target_, &trace);
  if (sub.kind != RunOutcome::Kind::Halted && sub.kind != RunOutcome::Kind::HaltedEarly) {
    ctx.stop(sub.kind);
    return;
  }
  auto bits = encode_history(trace);
  if (!bits) ctx.diverge();
  ctx.set_output(std::move(*bits));
}

}  // namespace omegalab
