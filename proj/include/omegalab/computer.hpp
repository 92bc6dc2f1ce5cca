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

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "omegalab/bits.hpp"
#include "omegalab/vm.hpp"

namespace omegalab {

/// A partial function on bit strings with a prefix-free halting set, run under
/// a step budget.
class Computer {
 public:
  enum class Kind { LProgram, Native, FiniteTable, Universal };

  virtual ~Computer() = default;
  virtual Kind kind() const noexcept = 0;
  virtual std::string describe() const = 0;

  /// Must be deterministic. When `trace` is non-null, exactly one TraceState
  /// is appended per step taken.
  virtual RunOutcome run(const BitString& input, std::uint64_t budget,
                         Trace* trace = nullptr) const = 0;
};

using ComputerPtr = std::shared_ptr<const Computer>;

const char* computer_kind_name(Computer::Kind kind) noexcept;

class LProgramComputer final : public Computer {
 public:
  explicit LProgramComputer(vm::Program program) : program_(std::move(program)) {}

  Kind kind() const noexcept override { return Kind::LProgram; }
  std::string describe() const override { return program_.source_bits().text(); }
  RunOutcome run(const BitString& input, std::uint64_t budget, Trace* trace = nullptr) const override {
    return vm::run(program_, input, budget, trace);
  }

  const vm::Program& program() const noexcept { return program_; }

 private:
  vm::Program program_;
};

/// Explicit finite map. Halting costs one step and reading is free.
class FiniteTableComputer final : public Computer {
 public:
  /// Throws PrefixViolation unless the keys are prefix-free.
  explicit FiniteTableComputer(std::map<BitString, BitString> table);

  Kind kind() const noexcept override { return Kind::FiniteTable; }
  std::string describe() const override;
  RunOutcome run(const BitString& input, std::uint64_t budget, Trace* trace = nullptr) const override;

  const std::map<BitString, BitString>& table() const noexcept { return table_; }
  BitSet domain() const;

 private:
  std::map<BitString, BitString> table_;
  std::unordered_set<BitString> proper_prefixes_;
};

/// Execution context handed to native procedures. Reads and ticks cost one
/// step each, halting costs one step, output is free. Sub-runs charge the
/// callee's steps and splice its trace in.
class NativeContext {
 public:
  NativeContext(const BitString& input, std::uint64_t budget, Trace* trace)
      : input_(input), budget_(budget), trace_(trace) {}

  bool read();
  BitString read_bits(std::size_t count);
  void tick();
  [[noreturn]] void diverge();

  /// Runs `callee` on the unread suffix. Returns its outcome when it halts
  /// (fully or early) after advancing past the bits it consumed; otherwise
  /// unwinds with the matching outcome.
  RunOutcome sub_run(const Computer& callee, Trace* callee_trace = nullptr);
  /// Like sub_run, but hands back a non-halting outcome instead of stopping;
  /// the caller is then expected to stop() and return.
  RunOutcome call(const Computer& callee, Trace* callee_trace = nullptr);
  /// Ends the run with `kind` once execute() returns.
  void stop(RunOutcome::Kind kind) noexcept { stopped_ = kind; }
  bool at_end() const noexcept { return consumed_ == input_.size(); }

  void set_phase(std::uint32_t phase) noexcept { phase_ = phase; }
  void set_output(BitString out) { output_ = std::move(out); }
  void append_output(bool bit) { output_.push_back(bit); }

  std::uint64_t consumed() const noexcept { return consumed_; }
  std::uint64_t steps() const noexcept { return steps_; }
  std::uint64_t remaining() const noexcept { return budget_ - steps_; }

 private:
  friend class NativeComputer;
  void charge();

  const BitString& input_;
  std::uint64_t budget_;
  Trace* trace_;
  std::uint64_t consumed_ = 0;
  std::uint64_t steps_ = 0;
  std::uint32_t phase_ = 0;
  bool last_bit_ = false;
  BitString output_;
  std::optional<RunOutcome::Kind> stopped_;
};

/// Host-implemented computer. Subclasses must keep their halting set
/// prefix-free: never halt without having read every bit they will ever
/// accept, and diverge on inputs outside the domain.
class NativeComputer : public Computer {
 public:
  Kind kind() const noexcept final { return Kind::Native; }
  RunOutcome run(const BitString& input, std::uint64_t budget, Trace* trace = nullptr) const final;

 protected:
  virtual void execute(NativeContext& ctx) const = 0;
};

/// Dom D = Dom target, D(p) = serialized computation history of target on p.
/// Diverges when the history exceeds the 255-state format.
class HistoryComputer final : public NativeComputer {
 public:
  explicit HistoryComputer(ComputerPtr target) : target_(std::move(target)) {}
  std::string describe() const override { return "history(" + target_->describe() + ")"; }
  const Computer& target() const noexcept { return *target_; }

 protected:
  void execute(NativeContext& ctx) const override;

 private:
  ComputerPtr target_;
};

}  // namespace omegalab
