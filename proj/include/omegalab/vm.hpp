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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "omegalab/bits.hpp"

namespace omegalab {

// Outcomes and traces are shared by every kind of computer.

struct RunOutcome {
  enum class Kind {
    Halted,           // HALT with the whole input consumed
    HaltedEarly,      // HALT before the input was used up
    NeedsInput,       // READ with every supplied bit consumed
    BudgetExhausted,  // step budget spent
    Diverged,         // certified never to halt (repeated state, stuck, or by contract)
  };

  Kind kind = Kind::BudgetExhausted;
  BitString output;
  std::uint64_t consumed = 0;
  std::uint64_t steps = 0;

  bool halted() const noexcept { return kind == Kind::Halted; }
  friend bool operator==(const RunOutcome&, const RunOutcome&) = default;
};

const char* outcome_kind_name(RunOutcome::Kind kind) noexcept;

/// Machine configuration sampled just before each executed transition.
struct TraceState {
  std::uint32_t pc = 0;
  bool reg = false;
  std::uint64_t consumed = 0;
  std::uint64_t output_length = 0;
  friend bool operator==(const TraceState&, const TraceState&) = default;
};

using Trace = std::vector<TraceState>;

/// Serializes a trace: 8-bit state count, then per state pc (16 bits), R (1),
/// consumed (16), output length (16). nullopt when more than 255 states or a
/// field does not fit.
std::optional<BitString> encode_history(const Trace& trace);
std::optional<Trace> decode_history(const BitString& bits);

namespace vm {

enum class Opcode : std::uint8_t {
  Read = 0,
  Push1 = 1,
  Push2 = 2,
  Pop1 = 3,
  Pop2 = 4,
  NotR = 5,
  OutR = 6,
  Jz = 7,
  Jmp = 8,
  Halt = 9,
};

struct Instruction {
  Opcode op = Opcode::Halt;
  std::uint32_t target = 0;  // JZ / JMP only
  friend bool operator==(const Instruction&, const Instruction&) = default;
};

const char* opcode_name(Opcode op) noexcept;

/// Four-bit opcodes; JZ/JMP carry gamma(target + 1).
BitString serialize(std::span<const Instruction> instructions);

class Program {
 public:
  /// Canonical never-halting program [JMP 0], returned for malformed input.
  static Program diverge_marker();
  /// Validates jump targets; returns the diverge marker when invalid.
  static Program from_instructions(std::vector<Instruction> instructions);

  const std::vector<Instruction>& instructions() const noexcept { return instructions_; }
  const BitString& source_bits() const noexcept { return source_; }
  bool is_diverge_marker() const noexcept { return diverge_; }
  std::size_t size() const noexcept { return instructions_.size(); }

  /// One instruction per line, e.g. "0: JZ 3".
  std::string listing() const;

 private:
  std::vector<Instruction> instructions_;
  BitString source_;
  bool diverge_ = false;
};

/// Total decoder: malformed, truncated or out-of-range input yields the
/// diverge marker.
Program parse_program(const BitString& bits);

/// Assembles whitespace/';' separated mnemonics such as "READ OUTR HALT" or
/// "JZ 4". Throws ParseError on unknown mnemonics.
Program assemble(std::string_view source);

struct MachineState {
  std::uint32_t pc = 0;
  bool reg = false;
  std::vector<bool> stack1;
  std::vector<bool> stack2;
  std::uint64_t consumed = 0;
  BitString output;
  std::uint64_t steps = 0;
  bool halted = false;

  /// Equal configurations, ignoring the step counter.
  bool same_configuration(const MachineState& o) const noexcept {
    return pc == o.pc && reg == o.reg && consumed == o.consumed &&
           output.size() == o.output.size() && stack1 == o.stack1 && stack2 == o.stack2;
  }
};

struct InputRequest {};

/// One transition. READ without a supplied bit returns InputRequest and leaves
/// the state untouched.
std::variant<MachineState, InputRequest> step(MachineState state, const Program& program,
                                              std::optional<bool> next_input_bit);

/// Runs on a finite input. Appends one TraceState per executed transition when
/// `trace` is non-null.
RunOutcome run(const Program& program, const BitString& input, std::uint64_t budget,
               Trace* trace = nullptr);

/// Serialized computation history, or nullopt unless the run is Halted.
std::optional<BitString> history(const Program& program, const BitString& input,
                                 std::uint64_t budget);

}  // namespace vm
}  // namespace omegalab
