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

#include "omegalab/vm.hpp"

#include <cctype>
#include <sstream>

#include "omegalab/error.hpp"
#include "omegalab/gamma.hpp"

namespace omegalab {

const char* outcome_kind_name(RunOutcome::Kind kind) noexcept {
  switch (kind) {
    case RunOutcome::Kind::Halted: return "halted";
    case RunOutcome::Kind::HaltedEarly: return "halted-early";
    case RunOutcome::Kind::NeedsInput: return "needs-input";
    case RunOutcome::Kind::BudgetExhausted: return "budget-exhausted";
    case RunOutcome::Kind::Diverged: return "diverged";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kStateBits = 16 + 1 + 16 + 16;

}  // namespace

std::optional<BitString> encode_history(const Trace& trace) {
  if (trace.size() > 255) return std::nullopt;
  BitString out = BitString::from_uint(trace.size(), 8);
  for (const auto& s : trace) {
    if (s.pc > 0xFFFF || s.consumed > 0xFFFF || s.output_length > 0xFFFF) return std::nullopt;
    out.append(BitString::from_uint(s.pc, 16));
    out.push_back(s.reg);
    out.append(BitString::from_uint(s.consumed, 16));
    out.append(BitString::from_uint(s.output_length, 16));
  }
  return out;
}

std::optional<Trace> decode_history(const BitString& bits) {
  if (bits.size() < 8) return std::nullopt;
  const std::size_t count = bits.substr(0, 8).to_uint();
  if (bits.size() != 8 + count * kStateBits) return std::nullopt;
  Trace trace;
  trace.reserve(count);
  std::size_t at = 8;
  for (std::size_t i = 0; i < count; ++i) {
    TraceState s;
    s.pc = static_cast<std::uint32_t>(bits.substr(at, 16).to_uint());
    s.reg = bits[at + 16];
    s.consumed = bits.substr(at + 17, 16).to_uint();
    s.output_length = bits.substr(at + 33, 16).to_uint();
    trace.push_back(s);
    at += kStateBits;
  }
  return trace;
}

namespace vm {

const char* opcode_name(Opcode op) noexcept {
  switch (op) {
    case Opcode::Read: return "READ";
    case Opcode::Push1: return "PUSH1";
    case Opcode::Push2: return "PUSH2";
    case Opcode::Pop1: return "POP1";
    case Opcode::Pop2: return "POP2";
    case Opcode::NotR: return "NOTR";
    case Opcode::OutR: return "OUTR";
    case Opcode::Jz: return "JZ";
    case Opcode::Jmp: return "JMP";
    case Opcode::Halt: return "HALT";
  }
  return "?";
}

namespace {

bool has_target(Opcode op) { return op == Opcode::Jz || op == Opcode::Jmp; }

}  // namespace

BitString serialize(std::span<const Instruction> instructions) {
  BitString out;
  for (const auto& ins : instructions) {
    out.append(BitString::from_uint(static_cast<std::uint64_t>(ins.op), 4));
    if (has_target(ins.op)) out.append(elias_gamma_encode(std::uint64_t{ins.target} + 1));
  }
  return out;
}

Program Program::diverge_marker() {
  Program p;
  p.instructions_ = {Instruction{Opcode::Jmp, 0}};
  p.source_ = serialize(p.instructions_);
  p.diverge_ = true;
  return p;
}

Program Program::from_instructions(std::vector<Instruction> instructions) {
  if (instructions.empty()) return diverge_marker();
  for (const auto& ins : instructions) {
    if (has_target(ins.op) && ins.target >= instructions.size()) return diverge_marker();
  }
  Program p;
  p.source_ = serialize(instructions);
  p.instructions_ = std::move(instructions);
  return p;
}

std::string Program::listing() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < instructions_.size(); ++i) {
    const auto& ins = instructions_[i];
    os << i << ": " << opcode_name(ins.op);
    if (has_target(ins.op)) os << ' ' << ins.target;
    os << '\n';
  }
  return os.str();
}

Program parse_program(const BitString& bits) {
  std::vector<Instruction> out;
  std::size_t pos = 0;
  while (pos < bits.size()) {
    if (pos + 4 > bits.size()) return Program::diverge_marker();
    const auto code = bits.substr(pos, 4).to_uint();
    pos += 4;
    if (code > static_cast<std::uint64_t>(Opcode::Halt)) return Program::diverge_marker();
    Instruction ins{static_cast<Opcode>(code), 0};
    if (has_target(ins.op)) {
      GammaDecode g;
      try {
        g = elias_gamma_decode(bits, pos);
      } catch (const Error&) {
        return Program::diverge_marker();
      }
      if (g.status != GammaDecode::Status::Complete || g.value - 1 > UINT32_MAX)
        return Program::diverge_marker();
      ins.target = static_cast<std::uint32_t>(g.value - 1);
      pos += g.length;
    }
    out.push_back(ins);
  }
  return Program::from_instructions(std::move(out));
}

Program assemble(std::string_view source) {
  std::string text(source);
  for (auto& c : text) {
    if (c == ';' || c == ',') c = ' ';
  }
  std::istringstream in(text);
  std::vector<Instruction> out;
  std::string word;
  while (in >> word) {
    for (auto& c : word) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    Instruction ins;
    bool found = false;
    for (std::uint8_t code = 0; code <= static_cast<std::uint8_t>(Opcode::Halt); ++code) {
      if (word == opcode_name(static_cast<Opcode>(code))) {
        ins.op = static_cast<Opcode>(code);
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::ParseError, "unknown mnemonic '" + word + "'");
    if (has_target(ins.op)) {
      long long t = -1;
      if (!(in >> t) || t < 0 || t > UINT32_MAX)
        throw Error(ErrorCode::ParseError, std::string(opcode_name(ins.op)) + " needs a target");
      ins.target = static_cast<std::uint32_t>(t);
    }
    out.push_back(ins);
  }
  for (const auto& ins : out) {
    if (has_target(ins.op) && ins.target >= out.size())
      throw Error(ErrorCode::ParseError, "jump target out of range");
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty program");
  return Program::from_instructions(std::move(out));
}

namespace {

// Returns false when a READ finds no bit.
bool apply(MachineState& s, const Program& program, std::optional<bool> bit) {
  const Instruction& ins = program.instructions()[s.pc];
  auto pop = [&](std::vector<bool>& stack) {
    if (stack.empty()) {
      s.reg = false;
    } else {
      s.reg = stack.back();
      stack.pop_back();
    }
  };
  std::uint32_t next = s.pc + 1;
  switch (ins.op) {
    case Opcode::Read:
      if (!bit) return false;
      s.reg = *bit;
      ++s.consumed;
      break;
    case Opcode::Push1: s.stack1.push_back(s.reg); break;
    case Opcode::Push2: s.stack2.push_back(s.reg); break;
    case Opcode::Pop1: pop(s.stack1); break;
    case Opcode::Pop2: pop(s.stack2); break;
    case Opcode::NotR: s.reg = !s.reg; break;
    case Opcode::OutR: s.output.push_back(s.reg); break;
    case Opcode::Jz:
      if (!s.reg) next = ins.target;
      break;
    case Opcode::Jmp: next = ins.target; break;
    case Opcode::Halt:
      s.halted = true;
      next = s.pc;
      break;
  }
  s.pc = next;
  ++s.steps;
  return true;
}

}  // namespace

std::variant<MachineState, InputRequest> step(MachineState state, const Program& program,
                                              std::optional<bool> next_input_bit) {
  if (!apply(state, program, next_input_bit)) return InputRequest{};
  return state;
}

RunOutcome run(const Program& program, const BitString& input, std::uint64_t budget,
               Trace* trace) {
  using Kind = RunOutcome::Kind;
  MachineState s;
  // Brent-style cycle check: compare against a snapshot refreshed at powers of two.
  MachineState saved = s;
  std::uint64_t power = 1;
  std::uint64_t lam = 0;
  auto finish = [&](Kind kind) { return RunOutcome{kind, s.output, s.consumed, s.steps}; };
  while (true) {
    if (s.pc >= program.size()) return finish(Kind::Diverged);  // fell off the end
    const Instruction& ins = program.instructions()[s.pc];
    const bool wants_bit = ins.op == Opcode::Read;
    if (wants_bit && s.consumed == input.size()) return finish(Kind::NeedsInput);
    if (s.steps >= budget) return finish(Kind::BudgetExhausted);
    if (trace) trace->push_back(TraceState{s.pc, s.reg, s.consumed, s.output.size()});
    std::optional<bool> bit;
    if (wants_bit) bit = input[s.consumed];
    apply(s, program, bit);
    if (s.halted) return finish(s.consumed == input.size() ? Kind::Halted : Kind::HaltedEarly);
    if (s.same_configuration(saved)) return finish(Kind::Diverged);
    if (++lam == power) {
      saved = s;
      power *= 2;
      lam = 0;
    }
  }
}

std::optional<BitString> history(const Program& program, const BitString& input,
                                 std::uint64_t budget) {
  Trace trace;
  const RunOutcome out = run(program, input, budget, &trace);
  if (!out.halted()) return std::nullopt;
  return encode_history(trace);
}

}  // namespace vm
}  // namespace omegalab
