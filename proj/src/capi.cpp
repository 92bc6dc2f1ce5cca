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

#include "omegalab.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "omegalab/computer.hpp"
#include "omegalab/constructions.hpp"
#include "omegalab/enumerator.hpp"
#include "omegalab/error.hpp"
#include "omegalab/io.hpp"
#include "omegalab/kraft.hpp"
#include "omegalab/reductions.hpp"
#include "omegalab/registry.hpp"

using namespace omegalab;

struct ol_registry {
  std::unique_ptr<Registry> registry;
  std::vector<std::string> kinds;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

ol_status fail(ol_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
ol_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return OL_OK;
  } catch (const Error& e) {
    return fail(static_cast<ol_status>(static_cast<int>(e.code()) + 1), e.what());
  } catch (const std::bad_alloc&) {
    return fail(OL_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(OL_INTERNAL, e.what());
  }
}

void require(const void* p, const char* name) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(name) + " must not be null");
}

const Computer& pick(const ol_registry* reg, std::uint32_t computer) {
  require(reg, "registry");
  if (computer == 0) return reg->registry->universal();
  const Computer* c = reg->registry->find(computer);
  if (!c) throw Error(ErrorCode::InvalidArgument, "no computer " + std::to_string(computer));
  return *c;
}

ol_outcome outcome_code(RunOutcome::Kind k) {
  switch (k) {
    case RunOutcome::Kind::Halted: return OL_HALTED;
    case RunOutcome::Kind::HaltedEarly: return OL_HALTED_EARLY;
    case RunOutcome::Kind::NeedsInput: return OL_NEEDS_INPUT;
    case RunOutcome::Kind::BudgetExhausted: return OL_OUT_OF_BUDGET;
    case RunOutcome::Kind::Diverged: return OL_DIVERGED;
  }
  return OL_DIVERGED;
}

void fill_run(const RunOutcome& r, ol_run_result* out) {
  out->outcome = outcome_code(r.kind);
  out->output = dup(r.output.text());
  out->consumed = r.consumed;
  out->steps = r.steps;
}

BitString bits_arg(const char* s, const char* name) {
  require(s, name);
  return BitString::from_text(s);
}

std::filesystem::path dir_arg(const char* s) { return s ? std::filesystem::path(s) : std::filesystem::path(); }

void fill_reduction(ol_reduction_result* out, const std::string& result, const Transcript& tr,
                    const std::string& report) {
  out->result = dup(result);
  out->transcript = dup(tr.text());
  out->report = dup(report);
}

// Registry with the entries of `reg` followed by a history computer for one
// of them; returns the history computer's simulation constant.
std::uint64_t extend_with_history(const ol_registry* reg, std::uint32_t computer, Registry& ext) {
  require(reg, "registry");
  if (computer == 0 || computer > reg->registry->size())
    throw Error(ErrorCode::InvalidArgument, "weak simulation needs a registered computer");
  for (std::uint32_t i = 1; i <= reg->registry->size(); ++i)
    ext.add(reg->registry->shared(i), reg->registry->name(i));
  return ext.add(std::make_shared<HistoryComputer>(reg->registry->shared(computer)), "history").simulation_constant;
}

HaltingList oracle_for(const Registry& ext, const char* oracle_path, std::uint64_t bound,
                       std::uint64_t budget_cap) {
  if (oracle_path) return io::load_oracle(oracle_path, bound);
  return closed_world_oracle(ext, bound, budget_cap);
}

RealSource alpha_arg(const ol_registry* reg, const char* alpha) {
  require(alpha, "alpha");
  if (std::string_view(alpha) == "omega") {
    require(reg, "registry");
    const OmegaValue v = omega_exact(reg->registry->universal());
    return RealSource::exact(v.value);
  }
  return RealSource::parse(alpha);
}

BitString prefix_or_exact(const Computer& v, const char* prefix, std::uint64_t length) {
  if (prefix) return BitString::from_text(prefix);
  return real_prefix(RealSource::exact(omega_exact(v).value), static_cast<std::int64_t>(length));
}

std::vector<ComputerPtr> entries_of(const ol_registry* reg) {
  std::vector<ComputerPtr> out;
  for (std::uint32_t i = 1; i <= reg->registry->size(); ++i) out.push_back(reg->registry->shared(i));
  return out;
}

}  // namespace

extern "C" {

const char* ol_status_name(ol_status status) {
  switch (status) {
    case OL_OK: return "Ok";
    case OL_NOT_FOUND: return "NotFound";
    case OL_INTERNAL: return "Internal";
    default: break;
  }
  const int code = static_cast<int>(status) - 1;
  if (code >= 0 && code <= static_cast<int>(ErrorCode::BudgetExhausted))
    return error_code_name(static_cast<ErrorCode>(code));
  return "Unknown";
}

const char* ol_last_error(void) { return last_error.c_str(); }

void ol_string_free(char* s) { std::free(s); }

void ol_run_result_free(ol_run_result* r) {
  if (!r) return;
  std::free(r->output);
  r->output = nullptr;
}

void ol_reduction_result_free(ol_reduction_result* r) {
  if (!r) return;
  std::free(r->result);
  std::free(r->transcript);
  std::free(r->report);
  *r = {};
}

ol_status ol_registry_new(ol_registry** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ol_registry{std::make_unique<Registry>(), {}};
  });
}

ol_status ol_registry_load(const char* manifest_path, ol_registry** out) {
  return guarded([&] {
    require(manifest_path, "manifest path");
    require(out, "out");
    auto reg = std::make_unique<ol_registry>();
    reg->registry = io::load_registry(manifest_path);
    for (std::uint32_t i = 1; i <= reg->registry->size(); ++i)
      reg->kinds.push_back(reg->registry->at(i).kind() == Computer::Kind::FiniteTable ? "table" : "program");
    *out = reg.release();
  });
}

void ol_registry_free(ol_registry* reg) { delete reg; }

size_t ol_registry_size(const ol_registry* reg) { return reg ? reg->registry->size() : 0; }

ol_status ol_registry_add_table(ol_registry* reg, const char* table_path, uint32_t* index) {
  return guarded([&] {
    require(reg, "registry");
    require(table_path, "table path");
    auto table = io::parse_table(io::read_file(table_path));
    const Registration r = reg->registry->add(std::make_shared<FiniteTableComputer>(std::move(table)), table_path);
    reg->kinds.push_back("table");
    if (index) *index = r.index;
  });
}

ol_status ol_registry_add_program(ol_registry* reg, const char* program_bits, uint32_t* index) {
  return guarded([&] {
    require(reg, "registry");
    auto program = vm::parse_program(bits_arg(program_bits, "program"));
    const Registration r = reg->registry->add(std::make_shared<LProgramComputer>(std::move(program)), "program");
    reg->kinds.push_back("program");
    if (index) *index = r.index;
  });
}

ol_status ol_registry_list(const ol_registry* reg, char** out) {
  return guarded([&] {
    require(reg, "registry");
    require(out, "out");
    std::string text;
    for (std::uint32_t i = 1; i <= reg->registry->size(); ++i) {
      text += std::to_string(i) + " " + reg->kinds[i - 1] + " " +
              std::to_string(Registry::simulation_constant(i)) + " " + reg->registry->at(i).describe() + "\n";
    }
    *out = dup(text);
  });
}

ol_status ol_vm_run(const char* program_bits, const char* input, uint64_t budget, ol_run_result* out) {
  return guarded([&] {
    require(out, "out");
    const auto program = vm::parse_program(bits_arg(program_bits, "program"));
    fill_run(vm::run(program, bits_arg(input, "input"), budget), out);
  });
}

ol_status ol_vm_parse(const char* program_bits, char** listing) {
  return guarded([&] {
    require(listing, "listing");
    *listing = dup(vm::parse_program(bits_arg(program_bits, "program")).listing());
  });
}

ol_status ol_vm_assemble(const char* source, char** program_bits) {
  return guarded([&] {
    require(source, "source");
    require(program_bits, "out");
    *program_bits = dup(vm::assemble(source).source_bits().text());
  });
}

ol_status ol_computer_run(const ol_registry* reg, uint32_t computer, const char* input, uint64_t budget,
                          ol_run_result* out) {
  return guarded([&] {
    require(out, "out");
    fill_run(pick(reg, computer).run(bits_arg(input, "input"), budget), out);
  });
}

ol_status ol_explore(const ol_registry* reg, uint32_t computer, uint64_t budget, uint64_t depth,
                     char** snapshot) {
  return guarded([&] {
    require(snapshot, "out");
    *snapshot = dup(io::format_snapshot(explore(pick(reg, computer), budget, depth, computer)));
  });
}

ol_status ol_omega(const ol_registry* reg, uint32_t computer, uint64_t budget, uint64_t depth, char** value,
                   int* exact) {
  return guarded([&] {
    require(value, "out");
    const OmegaApproximation a = omega_approx(pick(reg, computer), budget, depth, computer);
    *value = dup(a.lower.to_string());
    if (exact) *exact = a.exact ? 1 : 0;
  });
}

ol_status ol_running_time(const ol_registry* reg, uint32_t computer, uint64_t n, uint64_t budget,
                          uint64_t* steps, int* exact) {
  return guarded([&] {
    require(steps, "out");
    const RunningTime t = max_running_time(pick(reg, computer), n, budget);
    *steps = t.steps;
    if (exact) *exact = t.exact ? 1 : 0;
  });
}

ol_status ol_domain_from_time(const ol_registry* reg, uint32_t computer, uint64_t n, uint64_t time_bound,
                              char** domain) {
  return guarded([&] {
    require(domain, "out");
    *domain = dup(io::format_domain(domain_from_time_bound(pick(reg, computer), n, time_bound)));
  });
}

ol_status ol_kc_alloc(const char* length_function, const char* base_dir, uint64_t count, int64_t shift,
                      char** log, uint64_t* used_shift) {
  return guarded([&] {
    require(length_function, "length function");
    require(log, "out");
    const LengthFunction f = LengthFunction::parse(length_function, dir_arg(base_dir));
    const std::uint64_t d0 = shift < 0 ? choose_shift(f, count) : static_cast<std::uint64_t>(shift);
    *log = dup(io::format_allocation(allocate_for(f, d0, count)));
    if (used_shift) *used_shift = d0;
  });
}

ol_status ol_kc_sum(const char* length_function, const char* base_dir, uint64_t count, char** value) {
  return guarded([&] {
    require(length_function, "length function");
    require(value, "out");
    const LengthFunction f = LengthFunction::parse(length_function, dir_arg(base_dir));
    *value = dup(kraft_partial_sum(f, count).to_string());
  });
}

ol_status ol_reduce_halting(const ol_registry* reg, uint32_t computer, uint64_t n, const char* prefix,
                          uint64_t budget_cap, ol_reduction_result* out) {
  return guarded([&] {
    require(out, "out");
    const Computer& v = pick(reg, computer);
    const BitString p = prefix_or_exact(v, prefix, n);
    Transcript tr;
    const BitSet dom = halting_from_omega(v, p, budget_cap, &tr);
    fill_reduction(out, io::format_domain(dom), tr, "prefix=" + p.text() + "\n");
  });
}

ol_status ol_reduce_indexed(const ol_registry* reg, uint32_t target, uint64_t n, const char* prefix,
                          uint64_t budget_cap, ol_reduction_result* out) {
  return guarded([&] {
    require(out, "out");
    pick(reg, target);
    if (target == 0) throw Error(ErrorCode::InvalidArgument, "the target must be a registered computer");
    const IndexSetup setup = build_index_setup(reg->registry->shared(target), entries_of(reg));
    const BitString p = prefix_or_exact(setup.registry->universal(), prefix, n + setup.d);
    Transcript tr;
    const BitSet dom = indexed_halting_from_omega(setup, n, p, budget_cap, &tr);
    fill_reduction(out, io::format_domain(dom), tr,
                   "d=" + std::to_string(setup.d) + "\nindex_entry=" + std::to_string(setup.index_entry) +
                       "\nprefix=" + p.text() + "\n");
  });
}

ol_status ol_reduce_bounded_loss(const ol_registry* reg, uint32_t target, uint64_t n, const char* length_function,
                          uint64_t d1, const char* prefix, uint64_t budget_cap, ol_reduction_result* out) {
  return guarded([&] {
    require(out, "out");
    require(length_function, "length function");
    pick(reg, target);
    if (target == 0) throw Error(ErrorCode::InvalidArgument, "the target must be a registered computer");
    const LengthFunction f = LengthFunction::parse(length_function);
    const IndexSetup setup = build_index_setup(reg->registry->shared(target), entries_of(reg));
    const BitString p = prefix_or_exact(setup.registry->universal(), prefix, n);
    Transcript tr;
    const BitSet dom = bounded_loss_domain_from_omega(setup, n, p, f, d1, budget_cap, &tr);
    fill_reduction(out, io::format_domain(dom), tr,
                   "c=" + std::to_string(d1 + setup.d) + "\nd2=" + std::to_string(setup.d) + "\nprefix=" +
                       p.text() + "\n");
  });
}

ol_status ol_reduce_weaksim(const ol_registry* reg, uint32_t computer, const char* input, const char* oracle_path,
                            uint64_t oracle_bound, uint64_t budget_cap, ol_reduction_result* out) {
  return guarded([&] {
    require(out, "out");
    const BitString p = bits_arg(input, "input");
    Registry ext;
    const std::uint64_t d = extend_with_history(reg, computer, ext);
    const std::uint64_t bound = oracle_bound ? oracle_bound : p.size() + d;
    const OracleView view(ext.universal(), oracle_for(ext, oracle_path, bound, budget_cap), budget_cap);
    Transcript tr;
    const bool member = weaksim_decide(ext.at(computer), p, view, d, &tr);
    fill_reduction(out, member ? "1\n" : "0\n", tr, "d=" + std::to_string(d) + "\n");
  });
}

ol_status ol_reduce_occ(const ol_registry* reg, uint32_t computer, uint64_t n, const char* oracle_path,
                        uint64_t oracle_bound, uint64_t budget_cap, ol_reduction_result* out) {
  return guarded([&] {
    require(out, "out");
    Registry ext;
    const std::uint64_t d = extend_with_history(reg, computer, ext);
    const std::uint64_t bound = oracle_bound ? oracle_bound : n + d;
    const OracleView view(ext.universal(), oracle_for(ext, oracle_path, bound, budget_cap), budget_cap);
    Transcript tr;
    const BitSet dom = occ_domain_from_domain(ext.at(computer), n, view, d, &tr);
    fill_reduction(out, io::format_domain(dom), tr, "d=" + std::to_string(d) + "\n");
  });
}

ol_status ol_reduce_ire(const ol_registry* reg, const char* alpha, const char* length_function, uint64_t horizon,
                        int64_t shift, uint64_t n, const char* oracle_path, uint64_t budget_cap,
                        ol_reduction_result* out) {
  return guarded([&] {
    require(out, "out");
    require(length_function, "length function");
    std::optional<std::uint64_t> d0;
    if (shift >= 0) d0 = static_cast<std::uint64_t>(shift);
    const IreSetup setup =
        build_ire_setup(alpha_arg(reg, alpha), LengthFunction::parse(length_function), horizon, d0);
    const std::uint64_t first = n ? n : 1;
    const std::uint64_t last = n ? n : horizon;
    // One oracle at the largest bound serves every smaller n.
    const HaltingList full = oracle_path ? io::load_oracle(oracle_path, last)
                                         : closed_world_oracle(*setup.registry, last, budget_cap);
    Transcript tr;
    std::string result;
    for (std::uint64_t k = first; k <= last; ++k) {
      const HaltingList oracle = full.restricted(k);
      result += std::to_string(k) + " " + ire_extract_bits(setup, oracle, k, budget_cap, &tr).text() + "\n";
    }
    fill_reduction(out, result, tr,
                   "c=" + std::to_string(setup.c) + "\nd0=" + std::to_string(setup.shift) +
                       "\nd=" + std::to_string(setup.d) + "\nH(d)=" + std::to_string(setup.d_complexity) +
                       "\nd*=" + setup.d_program.text() + "\n");
  });
}

ol_status ol_reduce_iire(const ol_registry* reg, const char* alpha, const char* numerals,
                         const char* length_function, uint64_t n, const char* oracle_path, uint64_t budget_cap,
                         ol_reduction_result* out) {
  bool found = false;
  const ol_status status = guarded([&] {
    require(out, "out");
    require(length_function, "length function");
    std::vector<std::uint64_t> values{3, 12, 16, 20};
    if (numerals) {
      values.clear();
      std::stringstream ss(numerals);
      for (std::string item; std::getline(ss, item, ',');) {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(item, &used);
        if (used != item.size()) throw Error(ErrorCode::ParseError, "bad numeral '" + item + "'");
        values.push_back(v);
      }
    }
    const IireSetup setup = build_iire_setup(alpha_arg(reg, alpha), values);
    const HaltingList oracle = oracle_path ? io::load_oracle(oracle_path, n)
                                           : closed_world_oracle(*setup.registry, n, budget_cap);
    Transcript tr;
    const auto bits = iire_extract_bits(setup, oracle, n, LengthFunction::parse(length_function), budget_cap, &tr);
    fill_reduction(out, bits ? bits->text() + "\n" : std::string("none\n"), tr,
                   "d=" + std::to_string(setup.d) + "\nH(d)=" + std::to_string(setup.d_complexity) + "\n");
    found = bits.has_value();
  });
  if (status == OL_OK && !found) return fail(OL_NOT_FOUND, "NotThisN: no short program for n in the oracle");
  return status;
}

}  // extern "C"
