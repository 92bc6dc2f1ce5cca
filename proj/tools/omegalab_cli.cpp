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

// omegalab command-line tool. Talks to the library only through omegalab.h.

#include <omegalab.h>

#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

constexpr int kExitContract = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;

struct Failure {
  ol_status status;
  std::string message;
};

void check(ol_status s) {
  if (s != OL_OK) throw Failure{s, ol_last_error()};
}

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { ol_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct OwnedReduction {
  ol_reduction_result r{};
  ~OwnedReduction() { ol_reduction_result_free(&r); }
};

struct OwnedRun {
  ol_run_result r{};
  ~OwnedRun() { ol_run_result_free(&r); }
};

struct RegistryHandle {
  ol_registry* p = nullptr;
  ~RegistryHandle() { ol_registry_free(p); }
};

struct Options {
  std::uint64_t budget = 4096;
  std::uint64_t depth = 16;
  std::string registry;
  std::string oracle;
  std::string out;
  std::uint64_t bound = 0;
  std::uint32_t computer = 0;
  std::uint64_t n = 0;
  std::string program;
  std::string asm_source;
  std::string input = "^";
  std::string f = "const:1";
  std::uint64_t count = 0;
  std::int64_t shift = -1;
  std::string prefix;
  std::uint64_t d1 = 0;
  std::string alpha;
  std::uint64_t horizon = 0;
  std::string numerals;
  std::string table;
};

std::uint64_t capped(std::uint64_t budget) {
  if (const char* env = std::getenv("OMEGALAB_MAX_STEPS")) {
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw CLI::ValidationError("OMEGALAB_MAX_STEPS", "must be a non-negative integer");
    if (cap < budget) return cap;
  }
  return budget;
}

// 64-bit FNV-1a, used only to fingerprint input files in reports.
std::uint64_t fnv1a(const std::string& data, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Artifacts {
 public:
  Artifacts(const Options& opt, std::string command) : opt_(opt), command_(std::move(command)) {}

  void add(const std::string& name, const std::string& contents) { files_.emplace_back(name, contents); }

  void emit(const std::string& stdout_text, bool exact) {
    std::cout << stdout_text;
    if (opt_.out.empty()) return;
    fs::create_directories(opt_.out);
    for (const auto& [name, contents] : files_) write(name, contents);
    std::uint64_t digest = fnv1a("");
    for (const auto* path : {&opt_.registry, &opt_.oracle}) {
      if (!path->empty()) digest = fnv1a(slurp(*path), digest);
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(digest));
    std::string report = "command: " + command_ + "\ninputs: " + hex + "\nexact: " + (exact ? "yes" : "no") + "\n";
    for (const auto& [name, contents] : files_) report += "artifact: " + name + "\n";
    write("report.txt", report);
  }

 private:
  void write(const std::string& name, const std::string& contents) const {
    std::ofstream f(fs::path(opt_.out) / name, std::ios::binary | std::ios::trunc);
    if (!f) throw Failure{OL_IO_ERROR, "cannot write " + (fs::path(opt_.out) / name).string()};
    f << contents;
  }

  const Options& opt_;
  std::string command_;
  std::vector<std::pair<std::string, std::string>> files_;
};

RegistryHandle load_registry(const Options& opt, bool required) {
  RegistryHandle h;
  if (opt.registry.empty()) {
    if (required) throw CLI::RequiredError("--registry");
    return h;
  }
  check(ol_registry_load(opt.registry.c_str(), &h.p));
  return h;
}

const char* optional_cstr(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

void emit_reduction(Artifacts& art, const OwnedReduction& red, const std::string& result_name) {
  art.add(result_name, red.r.result ? red.r.result : "");
  art.add("transcript.txt", red.r.transcript ? red.r.transcript : "");
  art.add("constants.txt", red.r.report ? red.r.report : "");
  art.emit(red.r.result ? red.r.result : "", true);
}

const char* outcome_label(ol_outcome o) {
  switch (o) {
    case OL_HALTED: return "halted";
    case OL_HALTED_EARLY: return "halted-early";
    case OL_NEEDS_INPUT: return "needs-input";
    case OL_OUT_OF_BUDGET: return "budget-exhausted";
    case OL_DIVERGED: return "diverged";
  }
  return "?";
}

int report_run(Artifacts& art, const ol_run_result& r) {
  std::string line = r.outcome == OL_HALTED ? std::string(r.output) : std::string(outcome_label(r.outcome));
  line += "\n";
  art.add("run.txt", std::string("outcome=") + outcome_label(r.outcome) + " output=" + r.output +
                         " consumed=" + std::to_string(r.consumed) + " steps=" + std::to_string(r.steps) + "\n");
  art.emit(line, r.outcome != OL_OUT_OF_BUDGET);
  return r.outcome == OL_OUT_OF_BUDGET ? kExitBudget : 0;
}

std::string echo(const std::vector<std::string>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--out") {
      ++i;
      continue;
    }
    if (args[i].rfind("--out=", 0) == 0) continue;
    if (!out.empty()) out += ' ';
    out += args[i];
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"omegalab: prefix-free machines, halting probabilities and their reductions"};
  app.require_subcommand(1);
  Options opt;
  std::optional<int> exit_code;

  auto common = [&](CLI::App* sub, bool with_registry) {
    sub->add_option("--budget", opt.budget, "Step budget (capped by OMEGALAB_MAX_STEPS)");
    sub->add_option("--out", opt.out, "Directory for artifacts");
    if (with_registry) sub->add_option("--registry", opt.registry, "Registry manifest");
  };

  // vm
  auto* vm = app.add_subcommand("vm", "Run and inspect L-programs");
  vm->require_subcommand(1);
  auto* vm_run = vm->add_subcommand("run", "Run a program on one input");
  common(vm_run, false);
  auto* prog_opt = vm_run->add_option("--program", opt.program, "Program bits");
  vm_run->add_option("--asm", opt.asm_source, "Program as mnemonics")->excludes(prog_opt);
  vm_run->add_option("--input", opt.input, "Input bits");
  auto* vm_parse = vm->add_subcommand("parse", "Decode program bits into a listing");
  common(vm_parse, false);
  vm_parse->add_option("--program", opt.program, "Program bits")->required();
  auto* vm_asm = vm->add_subcommand("asm", "Encode mnemonics as program bits");
  common(vm_asm, false);
  vm_asm->add_option("source", opt.asm_source, "Mnemonics, e.g. \"READ OUTR HALT\"")->required();

  // enum
  auto* en = app.add_subcommand("enum", "Enumerate halting inputs");
  en->require_subcommand(1);
  auto* en_explore = en->add_subcommand("explore", "Snapshot of the halting inputs up to a depth");
  auto* en_omega = en->add_subcommand("omega", "Lower bound on the halting probability");
  auto* en_time = en->add_subcommand("time", "Longest running time among halting inputs of length <= n");
  for (auto* sub : {en_explore, en_omega, en_time}) {
    common(sub, true);
    sub->add_option("--computer", opt.computer, "Registry entry (0 = universal)");
  }
  en_explore->add_option("--depth", opt.depth, "Input length limit");
  en_omega->add_option("--depth", opt.depth, "Input length limit");
  en_time->add_option("--n", opt.n, "Input length")->required();

  // kc
  auto* kc = app.add_subcommand("kc", "Kraft-Chaitin allocation");
  kc->require_subcommand(1);
  auto* kc_alloc = kc->add_subcommand("alloc", "Allocate codewords of lengths f(n) + shift");
  auto* kc_sum = kc->add_subcommand("sum", "Exact partial Kraft sum");
  for (auto* sub : {kc_alloc, kc_sum}) {
    common(sub, false);
    sub->add_option("--f", opt.f, "Length function: const:k, floorlog:a or table:path")->required();
    sub->add_option("--N", opt.count, "Number of terms")->required();
  }
  kc_alloc->add_option("--shift", opt.shift, "Fixed shift (default: smallest admissible)");

  // reduce
  auto* red = app.add_subcommand("reduce", "Oracle reductions");
  red->require_subcommand(1);
  auto* r_fact1 = red->add_subcommand("fact1", "Halting inputs of length <= n from n bits of Omega");
  auto* r_appxc = red->add_subcommand("appxc", "Domain of a computer from a prefix of Omega");
  auto* r_main3 = red->add_subcommand("main3", "Domain restricted to n + f(n) - c from n bits of Omega");
  auto* r_weaksim = red->add_subcommand("weaksim", "Membership through a halting list");
  auto* r_occ = red->add_subcommand("occ", "Domain restricted to n through a halting list");
  auto* r_ire = red->add_subcommand("ire", "Bits of a real from a halting list");
  auto* r_iire = red->add_subcommand("iire", "Bits of a real when a short program for n exists");
  for (auto* sub : {r_fact1, r_appxc, r_main3, r_weaksim, r_occ}) {
    common(sub, true);
    sub->add_option("--computer", opt.computer, "Registry entry");
  }
  for (auto* sub : {r_fact1, r_appxc, r_main3, r_occ, r_iire}) sub->add_option("--n", opt.n, "Length n")->required();
  for (auto* sub : {r_fact1, r_appxc, r_main3})
    sub->add_option("--prefix", opt.prefix, "Omega prefix (default: computed in the closed world)");
  r_main3->add_option("--f", opt.f, "Bounded length function")->required();
  r_main3->add_option("--d1", opt.d1, "Upper bound on f")->required();
  r_weaksim->add_option("--input", opt.input, "Input p")->required();
  for (auto* sub : {r_weaksim, r_occ, r_ire, r_iire}) {
    sub->add_option("--oracle", opt.oracle, "Halting-list file (default: computed in the closed world)");
  }
  for (auto* sub : {r_weaksim, r_occ}) sub->add_option("--bound", opt.bound, "Bound of a domain-list oracle");
  for (auto* sub : {r_ire, r_iire}) {
    common(sub, true);
    sub->add_option("--alpha", opt.alpha, "Real: p/q, decimal, n/2^k or omega")->required();
    sub->add_option("--f", opt.f, "Length function")->required();
  }
  r_ire->add_option("--horizon", opt.horizon, "Largest n")->required();
  r_ire->add_option("--shift", opt.shift, "Fixed shift d0");
  r_ire->add_option("--n", opt.n, "Single n (default: every n in the horizon)");
  r_iire->add_option("--numerals", opt.numerals, "Comma-separated numeral table");

  // registry
  auto* reg = app.add_subcommand("registry", "Edit and show registry manifests");
  reg->require_subcommand(1);
  auto* reg_add = reg->add_subcommand("add", "Append a computer to a manifest");
  auto* reg_list = reg->add_subcommand("list", "List the entries of a manifest");
  for (auto* sub : {reg_add, reg_list}) {
    sub->add_option("--registry", opt.registry, "Registry manifest")->required();
    sub->add_option("--out", opt.out, "Directory for artifacts");
  }
  auto* add_table = reg_add->add_option("--table", opt.table, "Two-column table file");
  reg_add->add_option("--program", opt.program, "Program bits")->excludes(add_table);

  const std::vector<std::string> args(argv + 1, argv + argc);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  Artifacts art(opt, echo(args));
  try {
    const std::uint64_t budget = capped(opt.budget);

    if (vm_run->parsed()) {
      std::string bits = opt.program;
      OwnedString assembled;
      if (!opt.asm_source.empty()) {
        check(ol_vm_assemble(opt.asm_source.c_str(), &assembled.p));
        bits = assembled.str();
      }
      if (bits.empty()) throw CLI::RequiredError("--program or --asm");
      OwnedRun run;
      check(ol_vm_run(bits.c_str(), opt.input.c_str(), budget, &run.r));
      exit_code = report_run(art, run.r);
    } else if (vm_parse->parsed()) {
      OwnedString listing;
      check(ol_vm_parse(opt.program.c_str(), &listing.p));
      art.add("listing.txt", listing.str());
      art.emit(listing.str(), true);
    } else if (vm_asm->parsed()) {
      OwnedString bits;
      check(ol_vm_assemble(opt.asm_source.c_str(), &bits.p));
      art.emit(bits.str() + "\n", true);
    } else if (en_explore->parsed()) {
      auto r = load_registry(opt, true);
      OwnedString snap;
      check(ol_explore(r.p, opt.computer, budget, opt.depth, &snap.p));
      art.add("snapshot.txt", snap.str());
      art.emit(snap.str(), true);
    } else if (en_omega->parsed()) {
      auto r = load_registry(opt, true);
      OwnedString value;
      int exact = 0;
      check(ol_omega(r.p, opt.computer, budget, opt.depth, &value.p, &exact));
      const std::string line = value.str() + (exact ? " exact\n" : " lower-bound\n");
      art.add("omega.txt", line);
      art.emit(line, exact != 0);
    } else if (en_time->parsed()) {
      auto r = load_registry(opt, true);
      std::uint64_t steps = 0;
      int exact = 0;
      check(ol_running_time(r.p, opt.computer, opt.n, budget, &steps, &exact));
      OwnedString domain;
      check(ol_domain_from_time(r.p, opt.computer, opt.n, steps, &domain.p));
      const std::string line = std::to_string(steps) + (exact ? " exact\n" : " lower-bound\n");
      art.add("time.txt", line);
      art.add("domain.txt", domain.str());
      art.emit(line, exact != 0);
    } else if (kc_alloc->parsed()) {
      OwnedString log;
      std::uint64_t used = 0;
      check(ol_kc_alloc(opt.f.c_str(), ".", opt.count, opt.shift, &log.p, &used));
      art.add("allocation.txt", log.str());
      art.add("shift.txt", std::to_string(used) + "\n");
      art.emit(log.str(), true);
    } else if (kc_sum->parsed()) {
      OwnedString value;
      check(ol_kc_sum(opt.f.c_str(), ".", opt.count, &value.p));
      const std::string line = value.str() + " exact\n";
      art.add("sum.txt", line);
      art.emit(line, true);
    } else if (r_fact1->parsed() || r_appxc->parsed() || r_main3->parsed()) {
      auto r = load_registry(opt, true);
      OwnedReduction out;
      const char* prefix = optional_cstr(opt.prefix);
      if (r_fact1->parsed())
        check(ol_reduce_halting(r.p, opt.computer, opt.n, prefix, budget, &out.r));
      else if (r_appxc->parsed())
        check(ol_reduce_indexed(r.p, opt.computer, opt.n, prefix, budget, &out.r));
      else
        check(ol_reduce_bounded_loss(r.p, opt.computer, opt.n, opt.f.c_str(), opt.d1, prefix, budget, &out.r));
      emit_reduction(art, out, "domain.txt");
    } else if (r_weaksim->parsed()) {
      auto r = load_registry(opt, true);
      OwnedReduction out;
      check(ol_reduce_weaksim(r.p, opt.computer, opt.input.c_str(), optional_cstr(opt.oracle), opt.bound, budget,
                              &out.r));
      emit_reduction(art, out, "member.txt");
    } else if (r_occ->parsed()) {
      auto r = load_registry(opt, true);
      OwnedReduction out;
      check(ol_reduce_occ(r.p, opt.computer, opt.n, optional_cstr(opt.oracle), opt.bound, budget, &out.r));
      emit_reduction(art, out, "domain.txt");
    } else if (r_ire->parsed()) {
      auto r = load_registry(opt, false);
      OwnedReduction out;
      check(ol_reduce_ire(r.p, opt.alpha.c_str(), opt.f.c_str(), opt.horizon, opt.shift, opt.n,
                          optional_cstr(opt.oracle), budget, &out.r));
      emit_reduction(art, out, "bits.txt");
    } else if (r_iire->parsed()) {
      auto r = load_registry(opt, false);
      OwnedReduction out;
      const ol_status s = ol_reduce_iire(r.p, opt.alpha.c_str(), optional_cstr(opt.numerals), opt.f.c_str(), opt.n,
                                         optional_cstr(opt.oracle), budget, &out.r);
      if (s != OL_NOT_FOUND) check(s);
      emit_reduction(art, out, "bits.txt");
    } else if (reg_add->parsed()) {
      RegistryHandle h;
      if (fs::exists(opt.registry))
        check(ol_registry_load(opt.registry.c_str(), &h.p));
      else
        check(ol_registry_new(&h.p));
      std::uint32_t index = 0;
      std::string line;
      if (!opt.table.empty()) {
        check(ol_registry_add_table(h.p, opt.table.c_str(), &index));
        const fs::path base = fs::absolute(opt.registry).parent_path();
        line = std::to_string(index) + " table " + fs::relative(fs::absolute(opt.table), base).generic_string();
      } else if (!opt.program.empty()) {
        check(ol_registry_add_program(h.p, opt.program.c_str(), &index));
        line = std::to_string(index) + " program " + opt.program;
      } else {
        throw CLI::RequiredError("--table or --program");
      }
      std::ofstream manifest(opt.registry, std::ios::app);
      if (!manifest) throw Failure{OL_IO_ERROR, "cannot append to " + opt.registry};
      manifest << line << "\n";
      art.emit(std::to_string(index) + "\n", true);
    } else if (reg_list->parsed()) {
      auto r = load_registry(opt, true);
      OwnedString listing;
      check(ol_registry_list(r.p, &listing.p));
      art.add("registry.txt", listing.str());
      art.emit(listing.str(), true);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.status == OL_BUDGET_EXHAUSTED ? kExitBudget : kExitContract;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitContract;
  }
  return exit_code.value_or(0);
}
