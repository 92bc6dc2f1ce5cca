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

#include "omegalab/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "omegalab/error.hpp"
#include "omegalab/vm.hpp"

namespace omegalab::io {

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(std::move(w));
  return words;
}

// Lines with content, stripped of comments.
std::vector<std::pair<std::size_t, std::vector<std::string>>> content_lines(const std::string& text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  std::istringstream in(text);
  std::size_t number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto words = split_words(line);
    if (!words.empty()) out.emplace_back(number, std::move(words));
  }
  return out;
}

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::ParseError, "bad " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

std::int64_t parse_i64(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::ParseError, "bad " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

std::string field(const std::string& word, std::string_view key) {
  const std::string prefix = std::string(key) + "=";
  if (word.rfind(prefix, 0) != 0)
    throw Error(ErrorCode::ParseError, "expected " + prefix + "..., got '" + word + "'");
  return word.substr(prefix.size());
}

[[noreturn]] void line_error(std::size_t number, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(number) + ": " + msg);
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << contents;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

std::string format_snapshot(const DomainSnapshot& snap) {
  std::string out = "computer=" + std::to_string(snap.computer) + " budget=" + std::to_string(snap.budget) +
                    " depth=" + std::to_string(snap.depth) + "\n";
  for (const auto& e : snap.entries)
    out += e.input.text() + " " + e.output.text() + " " + std::to_string(e.steps) + "\n";
  return out;
}

DomainSnapshot parse_snapshot(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty snapshot");
  const auto& head = lines.front().second;
  if (head.size() != 3) line_error(lines.front().first, "malformed snapshot header");
  DomainSnapshot snap;
  snap.computer = parse_i64(field(head[0], "computer"), "computer");
  snap.budget = parse_u64(field(head[1], "budget"), "budget");
  snap.depth = parse_u64(field(head[2], "depth"), "depth");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, w] = lines[i];
    if (w.size() != 3) line_error(number, "expected '<input> <output> <steps>'");
    snap.entries.push_back({BitString::from_text(w[0]), BitString::from_text(w[1]), parse_u64(w[2], "steps")});
  }
  return snap;
}

std::string format_domain(const BitSet& domain) {
  std::string out;
  for (const auto& s : domain) out += s.text() + "\n";
  return out;
}

BitSet parse_domain(const std::string& text) {
  BitSet out;
  for (const auto& [number, w] : content_lines(text)) {
    if (w.size() != 1) line_error(number, "expected one string per line");
    out.insert(BitString::from_text(w[0]));
  }
  return out;
}

std::map<BitString, BitString> parse_table(const std::string& text) {
  std::map<BitString, BitString> table;
  for (const auto& [number, w] : content_lines(text)) {
    if (w.size() != 2) line_error(number, "expected '<input> <output>'");
    if (!table.emplace(BitString::from_text(w[0]), BitString::from_text(w[1])).second)
      line_error(number, "duplicate input " + w[0]);
  }
  return table;
}

std::string format_allocation(const std::vector<BitString>& codewords) {
  std::string out;
  for (std::size_t i = 0; i < codewords.size(); ++i)
    out += std::to_string(i + 1) + " " + std::to_string(codewords[i].size()) + " " + codewords[i].text() + "\n";
  return out;
}

std::unique_ptr<Registry> load_registry(const std::filesystem::path& manifest) {
  const auto base = manifest.parent_path();
  auto registry = std::make_unique<Registry>();
  for (const auto& [number, w] : content_lines(read_file(manifest))) {
    if (w.size() != 3) line_error(number, "expected '<index> <kind> <payload>'");
    const std::uint64_t index = parse_u64(w[0], "index");
    if (index != registry->size() + 1)
      line_error(number, "index " + w[0] + " out of sequence, expected " + std::to_string(registry->size() + 1));
    if (w[1] == "table") {
      auto table = parse_table(read_file(base / w[2]));
      registry->add(std::make_shared<FiniteTableComputer>(std::move(table)), w[2]);
    } else if (w[1] == "program") {
      registry->add(std::make_shared<LProgramComputer>(vm::parse_program(BitString::from_text(w[2]))), "program");
    } else {
      line_error(number, "unknown kind '" + w[1] + "'");
    }
  }
  return registry;
}

HaltingList load_oracle(const std::filesystem::path& path, std::optional<std::uint64_t> bound) {
  const std::string text = read_file(path);
  const auto lines = content_lines(text);
  if (!lines.empty() && lines.front().second.front().rfind("computer=", 0) == 0) {
    const DomainSnapshot snap = parse_snapshot(text);
    HaltingList full(snap.inputs(), snap.depth);
    return bound ? full.restricted(*bound) : full;
  }
  if (!bound)
    throw Error(ErrorCode::InvalidArgument, "a domain-list oracle needs an explicit bound");
  return HaltingList(parse_domain(text), *bound);
}

}  // namespace omegalab::io
