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

#include "omegalab/kraft.hpp"

#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "omegalab/error.hpp"

namespace omegalab {

namespace mp = boost::multiprecision;

LengthFunction LengthFunction::floor_log(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  const std::uint64_t g = std::gcd(numerator, denominator);
  return LengthFunction(FloorLog{numerator / (g ? g : 1), denominator / (g ? g : 1)});
}

namespace {

std::uint64_t parse_u64(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "expected a number");
  std::uint64_t v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw Error(ErrorCode::ParseError, "bad number '" + std::string(text) + "'");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

}  // namespace

LengthFunction LengthFunction::parse(std::string_view text, const std::filesystem::path& base_dir) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorCode::ParseError, "length function needs '<kind>:<arg>'");
  const auto kind = text.substr(0, colon);
  const auto arg = text.substr(colon + 1);
  if (kind == "const") return constant(parse_u64(arg));
  if (kind == "floorlog") {
    if (const auto slash = arg.find('/'); slash != std::string_view::npos)
      return floor_log(parse_u64(arg.substr(0, slash)), parse_u64(arg.substr(slash + 1)));
    if (const auto dot = arg.find('.'); dot != std::string_view::npos) {
      const auto frac = arg.substr(dot + 1);
      std::uint64_t scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      const std::uint64_t whole = dot == 0 ? 0 : parse_u64(arg.substr(0, dot));
      return floor_log(whole * scale + (frac.empty() ? 0 : parse_u64(frac)), scale);
    }
    return floor_log(parse_u64(arg), 1);
  }
  if (kind == "table") {
    std::filesystem::path path(arg);
    if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open length table " + path.string());
    std::vector<std::uint64_t> values;
    std::string word;
    while (in >> word) values.push_back(parse_u64(word));
    return table(std::move(values));
  }
  throw Error(ErrorCode::ParseError, "unknown length function kind '" + std::string(kind) + "'");
}

std::uint64_t LengthFunction::operator()(std::uint64_t n) const {
  if (n == 0) throw Error(ErrorCode::OutOfHorizon, "length functions start at n = 1");
  if (const auto* t = std::get_if<Table>(&kind_)) {
    if (n > t->values.size())
      throw Error(ErrorCode::OutOfHorizon, "length table has no entry for n = " + std::to_string(n));
    return t->values[n - 1];
  }
  if (const auto* c = std::get_if<Constant>(&kind_)) return c->k;
  const auto& fl = std::get<FloorLog>(kind_);
  if (fl.numerator == 0 || n == 1) return 0;
  // floor((p/q) log2 n) = floor(floor(log2 n^p) / q)
  const BigInt power = mp::pow(BigInt(n), static_cast<unsigned>(fl.numerator));
  return static_cast<std::uint64_t>(mp::msb(power)) / fl.denominator;
}

std::optional<std::uint64_t> LengthFunction::known_bound() const {
  if (const auto* t = std::get_if<Table>(&kind_)) {
    std::uint64_t m = 0;
    for (auto v : t->values) m = std::max(m, v);
    return m;
  }
  if (const auto* c = std::get_if<Constant>(&kind_)) return c->k;
  const auto& fl = std::get<FloorLog>(kind_);
  if (fl.numerator == 0) return 0;
  return std::nullopt;
}

std::string LengthFunction::to_string() const {
  std::ostringstream os;
  if (const auto* t = std::get_if<Table>(&kind_)) {
    os << "table[";
    for (std::size_t i = 0; i < t->values.size(); ++i) os << (i ? " " : "") << t->values[i];
    os << "]";
  } else if (const auto* c = std::get_if<Constant>(&kind_)) {
    os << "const:" << c->k;
  } else {
    const auto& fl = std::get<FloorLog>(kind_);
    os << "floorlog:" << fl.numerator;
    if (fl.denominator != 1) os << "/" << fl.denominator;
  }
  return os.str();
}

BitString Allocator::allocate(std::uint64_t length) {
  const BitString* best = nullptr;
  for (const auto& node : free_) {
    if (node.size() > length) break;  // canonical order: lengths ascend
    if (best == nullptr || node.size() > best->size()) best = &node;
  }
  if (best == nullptr)
    throw Error(ErrorCode::KraftExceeded,
                "no room for a codeword of length " + std::to_string(length) +
                    " (spent " + spent_.to_string() + ")");
  BitString root = *best;
  free_.erase(root);
  BitString code = root;
  while (code.size() < length) {
    free_.insert(code + BitString::from_text("1"));
    code.push_back(false);
  }
  issued_.emplace_back(issued_.size() + 1, code);
  spent_ += DyadicRational::pow2_neg(length);
  return code;
}

std::vector<BitString> allocate_for(const LengthFunction& f, std::uint64_t shift, std::uint64_t count) {
  Allocator alloc;
  std::vector<BitString> out;
  out.reserve(count);
  for (std::uint64_t n = 1; n <= count; ++n) out.push_back(alloc.allocate(f(n) + shift));
  return out;
}

DyadicRational kraft_partial_sum(const LengthFunction& f, std::uint64_t count) {
  // Accumulate per exponent first; one dyadic add per distinct length.
  std::map<std::uint64_t, std::uint64_t> by_length;
  for (std::uint64_t n = 1; n <= count; ++n) ++by_length[f(n)];
  DyadicRational sum;
  for (const auto& [len, times] : by_length) sum += DyadicRational(BigInt(times), len);
  return sum;
}

std::uint64_t choose_shift(const LengthFunction& f, std::uint64_t horizon) {
  const DyadicRational total = kraft_partial_sum(f, horizon);
  std::uint64_t shift = 0;
  const DyadicRational half = DyadicRational::pow2_neg(1);
  while (DyadicRational(total.numerator(), total.exponent() + shift) > half) ++shift;
  return shift;
}

}  // namespace omegalab
