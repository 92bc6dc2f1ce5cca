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

// Text formats shared by the command-line tool and the tests. Every bit
// string is written as ASCII '0'/'1' with "^" standing for the empty string.

#include <filesystem>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "omegalab/bits.hpp"
#include "omegalab/enumerator.hpp"
#include "omegalab/reductions.hpp"
#include "omegalab/registry.hpp"

namespace omegalab::io {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

/// Header "computer=<i> budget=<t> depth=<n>", then "<input> <output> <steps>".
std::string format_snapshot(const DomainSnapshot& snap);
DomainSnapshot parse_snapshot(const std::string& text);

/// One string per line in canonical order.
std::string format_domain(const BitSet& domain);
BitSet parse_domain(const std::string& text);

/// Two columns "<input> <output>"; blank lines and '#' comments are skipped.
std::map<BitString, BitString> parse_table(const std::string& text);

/// Lines "<n> <length> <codeword>" with n counted from 1.
std::string format_allocation(const std::vector<BitString>& codewords);

/// Manifest lines "<index> <kind> <payload>"; kind is "table" (payload is a
/// path relative to the manifest) or "program" (payload is program bits).
/// Indices must run 1, 2, ... in file order.
std::unique_ptr<Registry> load_registry(const std::filesystem::path& manifest);

/// Reads either a snapshot (bound = its depth) or a domain list. A domain
/// list carries no bound of its own, so one must be supplied.
HaltingList load_oracle(const std::filesystem::path& path, std::optional<std::uint64_t> bound);

}  // namespace omegalab::io
