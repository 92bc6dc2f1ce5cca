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
#include <utility>

#include "omegalab/bits.hpp"

namespace omegalab {

/// Elias gamma code: with k = floor(log2 i), emits 1^k 0 followed by the k
/// low bits of i. Throws InvalidArgument for i = 0.
BitString elias_gamma_encode(std::uint64_t i);

struct GammaDecode {
  enum class Status { Complete, Incomplete };
  Status status;
  std::uint64_t value = 0;
  /// Number of bits the codeword occupies.
  std::size_t length = 0;
};

/// Decodes one codeword starting at `pos`. Every string is either a prefix of
/// some codeword or begins with one, so the only failure is running out of
/// bits. Codewords whose value needs more than 64 bits throw Overflow.
GammaDecode elias_gamma_decode(const BitString& bits, std::size_t pos = 0);

}  // namespace omegalab
