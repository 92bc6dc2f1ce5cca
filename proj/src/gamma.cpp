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

#include "omegalab/gamma.hpp"

#include "omegalab/error.hpp"

namespace omegalab {

BitString elias_gamma_encode(std::uint64_t i) {
  if (i == 0) throw Error(ErrorCode::InvalidArgument, "Elias gamma is defined for i >= 1");
  std::size_t k = 63;
  while (((i >> k) & 1U) == 0) --k;
  BitString out;
  for (std::size_t j = 0; j < k; ++j) out.push_back(true);
  out.push_back(false);
  out.append(BitString::from_uint(i, k));
  return out;
}

GammaDecode elias_gamma_decode(const BitString& bits, std::size_t pos) {
  using Status = GammaDecode::Status;
  std::size_t k = 0;
  std::size_t at = pos;
  while (true) {
    if (at >= bits.size()) return {Status::Incomplete};
    if (!bits[at]) break;
    ++k;
    ++at;
  }
  ++at;  // the terminating zero
  if (k > 63) throw Error(ErrorCode::Overflow, "gamma codeword exceeds 64 bits");
  if (at + k > bits.size()) return {Status::Incomplete};
  std::uint64_t v = 1;
  for (std::size_t j = 0; j < k; ++j) v = (v << 1) | static_cast<std::uint64_t>(bits[at + j]);
  return {Status::Complete, v, at + k - pos};
}

}  // namespace omegalab
