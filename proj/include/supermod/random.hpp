// Copyright 2026 The supermod Authors.
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

#ifndef SUPERMOD_RANDOM_HPP_
#define SUPERMOD_RANDOM_HPP_

#include <cstdint>

namespace supermod {

// Fixed 64-bit linear congruential generator (Knuth MMIX multipliers):
//   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
// Random bits are taken from the top of the state, so output is identical on
// every platform. All experiments are seeded through this generator.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  // Single uniform bit (top bit of the state).
  int next_bit() { return static_cast<int>(next_u64() >> 63); }

  // Uniform value in [0, bound), bound >= 1; uses the high bits.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace supermod

#endif  // SUPERMOD_RANDOM_HPP_
