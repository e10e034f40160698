// Copyright 2026 The qprotect Authors
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
#include <initializer_list>

namespace qprotect {

/// SplitMix64 (Steele, Lea, Flood 2014): a Weyl sequence with increment
/// 0x9e3779b97f4a7c15 passed through a 64-bit finalizer. The output stream
/// is fully determined by the seed and identical on every platform.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// The SplitMix64 finalizer (a bijection on 64-bit words).
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Order-sensitive hash of a short word sequence, built from the SplitMix64
/// finalizer.
std::uint64_t hash64(std::initializer_list<std::uint64_t> words);

/// Seed for one sweep point: base_seed XOR hash64(scheme, kind, p_index).
std::uint64_t point_seed(std::uint64_t base_seed, std::uint64_t scheme_id,
                         std::uint64_t kind_id, std::uint64_t p_index);

}  // namespace qprotect
