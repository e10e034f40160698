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

#include "qprotect/rng.hpp"

namespace qprotect {

std::uint64_t hash64(std::initializer_list<std::uint64_t> words) {
  std::uint64_t h = 0x6a09e667f3bcc909ULL ^ words.size();
  for (std::uint64_t w : words) {
    h = SplitMix64::mix(h + 0x9e3779b97f4a7c15ULL + SplitMix64::mix(w));
  }
  return h;
}

std::uint64_t point_seed(std::uint64_t base_seed, std::uint64_t scheme_id,
                         std::uint64_t kind_id, std::uint64_t p_index) {
  return base_seed ^ hash64({scheme_id, kind_id, p_index});
}

}  // namespace qprotect
