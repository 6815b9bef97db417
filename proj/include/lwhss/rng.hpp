// Copyright 2026 The lwhss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LWHSS_RNG_HPP_
#define LWHSS_RNG_HPP_

#include <cstdint>
#include <random>

#include "lwhss/field.hpp"

namespace lwhss {

// Independent deterministic streams: stream k of a seed is a Mersenne Twister
// seeded from (seed, k). Not cryptographic.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t next() { return engine_(); }

  // Uniform element of the field.
  Elem uniform(const FieldSpec& field) {
    std::uniform_int_distribution<std::uint64_t> dist(0, field.order() - 1);
    return static_cast<Elem>(dist(engine_));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lwhss

#endif  // LWHSS_RNG_HPP_
