/*
 * Copyright 2026 The hsagg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HSAGG_PRNG_HPP_
#define HSAGG_PRNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>

#include "hsagg/gf.hpp"

namespace hsagg {

// Recorded in every serialized artifact. Streams are std::mt19937_64 (fully
// specified by the C++ standard) seeded from splitmix64-derived seeds;
// field symbols come from 64-bit draws by rejection sampling.
inline constexpr std::string_view kPrngId = "mt19937_64+splitmix64/v1";

// Stream tags for derive_seed, so that keys, inputs and matrices drawn from
// the same user seed never share a generator.
enum class Stream : uint64_t {
  kSchemeAttempt = 1,
  kGroupKey = 2,
  kUserInput = 3,
  kRoundInput = 4,
  kRoundKey = 5,
  kMutation = 6,
};

uint64_t splitmix64(uint64_t x);

// Seed for the substream (stream, index) of a user-supplied seed.
uint64_t derive_seed(uint64_t seed, Stream stream, uint64_t index);

class FieldSampler {
 public:
  explicit FieldSampler(uint64_t seed) : engine_(seed) {}

  // Exactly uniform over [0, q-1].
  Felt uniform(const PrimeField& field);
  uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hsagg

#endif  // HSAGG_PRNG_HPP_
