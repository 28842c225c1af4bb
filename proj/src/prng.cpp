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

#include "hsagg/prng.hpp"

#include <limits>

namespace hsagg {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t seed, Stream stream, uint64_t index) {
  uint64_t x = splitmix64(seed);
  x = splitmix64(x ^ static_cast<uint64_t>(stream));
  return splitmix64(x ^ index);
}

Felt FieldSampler::uniform(const PrimeField& field) {
  const uint64_t q = field.modulus();
  // 2^64 mod q; draws at or above 2^64 - rem would bias the low residues.
  const uint64_t rem = (0 - q) % q;
  const uint64_t max_ok = std::numeric_limits<uint64_t>::max() - rem;
  for (;;) {
    uint64_t r = engine_();
    if (r <= max_ok) return Felt{r % q};
  }
}

}  // namespace hsagg
