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

#ifndef HSAGG_PROTOCOL_HPP_
#define HSAGG_PROTOCOL_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hsagg/combi.hpp"
#include "hsagg/linalg.hpp"
#include "hsagg/scheme.hpp"

namespace hsagg {

// One L_S x 1 key per canonical group. Key g is drawn from its own substream
// of `seed`, so keys are mutually independent.
struct KeyMaterial {
  uint64_t seed = 0;
  std::string prng_id;
  std::vector<Mat> keys;

  friend bool operator==(const KeyMaterial&, const KeyMaterial&) = default;
};

struct UserKey {
  size_t group_index = 0;
  Mat key;
};

// Users in canonical (u, v) order; index (u-1)*V + (v-1).
std::vector<UserId> all_users(const Topology& topo);
size_t user_index(const Topology& topo, UserId user);

KeyMaterial keygen(const PrecodingScheme& s, uint64_t seed);

// The keys of every group containing `user`, in canonical group order.
std::vector<UserKey> user_key(const PrecodingScheme& s, const KeyMaterial& k,
                              UserId user);

// X = W + sum over groups g containing the user of block(g, user) * S_g.
Mat user_encode(const PrecodingScheme& s, const KeyMaterial& k, UserId user,
                const Mat& w);

// Entrywise sums. Both throw DimensionMismatch on empty or ragged input.
Mat relay_aggregate(std::span<const Mat> xs);
Mat server_decode(std::span<const Mat> ys);

struct Transcript {
  uint64_t input_seed = 0;
  uint64_t key_seed = 0;
  std::vector<Mat> inputs;          // W per user, canonical user order
  std::vector<Mat> user_messages;   // X per user, canonical user order
  std::vector<Mat> relay_messages;  // Y per relay
  Mat decoded_sum;

  // decoded_sum equals the entrywise sum of the inputs.
  bool correct() const;

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

// Uniform L x 1 inputs, one substream of `seed` per user.
std::vector<Mat> sample_inputs(const PrecodingScheme& s, uint64_t seed);

// Per-round seeds derived from one session seed; shared by the correctness
// fuzzer and the simulator.
struct RoundSeeds {
  uint64_t input_seed = 0;
  uint64_t key_seed = 0;
};
RoundSeeds round_seeds(uint64_t seed, uint64_t round);

Transcript run_round(const PrecodingScheme& s, uint64_t input_seed,
                     uint64_t key_seed);
// Explicit inputs and keys; the seeds recorded in the transcript are those of
// `k` and zero for the inputs.
Transcript run_round_with(const PrecodingScheme& s, std::vector<Mat> inputs,
                          const KeyMaterial& k);

}  // namespace hsagg

#endif  // HSAGG_PROTOCOL_HPP_
