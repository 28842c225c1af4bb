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

#include "hsagg/protocol.hpp"

#include <utility>

#include "hsagg/errors.hpp"
#include "hsagg/prng.hpp"

namespace hsagg {
namespace {

Mat sum_vectors(std::span<const Mat> vs, const char* what) {
  if (vs.empty()) throw DimensionMismatch(std::string(what) + ": no messages");
  Mat out = vs.front();
  if (out.cols() != 1) {
    throw DimensionMismatch(std::string(what) + ": not a column vector");
  }
  for (size_t i = 1; i < vs.size(); ++i) out += vs[i];
  return out;
}

}  // namespace

std::vector<UserId> all_users(const Topology& topo) {
  std::vector<UserId> users;
  users.reserve(topo.users());
  for (uint32_t u = 1; u <= topo.U; ++u) {
    for (uint32_t v = 1; v <= topo.V; ++v) users.push_back({u, v});
  }
  return users;
}

size_t user_index(const Topology& topo, UserId user) {
  if (user.u < 1 || user.u > topo.U || user.v < 1 || user.v > topo.V) {
    throw InvalidConfig("user (" + std::to_string(user.u) + "," +
                        std::to_string(user.v) + ") does not exist");
  }
  return size_t{user.u - 1} * topo.V + (user.v - 1);
}

KeyMaterial keygen(const PrecodingScheme& s, uint64_t seed) {
  KeyMaterial k{seed, std::string(kPrngId), {}};
  k.keys.reserve(s.groups().size());
  for (size_t g = 0; g < s.groups().size(); ++g) {
    k.keys.push_back(random_mat(s.dims().L_S, 1, s.field(),
                                derive_seed(seed, Stream::kGroupKey, g)));
  }
  return k;
}

std::vector<UserKey> user_key(const PrecodingScheme& s, const KeyMaterial& k,
                              UserId user) {
  user_index(s.topo(), user);
  std::vector<UserKey> out;
  for (size_t g = 0; g < s.groups().size(); ++g) {
    if (s.groups()[g].contains(user)) out.push_back({g, k.keys.at(g)});
  }
  return out;
}

Mat user_encode(const PrecodingScheme& s, const KeyMaterial& k, UserId user,
                const Mat& w) {
  if (w.rows() != s.dims().L || w.cols() != 1 || w.field() != s.field()) {
    throw DimensionMismatch("input must be an L x 1 vector over GF(q)");
  }
  if (k.keys.size() != s.groups().size()) {
    throw DimensionMismatch("key material does not match the scheme");
  }
  user_index(s.topo(), user);
  Mat x = w;
  for (size_t g = 0; g < s.groups().size(); ++g) {
    const Group& group = s.groups()[g];
    const size_t pos = group.position_of(user);
    if (pos == group.size()) continue;
    x += mat_vec(s.group_blocks(g)[pos], k.keys[g]);
  }
  return x;
}

Mat relay_aggregate(std::span<const Mat> xs) {
  return sum_vectors(xs, "relay_aggregate");
}

Mat server_decode(std::span<const Mat> ys) {
  return sum_vectors(ys, "server_decode");
}

bool Transcript::correct() const {
  if (inputs.empty()) return false;
  Mat expected = inputs.front();
  for (size_t i = 1; i < inputs.size(); ++i) expected += inputs[i];
  return expected == decoded_sum;
}

std::vector<Mat> sample_inputs(const PrecodingScheme& s, uint64_t seed) {
  std::vector<Mat> inputs;
  inputs.reserve(s.topo().users());
  for (size_t i = 0; i < s.topo().users(); ++i) {
    inputs.push_back(random_mat(s.dims().L, 1, s.field(),
                                derive_seed(seed, Stream::kUserInput, i)));
  }
  return inputs;
}

Transcript run_round_with(const PrecodingScheme& s, std::vector<Mat> inputs,
                          const KeyMaterial& k) {
  const Topology& t = s.topo();
  if (inputs.size() != t.users()) {
    throw DimensionMismatch("expected one input per user");
  }
  Transcript tr{0, k.seed, std::move(inputs), {}, {}, Mat(0, 0, s.field())};
  const auto users = all_users(t);
  tr.user_messages.reserve(users.size());
  for (size_t i = 0; i < users.size(); ++i) {
    tr.user_messages.push_back(user_encode(s, k, users[i], tr.inputs[i]));
  }
  for (uint32_t u = 0; u < t.U; ++u) {
    tr.relay_messages.push_back(relay_aggregate(
        std::span<const Mat>(tr.user_messages).subspan(size_t{u} * t.V, t.V)));
  }
  tr.decoded_sum = server_decode(tr.relay_messages);
  return tr;
}

RoundSeeds round_seeds(uint64_t seed, uint64_t round) {
  return RoundSeeds{derive_seed(seed, Stream::kRoundInput, round),
                    derive_seed(seed, Stream::kRoundKey, round)};
}

Transcript run_round(const PrecodingScheme& s, uint64_t input_seed,
                     uint64_t key_seed) {
  Transcript tr =
      run_round_with(s, sample_inputs(s, input_seed), keygen(s, key_seed));
  tr.input_seed = input_seed;
  return tr;
}

}  // namespace hsagg
