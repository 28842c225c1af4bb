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

#include "hsagg/combi.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hsagg/errors.hpp"

namespace hsagg {

bool Group::contains(UserId user) const {
  return std::binary_search(members.begin(), members.end(), user);
}

size_t Group::position_of(UserId user) const {
  auto it = std::lower_bound(members.begin(), members.end(), user);
  if (it == members.end() || *it != user) return members.size();
  return static_cast<size_t>(it - members.begin());
}

bool Group::touches_relay(uint32_t u) const {
  return std::any_of(members.begin(), members.end(),
                     [u](const UserId& m) { return m.u == u; });
}

bool Group::spans_multiple_relays() const {
  return !members.empty() && members.front().u != members.back().u;
}

uint64_t binom_sat(int64_t n, int64_t k) {
  if (k < 0 || n < 0 || n < k) return 0;
  k = std::min(k, n - k);
  // C(n, i+1) = C(n, i) * (n - i) / (i + 1) is exact at every step, and the
  // partial values increase up to i = k <= n/2, so checking each one for
  // 64-bit overflow bounds the 128-bit intermediate product.
  unsigned __int128 acc = 1;
  for (int64_t i = 0; i < k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - i) /
          static_cast<unsigned __int128>(i + 1);
    if (acc > std::numeric_limits<uint64_t>::max()) {
      throw Overflow("C(" + std::to_string(n) + ", " + std::to_string(k) +
                     ") exceeds 64 bits");
    }
  }
  return static_cast<uint64_t>(acc);
}

std::vector<Group> enumerate_groups(uint32_t U, uint32_t V, uint32_t G) {
  const uint64_t users = uint64_t{U} * V;
  if (G < 1 || G > users) {
    throw BadGroupSize("group size " + std::to_string(G) +
                       " outside [1, " + std::to_string(users) + "]");
  }
  std::vector<UserId> all;
  all.reserve(users);
  for (uint32_t u = 1; u <= U; ++u) {
    for (uint32_t v = 1; v <= V; ++v) all.push_back({u, v});
  }
  std::vector<Group> groups;
  groups.reserve(binom_sat(static_cast<int64_t>(users), G));
  // Odometer over index combinations idx[0] < ... < idx[G-1].
  std::vector<size_t> idx(G);
  for (size_t i = 0; i < G; ++i) idx[i] = i;
  for (;;) {
    Group g;
    g.members.reserve(G);
    for (size_t i : idx) g.members.push_back(all[i]);
    groups.push_back(std::move(g));
    size_t pos = G;
    while (pos > 0 && idx[pos - 1] == users - G + (pos - 1)) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (size_t i = pos; i < G; ++i) idx[i] = idx[i - 1] + 1;
  }
  return groups;
}

std::vector<size_t> touching_relay_indices(std::span<const Group> groups,
                                           uint32_t u) {
  std::vector<size_t> out;
  for (size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].touches_relay(u)) out.push_back(i);
  }
  return out;
}

std::vector<size_t> cross_relay_indices(std::span<const Group> groups) {
  std::vector<size_t> out;
  for (size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].spans_multiple_relays()) out.push_back(i);
  }
  return out;
}

GroupSelection groups_touching_relay(uint32_t U, uint32_t V, uint32_t G,
                                     uint32_t u) {
  if (u < 1 || u > U) {
    throw InvalidConfig("relay index " + std::to_string(u) + " outside [1, " +
                        std::to_string(U) + "]");
  }
  const auto groups = enumerate_groups(U, V, G);
  const int64_t n = int64_t{U} * V;
  GroupSelection sel;
  sel.count = binom_sat(n, G) - binom_sat(n - V, G);
  sel.indices = touching_relay_indices(groups, u);
  return sel;
}

GroupSelection cross_relay_groups(uint32_t U, uint32_t V, uint32_t G) {
  const auto groups = enumerate_groups(U, V, G);
  GroupSelection sel;
  sel.count = binom_sat(int64_t{U} * V, G) - uint64_t{U} * binom_sat(V, G);
  sel.indices = cross_relay_indices(groups);
  return sel;
}

}  // namespace hsagg
