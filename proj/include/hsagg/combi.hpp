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

#ifndef HSAGG_COMBI_HPP_
#define HSAGG_COMBI_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hsagg {

// User v attached to relay u, both 1-based. Ordered by (u, v).
struct UserId {
  uint32_t u = 0;
  uint32_t v = 0;

  friend auto operator<=>(const UserId&, const UserId&) = default;
};

// A set of users sharing one key, members strictly increasing.
struct Group {
  std::vector<UserId> members;

  size_t size() const { return members.size(); }
  bool contains(UserId user) const;
  // Position of `user` in `members`, or size() if absent.
  size_t position_of(UserId user) const;
  bool touches_relay(uint32_t u) const;
  bool spans_multiple_relays() const;

  friend auto operator<=>(const Group&, const Group&) = default;
};

// C(n, k), defined as 0 whenever n < k or n < 0. Throws Overflow if the
// result does not fit in 64 bits.
uint64_t binom_sat(int64_t n, int64_t k);

// Every G-subset of [U]x[V] in lexicographic order of sorted member lists.
// Throws BadGroupSize unless 1 <= G <= UV.
std::vector<Group> enumerate_groups(uint32_t U, uint32_t V, uint32_t G);

struct GroupSelection {
  uint64_t count = 0;
  std::vector<size_t> indices;  // into the canonical enumeration
};

// Groups with at least one member behind relay u. The count is
// C(UV,G) - C((U-1)V,G).
GroupSelection groups_touching_relay(uint32_t U, uint32_t V, uint32_t G,
                                     uint32_t u);
// Groups whose members span at least two relays. The count is
// C(UV,G) - U*C(V,G).
GroupSelection cross_relay_groups(uint32_t U, uint32_t V, uint32_t G);

// Same selections over an already enumerated group list.
std::vector<size_t> touching_relay_indices(std::span<const Group> groups,
                                           uint32_t u);
std::vector<size_t> cross_relay_indices(std::span<const Group> groups);

}  // namespace hsagg

#endif  // HSAGG_COMBI_HPP_
