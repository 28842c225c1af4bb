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

#ifndef HSAGG_SCHEME_HPP_
#define HSAGG_SCHEME_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hsagg/combi.hpp"
#include "hsagg/linalg.hpp"
#include "hsagg/rates.hpp"

namespace hsagg {

enum class ConstructionKind { kExample1, kExample2, kRandom };

std::string_view construction_name(ConstructionKind kind);
ConstructionKind parse_construction(std::string_view name);

struct Provenance {
  ConstructionKind kind = ConstructionKind::kRandom;
  // Only meaningful for kRandom.
  uint64_t seed = 0;
  std::string prng_id;
  uint64_t retries_used = 0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

// The precoding matrices of every (group, member) pair. Non-members
// implicitly hold the zero matrix.
class PrecodingScheme {
 public:
  // blocks[g][i] belongs to the i-th member of the g-th canonical group and
  // must be dims.L x dims.L_S over cfg.field. Throws DimensionMismatch.
  PrecodingScheme(ProblemConfig cfg, SchemeDims dims,
                  std::vector<std::vector<Mat>> blocks, Provenance provenance);

  const ProblemConfig& cfg() const { return cfg_; }
  const Topology& topo() const { return cfg_.topo; }
  const PrimeField& field() const { return cfg_.field; }
  const SchemeDims& dims() const { return dims_; }
  const Provenance& provenance() const { return provenance_; }
  const std::vector<Group>& groups() const { return groups_; }

  std::span<const Mat> group_blocks(size_t g) const { return blocks_.at(g); }
  // Zero matrix when `user` is not a member of group g.
  Mat block(size_t g, UserId user) const;
  // Throws std::invalid_argument when `user` is not a member of group g.
  void set_block(size_t g, UserId user, Mat m);
  void set_provenance(Provenance p) { provenance_ = std::move(p); }

  bool group_zero_sum(size_t g) const;
  bool zero_sum_holds() const;

  friend bool operator==(const PrecodingScheme&,
                         const PrecodingScheme&) = default;

 private:
  ProblemConfig cfg_;
  SchemeDims dims_;
  std::vector<Group> groups_;
  std::vector<std::vector<Mat>> blocks_;
  Provenance provenance_;
};

// Replaces members[dependent] by the negated sum of the other members.
std::vector<Mat> complete_zero_sum(std::vector<Mat> members, size_t dependent);

// (U,V,G,q) = (2,2,2,5), L = 5, L_S = 2: each pair carries +H and -H, the
// lexicographically earlier member taking +H.
PrecodingScheme build_example1();

// (U,V,G,q) = (4,2,7,11), L = 8, L_S = 3: Vandermonde blocks over powers of
// the primitive element 2, one member per group completed to zero sum.
PrecodingScheme build_example2();

inline constexpr uint64_t kDefaultRandomModulus = 2147483647;

// Samples every block i.i.d. uniform except the last member of each group,
// which completes the zero sum, and keeps the first attempt that passes both
// rank conditions. Attempt a (0-based) uses seed + a; there are at most
// 1 + max_retries attempts. Throws Infeasible or ConstructionFailed.
PrecodingScheme build_random(const ProblemConfig& cfg, uint64_t seed,
                             uint64_t max_retries);

// Same sampling without the rank gate (used to exercise the audits on
// arbitrary zero-sum schemes).
PrecodingScheme sample_zero_sum_scheme(const ProblemConfig& cfg,
                                       const SchemeDims& dims, uint64_t seed);

// VL x (T_u L_S): row block v, column block j = block(j-th group touching
// relay u, (u, v)).
Mat assemble_relay_matrix(const PrecodingScheme& s, uint32_t u);

// UL x (C(UV,G) L_S): row block u, column block g = sum over the members of
// group g behind relay u.
Mat assemble_server_matrix(const PrecodingScheme& s);

bool relay_rank_condition(const PrecodingScheme& s, uint32_t u);
bool server_rank_condition(const PrecodingScheme& s);

}  // namespace hsagg

#endif  // HSAGG_SCHEME_HPP_
