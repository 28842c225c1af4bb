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

#include "hsagg/scheme.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <utility>

#include "hsagg/errors.hpp"
#include "hsagg/prng.hpp"

namespace hsagg {

std::string_view construction_name(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::kExample1:
      return "example1";
    case ConstructionKind::kExample2:
      return "example2";
    case ConstructionKind::kRandom:
      return "random";
  }
  return "random";
}

ConstructionKind parse_construction(std::string_view name) {
  if (name == "example1") return ConstructionKind::kExample1;
  if (name == "example2") return ConstructionKind::kExample2;
  if (name == "random") return ConstructionKind::kRandom;
  throw ParseError("unknown construction '" + std::string(name) + "'");
}

PrecodingScheme::PrecodingScheme(ProblemConfig cfg, SchemeDims dims,
                                 std::vector<std::vector<Mat>> blocks,
                                 Provenance provenance)
    : cfg_(std::move(cfg)),
      dims_(dims),
      groups_(enumerate_groups(cfg_.topo.U, cfg_.topo.V, cfg_.topo.G)),
      blocks_(std::move(blocks)),
      provenance_(std::move(provenance)) {
  cfg_.topo.validate();
  if (dims_.L < 1 || dims_.L_S < 1) {
    throw DimensionMismatch("L and L_S must be at least 1");
  }
  if (blocks_.size() != groups_.size()) {
    throw DimensionMismatch("expected blocks for " +
                            std::to_string(groups_.size()) + " groups, got " +
                            std::to_string(blocks_.size()));
  }
  for (size_t g = 0; g < groups_.size(); ++g) {
    if (blocks_[g].size() != groups_[g].size()) {
      throw DimensionMismatch("group " + std::to_string(g) +
                              " has the wrong number of member blocks");
    }
    for (const Mat& m : blocks_[g]) {
      if (m.rows() != dims_.L || m.cols() != dims_.L_S ||
          m.field() != cfg_.field) {
        throw DimensionMismatch("block of group " + std::to_string(g) +
                                " is not L x L_S over GF(q)");
      }
    }
  }
}

Mat PrecodingScheme::block(size_t g, UserId user) const {
  const size_t pos = groups_.at(g).position_of(user);
  if (pos == groups_[g].size()) return Mat(dims_.L, dims_.L_S, cfg_.field);
  return blocks_[g][pos];
}

void PrecodingScheme::set_block(size_t g, UserId user, Mat m) {
  const size_t pos = groups_.at(g).position_of(user);
  if (pos == groups_[g].size()) {
    throw std::invalid_argument("user is not a member of the group");
  }
  if (m.rows() != dims_.L || m.cols() != dims_.L_S || m.field() != cfg_.field) {
    throw DimensionMismatch("replacement block has the wrong shape");
  }
  blocks_[g][pos] = std::move(m);
}

bool PrecodingScheme::group_zero_sum(size_t g) const {
  Mat sum(dims_.L, dims_.L_S, cfg_.field);
  for (const Mat& m : blocks_.at(g)) sum += m;
  return sum.is_zero();
}

bool PrecodingScheme::zero_sum_holds() const {
  for (size_t g = 0; g < groups_.size(); ++g) {
    if (!group_zero_sum(g)) return false;
  }
  return true;
}

std::vector<Mat> complete_zero_sum(std::vector<Mat> members,
                                   size_t dependent) {
  if (dependent >= members.size()) {
    throw std::invalid_argument("dependent member index out of range");
  }
  Mat sum(members[dependent].rows(), members[dependent].cols(),
          members[dependent].field());
  for (size_t i = 0; i < members.size(); ++i) {
    if (i != dependent) sum += members[i];  // throws on a shape mismatch
  }
  members[dependent] = -sum;
  return members;
}

PrecodingScheme build_example1() {
  const ProblemConfig cfg = ProblemConfig::make(2, 2, 2, 5);
  const SchemeDims dims = classify_regime(cfg.topo);
  // One 5x2 matrix per group, in canonical group order
  // {11,12} {11,21} {11,22} {12,21} {12,22} {21,22}.
  static constexpr std::array<std::array<uint64_t, 10>, 6> kPairMatrices{{
      {1, 0, 0, 1, 1, 1, 1, 2, 2, 1},
      {1, 2, 2, 1, 0, 1, 1, 0, 1, 1},
      {1, 1, 0, 2, 2, 0, 1, 2, 2, 1},
      {2, 1, 1, 1, 1, 0, 0, 3, 2, 2},
      {0, 1, 1, 0, 2, 1, 1, 2, 1, 1},
      {1, 0, 1, 1, 2, 2, 2, 1, 0, 2},
  }};
  std::vector<std::vector<Mat>> blocks;
  for (const auto& values : kPairMatrices) {
    Mat h = Mat::from_values(dims.L, dims.L_S, cfg.field, values);
    Mat minus_h = -h;
    blocks.push_back({std::move(h), std::move(minus_h)});
  }
  return PrecodingScheme(cfg, dims, std::move(blocks),
                         Provenance{ConstructionKind::kExample1, 0, "", 0});
}

PrecodingScheme build_example2() {
  const ProblemConfig cfg = ProblemConfig::make(4, 2, 7, 11);
  const SchemeDims dims = classify_regime(cfg.topo);
  const PrimeField& f = cfg.field;
  const Felt primitive{2};
  // Start exponents; (4,2) never needs one because it is always either absent
  // or the completed member.
  const std::map<UserId, uint64_t> start_exp{
      {{1, 1}, 0}, {{1, 2}, 4}, {{2, 1}, 1}, {{2, 2}, 5},
      {{3, 1}, 2}, {{3, 2}, 6}, {{4, 1}, 3}};
  const auto groups = enumerate_groups(4, 2, 7);
  std::vector<std::vector<Mat>> blocks;
  for (size_t g = 0; g < groups.size(); ++g) {
    const uint64_t i = g + 1;
    // Exponents of the primitive element live in Z/10, the order of GF(11)*.
    const std::array<Felt, 3> bases{f.pow(primitive, (i - 1) % 10),
                                    f.pow(primitive, (i + 2) % 10),
                                    f.pow(primitive, (i + 5) % 10)};
    const UserId dependent = i == 1 ? UserId{4, 1} : UserId{4, 2};
    std::vector<Mat> members;
    size_t dependent_pos = 0;
    for (size_t p = 0; p < groups[g].size(); ++p) {
      const UserId m = groups[g].members[p];
      if (m == dependent) {
        dependent_pos = p;
        members.emplace_back(dims.L, dims.L_S, f);
      } else {
        members.push_back(
            vandermonde_block(f, bases, start_exp.at(m), dims.L));
      }
    }
    blocks.push_back(complete_zero_sum(std::move(members), dependent_pos));
  }
  return PrecodingScheme(cfg, dims, std::move(blocks),
                         Provenance{ConstructionKind::kExample2, 0, "", 0});
}

PrecodingScheme sample_zero_sum_scheme(const ProblemConfig& cfg,
                                       const SchemeDims& dims, uint64_t seed) {
  const auto groups = enumerate_groups(cfg.topo.U, cfg.topo.V, cfg.topo.G);
  const uint64_t G = cfg.topo.G;
  std::vector<std::vector<Mat>> blocks;
  blocks.reserve(groups.size());
  for (size_t g = 0; g < groups.size(); ++g) {
    std::vector<Mat> members;
    for (size_t p = 0; p < G; ++p) {
      if (p + 1 == G) {
        members.emplace_back(dims.L, dims.L_S, cfg.field);
      } else {
        const uint64_t block_seed =
            derive_seed(seed, Stream::kSchemeAttempt, g * G + p);
        members.push_back(random_mat(dims.L, dims.L_S, cfg.field, block_seed));
      }
    }
    blocks.push_back(complete_zero_sum(std::move(members), G - 1));
  }
  return PrecodingScheme(
      cfg, dims, std::move(blocks),
      Provenance{ConstructionKind::kRandom, seed, std::string(kPrngId), 0});
}

bool relay_rank_condition(const PrecodingScheme& s, uint32_t u) {
  return rank(assemble_relay_matrix(s, u)) == s.topo().V * s.dims().L;
}

bool server_rank_condition(const PrecodingScheme& s) {
  return rank(assemble_server_matrix(s)) == (s.topo().U - 1) * s.dims().L;
}

PrecodingScheme build_random(const ProblemConfig& cfg, uint64_t seed,
                             uint64_t max_retries) {
  if (!check_feasible(cfg.topo)) throw Infeasible();
  const SchemeDims dims = classify_regime(cfg.topo);
  for (uint64_t attempt = 0; attempt <= max_retries; ++attempt) {
    PrecodingScheme s = sample_zero_sum_scheme(cfg, dims, seed + attempt);
    bool ok = server_rank_condition(s);
    for (uint32_t u = 1; ok && u <= cfg.topo.U; ++u) {
      ok = relay_rank_condition(s, u);
    }
    if (ok) {
      s.set_provenance(Provenance{ConstructionKind::kRandom, seed,
                                  std::string(kPrngId), attempt});
      return s;
    }
  }
  throw ConstructionFailed(max_retries + 1);
}

Mat assemble_relay_matrix(const PrecodingScheme& s, uint32_t u) {
  const Topology& t = s.topo();
  if (u < 1 || u > t.U) throw InvalidConfig("relay index out of range");
  const uint64_t L = s.dims().L;
  const uint64_t L_S = s.dims().L_S;
  const auto touching = touching_relay_indices(s.groups(), u);
  Mat out(t.V * L, touching.size() * L_S, s.field());
  for (size_t j = 0; j < touching.size(); ++j) {
    const size_t g = touching[j];
    const Group& group = s.groups()[g];
    for (size_t p = 0; p < group.size(); ++p) {
      const UserId m = group.members[p];
      if (m.u != u) continue;
      out.set_block((m.v - 1) * L, j * L_S, s.group_blocks(g)[p]);
    }
  }
  return out;
}

Mat assemble_server_matrix(const PrecodingScheme& s) {
  const Topology& t = s.topo();
  const uint64_t L = s.dims().L;
  const uint64_t L_S = s.dims().L_S;
  Mat out(t.U * L, s.groups().size() * L_S, s.field());
  for (size_t g = 0; g < s.groups().size(); ++g) {
    const Group& group = s.groups()[g];
    std::vector<Mat> per_relay(t.U, Mat(L, L_S, s.field()));
    for (size_t p = 0; p < group.size(); ++p) {
      per_relay[group.members[p].u - 1] += s.group_blocks(g)[p];
    }
    for (uint32_t u = 0; u < t.U; ++u) {
      out.set_block(u * L, g * L_S, per_relay[u]);
    }
  }
  return out;
}

}  // namespace hsagg
