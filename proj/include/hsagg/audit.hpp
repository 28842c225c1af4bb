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

#ifndef HSAGG_AUDIT_HPP_
#define HSAGG_AUDIT_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hsagg/linalg.hpp"
#include "hsagg/rates.hpp"
#include "hsagg/scheme.hpp"

namespace hsagg {

inline constexpr uint64_t kDefaultOracleCap = uint64_t{1} << 26;
inline constexpr uint64_t kDefaultFuzzRounds = 100;

struct RankCheck {
  uint64_t expected = 0;
  uint64_t computed = 0;

  bool pass() const { return expected == computed; }
};

// Rank predicates: relay u learns nothing iff its stacked
// precoding matrix has full row rank VL; the server learns only the sum iff
// its matrix has rank (U-1)L.
RankCheck verify_relay_rank(const PrecodingScheme& s, uint32_t u);
RankCheck verify_server_rank(const PrecodingScheme& s);

// Exact distribution of M * S for S uniform over GF(q)^cols, summarized by
// the multiset of per-value probabilities.
struct MaskDistribution {
  uint64_t modulus = 0;
  uint64_t dimension = 0;    // rows of M
  uint64_t key_symbols = 0;  // cols of M
  uint64_t states = 0;       // q^cols, every key assignment
  uint64_t support = 0;      // distinct mask values attained
  // attained count c -> number of mask values attained exactly c times
  std::map<uint64_t, uint64_t> multiplicities;
  double entropy = 0.0;  // base q

  // Every attained value has the same probability.
  bool uniform() const { return multiplicities.size() == 1; }
  // Uniform over all of GF(q)^dimension.
  bool full_uniform() const;

  friend bool operator==(const MaskDistribution&,
                         const MaskDistribution&) = default;
};

// q^exponent if it is at most cap, otherwise nullopt.
std::optional<uint64_t> bounded_power(uint64_t q, uint64_t exponent,
                                      uint64_t cap);

// Enumerates all q^cols key assignments. Work is split into contiguous index
// ranges over `workers` threads with tallies summed afterwards. Throws
// StateSpaceTooLarge when q^cols > cap.
MaskDistribution mask_distribution(const Mat& m, uint64_t cap,
                                   unsigned workers = 1);

// The relay mask is assemble_relay_matrix(s, u) times the stacked keys of the
// groups touching relay u; secure iff uniform with entropy VL.
MaskDistribution entropy_oracle_relay(const PrecodingScheme& s, uint32_t u,
                                      uint64_t cap, unsigned workers = 1);
// The first U-1 relay masks seen by the server, drawn from the cross-relay
// keys only; secure iff uniform with entropy (U-1)L.
MaskDistribution entropy_oracle_server(const PrecodingScheme& s, uint64_t cap,
                                       unsigned workers = 1);
// The matrix behind entropy_oracle_server.
Mat server_mask_matrix(const PrecodingScheme& s);

struct RateAudit {
  RateTuple achieved;
  RateTuple optimal;
  bool pass = false;
};

RateAudit rate_audit(const PrecodingScheme& s);

enum class OracleStatus { kComputed, kSkippedOverCap, kNotRun };

struct OracleCheck {
  OracleStatus status = OracleStatus::kNotRun;
  uint64_t expected = 0;
  uint64_t required_exponent = 0;  // states = q^required_exponent
  std::optional<MaskDistribution> distribution;

  // Skips never fail.
  bool pass() const;
};

struct AuditOptions {
  uint64_t fuzz_rounds = kDefaultFuzzRounds;
  uint64_t oracle_cap = kDefaultOracleCap;
  uint64_t seed = 0;
  bool run_oracle = true;
  unsigned workers = 1;
};

struct AuditReport {
  bool zero_sum = false;
  std::vector<RankCheck> relay_ranks;  // index u-1
  RankCheck server_rank;
  uint64_t fuzz_rounds = 0;
  uint64_t fuzz_passed = 0;
  std::vector<OracleCheck> relay_oracles;  // index u-1
  OracleCheck server_oracle;
  std::optional<RateAudit> rates;  // empty when the config is infeasible

  bool passed() const;
};

AuditReport full_audit(const PrecodingScheme& s, const AuditOptions& options);
AuditReport full_audit(const PrecodingScheme& s, uint64_t fuzz_rounds,
                       uint64_t oracle_cap, uint64_t seed);

}  // namespace hsagg

#endif  // HSAGG_AUDIT_HPP_
