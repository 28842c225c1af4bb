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

#include "hsagg/audit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>
#include <unordered_map>
#include <utility>

#include "hsagg/combi.hpp"
#include "hsagg/errors.hpp"
#include "hsagg/protocol.hpp"

namespace hsagg {
namespace {

// Dense tallies are indexed by the base-q encoding of the mask.
constexpr uint64_t kDenseLimit = uint64_t{1} << 27;

using Column = std::vector<uint64_t>;

// Walks key indices [begin, end) in odometer order, keeping mask = M * key
// up to date. Bumping key digit j by one (including the wrap q-1 -> 0, a
// change of +1 mod q) adds column j to the mask.
template <class Record>
void walk_keys(const std::vector<Column>& cols, const PrimeField& f,
               size_t rows, uint64_t begin, uint64_t end, Record&& record) {
  const uint64_t q = f.modulus();
  const size_t n = cols.size();
  std::vector<uint64_t> digits(n);
  std::vector<uint64_t> mask(rows, 0);
  uint64_t rest = begin;
  for (size_t j = 0; j < n; ++j) {
    digits[j] = rest % q;
    rest /= q;
    if (digits[j] == 0) continue;
    for (size_t i = 0; i < rows; ++i) {
      mask[i] = f.add(Felt{mask[i]}, f.mul(Felt{digits[j]}, Felt{cols[j][i]}))
                    .value;
    }
  }
  for (uint64_t state = begin; state < end; ++state) {
    record(mask);
    for (size_t j = 0; j < n; ++j) {
      const Column& c = cols[j];
      for (size_t i = 0; i < rows; ++i) {
        uint64_t s = mask[i] + c[i];
        mask[i] = s >= q ? s - q : s;
      }
      if (++digits[j] < q) break;
      digits[j] = 0;
    }
  }
}

uint64_t encode(const std::vector<uint64_t>& mask,
                const std::vector<uint64_t>& place) {
  uint64_t index = 0;
  for (size_t i = 0; i < mask.size(); ++i) index += mask[i] * place[i];
  return index;
}

// Runs `work(begin, end, tally)` over `workers` contiguous slices of
// [0, states) and sums the per-worker tallies with `merge`.
template <class Tally, class Work, class Merge>
Tally run_partitioned(uint64_t states, unsigned workers, const Tally& empty,
                      Work work, Merge merge) {
  workers = std::max(1u, workers);
  if (workers > states) workers = static_cast<unsigned>(std::max<uint64_t>(1, states));
  std::vector<Tally> tallies(workers, empty);
  if (workers == 1) {
    work(0, states, tallies[0]);
    return std::move(tallies[0]);
  }
  std::vector<std::thread> threads;
  const uint64_t chunk = states / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const uint64_t begin = chunk * w;
    const uint64_t end = w + 1 == workers ? states : begin + chunk;
    threads.emplace_back([&, w, begin, end] { work(begin, end, tallies[w]); });
  }
  for (auto& t : threads) t.join();
  for (unsigned w = 1; w < workers; ++w) merge(tallies[0], tallies[w]);
  return std::move(tallies[0]);
}

void finish(MaskDistribution& d) {
  d.support = 0;
  double weighted = 0.0;
  const double n = static_cast<double>(d.states);
  for (const auto& [count, values] : d.multiplicities) {
    d.support += values;
    const double p = static_cast<double>(count) / n;
    weighted -= static_cast<double>(values) * p * std::log(p);
  }
  d.entropy = weighted / std::log(static_cast<double>(d.modulus));
  // Exact arithmetic pins the uniform case; avoid -0.0 and rounding noise.
  if (d.uniform()) {
    uint64_t power = 0;
    uint64_t acc = 1;
    while (acc < d.support && acc <= d.support / d.modulus) {
      acc *= d.modulus;
      ++power;
    }
    if (acc == d.support) d.entropy = static_cast<double>(power);
  }
}

OracleCheck run_oracle(uint64_t expected, uint64_t q, uint64_t exponent,
                       uint64_t cap,
                       const std::function<MaskDistribution()>& compute) {
  OracleCheck check;
  check.expected = expected;
  check.required_exponent = exponent;
  if (!bounded_power(q, exponent, cap)) {
    check.status = OracleStatus::kSkippedOverCap;
    return check;
  }
  check.status = OracleStatus::kComputed;
  check.distribution = compute();
  return check;
}

}  // namespace

RankCheck verify_relay_rank(const PrecodingScheme& s, uint32_t u) {
  return RankCheck{uint64_t{s.topo().V} * s.dims().L,
                   rank(assemble_relay_matrix(s, u))};
}

RankCheck verify_server_rank(const PrecodingScheme& s) {
  return RankCheck{uint64_t{s.topo().U - 1} * s.dims().L,
                   rank(assemble_server_matrix(s))};
}

std::optional<uint64_t> bounded_power(uint64_t q, uint64_t exponent,
                                      uint64_t cap) {
  uint64_t acc = 1;
  for (uint64_t i = 0; i < exponent; ++i) {
    if (acc > cap / q) return std::nullopt;
    acc *= q;
  }
  if (acc > cap) return std::nullopt;
  return acc;
}

bool MaskDistribution::full_uniform() const {
  if (!uniform()) return false;
  auto full = bounded_power(modulus, dimension, support);
  return full && *full == support;
}

MaskDistribution mask_distribution(const Mat& m, uint64_t cap,
                                   unsigned workers) {
  const PrimeField& f = m.field();
  const uint64_t q = f.modulus();
  const size_t rows = m.rows();
  const auto states = bounded_power(q, m.cols(), cap);
  if (!states) throw StateSpaceTooLarge(q, m.cols(), cap);

  std::vector<Column> cols(m.cols(), Column(rows));
  for (size_t j = 0; j < m.cols(); ++j) {
    for (size_t i = 0; i < rows; ++i) cols[j][i] = m.at(i, j).value;
  }

  MaskDistribution d;
  d.modulus = q;
  d.dimension = rows;
  d.key_symbols = m.cols();
  d.states = *states;

  const auto space = bounded_power(
      q, rows, std::numeric_limits<uint64_t>::max() / std::max<uint64_t>(q, 2));
  std::vector<uint64_t> place(rows, 1);
  for (size_t i = 1; i < rows; ++i) place[i] = place[i - 1] * q;

  if (space && *space <= kDenseLimit &&
      *states <= std::numeric_limits<uint32_t>::max()) {
    using Dense = std::vector<uint32_t>;
    Dense counts = run_partitioned(
        *states, workers, Dense(*space, 0),
        [&](uint64_t begin, uint64_t end, Dense& tally) {
          walk_keys(cols, f, rows, begin, end,
                    [&](const std::vector<uint64_t>& mask) {
                      ++tally[encode(mask, place)];
                    });
        },
        [](Dense& into, const Dense& from) {
          for (size_t i = 0; i < into.size(); ++i) into[i] += from[i];
        });
    for (uint32_t c : counts) {
      if (c != 0) ++d.multiplicities[c];
    }
  } else if (space) {
    using Sparse = std::unordered_map<uint64_t, uint64_t>;
    Sparse counts = run_partitioned(
        *states, workers, Sparse{},
        [&](uint64_t begin, uint64_t end, Sparse& tally) {
          walk_keys(cols, f, rows, begin, end,
                    [&](const std::vector<uint64_t>& mask) {
                      ++tally[encode(mask, place)];
                    });
        },
        [](Sparse& into, const Sparse& from) {
          for (const auto& [k, c] : from) into[k] += c;
        });
    for (const auto& [k, c] : counts) ++d.multiplicities[c];
  } else {
    using Keyed = std::map<std::vector<uint64_t>, uint64_t>;
    Keyed counts = run_partitioned(
        *states, workers, Keyed{},
        [&](uint64_t begin, uint64_t end, Keyed& tally) {
          walk_keys(cols, f, rows, begin, end,
                    [&](const std::vector<uint64_t>& mask) { ++tally[mask]; });
        },
        [](Keyed& into, const Keyed& from) {
          for (const auto& [k, c] : from) into[k] += c;
        });
    for (const auto& [k, c] : counts) ++d.multiplicities[c];
  }
  finish(d);
  return d;
}

MaskDistribution entropy_oracle_relay(const PrecodingScheme& s, uint32_t u,
                                      uint64_t cap, unsigned workers) {
  return mask_distribution(assemble_relay_matrix(s, u), cap, workers);
}

Mat server_mask_matrix(const PrecodingScheme& s) {
  const Topology& t = s.topo();
  const uint64_t L = s.dims().L;
  const uint64_t L_S = s.dims().L_S;
  const Mat full = assemble_server_matrix(s);
  const auto cross = cross_relay_indices(s.groups());
  Mat out((t.U - 1) * L, cross.size() * L_S, s.field());
  for (size_t j = 0; j < cross.size(); ++j) {
    out.set_block(0, j * L_S, full.block(0, cross[j] * L_S, out.rows(), L_S));
  }
  return out;
}

MaskDistribution entropy_oracle_server(const PrecodingScheme& s, uint64_t cap,
                                       unsigned workers) {
  return mask_distribution(server_mask_matrix(s), cap, workers);
}

RateAudit rate_audit(const PrecodingScheme& s) {
  const SchemeDims& d = s.dims();
  // Messages are L-symbol vectors for L-symbol inputs.
  RateAudit audit{RateTuple{Rational(d.L, d.L), Rational(d.L, d.L),
                            Rational(d.L_S, d.L)},
                  optimal_rates(s.topo()), false};
  audit.pass = audit.achieved == audit.optimal;
  return audit;
}

bool OracleCheck::pass() const {
  if (status != OracleStatus::kComputed) return true;
  return distribution && distribution->full_uniform() &&
         distribution->dimension == expected;
}

bool AuditReport::passed() const {
  if (!zero_sum || !server_rank.pass() || !server_oracle.pass()) return false;
  if (fuzz_passed != fuzz_rounds || !rates || !rates->pass) return false;
  for (const auto& r : relay_ranks) {
    if (!r.pass()) return false;
  }
  for (const auto& o : relay_oracles) {
    if (!o.pass()) return false;
  }
  return true;
}

AuditReport full_audit(const PrecodingScheme& s, const AuditOptions& options) {
  const Topology& t = s.topo();
  const uint64_t q = s.field().modulus();
  AuditReport report;
  report.zero_sum = s.zero_sum_holds();
  for (uint32_t u = 1; u <= t.U; ++u) {
    report.relay_ranks.push_back(verify_relay_rank(s, u));
  }
  report.server_rank = verify_server_rank(s);

  report.fuzz_rounds = options.fuzz_rounds;
  for (uint64_t r = 0; r < options.fuzz_rounds; ++r) {
    const RoundSeeds seeds = round_seeds(options.seed, r);
    if (run_round(s, seeds.input_seed, seeds.key_seed).correct()) {
      ++report.fuzz_passed;
    }
  }

  const uint64_t L_S = s.dims().L_S;
  for (uint32_t u = 1; u <= t.U; ++u) {
    const uint64_t touching = touching_relay_indices(s.groups(), u).size();
    OracleCheck check;
    check.expected = uint64_t{t.V} * s.dims().L;
    check.required_exponent = touching * L_S;
    if (options.run_oracle) {
      check = run_oracle(check.expected, q, check.required_exponent,
                         options.oracle_cap, [&] {
                           return entropy_oracle_relay(s, u, options.oracle_cap,
                                                       options.workers);
                         });
    }
    report.relay_oracles.push_back(std::move(check));
  }
  report.server_oracle.expected = uint64_t{t.U - 1} * s.dims().L;
  report.server_oracle.required_exponent =
      cross_relay_indices(s.groups()).size() * L_S;
  if (options.run_oracle) {
    report.server_oracle = run_oracle(
        report.server_oracle.expected, q,
        report.server_oracle.required_exponent, options.oracle_cap, [&] {
          return entropy_oracle_server(s, options.oracle_cap, options.workers);
        });
  }

  if (check_feasible(t)) report.rates = rate_audit(s);
  return report;
}

AuditReport full_audit(const PrecodingScheme& s, uint64_t fuzz_rounds,
                       uint64_t oracle_cap, uint64_t seed) {
  AuditOptions options;
  options.fuzz_rounds = fuzz_rounds;
  options.oracle_cap = oracle_cap;
  options.seed = seed;
  return full_audit(s, options);
}

}  // namespace hsagg
