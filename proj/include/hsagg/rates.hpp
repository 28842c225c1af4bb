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

#ifndef HSAGG_RATES_HPP_
#define HSAGG_RATES_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "hsagg/gf.hpp"

namespace hsagg {

// The relay/user topology: U relays with V users each, keys shared by every
// G-subset of users.
struct Topology {
  uint32_t U = 0;
  uint32_t V = 0;
  uint32_t G = 0;

  // Throws InvalidConfig unless U >= 2, V >= 1 and 1 <= G <= UV.
  void validate() const;
  uint32_t users() const { return U * V; }

  friend bool operator==(const Topology&, const Topology&) = default;
};

struct ProblemConfig {
  Topology topo;
  PrimeField field;

  // Validates the topology and the modulus (NotPrime).
  static ProblemConfig make(uint32_t U, uint32_t V, uint32_t G, uint64_t q);

  friend bool operator==(const ProblemConfig&, const ProblemConfig&) = default;
};

// Non-negative fraction kept in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(uint64_t num, uint64_t den);

  uint64_t num() const { return num_; }
  uint64_t den() const { return den_; }
  std::string to_string() const;  // "p/q", or "p" when q = 1

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  uint64_t num_ = 0;
  uint64_t den_ = 1;
};

struct RateTuple {
  Rational r_x;
  Rational r_y;
  Rational r_s;

  friend bool operator==(const RateTuple&, const RateTuple&) = default;
};

enum class Regime { kRelayDominant, kServerDominant };

std::string_view regime_name(Regime regime);
// Throws ParseError for unknown names.
Regime parse_regime(std::string_view name);

struct SchemeDims {
  Regime regime = Regime::kRelayDominant;
  uint64_t L = 1;    // symbols per input, per user message, per relay message
  uint64_t L_S = 1;  // symbols per groupwise key

  friend bool operator==(const SchemeDims&, const SchemeDims&) = default;
};

// The two lower bounds on R_S whose maximum is the optimal key rate, with
// their denominators (the number of keys each adversary's mask can draw on).
struct KeyRateBounds {
  uint64_t relay_keys = 0;   // C(UV,G) - C((U-1)V,G)
  uint64_t server_keys = 0;  // C(UV,G) - U*C(V,G)
  Rational relay;            // V / relay_keys
  Rational server;           // (U-1) / server_keys
};

bool check_feasible(const Topology& topo);
// Throws Infeasible when G = 1.
KeyRateBounds key_rate_bounds(const Topology& topo);
RateTuple optimal_rates(const Topology& topo);
// Ties go to the relay-dominant regime.
SchemeDims classify_regime(const Topology& topo);

}  // namespace hsagg

#endif  // HSAGG_RATES_HPP_
