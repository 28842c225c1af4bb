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

#include "hsagg/rates.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hsagg/combi.hpp"
#include "hsagg/errors.hpp"

namespace hsagg {

void Topology::validate() const {
  if (U < 2) throw InvalidConfig("need U >= 2 relays, got " + std::to_string(U));
  if (V < 1) throw InvalidConfig("need V >= 1 users per relay");
  if (G < 1 || uint64_t{G} > uint64_t{U} * V) {
    throw InvalidConfig("need 1 <= G <= UV, got G=" + std::to_string(G));
  }
}

ProblemConfig ProblemConfig::make(uint32_t U, uint32_t V, uint32_t G,
                                  uint64_t q) {
  Topology topo{U, V, G};
  topo.validate();
  return ProblemConfig{topo, PrimeField(q)};
}

Rational::Rational(uint64_t num, uint64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  const uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  using u128 = unsigned __int128;
  return static_cast<u128>(a.num_) * b.den_ <=>
         static_cast<u128>(b.num_) * a.den_;
}

std::string_view regime_name(Regime regime) {
  return regime == Regime::kRelayDominant ? "RelayDominant" : "ServerDominant";
}

Regime parse_regime(std::string_view name) {
  if (name == "RelayDominant") return Regime::kRelayDominant;
  if (name == "ServerDominant") return Regime::kServerDominant;
  throw ParseError("unknown regime '" + std::string(name) + "'");
}

bool check_feasible(const Topology& topo) {
  topo.validate();
  return topo.G > 1;
}

KeyRateBounds key_rate_bounds(const Topology& topo) {
  if (!check_feasible(topo)) throw Infeasible();
  const int64_t n = topo.users();
  const uint64_t all = binom_sat(n, topo.G);
  KeyRateBounds b;
  b.relay_keys = all - binom_sat(n - topo.V, topo.G);
  b.server_keys = all - uint64_t{topo.U} * binom_sat(topo.V, topo.G);
  b.relay = Rational(topo.V, b.relay_keys);
  b.server = Rational(topo.U - 1, b.server_keys);
  return b;
}

RateTuple optimal_rates(const Topology& topo) {
  const KeyRateBounds b = key_rate_bounds(topo);
  return RateTuple{Rational(1, 1), Rational(1, 1), std::max(b.relay, b.server)};
}

SchemeDims classify_regime(const Topology& topo) {
  const KeyRateBounds b = key_rate_bounds(topo);
  if (b.relay >= b.server) {
    return SchemeDims{Regime::kRelayDominant, b.relay_keys, topo.V};
  }
  return SchemeDims{Regime::kServerDominant, b.server_keys, topo.U - 1u};
}

}  // namespace hsagg
