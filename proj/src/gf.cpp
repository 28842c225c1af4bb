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

#include "hsagg/gf.hpp"

#include <array>

#include "hsagg/errors.hpp"

namespace hsagg {
namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t result = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1) result = mulmod(result, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  // Bases 2..37 decide primality exactly for n < 3.18e23, so all of uint64.
  constexpr std::array<uint64_t, 12> kWitnesses{2,  3,  5,  7,  11, 13,
                                                17, 19, 23, 29, 31, 37};
  for (uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : kWitnesses) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(uint64_t q) : q_(q) {
  if (q > kMaxModulus || !is_prime(q)) throw NotPrime(q);
}

Felt PrimeField::inv(Felt a) const {
  if (a.value == 0) throw DivisionByZero();
  // Invariant: r_i = t_i * a (mod q), tracked with signed coefficients.
  __int128 t0 = 0, t1 = 1;
  uint64_t r0 = q_, r1 = a.value;
  while (r1 != 0) {
    uint64_t quot = r0 / r1;
    uint64_t r2 = r0 - quot * r1;
    __int128 t2 = t0 - static_cast<__int128>(quot) * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  __int128 m = static_cast<__int128>(q_);
  __int128 t = t0 % m;
  if (t < 0) t += m;
  return Felt{static_cast<uint64_t>(t)};
}

Felt PrimeField::pow(Felt b, uint64_t e) const {
  if (e == 0) return one();
  return Felt{powmod(b.value, e, q_)};
}

PrimeField make_field(uint64_t q) { return PrimeField(q); }

Felt f_inv(const PrimeField& field, Felt a) { return field.inv(a); }

Felt f_pow(const PrimeField& field, Felt b, uint64_t e) {
  return field.pow(b, e);
}

}  // namespace hsagg
