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

#ifndef HSAGG_GF_HPP_
#define HSAGG_GF_HPP_

#include <compare>
#include <cstdint>

namespace hsagg {

// One symbol of GF(q), always held as the least non-negative residue.
struct Felt {
  uint64_t value = 0;

  friend auto operator<=>(const Felt&, const Felt&) = default;
};

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(uint64_t n);

// The prime field GF(q). Cheap to copy; all operations are const and pure.
class PrimeField {
 public:
  static constexpr uint64_t kMaxModulus = (uint64_t{1} << 61) - 1;

  // Throws NotPrime unless q is a prime in [2, kMaxModulus].
  explicit PrimeField(uint64_t q);

  uint64_t modulus() const { return q_; }

  Felt element(uint64_t v) const { return Felt{v % q_}; }
  Felt zero() const { return Felt{0}; }
  Felt one() const { return Felt{1}; }
  bool contains(Felt a) const { return a.value < q_; }

  Felt add(Felt a, Felt b) const {
    uint64_t s = a.value + b.value;
    return Felt{s >= q_ ? s - q_ : s};
  }
  Felt sub(Felt a, Felt b) const {
    return Felt{a.value >= b.value ? a.value - b.value : a.value + q_ - b.value};
  }
  Felt neg(Felt a) const { return Felt{a.value == 0 ? 0 : q_ - a.value}; }
  Felt mul(Felt a, Felt b) const {
    if (q_ <= kSmallModulus) return Felt{(a.value * b.value) % q_};
    return Felt{static_cast<uint64_t>(
        (static_cast<unsigned __int128>(a.value) * b.value) % q_)};
  }

  // Extended Euclid. Throws DivisionByZero for a = 0.
  Felt inv(Felt a) const;
  // Square-and-multiply; pow(b, 0) = 1 for every b, including 0.
  Felt pow(Felt b, uint64_t e) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  // Products of two residues below 2^32 fit in 64 bits.
  static constexpr uint64_t kSmallModulus = uint64_t{1} << 32;

  uint64_t q_;
};

PrimeField make_field(uint64_t q);
Felt f_inv(const PrimeField& field, Felt a);
Felt f_pow(const PrimeField& field, Felt b, uint64_t e);

}  // namespace hsagg

#endif  // HSAGG_GF_HPP_
