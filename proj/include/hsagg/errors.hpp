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

#ifndef HSAGG_ERRORS_HPP_
#define HSAGG_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hsagg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPrime : public Error {
 public:
  explicit NotPrime(uint64_t q)
      : Error("modulus is not a supported prime: " + std::to_string(q)),
        modulus_(q) {}
  uint64_t modulus() const { return modulus_; }

 private:
  uint64_t modulus_;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("inverse of zero in GF(q)") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class BadGroupSize : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

class Infeasible : public Error {
 public:
  Infeasible() : Error("infeasible: G=1") {}
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class ConstructionFailed : public Error {
 public:
  explicit ConstructionFailed(uint64_t attempts)
      : Error("construction failed after " + std::to_string(attempts) +
              " attempts; the field is likely too small"),
        attempts_(attempts) {}
  uint64_t attempts() const { return attempts_; }

 private:
  uint64_t attempts_;
};

// The exhaustive oracle would have to enumerate more key states than allowed.
class StateSpaceTooLarge : public Error {
 public:
  StateSpaceTooLarge(uint64_t q, uint64_t exponent, uint64_t cap)
      : Error("state space " + std::to_string(q) + "^" +
              std::to_string(exponent) + " exceeds cap " +
              std::to_string(cap)),
        q_(q),
        exponent_(exponent),
        cap_(cap) {}
  uint64_t base() const { return q_; }
  uint64_t exponent() const { return exponent_; }
  uint64_t cap() const { return cap_; }

 private:
  uint64_t q_;
  uint64_t exponent_;
  uint64_t cap_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hsagg

#endif  // HSAGG_ERRORS_HPP_
