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

#ifndef HSAGG_LINALG_HPP_
#define HSAGG_LINALG_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hsagg/gf.hpp"

namespace hsagg {

// Dense row-major matrix over GF(q). Column vectors are matrices with one
// column.
class Mat {
 public:
  // Zero matrix.
  Mat(size_t rows, size_t cols, const PrimeField& field);

  // Throws DimensionMismatch on a length mismatch and std::out_of_range if
  // any value is not a canonical residue.
  static Mat from_values(size_t rows, size_t cols, const PrimeField& field,
                         std::span<const uint64_t> values);
  static Mat identity(size_t n, const PrimeField& field);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }
  bool empty() const { return entries_.empty(); }

  Felt at(size_t r, size_t c) const { return entries_[r * cols_ + c]; }
  void set(size_t r, size_t c, Felt value);

  std::span<const Felt> entries() const { return entries_; }
  std::span<const Felt> row(size_t r) const {
    return std::span<const Felt>(entries_).subspan(r * cols_, cols_);
  }
  std::vector<uint64_t> values() const;
  bool is_zero() const;

  // Copies `block` into this matrix with its top-left corner at (r0, c0).
  void set_block(size_t r0, size_t c0, const Mat& block);
  Mat block(size_t r0, size_t c0, size_t rows, size_t cols) const;

  Mat& operator+=(const Mat& other);
  Mat& operator-=(const Mat& other);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  Mat operator-() const;

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  size_t rows_;
  size_t cols_;
  PrimeField field_;
  std::vector<Felt> entries_;
};

// Row rank over GF(q) by Gaussian elimination; the pivot for each column is
// the first remaining row with a nonzero entry there.
size_t rank(const Mat& m);

Mat mat_vec(const Mat& m, const Mat& v);
Mat mat_mul(const Mat& a, const Mat& b);

// rows x 3 matrix with entry (r, c) = bases[c]^(start_exp + r).
Mat vandermonde_block(const PrimeField& field, const std::array<Felt, 3>& bases,
                      uint64_t start_exp, size_t rows);

// Uniform entries in row-major order from a FieldSampler seeded with `seed`.
Mat random_mat(size_t rows, size_t cols, const PrimeField& field,
               uint64_t seed);

}  // namespace hsagg

#endif  // HSAGG_LINALG_HPP_
