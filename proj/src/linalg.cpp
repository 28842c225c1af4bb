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

#include "hsagg/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "hsagg/errors.hpp"
#include "hsagg/prng.hpp"

namespace hsagg {
namespace {

void require_same_field(const Mat& a, const Mat& b) {
  if (a.field() != b.field()) {
    throw DimensionMismatch("operands live in different fields");
  }
}

void require_same_shape(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("shape " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
}

}  // namespace

Mat::Mat(size_t rows, size_t cols, const PrimeField& field)
    : rows_(rows), cols_(cols), field_(field), entries_(rows * cols) {}

Mat Mat::from_values(size_t rows, size_t cols, const PrimeField& field,
                     std::span<const uint64_t> values) {
  if (values.size() != rows * cols) {
    throw DimensionMismatch("expected " + std::to_string(rows * cols) +
                            " entries, got " + std::to_string(values.size()));
  }
  Mat m(rows, cols, field);
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= field.modulus()) {
      throw std::out_of_range("entry " + std::to_string(values[i]) +
                              " is not reduced mod " +
                              std::to_string(field.modulus()));
    }
    m.entries_[i] = Felt{values[i]};
  }
  return m;
}

Mat Mat::identity(size_t n, const PrimeField& field) {
  Mat m(n, n, field);
  for (size_t i = 0; i < n; ++i) m.set(i, i, field.one());
  return m;
}

void Mat::set(size_t r, size_t c, Felt value) {
  if (!field_.contains(value)) {
    throw std::out_of_range("entry is not reduced");
  }
  entries_[r * cols_ + c] = value;
}

std::vector<uint64_t> Mat::values() const {
  std::vector<uint64_t> out;
  out.reserve(entries_.size());
  for (Felt e : entries_) out.push_back(e.value);
  return out;
}

bool Mat::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Felt e) { return e.value == 0; });
}

void Mat::set_block(size_t r0, size_t c0, const Mat& block) {
  require_same_field(*this, block);
  if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_) {
    throw DimensionMismatch("block does not fit");
  }
  for (size_t r = 0; r < block.rows_; ++r) {
    std::copy_n(block.entries_.begin() + r * block.cols_, block.cols_,
                entries_.begin() + (r0 + r) * cols_ + c0);
  }
}

Mat Mat::block(size_t r0, size_t c0, size_t rows, size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) {
    throw DimensionMismatch("block out of range");
  }
  Mat out(rows, cols, field_);
  for (size_t r = 0; r < rows; ++r) {
    std::copy_n(entries_.begin() + (r0 + r) * cols_ + c0, cols,
                out.entries_.begin() + r * cols);
  }
  return out;
}

Mat& Mat::operator+=(const Mat& other) {
  require_same_shape(*this, other);
  for (size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] = field_.add(entries_[i], other.entries_[i]);
  }
  return *this;
}

Mat& Mat::operator-=(const Mat& other) {
  require_same_shape(*this, other);
  for (size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] = field_.sub(entries_[i], other.entries_[i]);
  }
  return *this;
}

Mat Mat::operator-() const {
  Mat out(*this);
  for (Felt& e : out.entries_) e = field_.neg(e);
  return out;
}

size_t rank(const Mat& m) {
  const PrimeField& f = m.field();
  const size_t rows = m.rows();
  const size_t cols = m.cols();
  std::vector<Felt> a(m.entries().begin(), m.entries().end());
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && a[pivot * cols + c].value == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      std::swap_ranges(a.begin() + pivot * cols + c, a.begin() + (pivot + 1) * cols,
                       a.begin() + r * cols + c);
    }
    const Felt inv = f.inv(a[r * cols + c]);
    for (size_t i = r + 1; i < rows; ++i) {
      Felt lead = a[i * cols + c];
      if (lead.value == 0) continue;
      const Felt factor = f.mul(lead, inv);
      for (size_t j = c; j < cols; ++j) {
        a[i * cols + j] =
            f.sub(a[i * cols + j], f.mul(factor, a[r * cols + j]));
      }
    }
    ++r;
  }
  return r;
}

Mat mat_vec(const Mat& m, const Mat& v) {
  require_same_field(m, v);
  if (v.cols() != 1 || m.cols() != v.rows()) {
    throw DimensionMismatch("mat_vec: " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + " times " +
                            std::to_string(v.rows()) + "x" +
                            std::to_string(v.cols()));
  }
  return mat_mul(m, v);
}

Mat mat_mul(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw DimensionMismatch("mat_mul: inner sizes");
  const PrimeField& f = a.field();
  Mat out(a.rows(), b.cols(), f);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t k = 0; k < a.cols(); ++k) {
      const Felt aik = a.at(i, k);
      if (aik.value == 0) continue;
      for (size_t j = 0; j < b.cols(); ++j) {
        out.set(i, j, f.add(out.at(i, j), f.mul(aik, b.at(k, j))));
      }
    }
  }
  return out;
}

Mat vandermonde_block(const PrimeField& field, const std::array<Felt, 3>& bases,
                      uint64_t start_exp, size_t rows) {
  if (rows == 0) throw DimensionMismatch("vandermonde_block needs rows >= 1");
  Mat out(rows, bases.size(), field);
  for (size_t c = 0; c < bases.size(); ++c) {
    Felt value = field.pow(bases[c], start_exp);
    for (size_t r = 0; r < rows; ++r) {
      out.set(r, c, value);
      value = field.mul(value, bases[c]);
    }
  }
  return out;
}

Mat random_mat(size_t rows, size_t cols, const PrimeField& field,
               uint64_t seed) {
  FieldSampler sampler(seed);
  Mat out(rows, cols, field);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) out.set(r, c, sampler.uniform(field));
  }
  return out;
}

}  // namespace hsagg
