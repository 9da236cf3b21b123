// Copyright 2026 The gzot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GZOT_LWE_MODQ_HPP_
#define GZOT_LWE_MODQ_HPP_

#include <bit>
#include <cassert>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "gzot/common/rng.hpp"

namespace gzot::lwe {

using u128 = unsigned __int128;
using i128 = __int128;

/// Entries in [0, q).
using ModqVector = std::vector<std::uint64_t>;

/// Row-major matrix over Z_q.
class ModqMatrix {
 public:
  ModqMatrix() = default;
  ModqMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  std::uint64_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  [[nodiscard]] std::uint64_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<std::uint64_t> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  [[nodiscard]] std::span<const std::uint64_t> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  [[nodiscard]] const std::vector<std::uint64_t>& data() const { return data_; }
  std::vector<std::uint64_t>& data() { return data_; }

  friend bool operator==(const ModqMatrix&, const ModqMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> data_;
};

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  std::uint64_t s = a + b;
  return (s >= q || s < a) ? s - q : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return a >= b ? a - b : a + (q - b);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>((u128{a} * b) % q);
}

/// Representative of a signed value in [0, q).
inline std::uint64_t reduce_signed(i128 v, std::uint64_t q) {
  i128 r = v % static_cast<i128>(q);
  if (r < 0) r += q;
  return static_cast<std::uint64_t>(r);
}

/// Centered representative in (-q/2, q/2] (q odd, so [-(q-1)/2, (q-1)/2]).
inline std::int64_t centered(std::uint64_t x, std::uint64_t q) {
  return x > q / 2 ? static_cast<std::int64_t>(x) - static_cast<std::int64_t>(q)
                   : static_cast<std::int64_t>(x);
}

inline u128 saturating_add(u128 a, u128 b) {
  u128 s = a + b;
  return s < a ? std::numeric_limits<u128>::max() : s;
}

/// Squared Euclidean norm; saturates instead of wrapping.
inline u128 norm2(std::span<const std::int64_t> v) {
  u128 acc = 0;
  for (std::int64_t x : v) {
    u128 mag = x < 0 ? static_cast<u128>(-static_cast<i128>(x)) : static_cast<u128>(x);
    acc = saturating_add(acc, mag * mag);
  }
  return acc;
}

inline u128 norm2_centered(std::span<const std::uint64_t> v, std::uint64_t q) {
  u128 acc = 0;
  for (std::uint64_t x : v) {
    std::int64_t c = centered(x, q);
    u128 mag = static_cast<u128>(c < 0 ? -static_cast<i128>(c) : static_cast<i128>(c));
    acc = saturating_add(acc, mag * mag);
  }
  return acc;
}

/// Number of u64*u64 products that can be summed in a u128 before reducing.
inline std::size_t accumulate_budget(std::uint64_t q) {
  const int bits = std::bit_width(q);
  const int spare = 128 - 2 * bits;
  if (spare >= 30) return std::size_t{1} << 30;
  return spare <= 0 ? 1 : (std::size_t{1} << spare);
}

/// A * s for A (rows x cols) and s (cols).
inline ModqVector mat_vec(const ModqMatrix& a, std::span<const std::uint64_t> s, std::uint64_t q) {
  if (s.size() != a.cols()) throw std::invalid_argument("mat_vec: dimension mismatch");
  const std::size_t budget = accumulate_budget(q);
  ModqVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto row = a.row(i);
    u128 acc = 0;
    std::size_t pending = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      acc += u128{row[j]} * s[j];
      if (++pending == budget) {
        acc %= q;
        pending = 1;
      }
    }
    out[i] = static_cast<std::uint64_t>(acc % q);
  }
  return out;
}

/// A^t * h for a small signed h of length rows(A).
template <class Small>
ModqVector mat_t_small(const ModqMatrix& a, std::span<const Small> h, std::uint64_t q) {
  if (h.size() != a.rows()) throw std::invalid_argument("mat_t_small: dimension mismatch");
  std::vector<i128> acc(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (h[i] == 0) continue;
    const i128 hi = h[i];
    auto row = a.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) acc[j] += hi * static_cast<i128>(row[j]);
  }
  ModqVector out(a.cols());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = reduce_signed(acc[j], q);
  return out;
}

/// <h, c> mod q for small signed h.
template <class Small>
std::uint64_t inner_small(std::span<const Small> h, std::span<const std::uint64_t> c, std::uint64_t q) {
  if (h.size() != c.size()) throw std::invalid_argument("inner_small: dimension mismatch");
  i128 acc = 0;
  for (std::size_t i = 0; i < h.size(); ++i) acc += static_cast<i128>(h[i]) * static_cast<i128>(c[i]);
  return reduce_signed(acc, q);
}

/// <a, b> mod q for full-range vectors.
inline std::uint64_t inner(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                           std::uint64_t q) {
  if (a.size() != b.size()) throw std::invalid_argument("inner: dimension mismatch");
  const std::size_t budget = accumulate_budget(q);
  u128 acc = 0;
  std::size_t pending = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += u128{a[i]} * b[i];
    if (++pending == budget) {
      acc %= q;
      pending = 1;
    }
  }
  return static_cast<std::uint64_t>(acc % q);
}

inline ModqVector vec_add(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                          std::uint64_t q) {
  ModqVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = add_mod(a[i], b[i], q);
  return out;
}

inline ModqVector vec_sub(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                          std::uint64_t q) {
  ModqVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = sub_mod(a[i], b[i], q);
  return out;
}

inline ModqVector uniform_vector(std::size_t len, std::uint64_t q, Rng& rng) {
  ModqVector v(len);
  for (auto& x : v) x = rng.uniform(q);
  return v;
}

inline std::vector<std::int64_t> centered_vector(std::span<const std::uint64_t> v, std::uint64_t q) {
  std::vector<std::int64_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = centered(v[i], q);
  return out;
}

inline ModqVector reduce_vector(std::span<const std::int64_t> v, std::uint64_t q) {
  ModqVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = reduce_signed(v[i], q);
  return out;
}

}  // namespace gzot::lwe

#endif  // GZOT_LWE_MODQ_HPP_
