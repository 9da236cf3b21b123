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

#ifndef GZOT_LWE_GAUSSIAN_HPP_
#define GZOT_LWE_GAUSSIAN_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gzot/common/rng.hpp"

namespace gzot::lwe {

/// Centered discrete Gaussian D_{Z,s}: Pr[x] proportional to
/// exp(-pi x^2 / s^2), support cut at |x| <= ceil(12 s). Variance is close
/// to s^2 / (2 pi).
///
/// Sampling is inversion on a 64-bit fixed-point CDF table, with a guide
/// table on the top 16 bits of the uniform word to skip most of the search.
/// Not constant time.
class DiscreteGaussian {
 public:
  explicit DiscreteGaussian(double s) : s_(s) {
    if (!(s >= 1.0)) throw std::invalid_argument("DiscreteGaussian: parameter must be >= 1");
    tail_ = static_cast<std::int64_t>(std::ceil(12.0 * s));
    const std::size_t size = static_cast<std::size_t>(2 * tail_ + 1);

    std::vector<long double> weight(size);
    long double total = 0;
    for (std::size_t i = 0; i < size; ++i) {
      const long double x = static_cast<long double>(static_cast<std::int64_t>(i) - tail_);
      weight[i] = std::exp(-3.14159265358979323846264338327950288L * x * x /
                           (static_cast<long double>(s) * s));
      total += weight[i];
    }
    cdf_.resize(size);
    long double acc = 0;
    constexpr long double kScale = 18446744073709551616.0L;  // 2^64
    for (std::size_t i = 0; i < size; ++i) {
      acc += weight[i];
      const long double scaled = std::floor(acc / total * kScale);
      cdf_[i] = scaled >= kScale ? UINT64_MAX : static_cast<std::uint64_t>(scaled);
    }
    cdf_.back() = UINT64_MAX;

    guide_.resize(kGuideSize);
    std::size_t idx = 0;
    for (std::size_t g = 0; g < kGuideSize; ++g) {
      const std::uint64_t lo = static_cast<std::uint64_t>(g) << (64 - kGuideBits);
      while (cdf_[idx] <= lo && idx + 1 < size) ++idx;
      guide_[g] = static_cast<std::uint32_t>(idx);
    }
  }

  [[nodiscard]] double parameter() const { return s_; }
  [[nodiscard]] std::int64_t tail_cut() const { return tail_; }

  std::int64_t operator()(Rng& rng) const {
    const std::uint64_t u = rng();
    std::size_t i = guide_[u >> (64 - kGuideBits)];
    while (cdf_[i] <= u && i + 1 < cdf_.size()) ++i;
    return static_cast<std::int64_t>(i) - tail_;
  }

  /// Exact probability mass of x under the truncated table (for tests).
  [[nodiscard]] double mass(std::int64_t x) const {
    if (x < -tail_ || x > tail_) return 0.0;
    const auto i = static_cast<std::size_t>(x + tail_);
    const std::uint64_t hi = cdf_[i];
    const std::uint64_t lo = i == 0 ? 0 : cdf_[i - 1];
    return static_cast<double>(hi - lo) * 0x1.0p-64;
  }

 private:
  static constexpr unsigned kGuideBits = 16;
  static constexpr std::size_t kGuideSize = std::size_t{1} << kGuideBits;

  double s_;
  std::int64_t tail_ = 0;
  std::vector<std::uint64_t> cdf_;   // cdf_[i] = floor(2^64 * Pr[X <= i - tail_])
  std::vector<std::uint32_t> guide_;  // first i with cdf_[i] > g * 2^48
};

}  // namespace gzot::lwe

#endif  // GZOT_LWE_GAUSSIAN_HPP_
