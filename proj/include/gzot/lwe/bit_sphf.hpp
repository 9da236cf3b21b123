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

#ifndef GZOT_LWE_BIT_SPHF_HPP_
#define GZOT_LWE_BIT_SPHF_HPP_

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <memory>
#include <numbers>
#include <span>
#include <vector>

#include "gzot/common/rng.hpp"
#include "gzot/lwe/encryption.hpp"
#include "gzot/lwe/modq.hpp"
#include "gzot/lwe/params.hpp"

namespace gzot::lwe {

/// The public matrix A, with a double copy for the batched key projection.
class PublicMatrix {
 public:
  explicit PublicMatrix(ModqMatrix a) : a_(std::move(a)), real_(a_.rows(), a_.cols()) {
    for (std::size_t i = 0; i < a_.rows(); ++i) {
      for (std::size_t j = 0; j < a_.cols(); ++j) {
        real_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(a_.at(i, j));
      }
    }
  }

  [[nodiscard]] const ModqMatrix& matrix() const { return a_; }
  [[nodiscard]] const Eigen::MatrixXd& real() const { return real_; }

 private:
  ModqMatrix a_;
  Eigen::MatrixXd real_;
};

/// Pr[R(x) = 1] = (1 + cos(2 pi x / q)) / 2.
inline double prob_round_probability(std::uint64_t x, std::uint64_t q) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(centered(x, q)) / static_cast<double>(q);
  return 0.5 * (1.0 + std::cos(angle));
}

/// Randomized rounding R: Z_q -> {0, 1}. Two independent roundings of the same
/// uniform input agree with probability 3/4 on average.
inline unsigned prob_round(std::uint64_t x, std::uint64_t q, Rng& rng) {
  return rng.unit() < prob_round_probability(x, q) ? 1u : 0u;
}

/// hk = h <- D_{Z,s}^m.
struct BitHashKey {
  std::vector<std::int16_t> h;
};

inline BitHashKey bit_hash_kg(const LweContext& ctx, Rng& rng) {
  BitHashKey hk{std::vector<std::int16_t>(ctx.params().m)};
  for (auto& x : hk.h) x = static_cast<std::int16_t>(ctx.key_sampler()(rng));
  return hk;
}

/// hp = A^t h.
inline ModqVector bit_proj_kg(const LweParams& p, const ModqMatrix& a, const BitHashKey& hk) {
  return mat_t_small<std::int16_t>(a, hk.h, p.q);
}

/// R(<h, c>).
inline unsigned bit_hash(const LweParams& p, const BitHashKey& hk, std::span<const std::uint64_t> c,
                         Rng& rng) {
  return prob_round(inner_small<std::int16_t>(hk.h, c, p.q), p.q, rng);
}

/// R(<hp, s>).
inline unsigned bit_proj_hash(const LweParams& p, std::span<const std::uint64_t> hp,
                              std::span<const std::uint64_t> s, Rng& rng) {
  return prob_round(inner(hp, s, p.q), p.q, rng);
}

/// A^t h for `count` keys stored row-major in `keys` (count x m). Uses a
/// double-precision GEMM when every partial sum stays below 2^53, so the
/// result is exact; falls back to 128-bit integer accumulation otherwise.
/// Output is count x n, row-major.
inline std::vector<std::uint64_t> project_keys(const LweParams& p, const PublicMatrix& pub,
                                               std::span<const std::int16_t> keys, std::size_t count,
                                               std::int64_t max_abs_entry) {
  std::vector<std::uint64_t> out(count * p.n);
  const long double worst = static_cast<long double>(max_abs_entry) * static_cast<long double>(p.q - 1) *
                            static_cast<long double>(p.m);
  if (worst < 0x1.0p53L) {
    using RowMajorI16 = Eigen::Matrix<std::int16_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    Eigen::Map<const RowMajorI16> hk(keys.data(), static_cast<Eigen::Index>(count),
                                     static_cast<Eigen::Index>(p.m));
    const Eigen::MatrixXd real_hk = hk.cast<double>();
    const Eigen::MatrixXd prod = real_hk * pub.real();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < p.n; ++j) {
        const auto v = static_cast<std::int64_t>(prod(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
        out[i * p.n + j] = reduce_signed(v, p.q);
      }
    }
    return out;
  }
  for (std::size_t i = 0; i < count; ++i) {
    ModqVector hp = mat_t_small<std::int16_t>(pub.matrix(), keys.subspan(i * p.m, p.m), p.q);
    std::copy(hp.begin(), hp.end(), out.begin() + static_cast<std::ptrdiff_t>(i * p.n));
  }
  return out;
}

}  // namespace gzot::lwe

#endif  // GZOT_LWE_BIT_SPHF_HPP_
