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

#ifndef GZOT_LWE_ENCRYPTION_HPP_
#define GZOT_LWE_ENCRYPTION_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "gzot/common/rng.hpp"
#include "gzot/lwe/gaussian.hpp"
#include "gzot/lwe/modq.hpp"
#include "gzot/lwe/params.hpp"
#include "gzot/lwe/trapdoor.hpp"

namespace gzot::lwe {

/// Parameters plus the two Gaussian samplers they imply. Building the noise
/// table for large t takes a few milliseconds, so build this once and share.
class LweContext {
 public:
  explicit LweContext(LweParams params)
      : params_(std::move(params)), noise_(params_.t), key_(params_.s_hk) {}

  [[nodiscard]] const LweParams& params() const { return params_; }
  [[nodiscard]] const DiscreteGaussian& noise() const { return noise_; }
  [[nodiscard]] const DiscreteGaussian& key_sampler() const { return key_; }

 private:
  LweParams params_;
  DiscreteGaussian noise_;
  DiscreteGaussian key_;
};

/// Witness of c = A s + e + Encode(mu): the pair (s, e).
struct LweWitness {
  ModqVector s;
  std::vector<std::int64_t> e;
  friend bool operator==(const LweWitness&, const LweWitness&) = default;
};

/// mu * (0, ..., 0, ceil(q/2)). Since ceil(q/2) = 2^{-1} mod q for odd q,
/// 2 * Encode(mu) = (0, ..., 0, mu).
inline ModqVector encode_bit(const LweParams& p, unsigned mu) {
  ModqVector v(p.m, 0);
  if (mu & 1u) v.back() = (p.q + 1) / 2;
  return v;
}

/// c = A s + e + Encode(mu) for a caller-chosen (s, e).
inline ModqVector lwe_encrypt_with(const LweParams& p, const ModqMatrix& a, unsigned mu,
                                   const LweWitness& w) {
  ModqVector c = mat_vec(a, w.s, p.q);
  for (std::size_t i = 0; i < p.m; ++i) c[i] = add_mod(c[i], reduce_signed(w.e[i], p.q), p.q);
  if (mu & 1u) c.back() = add_mod(c.back(), (p.q + 1) / 2, p.q);
  return c;
}

/// Fresh noise e <- D_{Z,t}^m, resampled while ||e|| > B.
inline std::vector<std::int64_t> sample_noise(const LweContext& ctx, Rng& rng) {
  const auto& p = ctx.params();
  std::vector<std::int64_t> e(p.m);
  do {
    for (auto& x : e) x = ctx.noise()(rng);
  } while (norm2(e) > p.b_sq);
  return e;
}

inline std::pair<ModqVector, LweWitness> lwe_encrypt(const LweContext& ctx, const ModqMatrix& a,
                                                     unsigned mu, Rng& rng) {
  const auto& p = ctx.params();
  LweWitness w{uniform_vector(p.n, p.q, rng), sample_noise(ctx, rng)};
  ModqVector c = lwe_encrypt_with(p, a, mu, w);
  return {std::move(c), std::move(w)};
}

/// Decrypts to 0 or 1, or nullopt for "not a ciphertext" (bottom).
///
/// Inverts 2c = A (2s) + 2e + (0, ..., 0, mu). Every noise coordinate but
/// the last must be even, the parity of the last is mu, and the halved
/// noise e must satisfy ||e|| <= B''. The B'' cut applies even when the
/// inversion itself succeeds with larger noise.
inline std::optional<unsigned> lwe_decrypt(const LweParams& p, const ModqMatrix& a, const Trapdoor& td,
                                           std::span<const std::uint64_t> c) {
  if (c.size() != p.m) return std::nullopt;
  ModqVector doubled(p.m);
  for (std::size_t i = 0; i < p.m; ++i) doubled[i] = add_mod(c[i], c[i], p.q);
  auto inv = gadget_invert(p, a, td, doubled, std::nullopt);
  if (!inv) return std::nullopt;
  std::vector<std::int64_t>& e2 = inv->e;
  for (std::size_t i = 0; i + 1 < p.m; ++i) {
    if (e2[i] % 2 != 0) return std::nullopt;
    e2[i] /= 2;
  }
  const unsigned mu = static_cast<unsigned>(((e2.back() % 2) + 2) % 2);
  e2.back() = (e2.back() - static_cast<std::int64_t>(mu)) / 2;
  if (norm2(e2) > p.bpp_sq) return std::nullopt;
  return mu;
}

/// True iff c - A s - Encode(mu) equals the stored e and ||e|| <= B.
inline bool witness_matches(const LweParams& p, const ModqMatrix& a, std::span<const std::uint64_t> c,
                            unsigned mu, const LweWitness& w) {
  if (c.size() != p.m || w.s.size() != p.n || w.e.size() != p.m) return false;
  if (norm2(w.e) > p.b_sq) return false;
  ModqVector expect = lwe_encrypt_with(p, a, mu, w);
  return std::equal(expect.begin(), expect.end(), c.begin());
}

}  // namespace gzot::lwe

#endif  // GZOT_LWE_ENCRYPTION_HPP_
