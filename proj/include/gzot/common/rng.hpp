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

#ifndef GZOT_COMMON_RNG_HPP_
#define GZOT_COMMON_RNG_HPP_

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>

#include "gzot/common/bytes.hpp"
#include "gzot/common/sha256.hpp"

namespace gzot {

/// Seeded random source. Every randomized operation in the library takes one
/// of these explicitly, so a (seed, stream) pair pins a whole run.
///
/// This is a simulation-grade generator (mt19937_64 keyed through SHA-256),
/// not a CSPRNG. The library is a research artifact and makes no claim of
/// cryptographic strength for its randomness.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(const Digest256& seed) {
    std::array<std::uint32_t, 8> words{};
    for (std::size_t i = 0; i < 8; ++i) {
      words[i] = (std::uint32_t{seed[4 * i]} << 24) | (std::uint32_t{seed[4 * i + 1]} << 16) |
                 (std::uint32_t{seed[4 * i + 2]} << 8) | std::uint32_t{seed[4 * i + 3]};
    }
    std::seed_seq seq(words.begin(), words.end());
    engine_.seed(seq);
  }

  /// Stream `stream` of the 64-bit seed `seed`; streams are independent.
  static Rng from_seed(std::uint64_t seed, std::uint64_t stream = 0) {
    return Rng(Sha256().update("gzot/rng/v1").update_u64(seed).update_u64(stream).finish());
  }

  static Rng from_label(std::uint64_t seed, std::string_view label) {
    return Rng(Sha256().update("gzot/rng/v1").update_u64(seed).update(label).finish());
  }

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  /// Uniform in [0, bound).
  std::uint64_t uniform(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bit() { return (engine_() >> 63) != 0; }

  Bytes bytes(std::size_t n) {
    Bytes out(n);
    for (std::size_t i = 0; i < n; i += 8) {
      std::uint64_t w = engine_();
      for (std::size_t j = i; j < n && j < i + 8; ++j) {
        out[j] = static_cast<std::uint8_t>(w);
        w >>= 8;
      }
    }
    return out;
  }

  Digest256 seed_material() {
    Digest256 d{};
    for (std::size_t i = 0; i < 32; i += 8) {
      std::uint64_t w = engine_();
      for (std::size_t j = 0; j < 8; ++j) d[i + j] = static_cast<std::uint8_t>(w >> (8 * j));
    }
    return d;
  }

  /// Child stream keyed by fresh output of this one.
  Rng fork(std::uint64_t label) {
    auto material = seed_material();
    return Rng(Sha256().update("gzot/rng/fork").update(material).update_u64(label).finish());
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gzot

#endif  // GZOT_COMMON_RNG_HPP_
