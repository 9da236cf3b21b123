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

#ifndef GZOT_LWE_PARAMS_HPP_
#define GZOT_LWE_PARAMS_HPP_

#include <gmpxx.h>

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gzot/common/errors.hpp"
#include "gzot/common/sha256.hpp"
#include "gzot/lwe/modq.hpp"

namespace gzot::lwe {

/// Smallest prime >= 2^bits, by GMP's deterministic next-prime search.
inline std::uint64_t smallest_prime_at_least_pow2(unsigned bits) {
  mpz_class start = mpz_class(1) << bits;
  start -= 1;
  mpz_class p;
  mpz_nextprime(p.get_mpz_t(), start.get_mpz_t());
  return p.get_ui();
}

inline bool is_prime_u64(std::uint64_t v) {
  mpz_class z;
  mpz_set_ui(z.get_mpz_t(), v);
  return mpz_probab_prime_p(z.get_mpz_t(), 50) != 0;
}

/// Gadget exponent k = ceil(log2 q) - 1, so g = (1, 2, ..., 2^k).
inline unsigned gadget_exponent(std::uint64_t q) { return std::bit_width(q - 1) - 1; }

/// One LWE parameter set. Bounds are kept squared, as exact integer floors,
/// and compared against squared norms:
///   B   = 2 t sqrt(m)        honest encryption noise
///   B'  = q / (8 sqrt(m))    gadget inversion radius
///   B'' = B' / 2             decryption radius
struct LweParams {
  std::string name;
  std::size_t n = 0;
  std::uint64_t q = 0;
  unsigned k_gadget = 0;
  std::size_t m_bar = 0;
  std::size_t m = 0;
  double sigma_lwe = 0;
  double omega = 0;
  double t = 0;
  double s_hk = 0;
  std::size_t kappa = 0;
  std::size_t rep = 0;
  std::size_t ell = 0;
  std::size_t k_amp = 0;
  u128 b_sq = 0;
  u128 bp_sq = 0;
  u128 bpp_sq = 0;

  [[nodiscard]] std::size_t gadget_width() const { return k_gadget + 1; }
  [[nodiscard]] std::size_t gadget_rows() const { return n * gadget_width(); }
  [[nodiscard]] std::size_t entry_bytes() const { return (std::bit_width(q) + 7) / 8; }
  [[nodiscard]] std::size_t kappa_bytes() const { return kappa / 8; }

  [[nodiscard]] double bound_b() const { return 2.0 * t * std::sqrt(static_cast<double>(m)); }
  [[nodiscard]] double bound_bp() const {
    return static_cast<double>(q) / (8.0 * std::sqrt(static_cast<double>(m)));
  }
  [[nodiscard]] double bound_bpp() const { return bound_bp() / 2.0; }

  /// Builds a parameter set from the primary choices and derives the rest.
  /// `t_override` replaces t = sigma * sqrt(m) * omega.
  static LweParams make(std::string name, std::size_t n, std::uint64_t q, double sigma_lwe,
                        double omega, std::optional<double> t_override, double s_hk,
                        std::size_t kappa, std::size_t rep, std::size_t k_amp) {
    LweParams p;
    p.name = std::move(name);
    p.n = n;
    p.q = q;
    p.k_gadget = gadget_exponent(q);
    p.m_bar = n * p.gadget_width();
    p.m = p.m_bar + p.gadget_rows();
    p.sigma_lwe = sigma_lwe;
    p.omega = omega;
    p.t = t_override.value_or(sigma_lwe * std::sqrt(static_cast<double>(p.m)) * omega);
    p.s_hk = s_hk;
    p.kappa = kappa;
    p.rep = rep;
    p.ell = kappa * rep;
    p.k_amp = k_amp;
    const long double t2 = static_cast<long double>(p.t) * p.t;
    p.b_sq = static_cast<u128>(std::floor(4.0L * t2 * static_cast<long double>(p.m)));
    const u128 q2 = u128{q} * q;
    p.bp_sq = q2 / (u128{64} * p.m);
    p.bpp_sq = q2 / (u128{256} * p.m);
    return p;
  }

  /// Startup checks; throws ConfigError on the first violation.
  void validate() const {
    auto fail = [&](const std::string& why) { throw ConfigError("lwe preset " + name + ": " + why); };
    if (q < 3 || q % 2 == 0 || !is_prime_u64(q)) fail("q must be an odd prime");
    if (q >= (std::uint64_t{1} << 62)) fail("q must be below 2^62");
    if (!((std::uint64_t{1} << k_gadget) < q && q <= (std::uint64_t{1} << (k_gadget + 1)))) {
      fail("gadget exponent inconsistent with q");
    }
    const auto log_q = static_cast<std::size_t>(std::bit_width(q - 1));
    if (m < n * log_q) fail("m must be at least n*ceil(log2 q)");
    if (t < 1.0) fail("t must be >= 1");
    if (s_hk < 1.0) fail("s_hk must be >= 1");
    if (std::ceil(12.0 * s_hk) > 32767.0) fail("s_hk too large for 16-bit key entries");
    if (rep % 2 == 0) fail("rep must be odd");
    if (kappa == 0 || kappa % 8 != 0) fail("kappa must be a positive multiple of 8");
    if (ell != kappa * rep) fail("ell must equal kappa*rep");
    if (k_amp == 0) fail("k_amp must be positive");
    if (b_sq > bpp_sq) fail("honest noise bound B exceeds decryption bound B''");
  }

  /// First 16 bytes of SHA-256 over the canonical description; prefixes every
  /// serialized vector so data from different parameter sets never mixes.
  [[nodiscard]] std::array<std::uint8_t, 16> digest() const {
    Sha256 h;
    h.update("gzot/lwe/params/v1").update(name);
    for (std::uint64_t v : {std::uint64_t{n}, q, std::uint64_t{m_bar}, std::uint64_t{m},
                            std::uint64_t{kappa}, std::uint64_t{rep}, std::uint64_t{k_amp}}) {
      h.update_u64(v);
    }
    for (double d : {t, s_hk}) h.update_u64(std::bit_cast<std::uint64_t>(d));
    auto full = h.finish();
    std::array<std::uint8_t, 16> out{};
    std::copy_n(full.begin(), 16, out.begin());
    return out;
  }

  /// `toy`, `test` or `demo`.
  static LweParams preset(std::string_view which) {
    LweParams p;
    if (which == "toy") {
      // t pinned to 1: with q ~ 2^13 and m = 224, t = sigma*sqrt(m)*omega
      // would break B <= B''.
      p = make("toy", 8, smallest_prime_at_least_pow2(13), 1.0, 1.0, 1.0, std::sqrt(8.0), 8, 63, 2);
    } else if (which == "test") {
      const std::size_t n = 64;
      p = make("test", n, smallest_prime_at_least_pow2(30), 2.0 * std::sqrt(double(n)),
               std::sqrt(std::log(double(n))), std::nullopt, std::sqrt(double(n)), 16, 63, 8);
    } else if (which == "demo") {
      const std::size_t n = 128;
      p = make("demo", n, smallest_prime_at_least_pow2(61), 2.0 * std::sqrt(double(n)),
               std::sqrt(std::log(double(n))), std::nullopt, std::sqrt(double(n)), 128, 127, 40);
    } else {
      throw ConfigError("unknown LWE preset: " + std::string(which));
    }
    p.validate();
    return p;
  }
};

}  // namespace gzot::lwe

#endif  // GZOT_LWE_PARAMS_HPP_
