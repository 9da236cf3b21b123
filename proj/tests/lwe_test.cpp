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


#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "gzot/common/rng.hpp"
#include "gzot/lwe/bit_sphf.hpp"
#include "gzot/lwe/ecc.hpp"
#include "gzot/lwe/encryption.hpp"
#include "gzot/lwe/gaussian.hpp"
#include "gzot/lwe/modq.hpp"
#include "gzot/lwe/params.hpp"
#include "gzot/lwe/sphf.hpp"
#include "gzot/lwe/trapdoor.hpp"
#include "gzot/sphf/crs.hpp"

namespace gzot::lwe {
namespace {

using u128 = unsigned __int128;

// Deterministic Miller-Rabin for 64-bit inputs.
bool oracle_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) { return static_cast<std::uint64_t>(u128{a} * b % n); };
  auto powmod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

TEST(LweParamsTest, PresetModuliAreSmallestPrimes) {
  const std::pair<const char*, unsigned> presets[] = {{"toy", 13}, {"test", 30}, {"demo", 61}};
  for (auto [name, bits] : presets) {
    LweParams p = LweParams::preset(name);
    EXPECT_TRUE(oracle_is_prime(p.q)) << name;
    for (std::uint64_t c = std::uint64_t{1} << bits; c < p.q; ++c) EXPECT_FALSE(oracle_is_prime(c)) << c;
  }
  EXPECT_EQ(LweParams::preset("toy").q, 8209u);
  EXPECT_EQ(LweParams::preset("test").q, 1073741827u);
  EXPECT_EQ(LweParams::preset("demo").q, 2305843009213693967u);
}

TEST(LweParamsTest, DerivedShapesAndBounds) {
  for (const char* name : {"toy", "test", "demo"}) {
    LweParams p = LweParams::preset(name);
    EXPECT_EQ(p.m, p.m_bar + p.n * (p.k_gadget + 1)) << name;
    EXPECT_GE(p.m, p.n * static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(p.q)))));
    EXPECT_EQ(p.ell, p.kappa * p.rep);
    EXPECT_EQ(p.rep % 2, 1u);
    EXPECT_LE(p.bound_b(), p.bound_bpp()) << name;
    EXPECT_NEAR(p.bound_bp(), static_cast<double>(p.q) / (8 * std::sqrt(static_cast<double>(p.m))), 1e-6 * p.bound_bp());
  }
  LweParams test = LweParams::preset("test");
  EXPECT_EQ(test.n, 64u);
  EXPECT_EQ(test.kappa, 16u);
  EXPECT_EQ(test.rep, 63u);
  EXPECT_EQ(test.k_amp, 8u);
  EXPECT_THROW(LweParams::preset("nope"), ConfigError);
}

TEST(Gadget, SmallModulusVectors) {
  ModqMatrix g = gadget_matrix(1, 11);
  ASSERT_EQ(g.rows(), 4u);
  EXPECT_EQ(g.at(0, 0), 1u);
  EXPECT_EQ(g.at(1, 0), 2u);
  EXPECT_EQ(g.at(2, 0), 4u);
  EXPECT_EQ(g.at(3, 0), 8u);
  ModqVector gs = mat_vec(g, ModqVector{3}, 11);
  EXPECT_EQ(gs, (ModqVector{3, 6, 1, 2}));
  EXPECT_EQ(decode_gadget_block(gs, 11), 3u);
  for (std::uint64_t s = 0; s < 11; ++s) EXPECT_EQ(decode_gadget_block(mat_vec(g, ModqVector{s}, 11), 11), s);
}

TEST(Encode, HalfModulus) {
  LweParams p = LweParams::make("unit", 1, 11, 1, 1, 1.0, 1, 8, 1, 1);
  ModqVector e = encode_bit(p, 1);
  EXPECT_EQ(e.back(), 6u);
  EXPECT_EQ(2 * e.back() % 11, 1u);
  EXPECT_EQ(encode_bit(p, 0), ModqVector(p.m, 0));
}

TEST(GaussianTest, MomentsMatch) {
  for (double s : {std::sqrt(8.0), 8.0, 40.0}) {
    DiscreteGaussian d(s);
    Rng rng = Rng::from_seed(11);
    const int n = 100000;
    double sum = 0, sq = 0;
    for (int i = 0; i < n; ++i) {
      const double x = static_cast<double>(d(rng));
      sum += x;
      sq += x * x;
    }
    const double mean = sum / n;
    const double var = sq / n - mean * mean;
    EXPECT_LE(std::abs(mean), 0.05 * s) << s;
    // Numeric oracle: variance of the discrete Gaussian exp(-pi x^2 / s^2).
    double wsum = 0, wsq = 0;
    for (int x = -20 * static_cast<int>(s); x <= 20 * static_cast<int>(s); ++x) {
      const double w = std::exp(-std::numbers::pi * x * x / (s * s));
      wsum += w;
      wsq += w * x * x;
    }
    EXPECT_NEAR(var, wsq / wsum, 0.1 * wsq / wsum) << s;
    EXPECT_NEAR(var, s * s / (2 * std::numbers::pi), 0.1 * s * s / (2 * std::numbers::pi)) << s;
  }
}

class LweToy : public ::testing::Test {
 protected:
  LweSphf inst = LweSphf::preset("toy");
  const LweParams& p = inst.params();
  Rng rng = Rng::from_seed(20);
  TrapGenResult gen = trapgen(p, rng);
};

TEST_F(LweToy, TrapdoorEntryHistogram) {
  std::size_t zero = 0, plus = 0, minus = 0;
  for (auto r : gen.trapdoor.r_entries()) {
    zero += r == 0;
    plus += r == 1;
    minus += r == -1;
  }
  const double n = static_cast<double>(gen.trapdoor.r_entries().size());
  EXPECT_EQ(zero + plus + minus, gen.trapdoor.r_entries().size());
  EXPECT_NEAR(zero / n, 0.5, 0.02);
  EXPECT_NEAR(plus / n, 0.25, 0.02);
  EXPECT_NEAR(minus / n, 0.25, 0.02);
}

// Explicit T = [-R | I] times M, with plain modular loops.
ModqMatrix oracle_t_times(const Trapdoor& td, const ModqMatrix& mat, std::uint64_t q) {
  ModqMatrix out(td.rows(), mat.cols());
  for (std::size_t i = 0; i < td.rows(); ++i) {
    for (std::size_t c = 0; c < mat.cols(); ++c) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < td.cols(); ++j) acc -= td.r(i, j) * static_cast<std::int64_t>(mat.at(j, c));
      acc += static_cast<std::int64_t>(mat.at(td.cols() + i, c));
      acc %= static_cast<std::int64_t>(q);
      out.at(i, c) = static_cast<std::uint64_t>(acc < 0 ? acc + static_cast<std::int64_t>(q) : acc);
    }
  }
  return out;
}

TEST_F(LweToy, TrapdoorAnnihilatesAndTags) {
  EXPECT_EQ(oracle_t_times(gen.trapdoor, gen.a0, p.q), ModqMatrix(p.gadget_rows(), p.n));
  EXPECT_EQ(oracle_t_times(gen.trapdoor, gen.a, p.q), gadget_matrix(p.n, p.q));
  EXPECT_LE(gen.trapdoor.operator_norm_estimate(rng), kTrapdoorNormFactor * std::sqrt(double(p.m)));
}

TEST_F(LweToy, PublicMatrixLooksUniform) {
  std::vector<double> bins(16);
  for (auto v : gen.a0.data()) bins[v * 16 / p.q] += 1;
  const double expect = static_cast<double>(gen.a0.data().size()) / 16;
  double chi2 = 0;
  for (double b : bins) chi2 += (b - expect) * (b - expect) / expect;
  EXPECT_LT(chi2, 37.70);  // p = 0.001, 15 dof
}

TEST_F(LweToy, InversionRoundTrip) {
  for (int i = 0; i < 1000; ++i) {
    LweWitness w{uniform_vector(p.n, p.q, rng), sample_noise(inst.context(), rng)};
    ModqVector x = lwe_encrypt_with(p, gen.a, 0, w);
    auto inv = gadget_invert(p, gen.a, gen.trapdoor, x, std::nullopt);
    ASSERT_TRUE(inv.has_value());
    ASSERT_EQ(inv->s, w.s);
    ASSERT_EQ(inv->e, w.e);
  }
}

TEST_F(LweToy, DecryptRoundTrip) {
  for (int i = 0; i < 1000; ++i) {
    for (unsigned mu : {0u, 1u}) {
      auto [c, w] = lwe_encrypt(inst.context(), gen.a, mu, rng);
      ASSERT_EQ(lwe_decrypt(p, gen.a, gen.trapdoor, c), std::optional<unsigned>(mu));
      ASSERT_TRUE(witness_matches(p, gen.a, c, mu, w));
      ASSERT_FALSE(witness_matches(p, gen.a, c, 1 - mu, w));
    }
  }
}

TEST_F(LweToy, PlantedNoiseAtDecryptionBound) {
  // Largest single-coordinate noise inside B'' and the next one past it.
  std::int64_t inside = 0;
  while (u128(inside + 1) * u128(inside + 1) <= p.bpp_sq) ++inside;
  for (std::int64_t mag : {inside, inside + 1}) {
    LweWitness w{uniform_vector(p.n, p.q, rng), std::vector<std::int64_t>(p.m, 0)};
    w.e[3] = mag;
    ModqVector c = lwe_encrypt_with(p, gen.a, 0, w);
    auto mu = lwe_decrypt(p, gen.a, gen.trapdoor, c);
    if (mag == inside) {
      EXPECT_EQ(mu, std::optional<unsigned>(0));
    } else {
      EXPECT_FALSE(mu.has_value());
    }
  }
}

TEST_F(LweToy, UniformVectorsDoNotDecrypt) {
  int bottom = 0;
  for (int i = 0; i < 1000; ++i) bottom += lwe_decrypt(p, gen.a, gen.trapdoor, uniform_vector(p.m, p.q, rng)) ? 0 : 1;
  EXPECT_GE(bottom, 999);
}

TEST(LweTest, UniformVectorsDoNotInvertAtTestPreset) {
  LweSphf inst = LweSphf::preset("test");
  const auto& p = inst.params();
  Rng rng = Rng::from_seed(21);
  TrapGenResult gen = trapgen(p, rng);
  int bottom = 0;
  for (int i = 0; i < 1000; ++i) {
    bottom += gadget_invert(p, gen.a, gen.trapdoor, uniform_vector(p.m, p.q, rng), p.bp_sq) ? 0 : 1;
  }
  EXPECT_GE(bottom, 999);
  for (int i = 0; i < 50; ++i) {
    for (unsigned mu : {0u, 1u}) {
      auto [c, w] = lwe_encrypt(inst.context(), gen.a, mu, rng);
      ASSERT_EQ(lwe_decrypt(p, gen.a, gen.trapdoor, c), std::optional<unsigned>(mu));
    }
  }
}

TEST(Rounding, ExtremesOfTheCosineLaw) {
  const std::uint64_t q = 8209;
  Rng rng = Rng::from_seed(22);
  int ones_at_zero = 0, ones_at_half = 0;
  for (int i = 0; i < 10000; ++i) {
    ones_at_zero += static_cast<int>(prob_round(0, q, rng));
    ones_at_half += static_cast<int>(prob_round((q - 1) / 2, q, rng) + prob_round((q + 1) / 2, q, rng));
  }
  EXPECT_EQ(ones_at_zero, 10000);
  EXPECT_LE(ones_at_half, 1);
  EXPECT_DOUBLE_EQ(prob_round_probability(0, q), 1.0);
  EXPECT_LE(prob_round_probability((q + 1) / 2, q), 10 * std::numbers::pi * std::numbers::pi / double(q * q));
}

TEST_F(LweToy, BitHashAgreesAtThreeQuarters) {
  PublicMatrix pub(gen.a);
  int agree = 0, uniform_agree = 0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    auto [c, w] = lwe_encrypt(inst.context(), gen.a, 0, rng);
    BitHashKey hk = bit_hash_kg(inst.context(), rng);
    ModqVector hp = bit_proj_kg(p, gen.a, hk);
    agree += bit_hash(p, hk, c, rng) == bit_proj_hash(p, hp, w.s, rng) ? 1 : 0;
    ModqVector junk = uniform_vector(p.m, p.q, rng);
    uniform_agree += bit_hash(p, hk, junk, rng) == bit_proj_hash(p, hp, w.s, rng) ? 1 : 0;
  }
  EXPECT_NEAR(agree / double(n), 0.75, 0.02);
  EXPECT_NEAR(uniform_agree / double(n), 0.5, 0.02);
}

TEST_F(LweToy, BatchedProjectionMatchesPlainLoop) {
  PublicMatrix pub(gen.a);
  const std::size_t count = 5;
  std::vector<std::int16_t> keys;
  std::vector<ModqVector> expect;
  for (std::size_t i = 0; i < count; ++i) {
    BitHashKey hk = bit_hash_kg(inst.context(), rng);
    keys.insert(keys.end(), hk.h.begin(), hk.h.end());
    ModqVector hp(p.n);
    for (std::size_t j = 0; j < p.n; ++j) {
      std::int64_t acc = 0;
      for (std::size_t r = 0; r < p.m; ++r) acc += hk.h[r] * static_cast<std::int64_t>(gen.a.at(r, j));
      acc %= static_cast<std::int64_t>(p.q);
      hp[j] = static_cast<std::uint64_t>(acc < 0 ? acc + static_cast<std::int64_t>(p.q) : acc);
    }
    expect.push_back(hp);
  }
  for (std::int64_t bound : {std::int64_t{96}, std::int64_t{1} << 45}) {  // GEMM path, integer path
    auto got = project_keys(p, pub, keys, count, bound);
    for (std::size_t i = 0; i < count; ++i) {
      EXPECT_EQ(ModqVector(got.begin() + i * p.n, got.begin() + (i + 1) * p.n), expect[i]) << bound;
    }
  }
}

TEST(Ecc, RepetitionVectors) {
  RepetitionCode code(3);
  EXPECT_EQ(code.encode(std::vector<std::uint8_t>{1}), (std::vector<std::uint8_t>{1, 1, 1}));
  EXPECT_EQ(code.decode(std::vector<std::uint8_t>{1, 0, 1}), std::vector<std::uint8_t>{1});
  EXPECT_THROW(RepetitionCode(4), std::invalid_argument);
  RepetitionCode big(63);
  Rng rng = Rng::from_seed(23);
  for (int i = 0; i < 200; ++i) {
    std::vector<std::uint8_t> k(8);
    for (auto& b : k) b = rng.bit() ? 1 : 0;
    auto cw = big.encode(k);
    for (std::size_t blk = 0; blk < k.size(); ++blk) {  // 31 flips per block: still a majority
      for (std::size_t j = 0; j < 31; ++j) cw[blk * 63 + j] ^= 1;
    }
    ASSERT_EQ(big.decode(cw), k);
  }
}

// Exact Pr[Bin(n, 1/4) > n/2] as a GMP rational.
double oracle_tail_quarter(unsigned n) {
  mpz_class num = 0;
  for (unsigned k = n / 2 + 1; k <= n; ++k) {
    mpz_class c, three;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    mpz_ui_pow_ui(three.get_mpz_t(), 3, n - k);
    num += c * three;
  }
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 4, n);
  return mpq_class(num, den).get_d();
}

TEST(Ecc, BinomialTailMatchesExactOracle) {
  for (unsigned rep : {3u, 31u, 63u, 127u}) {
    const double exact = oracle_tail_quarter(rep);
    EXPECT_NEAR(static_cast<double>(repetition_block_failure(rep, 0.25L)), exact, 1e-9 * exact) << rep;
  }
  EXPECT_LE(oracle_tail_quarter(127), 1.3e-7);
}

TEST_F(LweToy, FullSphfCorrectnessAndKeyShape) {
  auto [sigma, tds] = inst.sample_sigma(sphf::SigmaMode::kS0, rng);
  int ok = 0;
  const int n = 200;
  for (int i = 0; i < n; ++i) {
    auto [x, w] = inst.wordgen_l(sigma, rng);
    auto hk = inst.hash_kg(sigma, rng);
    auto hp = inst.proj_kg(sigma, hk, x, rng);
    ASSERT_EQ(hk.k_slots.size(), p.k_amp);
    ASSERT_EQ(hp.hp.size(), p.k_amp * p.ell * p.n);
    ASSERT_EQ(hp.t_mask.size(), p.k_amp * p.ell);
    ok += inst.hash(sigma, hk, x) == inst.proj_hash(sigma, hp, x, w, rng) ? 1 : 0;
  }
  EXPECT_GE(ok, n * 99 / 100);
}

TEST_F(LweToy, SingleAmpSlotReducesToOneWord) {
  LweSphf one(LweParams::make("toy-k1", p.n, p.q, 1.0, 1.0, 1.0, p.s_hk, p.kappa, p.rep, 1));
  auto [sigma, tds] = one.sample_sigma(sphf::SigmaMode::kS0, rng);
  int ok = 0;
  for (int i = 0; i < 100; ++i) {
    auto [x, w] = one.wordgen_l(sigma, rng);
    ASSERT_EQ(x.parts.size(), 1u);
    auto hk = one.hash_kg(sigma, rng);
    ASSERT_EQ(one.hash(sigma, hk, x), bits_to_bytes(hk.k_slots[0]));
    ok += one.hash(sigma, hk, x) == one.proj_hash(sigma, one.proj_kg(sigma, hk, x, rng), x, w, rng) ? 1 : 0;
  }
  EXPECT_GE(ok, 99);
}

TEST_F(LweToy, ReplacedComponentBreaksAgreement) {
  auto [sigma, tds] = inst.sample_sigma(sphf::SigmaMode::kS0, rng);
  int hits = 0;
  const int n = 200;
  for (int i = 0; i < n; ++i) {
    auto [x, w] = inst.wordgen_l(sigma, rng);
    AmpWord bad = x;
    bad.parts[i % p.k_amp] = uniform_vector(p.m, p.q, rng);
    auto hk = inst.hash_kg(sigma, rng);
    hits += inst.hash(sigma, hk, bad) == inst.proj_hash(sigma, inst.proj_kg(sigma, hk, bad, rng), bad, w, rng) ? 1 : 0;
  }
  EXPECT_LE(hits, n / 20);  // 2^-8 plus decoding noise
}

TEST_F(LweToy, ChangedComponentFlipsHalfTheMask) {
  auto [sigma, tds] = inst.sample_sigma(sphf::SigmaMode::kS0, rng);
  auto [x, w] = inst.wordgen_l(sigma, rng);
  AmpWord y = x;
  y.parts[0] = uniform_vector(p.m, p.q, rng);
  std::size_t differ = 0, total = 0;
  for (int i = 0; i < 20; ++i) {
    auto hk = inst.hash_kg(sigma, rng);
    auto a = inst.proj_kg(sigma, hk, x, rng);
    auto b = inst.proj_kg(sigma, hk, y, rng);
    EXPECT_EQ(a.hp, b.hp);
    for (std::size_t k = 0; k < p.ell; ++k) differ += a.t_mask[k] != b.t_mask[k];
    total += p.ell;
  }
  EXPECT_NEAR(differ / double(total), 0.5, 0.03);
}

TEST_F(LweToy, OutputKeyIsUniform) {
  auto [sigma, tds] = inst.sample_sigma(sphf::SigmaMode::kS0, rng);
  AmpWord x = inst.wordgen_x(sigma, rng);
  std::size_t ones = 0, bits = 0;
  for (int i = 0; i < 1000; ++i) {
    for (auto b : bytes_to_bits(inst.hash(sigma, inst.hash_kg(sigma, rng), x))) ones += b;
    bits += p.kappa;
  }
  EXPECT_NEAR(ones / double(bits), 0.5, 0.02);
  auto k1 = inst.hash_kg(sigma, rng), k2 = inst.hash_kg(sigma, rng);
  EXPECT_NE(k1.key_seed, k2.key_seed);
}

TEST_F(LweToy, WordtestAndComplement) {
  auto [sigma, td] = inst.sample_sigma(sphf::SigmaMode::kS1, rng);
  auto [rho, tdr] = inst.sample_rho(sphf::RhoMode::kR0, sigma, rng);
  int outside = 0;
  for (int i = 0; i < 1000; ++i) {
    auto [x, w] = inst.wordgen_l(sigma, rng);
    ASSERT_FALSE(inst.wordtest(sigma, *td, x));
    ASSERT_TRUE(inst.witness_valid(sigma, x, w));
    ASSERT_TRUE(inst.wordtest(sigma, *td, inst.wordgen_x(sigma, rng)));
    AmpWord other = inst.complement(rho, x);
    outside += inst.wordtest(sigma, *td, other) ? 1 : 0;
    ASSERT_EQ(inst.complement(rho, other), x);
  }
  EXPECT_GE(outside, 999);
}

TEST_F(LweToy, CrsModesAreConsistent) {
  for (auto s : {sphf::SigmaMode::kS0, sphf::SigmaMode::kS1}) {
    for (auto r : {sphf::RhoMode::kR0, sphf::RhoMode::kR1, sphf::RhoMode::kR1prime}) {
      auto [sigma, tds] = inst.sample_sigma(s, rng);
      auto [rho, tdr] = inst.sample_rho(r, sigma, rng);
      sphf::Crs<LweSphf> crs{sigma, rho, s, r, tds, tdr};
      EXPECT_TRUE(sphf::check_crs_consistency(inst, crs));
    }
  }
}

TEST_F(LweToy, RhoModesHaveMatchingMoments) {
  auto [sigma, tds] = inst.sample_sigma(sphf::SigmaMode::kS0, rng);
  for (auto r : {sphf::RhoMode::kR0, sphf::RhoMode::kR1, sphf::RhoMode::kR1prime}) {
    double sum = 0, sq = 0, n = 0;
    for (int i = 0; i < 20; ++i) {
      auto [rho, td] = inst.sample_rho(r, sigma, rng);
      for (const auto& part : rho.parts) {
        for (auto v : part) {
          const double x = static_cast<double>(v) / static_cast<double>(p.q);
          sum += x;
          sq += x * x;
          n += 1;
        }
      }
    }
    EXPECT_NEAR(sum / n, 0.5, 0.02);
    EXPECT_NEAR(sq / n - (sum / n) * (sum / n), 1.0 / 12, 0.01);
  }
}

TEST_F(LweToy, CodecsRoundTripAndReject) {
  auto [sigma, tds] = inst.sample_sigma(sphf::SigmaMode::kS0, rng);
  AmpWord x = inst.wordgen_x(sigma, rng);
  EXPECT_EQ(inst.decode_word(inst.encode_word(x)), x);
  EXPECT_EQ(inst.encode_word(x).size(), 16 + p.k_amp * p.m * p.entry_bytes());
  EXPECT_EQ(inst.decode_sigma(inst.encode_sigma(sigma)), sigma);
  auto hk = inst.hash_kg(sigma, rng);
  auto hp = inst.proj_kg(sigma, hk, x, rng);
  EXPECT_EQ(inst.decode_proj_key(inst.encode_proj_key(hp)), hp);

  Bytes enc = inst.encode_word(x);
  enc[0] ^= 1;
  EXPECT_THROW(inst.decode_word(enc), DecodeError);
  enc[0] ^= 1;
  enc[16] = 0xff;  // first entry little-endian: 0x..ff with a 2-byte width
  enc[17] = 0xff;
  EXPECT_THROW(inst.decode_word(enc), DecodeError);
  EXPECT_THROW(inst.decode_word(Bytes(enc.begin(), enc.end() - 1)), DecodeError);

  LweSphf other = LweSphf::preset("test");
  EXPECT_THROW(other.decode_word(inst.encode_word(x)), DecodeError);
}

TEST_F(LweToy, MaskRequiresKappaBytes) {
  EXPECT_TRUE(inst.message_length_ok(p.kappa / 8));
  EXPECT_FALSE(inst.message_length_ok(p.kappa / 8 + 1));
  EXPECT_THROW(inst.mask(Bytes(p.kappa / 8), p.kappa / 8 + 1), std::invalid_argument);
}

}  // namespace
}  // namespace gzot::lwe
