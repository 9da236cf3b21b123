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


#include <cstdint>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "gzot/common/rng.hpp"
#include "gzot/dh/elgamal.hpp"
#include "gzot/dh/group.hpp"
#include "gzot/dh/sphf.hpp"
#include "gzot/sphf/crs.hpp"

namespace gzot::dh {
namespace {

// Plain square-and-multiply over machine words; shares no code with GMP.
std::uint64_t oracle_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::uint64_t u64(const GroupElement& x) { return x.value.get_ui(); }

class DhToy : public ::testing::Test {
 protected:
  DhSphf inst = DhSphf::preset("toy");
  const Group& grp = inst.group();
};

TEST_F(DhToy, ExponentiationMatchesOracle) {
  EXPECT_EQ(u64(grp.exp(GroupElement{2}, 5)), 9u);
  EXPECT_EQ(u64(grp.exp(GroupElement{8}, 5)), 16u);
  for (std::uint64_t b = 1; b < 23; ++b) {
    for (std::uint64_t e = 0; e < 30; ++e) {
      ASSERT_EQ(u64(grp.exp(GroupElement{b}, e)), oracle_pow(b, e % 11, 23));
    }
  }
}

TEST_F(DhToy, KeygenFromBeta) {
  ElGamalKeys k = eg_keygen_from(grp, 3);
  EXPECT_EQ(u64(k.h), 8u);
  EXPECT_FALSE(k.degenerate());
  EXPECT_TRUE(eg_keygen_from(grp, 0).degenerate());
}

TEST_F(DhToy, DistinctStreamsGiveDistinctKeysMostly) {
  int same = 0;
  for (int i = 0; i < 1000; ++i) {
    Rng a = Rng::from_seed(i, 0), b = Rng::from_seed(i, 1);
    same += eg_keygen(grp, a).beta == eg_keygen(grp, b).beta ? 1 : 0;
  }
  EXPECT_LT(same, 1000 * 3 / 11);  // collision rate 1/Q = 1/11
}

TEST_F(DhToy, EncryptDecryptVectors) {
  const GroupElement h{8};
  DhCiphertext c = eg_encrypt(grp, h, GroupElement{1}, 5);
  EXPECT_EQ(u64(c.c0), 9u);
  EXPECT_EQ(u64(c.c1), 16u);
  DhCiphertext c2 = eg_encrypt(grp, h, GroupElement{2}, 5);
  EXPECT_EQ(u64(c2.c0), 9u);
  EXPECT_EQ(u64(c2.c1), 9u);
  EXPECT_EQ(u64(eg_decrypt(grp, 3, DhCiphertext{GroupElement{9}, GroupElement{16}})), 1u);
}

TEST(DhTest, EncryptDecryptRoundTrip) {
  DhSphf inst = DhSphf::preset("test");
  const Group& grp = inst.group();
  Rng rng = Rng::from_seed(3);
  ElGamalKeys k = eg_keygen(grp, rng);
  for (int i = 0; i < 100; ++i) {
    GroupElement m = grp.random_element(rng);
    EXPECT_EQ(eg_decrypt(grp, k.beta, eg_encrypt(grp, k.h, m, grp.random_exponent(rng))), m);
  }
}

TEST(DhPresets, ValidateAndEncodeWidth) {
  for (const char* name : {"toy", "test", "demo"}) {
    GroupParams p = GroupParams::preset(name);
    EXPECT_NO_THROW(p.validate()) << name;
    Group grp(p);
    Rng rng = Rng::from_seed(1);
    GroupElement x = grp.random_element(rng);
    Bytes enc = grp.encode(x);
    EXPECT_EQ(enc.size(), p.element_bytes());
    ByteReader r(enc);
    EXPECT_EQ(grp.decode(r), x);
    EXPECT_EQ(GroupParams::deserialize(p.serialize()).p, p.p);
  }
  EXPECT_EQ(GroupParams::preset("test").element_bytes(), 17u);
  EXPECT_EQ(GroupParams::preset("demo").element_bytes(), 33u);
  EXPECT_THROW(GroupParams::preset("huge"), ConfigError);
}

TEST_F(DhToy, DecodeRejectsNonMembers) {
  // 5 is a non-residue mod 23, so it lies outside the order-11 subgroup.
  Bytes enc{5};
  ByteReader r(enc);
  EXPECT_THROW(grp.decode(r), DecodeError);
  Bytes zero{0};
  ByteReader r0(zero);
  EXPECT_THROW(grp.decode(r0), DecodeError);
}

TEST_F(DhToy, HashKeyCornerCases) {
  Rng rng = Rng::from_seed(1);
  auto [sigma, td] = inst.sample_sigma(sphf::SigmaMode::kS1, rng);
  auto [x, r] = inst.wordgen_l(sigma, rng);
  DhHashKey zero{0, 0};
  EXPECT_EQ(inst.proj_kg(sigma, zero, x, rng), grp.one());
  EXPECT_EQ(inst.hash(sigma, zero, inst.wordgen_x(sigma, rng)), grp.one());
  DhHashKey alpha_only{1, 0};
  EXPECT_EQ(inst.proj_kg(sigma, alpha_only, x, rng), grp.generator());
  EXPECT_EQ(inst.hash(sigma, alpha_only, x), x.c0);
  EXPECT_EQ(inst.proj_hash(sigma, grp.generator(), x, r, rng), x.c0);
}

TEST(DhSphfTest, CorrectnessOnLanguage) {
  DhSphf inst = DhSphf::preset("test");
  Rng rng = Rng::from_seed(5);
  auto [sigma, td] = inst.sample_sigma(sphf::SigmaMode::kS0, rng);
  for (int i = 0; i < 200; ++i) {
    auto [x, w] = inst.wordgen_l(sigma, rng);
    auto hk = inst.hash_kg(sigma, rng);
    auto hp = inst.proj_kg(sigma, hk, x, rng);
    ASSERT_EQ(inst.hash(sigma, hk, x), inst.proj_hash(sigma, hp, x, w, rng));
    ASSERT_TRUE(inst.witness_valid(sigma, x, w));
  }
}

TEST(DhSphfTest, SmoothnessWitnessIdentity) {
  DhSphf inst = DhSphf::preset("test");
  const Group& grp = inst.group();
  Rng rng = Rng::from_seed(6);
  auto [h, beta_sigma] = inst.sample_sigma(sphf::SigmaMode::kS1, rng);
  for (int i = 0; i < 200; ++i) {
    mpz_class r = grp.random_exponent(rng), r2 = grp.random_exponent(rng);
    auto hk = inst.hash_kg(h, rng);
    auto hp = inst.proj_kg(h, hk, {}, rng);
    // x = (g^r, h^r g^{r''}): H = H' * g^{r'' beta_hk}.
    DhSphf::Word x{grp.exp_g(r), grp.mul(grp.exp(h, r), grp.exp_g(r2))};
    EXPECT_EQ(inst.hash(h, hk, x), grp.mul(inst.proj_hash(h, hp, x, r, rng), grp.exp_g(r2 * hk.beta)));
    // x = (g^r, h^{r+r''}): H = H' * h^{r'' beta_hk}.
    DhSphf::Word y{grp.exp_g(r), grp.exp(h, r + r2)};
    EXPECT_EQ(inst.hash(h, hk, y), grp.mul(inst.proj_hash(h, hp, y, r, rng), grp.exp(h, r2 * hk.beta)));
  }
}

TEST_F(DhToy, SmoothnessFactorIsUniform) {
  // g^{r'' beta} for fixed r'' != 0 and uniform beta: chi-square over the 11 elements.
  Rng rng = Rng::from_seed(8);
  std::map<std::uint64_t, int> hist;
  const int n = 11000;
  for (int i = 0; i < n; ++i) hist[u64(grp.exp_g(mpz_class(3) * grp.random_exponent(rng)))]++;
  ASSERT_EQ(hist.size(), 11u);
  double chi2 = 0;
  for (auto& [k, c] : hist) chi2 += (c - 1000.0) * (c - 1000.0) / 1000.0;
  EXPECT_LT(chi2, 29.59);  // p = 0.001, 10 dof
}

TEST_F(DhToy, WordtestAndComplement) {
  Rng rng = Rng::from_seed(2);
  auto [sigma, beta] = inst.sample_sigma(sphf::SigmaMode::kS1, rng);
  int outside = 0;
  for (int i = 0; i < 10000; ++i) outside += inst.wordtest(sigma, *beta, inst.wordgen_x(sigma, rng)) ? 1 : 0;
  EXPECT_NEAR(outside / 10000.0, 10.0 / 11.0, 0.02);
  for (int i = 0; i < 100; ++i) {
    auto [x, w] = inst.wordgen_l(sigma, rng);
    EXPECT_FALSE(inst.wordtest(sigma, *beta, x));
    auto [rho, td] = inst.sample_rho(sphf::RhoMode::kR0, sigma, rng);
    DhSphf::Word y = inst.wordgen_x(sigma, rng);
    EXPECT_EQ(inst.complement(rho, inst.complement(rho, y)), y);
  }
}

TEST_F(DhToy, CrsModesAreConsistent) {
  for (auto s : {sphf::SigmaMode::kS0, sphf::SigmaMode::kS1}) {
    for (auto r : {sphf::RhoMode::kR0, sphf::RhoMode::kR1, sphf::RhoMode::kR1prime}) {
      Rng rng = Rng::from_seed(static_cast<int>(s) * 10 + static_cast<int>(r));
      auto [sigma, tds] = inst.sample_sigma(s, rng);
      auto [rho, tdr] = inst.sample_rho(r, sigma, rng);
      sphf::Crs<DhSphf> crs{sigma, rho, s, r, tds, tdr};
      EXPECT_TRUE(sphf::check_crs_consistency(inst, crs));
      if (r == sphf::RhoMode::kR1) {
        crs.td_rho->x_prime = crs.td_rho->x;
        EXPECT_FALSE(sphf::check_crs_consistency(inst, crs));
      }
    }
  }
}

TEST_F(DhToy, R1TrapdoorWordsSatisfyCorrectness) {
  Rng rng = Rng::from_seed(4);
  auto [sigma, tds] = inst.sample_sigma(sphf::SigmaMode::kS0, rng);
  auto [rho, td] = inst.sample_rho(sphf::RhoMode::kR1, sigma, rng);
  for (int i = 0; i < 50; ++i) {
    for (auto [x, w] : {std::pair{td->x, *td->w}, std::pair{td->x_prime, *td->w_prime}}) {
      auto hk = inst.hash_kg(sigma, rng);
      EXPECT_EQ(inst.hash(sigma, hk, x), inst.proj_hash(sigma, inst.proj_kg(sigma, hk, x, rng), x, w, rng));
    }
  }
}

TEST_F(DhToy, R0RhoDecomposesRarely) {
  Rng rng = Rng::from_seed(9);
  auto [sigma, beta] = inst.sample_sigma(sphf::SigmaMode::kS1, rng);
  int outside = 0;
  for (int i = 0; i < 10000; ++i) {
    auto [rho, td] = inst.sample_rho(sphf::RhoMode::kR0, sigma, rng);
    outside += inst.wordtest(sigma, *beta, rho) ? 1 : 0;
  }
  EXPECT_GE(outside / 10000.0, 1.0 - 2.0 / 11.0);
}

TEST_F(DhToy, CodecsRoundTripAndReject) {
  Rng rng = Rng::from_seed(10);
  auto [sigma, beta] = inst.sample_sigma(sphf::SigmaMode::kS0, rng);
  DhSphf::Word x = inst.wordgen_x(sigma, rng);
  EXPECT_EQ(inst.decode_word(inst.encode_word(x)), x);
  EXPECT_EQ(inst.decode_sigma(inst.encode_sigma(sigma)), sigma);
  Bytes enc = inst.encode_word(x);
  enc.push_back(0);
  EXPECT_THROW(inst.decode_word(enc), DecodeError);
  enc.resize(1);
  EXPECT_THROW(inst.decode_word(enc), DecodeError);
}

TEST_F(DhToy, MaskLengthFollowsRequest) {
  EXPECT_EQ(inst.mask(grp.generator(), 1).size(), 1u);
  EXPECT_EQ(inst.mask(grp.generator(), 100).size(), 100u);
  EXPECT_NE(inst.mask(grp.generator(), 16), inst.mask(grp.one(), 16));
  EXPECT_FALSE(inst.message_length_ok(0));
}

}  // namespace
}  // namespace gzot::dh
