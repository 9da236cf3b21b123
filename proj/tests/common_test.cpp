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


#include <openssl/sha.h>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "gzot/common/bytes.hpp"
#include "gzot/common/errors.hpp"
#include "gzot/common/rng.hpp"
#include "gzot/common/sha256.hpp"
#include "gzot/sphf/mask.hpp"

namespace gzot {
namespace {

TEST(Hex, RoundTrip) {
  Bytes b{0x00, 0x7f, 0x80, 0xff};
  EXPECT_EQ(to_hex(b), "007f80ff");
  EXPECT_EQ(from_hex("007F80fF"), b);
  EXPECT_THROW(from_hex("abc"), DecodeError);
  EXPECT_THROW(from_hex("zz"), DecodeError);
}

TEST(ByteIo, WriterReaderRoundTrip) {
  ByteWriter w;
  w.u8(7);
  w.u32be(0x01020304);
  w.prefixed(Bytes{9, 8});
  Bytes out = std::move(w).take();
  EXPECT_EQ(out, (Bytes{7, 1, 2, 3, 4, 0, 0, 0, 2, 9, 8}));
  ByteReader r(out);
  EXPECT_EQ(r.u8(), 7);
  EXPECT_EQ(r.u32be(), 0x01020304u);
  EXPECT_EQ(r.prefixed(), (Bytes{9, 8}));
  EXPECT_NO_THROW(r.expect_end());
}

TEST(ByteIo, TruncationThrows) {
  Bytes data{0, 0, 0, 5, 1, 2};
  ByteReader r(data);
  EXPECT_THROW(r.prefixed(), DecodeError);
  ByteReader r2(data);
  r2.u8();
  EXPECT_THROW(r2.expect_end(), DecodeError);
}

TEST(Bits, MsbFirst) {
  Bytes b{0xA0, 0x01};
  auto bits = bytes_to_bits(b);
  ASSERT_EQ(bits.size(), 16u);
  EXPECT_EQ(bits[0], 1);
  EXPECT_EQ(bits[1], 0);
  EXPECT_EQ(bits[2], 1);
  EXPECT_EQ(bits[15], 1);
  EXPECT_EQ(bits_to_bytes(bits), b);
}

TEST(Sha256, KnownVector) {
  EXPECT_EQ(to_hex(Sha256().update("abc").finish()),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

Bytes oracle_kdf(const std::string& label, const Bytes& input, std::size_t len) {
  Bytes out;
  for (std::uint32_t i = 0; out.size() < len; ++i) {
    Bytes msg{static_cast<std::uint8_t>(i >> 24), static_cast<std::uint8_t>(i >> 16),
              static_cast<std::uint8_t>(i >> 8), static_cast<std::uint8_t>(i)};
    msg.insert(msg.end(), label.begin(), label.end());
    msg.insert(msg.end(), input.begin(), input.end());
    unsigned char d[SHA256_DIGEST_LENGTH];
    SHA256(msg.data(), msg.size(), d);
    out.insert(out.end(), d, d + SHA256_DIGEST_LENGTH);
  }
  out.resize(len);
  return out;
}

TEST(Kdf, MatchesCounterModeOracle) {
  Bytes input{1, 2, 3};
  for (std::size_t len : {1u, 16u, 32u, 33u, 100u}) {
    EXPECT_EQ(kdf_expand("label", input, len), oracle_kdf("label", input, len)) << len;
  }
  EXPECT_NE(kdf_expand("a", input, 32), kdf_expand("b", input, 32));
}

TEST(Rng, DeterministicPerSeedAndStream) {
  Rng a = Rng::from_seed(42, 0), b = Rng::from_seed(42, 0), c = Rng::from_seed(42, 1);
  EXPECT_EQ(a(), b());
  Rng d = Rng::from_seed(42, 0);
  d();
  EXPECT_NE(d(), c());
}

TEST(Rng, UniformInRangeAndUnbiased) {
  Rng r = Rng::from_seed(7);
  std::vector<int> hist(10);
  for (int i = 0; i < 100000; ++i) {
    auto v = r.uniform(10);
    ASSERT_LT(v, 10u);
    ++hist[v];
  }
  for (int h : hist) EXPECT_NEAR(h, 10000, 500);
  double sum = 0;
  for (int i = 0; i < 100000; ++i) {
    double u = r.unit();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.005);
}

TEST(Rng, ForkedStreamsDiffer) {
  Rng r = Rng::from_seed(1);
  Rng f1 = r.fork(1), f2 = r.fork(1);
  EXPECT_NE(f1.bytes(16), f2.bytes(16));
}

TEST(Mask, XorByHand) {
  sphf::MaskBytes a(Bytes{0xA5}), b(Bytes{0x5A});
  EXPECT_EQ(sphf::xor_mask(a, b).bytes(), Bytes{0xFF});
  EXPECT_EQ(sphf::xor_mask(a, a).bytes(), Bytes{0x00});
  EXPECT_EQ(sphf::MaskBytes::from_hex("a55a").hex(), "a55a");
}

TEST(Mask, LengthMismatchThrows) {
  EXPECT_THROW(sphf::xor_mask(sphf::MaskBytes(Bytes{1}), sphf::MaskBytes(Bytes{1, 2})), std::invalid_argument);
}

}  // namespace
}  // namespace gzot
