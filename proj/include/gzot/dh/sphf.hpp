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

#ifndef GZOT_DH_SPHF_HPP_
#define GZOT_DH_SPHF_HPP_

#include <gmpxx.h>

#include <optional>
#include <string_view>
#include <utility>

#include "gzot/common/bytes.hpp"
#include "gzot/common/rng.hpp"
#include "gzot/common/sha256.hpp"
#include "gzot/dh/elgamal.hpp"
#include "gzot/dh/group.hpp"
#include "gzot/sphf/crs.hpp"
#include "gzot/sphf/mask.hpp"

namespace gzot::dh {

struct DhHashKey {
  mpz_class alpha;
  mpz_class beta;
};

/// Word-independent hash function over ElGamal ciphertexts.
///
///   L  = {(g^r, h^r)}                  encryptions of 1, witness r
///   L' = {c : Decrypt(beta, c) != 1}   everything else (no grey zone)
///   hk = (alpha, beta), hp = g^alpha h^beta
///   Hash(hk, (u, v)) = u^alpha v^beta, ProjHash(hp, x, r) = hp^r
///
/// sigma = h = g^beta for both sigma modes, so S0 and S1 have the same
/// distribution; S1 just keeps beta. The complement of x under
/// rho = (g^, h^) is rho / x, so that x * x' = rho.
class DhSphf {
 public:
  static constexpr std::uint8_t kTag = 1;

  using Sigma = GroupElement;
  using SigmaTrapdoor = mpz_class;
  using Rho = DhCiphertext;
  using Word = DhCiphertext;
  using Witness = mpz_class;
  using RhoTrapdoor = sphf::RhoTrapdoor<Word, Witness>;
  using HashKey = DhHashKey;
  using ProjKey = GroupElement;
  using HashValue = GroupElement;

  explicit DhSphf(GroupParams params) : group_(std::move(params)) {}
  static DhSphf preset(std::string_view name) { return DhSphf(GroupParams::preset(name)); }

  [[nodiscard]] const Group& group() const { return group_; }
  [[nodiscard]] std::string_view preset_name() const { return group_.params().name; }

  // ---- CRS samplers ----

  std::pair<Sigma, std::optional<SigmaTrapdoor>> sample_sigma(sphf::SigmaMode mode, Rng& rng) const {
    ElGamalKeys keys = eg_keygen(group_, rng);
    if (mode == sphf::SigmaMode::kS1) return {keys.h, keys.beta};
    return {keys.h, std::nullopt};
  }

  std::pair<Rho, std::optional<RhoTrapdoor>> sample_rho(sphf::RhoMode mode, const Sigma& h,
                                                        Rng& rng) const {
    switch (mode) {
      case sphf::RhoMode::kR0:
        return {Rho{group_.random_element(rng), group_.random_element(rng)}, std::nullopt};
      case sphf::RhoMode::kR1: {
        // rho = (g^t, h^t) encrypts 1; split it as enc(1; r) * enc(1; t - r).
        mpz_class t = group_.random_exponent(rng);
        Rho rho{group_.exp_g(t), group_.exp(h, t)};
        auto [x, r] = wordgen_l(h, rng);
        RhoTrapdoor td{x, complement(rho, x), r, group_.reduce_exponent(t - r)};
        return {rho, std::move(td)};
      }
      case sphf::RhoMode::kR1prime: {
        DhCiphertext a = eg_encrypt(group_, h, random_non_identity(rng), group_.random_exponent(rng));
        DhCiphertext b = eg_encrypt(group_, h, random_non_identity(rng), group_.random_exponent(rng));
        Rho rho = eg_combine(group_, a, b);
        return {rho, RhoTrapdoor{a, b, std::nullopt, std::nullopt}};
      }
    }
    throw std::logic_error("unreachable rho mode");
  }

  [[nodiscard]] bool sigma_trapdoor_valid(const Sigma& h, const SigmaTrapdoor& beta) const {
    return group_.exp_g(beta) == h;
  }

  // ---- words ----

  std::pair<Word, Witness> wordgen_l(const Sigma& h, Rng& rng) const {
    mpz_class r = group_.random_exponent(rng);
    return {word_for_witness(h, r), r};
  }

  [[nodiscard]] Word word_for_witness(const Sigma& h, const Witness& r) const {
    return eg_encrypt(group_, h, group_.one(), r);
  }

  Word wordgen_x(const Sigma&, Rng& rng) const {
    return {group_.random_element(rng), group_.random_element(rng)};
  }

  /// True iff x lies in L' (decrypts to something other than 1).
  [[nodiscard]] bool wordtest(const Sigma&, const SigmaTrapdoor& beta, const Word& x) const {
    return !(eg_decrypt(group_, beta, x) == group_.one());
  }

  [[nodiscard]] bool witness_valid(const Sigma& h, const Word& x, const Witness& r) const {
    return word_for_witness(h, r) == x;
  }

  [[nodiscard]] Word complement(const Rho& rho, const Word& x) const {
    return {group_.div(rho.c0, x.c0), group_.div(rho.c1, x.c1)};
  }

  // ---- hash function ----

  HashKey hash_kg(const Sigma&, Rng& rng) const {
    return {group_.random_exponent(rng), group_.random_exponent(rng)};
  }

  /// Word-independent: the word and the rng are ignored.
  ProjKey proj_kg(const Sigma& h, const HashKey& hk, const Word&, Rng&) const {
    return group_.mul(group_.exp_g(hk.alpha), group_.exp(h, hk.beta));
  }

  [[nodiscard]] HashValue hash(const Sigma&, const HashKey& hk, const Word& x) const {
    return group_.mul(group_.exp(x.c0, hk.alpha), group_.exp(x.c1, hk.beta));
  }

  /// hp^r. A witness that does not match x yields a well-formed but wrong
  /// value; nothing here detects it.
  HashValue proj_hash(const Sigma&, const ProjKey& hp, const Word&, const Witness& r, Rng&) const {
    return group_.exp(hp, r);
  }

  /// KDF(encode(H)) stretched to the message length.
  [[nodiscard]] sphf::MaskBytes mask(const HashValue& value, std::size_t nbytes) const {
    return sphf::MaskBytes(kdf_expand("gzot/dh/mask/v1", group_.encode(value), nbytes));
  }

  [[nodiscard]] bool message_length_ok(std::size_t nbytes) const { return nbytes > 0; }

  // ---- codecs ----

  [[nodiscard]] Bytes encode_word(const Word& x) const {
    Bytes out = group_.encode(x.c0);
    Bytes second = group_.encode(x.c1);
    out.insert(out.end(), second.begin(), second.end());
    return out;
  }

  [[nodiscard]] Word decode_word(std::span<const std::uint8_t> data) const {
    ByteReader r(data);
    Word x{group_.decode(r), group_.decode(r)};
    r.expect_end();
    return x;
  }

  [[nodiscard]] Bytes encode_proj_key(const ProjKey& hp) const { return group_.encode(hp); }

  [[nodiscard]] ProjKey decode_proj_key(std::span<const std::uint8_t> data) const {
    return decode_single(data);
  }

  [[nodiscard]] Bytes encode_sigma(const Sigma& h) const { return group_.encode(h); }
  [[nodiscard]] Sigma decode_sigma(std::span<const std::uint8_t> data) const {
    return decode_single(data);
  }

  [[nodiscard]] Bytes encode_rho(const Rho& rho) const { return encode_word(rho); }
  [[nodiscard]] Rho decode_rho(std::span<const std::uint8_t> data) const { return decode_word(data); }

 private:
  GroupElement random_non_identity(Rng& rng) const {
    for (;;) {
      GroupElement m = group_.random_element(rng);
      if (!(m == group_.one())) return m;
    }
  }

  [[nodiscard]] GroupElement decode_single(std::span<const std::uint8_t> data) const {
    ByteReader r(data);
    GroupElement x = group_.decode(r);
    r.expect_end();
    return x;
  }

  Group group_;
};

}  // namespace gzot::dh

#endif  // GZOT_DH_SPHF_HPP_
