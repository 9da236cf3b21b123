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

#ifndef GZOT_LWE_SPHF_HPP_
#define GZOT_LWE_SPHF_HPP_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gzot/common/bytes.hpp"
#include "gzot/common/errors.hpp"
#include "gzot/common/rng.hpp"
#include "gzot/common/sha256.hpp"
#include "gzot/lwe/bit_sphf.hpp"
#include "gzot/lwe/ecc.hpp"
#include "gzot/lwe/encryption.hpp"
#include "gzot/lwe/params.hpp"
#include "gzot/lwe/trapdoor.hpp"
#include "gzot/sphf/crs.hpp"
#include "gzot/sphf/mask.hpp"

namespace gzot::lwe {

/// k_amp-tuple of ciphertexts. Also the shape of rho.
struct AmpWord {
  std::vector<ModqVector> parts;
  friend bool operator==(const AmpWord&, const AmpWord&) = default;
};

struct LweSigma {
  std::shared_ptr<const PublicMatrix> pub;
  [[nodiscard]] const ModqMatrix& a() const { return pub->matrix(); }
  friend bool operator==(const LweSigma& x, const LweSigma& y) { return x.a() == y.a(); }
};

struct LweSigmaTrapdoor {
  std::shared_ptr<const Trapdoor> t;
};

/// HK = ({hk_{j,i}}, {K_j}). The ell * k_amp bit keys expand from one seed, and
/// K = XOR_j K_j. Each K_j is kappa bits stored as 0/1.
struct FullHashKey {
  Digest256 key_seed{};
  std::vector<std::vector<std::uint8_t>> k_slots;
};

/// HP = ({hp_{j,i}}, {T_j}). hp is k_amp * ell * n entries (slot-major), and T
/// is k_amp * ell bits with T_j = ECC(K_j) xor S_j.
struct FullProjKey {
  std::vector<std::uint64_t> hp;
  std::vector<std::uint8_t> t_mask;
  friend bool operator==(const FullProjKey&, const FullProjKey&) = default;
};

/// Hash function with grey zone over Micciancio-Peikert style ciphertexts.
///
/// Bit level: hk = h <- D_{Z,s}^m, hp = A^t h, Hash = R(<h, c>),
/// ProjHash = R(<hp, s>). These agree with probability ~3/4 on honest words.
///
/// Full level: each amp slot j runs ell bit instances on its component c_j,
/// S_j = (R(<h_{j,i}, c_j>))_i, and publishes T_j = ECC(K_j) xor S_j. The
/// holder of the witness recomputes S'_j and decodes K'_j. The output key is
/// XOR_j K_j, so one smooth component is enough to hide it, and correctness
/// needs every component to be honest.
///
///   L  = tuples where every component encrypts 0 with noise <= B
///   L' = tuples where some component does not decrypt to 0 (1 or bottom)
class LweSphf {
 public:
  static constexpr std::uint8_t kTag = 2;

  using Sigma = LweSigma;
  using SigmaTrapdoor = LweSigmaTrapdoor;
  using Rho = AmpWord;
  using Word = AmpWord;
  using Witness = std::vector<LweWitness>;
  using RhoTrapdoor = sphf::RhoTrapdoor<Word, Witness>;
  using HashKey = FullHashKey;
  using ProjKey = FullProjKey;
  using HashValue = Bytes;

  explicit LweSphf(LweParams params)
      : ctx_(std::make_shared<const LweContext>(std::move(params))),
        ecc_(ctx_->params().rep),
        digest_(ctx_->params().digest()) {}

  static LweSphf preset(std::string_view name) { return LweSphf(LweParams::preset(name)); }

  [[nodiscard]] const LweParams& params() const { return ctx_->params(); }
  [[nodiscard]] const LweContext& context() const { return *ctx_; }
  [[nodiscard]] const RepetitionCode& ecc() const { return ecc_; }
  [[nodiscard]] std::string_view preset_name() const { return params().name; }

  // ---- CRS samplers ----

  /// Always runs trapgen; the trapdoor is kept only in S1 mode.
  std::pair<Sigma, std::optional<SigmaTrapdoor>> sample_sigma(sphf::SigmaMode mode, Rng& rng) const {
    TrapGenResult gen = trapgen(params(), rng);
    Sigma sigma{std::make_shared<const PublicMatrix>(std::move(gen.a))};
    if (mode == sphf::SigmaMode::kS1) {
      return {std::move(sigma), SigmaTrapdoor{std::make_shared<const Trapdoor>(std::move(gen.trapdoor))}};
    }
    return {std::move(sigma), std::nullopt};
  }

  std::pair<Rho, std::optional<RhoTrapdoor>> sample_rho(sphf::RhoMode mode, const Sigma& sigma,
                                                        Rng& rng) const {
    const auto& p = params();
    if (mode == sphf::RhoMode::kR0) return {wordgen_x(sigma, rng), std::nullopt};

    // R1: per slot, sum of two encryptions of 0 (witnesses kept).
    // R1prime: per slot, sum of two encryptions of 1.
    const unsigned mu = mode == sphf::RhoMode::kR1 ? 0u : 1u;
    Rho rho;
    RhoTrapdoor td;
    Witness w, w_prime;
    for (std::size_t j = 0; j < p.k_amp; ++j) {
      auto [c, wc] = lwe_encrypt(*ctx_, sigma.a(), mu, rng);
      auto [d, wd] = lwe_encrypt(*ctx_, sigma.a(), mu, rng);
      rho.parts.push_back(vec_add(c, d, p.q));
      td.x.parts.push_back(std::move(c));
      td.x_prime.parts.push_back(std::move(d));
      w.push_back(std::move(wc));
      w_prime.push_back(std::move(wd));
    }
    if (mode == sphf::RhoMode::kR1) {
      td.w = std::move(w);
      td.w_prime = std::move(w_prime);
    }
    return {std::move(rho), std::move(td)};
  }

  [[nodiscard]] bool sigma_trapdoor_valid(const Sigma& sigma, const SigmaTrapdoor& td) const {
    if (!td.t || td.t->rows() != params().gadget_rows() || td.t->cols() != params().m_bar) return false;
    return apply_to_columns(*td.t, sigma.a(), params().q) == gadget_matrix(params().n, params().q);
  }

  // ---- words ----

  std::pair<Word, Witness> wordgen_l(const Sigma& sigma, Rng& rng) const {
    Word x;
    Witness w;
    for (std::size_t j = 0; j < params().k_amp; ++j) {
      auto [c, wc] = lwe_encrypt(*ctx_, sigma.a(), 0, rng);
      x.parts.push_back(std::move(c));
      w.push_back(std::move(wc));
    }
    return {std::move(x), std::move(w)};
  }

  Word wordgen_x(const Sigma&, Rng& rng) const {
    Word x;
    for (std::size_t j = 0; j < params().k_amp; ++j) x.parts.push_back(uniform_vector(params().m, params().q, rng));
    return x;
  }

  /// True iff some component decrypts to 1 or to bottom.
  [[nodiscard]] bool wordtest(const Sigma& sigma, const SigmaTrapdoor& td, const Word& x) const {
    for (const auto& c : x.parts) {
      auto mu = lwe_decrypt(params(), sigma.a(), *td.t, c);
      if (!mu || *mu != 0) return true;
    }
    return false;
  }

  [[nodiscard]] bool witness_valid(const Sigma& sigma, const Word& x, const Witness& w) const {
    if (x.parts.size() != params().k_amp || w.size() != params().k_amp) return false;
    for (std::size_t j = 0; j < params().k_amp; ++j) {
      if (!witness_matches(params(), sigma.a(), x.parts[j], 0, w[j])) return false;
    }
    return true;
  }

  /// x'_j = rho_j - x_j.
  [[nodiscard]] Word complement(const Rho& rho, const Word& x) const {
    Word out;
    for (std::size_t j = 0; j < rho.parts.size(); ++j) out.parts.push_back(vec_sub(rho.parts[j], x.parts[j], params().q));
    return out;
  }

  // ---- hash function ----

  HashKey hash_kg(const Sigma&, Rng& rng) const {
    HashKey hk;
    hk.key_seed = rng.seed_material();
    for (std::size_t j = 0; j < params().k_amp; ++j) {
      std::vector<std::uint8_t> k(params().kappa);
      for (auto& b : k) b = rng.bit() ? 1 : 0;
      hk.k_slots.push_back(std::move(k));
    }
    return hk;
  }

  /// Stream of the bit keys hk_{j,0}, hk_{j,1}, ... for one amp slot.
  [[nodiscard]] Rng slot_key_stream(const HashKey& hk, std::size_t slot) const {
    return Rng(Sha256().update("gzot/lwe/hk/v1").update(hk.key_seed).update_u64(slot).finish());
  }

  /// Bit key hk_{j,i}, re-expanded from the key seed. Linear in i.
  [[nodiscard]] BitHashKey bit_key(const HashKey& hk, std::size_t slot, std::size_t index) const {
    Rng stream = slot_key_stream(hk, slot);
    BitHashKey key;
    for (std::size_t i = 0; i <= index; ++i) key = bit_hash_kg(*ctx_, stream);
    return key;
  }

  ProjKey proj_kg(const Sigma& sigma, const HashKey& hk, const Word& x, Rng& rng) const {
    const auto& p = params();
    if (x.parts.size() != p.k_amp) throw std::invalid_argument("proj_kg: word arity mismatch");
    ProjKey out;
    out.hp.resize(p.k_amp * p.ell * p.n);
    out.t_mask.resize(p.k_amp * p.ell);
    constexpr std::size_t kChunk = 128;
    std::vector<std::int16_t> block;
    const auto& sampler = ctx_->key_sampler();
    for (std::size_t j = 0; j < p.k_amp; ++j) {
      Rng stream = slot_key_stream(hk, j);
      std::vector<std::uint8_t> s(p.ell);
      for (std::size_t start = 0; start < p.ell; start += kChunk) {
        const std::size_t count = std::min(kChunk, p.ell - start);
        block.resize(count * p.m);
        for (std::size_t i = 0; i < count; ++i) {
          std::span<std::int16_t> h(block.data() + i * p.m, p.m);
          for (auto& v : h) v = static_cast<std::int16_t>(sampler(stream));
          s[start + i] = static_cast<std::uint8_t>(prob_round(inner_small<std::int16_t>(h, x.parts[j], p.q), p.q, rng));
        }
        auto hp = project_keys(p, *sigma.pub, block, count, ctx_->key_sampler().tail_cut());
        std::copy(hp.begin(), hp.end(), out.hp.begin() + static_cast<std::ptrdiff_t>((j * p.ell + start) * p.n));
      }
      auto code = ecc_.encode(hk.k_slots[j]);
      for (std::size_t i = 0; i < p.ell; ++i) out.t_mask[j * p.ell + i] = code[i] ^ s[i];
    }
    return out;
  }

  /// Returns K = XOR_j K_j; the word is not consulted.
  [[nodiscard]] HashValue hash(const Sigma&, const HashKey& hk, const Word&) const {
    std::vector<std::uint8_t> k(params().kappa, 0);
    for (const auto& slot : hk.k_slots) {
      for (std::size_t b = 0; b < k.size(); ++b) k[b] ^= slot[b];
    }
    return bits_to_bytes(k);
  }

  /// K' = XOR_j ECC^{-1}(T_j xor S'_j) with S'_j,i = R(<hp_{j,i}, s_j>).
  HashValue proj_hash(const Sigma&, const ProjKey& hp, const Word&, const Witness& w, Rng& rng) const {
    const auto& p = params();
    if (w.size() != p.k_amp || hp.hp.size() != p.k_amp * p.ell * p.n || hp.t_mask.size() != p.k_amp * p.ell) {
      throw std::invalid_argument("proj_hash: shape mismatch");
    }
    std::vector<std::uint8_t> k(p.kappa, 0);
    std::vector<std::uint8_t> noisy(p.ell);
    for (std::size_t j = 0; j < p.k_amp; ++j) {
      for (std::size_t i = 0; i < p.ell; ++i) {
        std::span<const std::uint64_t> hp_i(hp.hp.data() + (j * p.ell + i) * p.n, p.n);
        noisy[i] = hp.t_mask[j * p.ell + i] ^ static_cast<std::uint8_t>(bit_proj_hash(p, hp_i, w[j].s, rng));
      }
      auto decoded = ecc_.decode(noisy);
      for (std::size_t b = 0; b < k.size(); ++b) k[b] ^= decoded[b];
    }
    return bits_to_bytes(k);
  }

  /// K is already kappa bits, so messages must be exactly kappa/8 bytes.
  [[nodiscard]] sphf::MaskBytes mask(const HashValue& value, std::size_t nbytes) const {
    if (nbytes != value.size()) {
      throw std::invalid_argument("lwe mask: messages must be " + std::to_string(value.size()) + " bytes");
    }
    return sphf::MaskBytes(value);
  }

  [[nodiscard]] bool message_length_ok(std::size_t nbytes) const { return nbytes == params().kappa_bytes(); }

  // ---- codecs: 16-byte params digest, then little-endian fixed-width entries ----

  [[nodiscard]] Bytes encode_word(const Word& x) const { return encode_parts(x.parts); }
  [[nodiscard]] Word decode_word(std::span<const std::uint8_t> data) const {
    return Word{decode_parts(data, params().k_amp, params().m)};
  }
  [[nodiscard]] Bytes encode_rho(const Rho& rho) const { return encode_word(rho); }
  [[nodiscard]] Rho decode_rho(std::span<const std::uint8_t> data) const { return decode_word(data); }

  [[nodiscard]] Bytes encode_sigma(const Sigma& sigma) const {
    ByteWriter w;
    w.raw(digest_);
    put_entries(w, sigma.a().data());
    return std::move(w).take();
  }

  [[nodiscard]] Sigma decode_sigma(std::span<const std::uint8_t> data) const {
    ByteReader r(data);
    check_digest(r);
    ModqMatrix a(params().m, params().n);
    get_entries(r, a.data());
    r.expect_end();
    return Sigma{std::make_shared<const PublicMatrix>(std::move(a))};
  }

  [[nodiscard]] Bytes encode_proj_key(const ProjKey& hp) const {
    ByteWriter w;
    w.raw(digest_);
    put_entries(w, hp.hp);
    w.raw(bits_to_bytes(hp.t_mask));
    return std::move(w).take();
  }

  [[nodiscard]] ProjKey decode_proj_key(std::span<const std::uint8_t> data) const {
    const auto& p = params();
    ByteReader r(data);
    check_digest(r);
    ProjKey hp;
    hp.hp.resize(p.k_amp * p.ell * p.n);
    get_entries(r, hp.hp);
    const std::size_t nbits = p.k_amp * p.ell;
    auto packed = r.take((nbits + 7) / 8);
    auto bits = bytes_to_bits(packed);
    hp.t_mask.assign(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(nbits));
    if (std::any_of(bits.begin() + static_cast<std::ptrdiff_t>(nbits), bits.end(), [](auto b) { return b != 0; })) {
      throw DecodeError("lwe proj key: nonzero padding bits");
    }
    r.expect_end();
    return hp;
  }

 private:
  void put_entries(ByteWriter& w, std::span<const std::uint64_t> entries) const {
    const std::size_t width = params().entry_bytes();
    Bytes buf(entries.size() * width);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      for (std::size_t b = 0; b < width; ++b) buf[i * width + b] = static_cast<std::uint8_t>(entries[i] >> (8 * b));
    }
    w.raw(buf);
  }

  void get_entries(ByteReader& r, std::span<std::uint64_t> out) const {
    const std::size_t width = params().entry_bytes();
    auto raw = r.take(out.size() * width);
    for (std::size_t i = 0; i < out.size(); ++i) {
      std::uint64_t v = 0;
      for (std::size_t b = 0; b < width; ++b) v |= std::uint64_t{raw[i * width + b]} << (8 * b);
      if (v >= params().q) throw DecodeError("lwe: entry not reduced mod q");
      out[i] = v;
    }
  }

  void check_digest(ByteReader& r) const {
    auto d = r.take(digest_.size());
    if (!std::equal(d.begin(), d.end(), digest_.begin())) throw DecodeError("lwe: parameter digest mismatch");
  }

  [[nodiscard]] Bytes encode_parts(const std::vector<ModqVector>& parts) const {
    ByteWriter w;
    w.raw(digest_);
    for (const auto& v : parts) put_entries(w, v);
    return std::move(w).take();
  }

  [[nodiscard]] std::vector<ModqVector> decode_parts(std::span<const std::uint8_t> data, std::size_t count,
                                                     std::size_t len) const {
    ByteReader r(data);
    check_digest(r);
    std::vector<ModqVector> parts(count, ModqVector(len));
    for (auto& v : parts) get_entries(r, v);
    r.expect_end();
    return parts;
  }

  std::shared_ptr<const LweContext> ctx_;
  RepetitionCode ecc_;
  std::array<std::uint8_t, 16> digest_;
};

}  // namespace gzot::lwe

#endif  // GZOT_LWE_SPHF_HPP_
