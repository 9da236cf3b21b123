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

#ifndef GZOT_SPHF_INSTANTIATION_HPP_
#define GZOT_SPHF_INSTANTIATION_HPP_

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "gzot/common/bytes.hpp"
#include "gzot/common/rng.hpp"
#include "gzot/sphf/crs.hpp"
#include "gzot/sphf/mask.hpp"

namespace gzot::sphf {

/// A smooth projective hash function with grey zone, together with the CRS
/// samplers and codecs the OT protocol needs.
///
/// Words live in an ambient set X. The language L holds honest encryptions
/// of the neutral plaintext, and L' holds the words the sigma trapdoor
/// classifies as "outside". Correctness is only promised on L and smoothness
/// only on L'; words in neither set are the grey zone.
///
/// Rules every instantiation follows:
///  - proj_kg may look at the word; it is GL-style, so the word comes before
///    the key is projected.
///  - hash never sees a witness, and proj_hash never sees the hash key.
///  - complement(rho, complement(rho, x)) == x for every rho and x.
///  - for (x, w) from wordgen_l, hash(hk, x) equals proj_hash(proj_kg(hk, x),
///    x, w), always (DH) or with overwhelming probability (LWE).
///
/// Operations that need randomness take it as an explicit Rng, and all const
/// members are safe to call concurrently.
template <class I>
concept Instantiation = requires(const I& inst, Rng& rng, const typename I::Sigma& sigma,
                                 const typename I::Rho& rho, const typename I::Word& word,
                                 const typename I::Witness& witness,
                                 const typename I::SigmaTrapdoor& td_sigma,
                                 const typename I::HashKey& hk, const typename I::ProjKey& hp,
                                 const typename I::HashValue& hv,
                                 std::span<const std::uint8_t> bytes, std::size_t n) {
  { I::kTag } -> std::convertible_to<std::uint8_t>;
  { inst.preset_name() } -> std::convertible_to<std::string_view>;

  { inst.sample_sigma(SigmaMode::kS0, rng) }
      -> std::same_as<std::pair<typename I::Sigma, std::optional<typename I::SigmaTrapdoor>>>;
  { inst.sample_rho(RhoMode::kR0, sigma, rng) }
      -> std::same_as<std::pair<typename I::Rho, std::optional<typename I::RhoTrapdoor>>>;
  { inst.sigma_trapdoor_valid(sigma, td_sigma) } -> std::same_as<bool>;

  { inst.wordgen_l(sigma, rng) } -> std::same_as<std::pair<typename I::Word, typename I::Witness>>;
  { inst.wordgen_x(sigma, rng) } -> std::same_as<typename I::Word>;
  { inst.wordtest(sigma, td_sigma, word) } -> std::same_as<bool>;
  { inst.witness_valid(sigma, word, witness) } -> std::same_as<bool>;
  { inst.complement(rho, word) } -> std::same_as<typename I::Word>;

  { inst.hash_kg(sigma, rng) } -> std::same_as<typename I::HashKey>;
  { inst.proj_kg(sigma, hk, word, rng) } -> std::same_as<typename I::ProjKey>;
  { inst.hash(sigma, hk, word) } -> std::same_as<typename I::HashValue>;
  { inst.proj_hash(sigma, hp, word, witness, rng) } -> std::same_as<typename I::HashValue>;
  { inst.mask(hv, n) } -> std::same_as<MaskBytes>;
  { inst.message_length_ok(n) } -> std::same_as<bool>;

  { inst.encode_word(word) } -> std::same_as<Bytes>;
  { inst.decode_word(bytes) } -> std::same_as<typename I::Word>;
  { inst.encode_proj_key(hp) } -> std::same_as<Bytes>;
  { inst.decode_proj_key(bytes) } -> std::same_as<typename I::ProjKey>;
  { inst.encode_sigma(sigma) } -> std::same_as<Bytes>;
  { inst.decode_sigma(bytes) } -> std::same_as<typename I::Sigma>;
  { inst.encode_rho(rho) } -> std::same_as<Bytes>;
  { inst.decode_rho(bytes) } -> std::same_as<typename I::Rho>;
};

}  // namespace gzot::sphf

#endif  // GZOT_SPHF_INSTANTIATION_HPP_
