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

#ifndef GZOT_SPHF_CRS_HPP_
#define GZOT_SPHF_CRS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gzot/common/bytes.hpp"
#include "gzot/common/errors.hpp"

namespace gzot::sphf {

/// How the sigma half of the CRS was sampled. S1 keeps the membership-test
/// trapdoor; S0 discards it. The public sigma distribution is the same.
enum class SigmaMode : std::uint8_t { kS0, kS1 };

/// How the rho half was sampled: uniformly (R0), as a combination of two
/// language words whose witnesses are kept (R1), or as a combination of two
/// words outside the language (R1prime).
enum class RhoMode : std::uint8_t { kR0, kR1, kR1prime };

inline std::string_view to_string(SigmaMode m) { return m == SigmaMode::kS0 ? "S0" : "S1"; }

inline std::string_view to_string(RhoMode m) {
  switch (m) {
    case RhoMode::kR0: return "R0";
    case RhoMode::kR1: return "R1";
    case RhoMode::kR1prime: return "R1prime";
  }
  return "?";
}

inline SigmaMode parse_sigma_mode(std::string_view s) {
  if (s == "S0") return SigmaMode::kS0;
  if (s == "S1") return SigmaMode::kS1;
  throw ConfigError("unknown sigma mode: " + std::string(s));
}

inline RhoMode parse_rho_mode(std::string_view s) {
  if (s == "R0") return RhoMode::kR0;
  if (s == "R1") return RhoMode::kR1;
  if (s == "R1prime" || s == "R1'") return RhoMode::kR1prime;
  throw ConfigError("unknown rho mode: " + std::string(s));
}

/// Trapdoor attached to rho: the two complementary words, plus their
/// witnesses in R1 mode. R1prime carries the words only.
template <class Word, class Witness>
struct RhoTrapdoor {
  Word x;
  Word x_prime;
  std::optional<Witness> w;
  std::optional<Witness> w_prime;
};

/// The common reference string (sigma, rho) with its mode tags. Trapdoors
/// are optional fields consumed only by extractors; serialize_public never
/// writes them.
template <class Inst>
struct Crs {
  typename Inst::Sigma sigma;
  typename Inst::Rho rho;
  SigmaMode sigma_mode = SigmaMode::kS0;
  RhoMode rho_mode = RhoMode::kR0;
  std::optional<typename Inst::SigmaTrapdoor> td_sigma;
  std::optional<typename Inst::RhoTrapdoor> td_rho;
};

/// True iff the mode tags, the trapdoor presence and the trapdoor contents
/// agree with each other.
template <class Inst>
bool check_crs_consistency(const Inst& inst, const Crs<Inst>& crs) {
  const bool want_td_sigma = crs.sigma_mode == SigmaMode::kS1;
  if (crs.td_sigma.has_value() != want_td_sigma) return false;
  const bool want_td_rho = crs.rho_mode != RhoMode::kR0;
  if (crs.td_rho.has_value() != want_td_rho) return false;

  if (crs.td_sigma && !inst.sigma_trapdoor_valid(crs.sigma, *crs.td_sigma)) return false;
  if (!crs.td_rho) return true;

  const auto& td = *crs.td_rho;
  if (!(inst.complement(crs.rho, td.x) == td.x_prime)) return false;

  if (crs.rho_mode == RhoMode::kR1) {
    if (!td.w || !td.w_prime) return false;
    return inst.witness_valid(crs.sigma, td.x, *td.w) &&
           inst.witness_valid(crs.sigma, td.x_prime, *td.w_prime);
  }
  // R1prime: words only, both outside the language when we can test it.
  if (td.w || td.w_prime) return false;
  if (crs.td_sigma) {
    return inst.wordtest(crs.sigma, *crs.td_sigma, td.x) &&
           inst.wordtest(crs.sigma, *crs.td_sigma, td.x_prime);
  }
  return true;
}

/// Public wire form: [1B instantiation tag][4B len][sigma][4B len][rho].
template <class Inst>
Bytes serialize_public(const Inst& inst, const Crs<Inst>& crs) {
  ByteWriter w;
  w.u8(Inst::kTag);
  w.prefixed(inst.encode_sigma(crs.sigma));
  w.prefixed(inst.encode_rho(crs.rho));
  return std::move(w).take();
}

/// Inverse of serialize_public. The result is tagged (S0, R0) and carries no
/// trapdoors, since none travel on the wire.
template <class Inst>
Crs<Inst> deserialize_public(const Inst& inst, std::span<const std::uint8_t> data) {
  ByteReader r(data);
  if (r.u8() != Inst::kTag) throw DecodeError("crs: instantiation tag mismatch");
  Crs<Inst> crs{inst.decode_sigma(r.prefixed()), inst.decode_rho(r.prefixed())};
  r.expect_end();
  return crs;
}

}  // namespace gzot::sphf

#endif  // GZOT_SPHF_CRS_HPP_
