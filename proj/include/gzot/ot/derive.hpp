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


#ifndef GZOT_OT_DERIVE_HPP_
#define GZOT_OT_DERIVE_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "gzot/common/errors.hpp"
#include "gzot/common/rng.hpp"
#include "gzot/common/sha256.hpp"
#include "gzot/ot/wire.hpp"
#include "gzot/sphf/crs.hpp"
#include "gzot/sphf/instantiation.hpp"

namespace gzot::ot {

inline constexpr std::string_view kCrsDomain = "gzot/crs/v1";

/// SHA-256(domain || tag || preset || sid). The modes are not hashed, so
/// every mode pair for one sid shares sigma, and S0/S1 differ only in
/// whether the trapdoor is kept.
inline Digest256 crs_seed(std::uint8_t tag, std::string_view preset, const SessionId& sid) {
  Sha256 h;
  h.update(kCrsDomain);
  h.update(std::span<const std::uint8_t>(&tag, 1));
  h.update_u64(preset.size());
  h.update(preset);
  h.update(sid);
  return h.finish();
}

/// (sigma, rho) from H(sid): sample_sigma then sample_rho on one stream.
template <sphf::Instantiation I>
sphf::Crs<I> derive_crs(const I& inst, const SessionId& sid, sphf::SigmaMode sigma_mode = sphf::SigmaMode::kS0,
                        sphf::RhoMode rho_mode = sphf::RhoMode::kR0) {
  Rng rng(crs_seed(I::kTag, inst.preset_name(), sid));
  auto [sigma, td_sigma] = inst.sample_sigma(sigma_mode, rng);
  auto [rho, td_rho] = inst.sample_rho(rho_mode, sigma, rng);
  return sphf::Crs<I>{std::move(sigma), std::move(rho), sigma_mode, rho_mode, std::move(td_sigma), std::move(td_rho)};
}

enum class InstTag : std::uint8_t { kDh = 1, kLwe = 2 };

inline InstTag parse_inst_tag(std::uint8_t tag) {
  if (tag == 1) return InstTag::kDh;
  if (tag == 2) return InstTag::kLwe;
  throw ConfigError("unknown instantiation tag " + std::to_string(tag));
}

inline InstTag parse_inst_name(std::string_view name) {
  if (name == "dh" || name == "DH" || name == "1") return InstTag::kDh;
  if (name == "lwe" || name == "LWE" || name == "2") return InstTag::kLwe;
  throw ConfigError("unknown instantiation: " + std::string(name));
}

inline std::string_view to_string(InstTag t) { return t == InstTag::kDh ? "dh" : "lwe"; }

}  // namespace gzot::ot

#endif  // GZOT_OT_DERIVE_HPP_
