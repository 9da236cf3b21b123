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


#ifndef GZOT_HARNESS_DISPATCH_HPP_
#define GZOT_HARNESS_DISPATCH_HPP_

#include <cstddef>
#include <string>
#include <utility>

#include "gzot/common/errors.hpp"
#include "gzot/dh/sphf.hpp"
#include "gzot/harness/config.hpp"
#include "gzot/lwe/sphf.hpp"
#include "gzot/ot/derive.hpp"
#include "gzot/sphf/mask.hpp"

namespace gzot::harness {

/// Calls fn with the instantiation named by cfg.inst at cfg.preset.
template <class Fn>
decltype(auto) with_instantiation(const RunConfig& cfg, Fn&& fn) {
  if (ot::parse_inst_name(cfg.inst) == ot::InstTag::kDh) return fn(dh::DhSphf::preset(cfg.preset));
  return fn(lwe::LweSphf::preset(cfg.preset));
}

inline constexpr std::size_t kDefaultDhKappa = 128;

/// Message length in bytes. DH takes kappa from the config (default 128
/// bits); LWE fixes kappa per preset and rejects a conflicting setting.
inline std::size_t message_bytes(const dh::DhSphf&, const RunConfig& cfg) {
  return cfg.kappa.value_or(kDefaultDhKappa) / 8;
}

inline std::size_t message_bytes(const lwe::LweSphf& inst, const RunConfig& cfg) {
  if (cfg.kappa && *cfg.kappa != inst.params().kappa) {
    throw ConfigError("kappa " + std::to_string(*cfg.kappa) + " conflicts with LWE preset " + cfg.preset +
                      " (kappa " + std::to_string(inst.params().kappa) + ")");
  }
  return inst.params().kappa_bytes();
}

inline sphf::MaskBytes parse_message(const std::string& name, const std::string& hex) {
  try {
    return sphf::MaskBytes::from_hex(hex);
  } catch (const DecodeError& e) {
    throw ConfigError(name + ": " + e.what());
  }
}

}  // namespace gzot::harness

#endif  // GZOT_HARNESS_DISPATCH_HPP_
