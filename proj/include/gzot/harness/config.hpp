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


#ifndef GZOT_HARNESS_CONFIG_HPP_
#define GZOT_HARNESS_CONFIG_HPP_

#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "gzot/common/errors.hpp"
#include "gzot/ot/wire.hpp"

namespace gzot::harness {

inline constexpr std::uint64_t kDefaultSeed = 1;

struct RunConfig {
  std::string inst = "dh";
  std::string preset = "toy";
  ot::SessionId sid = ot::session_id_from_u64(1);
  std::string role = "receiver";
  std::string host = "127.0.0.1";
  std::uint16_t port = 7878;
  std::optional<std::size_t> kappa;  // message bits; LWE fixes it per preset
  std::uint64_t trials = 1000;
  std::uint64_t seed = kDefaultSeed;
  unsigned b = 0;
  std::optional<std::string> m0;  // hex
  std::optional<std::string> m1;
  unsigned workers = 1;
  std::string report;  // append-only JSON lines; empty = stdout only
};

inline std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

/// Decimal or 0x-prefixed hexadecimal.
inline std::uint64_t parse_u64(std::string_view key, const std::string& text) {
  if (text.empty()) throw ConfigError(std::string(key) + ": empty value");
  const bool hex = text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X');
  const char* begin = text.c_str() + (hex ? 2 : 0);
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(begin, &end, hex ? 16 : 10);
  if (errno != 0 || end == begin || *end != '\0' || text[0] == '-') {
    throw ConfigError(std::string(key) + ": not an unsigned integer: " + text);
  }
  return v;
}

/// Flat `key = value` lines; '#' starts a comment, blank lines are skipped.
inline std::map<std::string, std::string> parse_config_text(std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t lineno = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

inline void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "inst") {
    cfg.inst = value;
  } else if (key == "preset") {
    cfg.preset = value;
  } else if (key == "sid") {
    cfg.sid = ot::session_id_from_hex(value);
  } else if (key == "role") {
    if (value != "sender" && value != "receiver") throw ConfigError("role must be sender or receiver");
    cfg.role = value;
  } else if (key == "host") {
    cfg.host = value;
  } else if (key == "port") {
    const auto v = parse_u64(key, value);
    if (v > 65535) throw ConfigError("port out of range");
    cfg.port = static_cast<std::uint16_t>(v);
  } else if (key == "kappa") {
    const auto v = parse_u64(key, value);
    if (v == 0 || v % 8 != 0) throw ConfigError("kappa must be a positive multiple of 8");
    cfg.kappa = v;
  } else if (key == "trials") {
    cfg.trials = parse_u64(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_u64(key, value);
  } else if (key == "b") {
    const auto v = parse_u64(key, value);
    if (v > 1) throw ConfigError("b must be 0 or 1");
    cfg.b = static_cast<unsigned>(v);
  } else if (key == "m0") {
    cfg.m0 = value;
  } else if (key == "m1") {
    cfg.m1 = value;
  } else if (key == "workers") {
    const auto v = parse_u64(key, value);
    if (v == 0 || v > 1024) throw ConfigError("workers must be in [1, 1024]");
    cfg.workers = static_cast<unsigned>(v);
  } else if (key == "report") {
    cfg.report = value;
  } else {
    throw ConfigError("unknown config key: " + key);
  }
}

inline void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  for (const auto& [k, v] : parse_config_text(text)) apply_setting(cfg, k, v);
}

/// GZOT_SEED, if set, replaces the seed from defaults and config files.
inline void apply_env(RunConfig& cfg) {
  if (const char* s = std::getenv("GZOT_SEED"); s != nullptr) cfg.seed = parse_u64("GZOT_SEED", s);
}

}  // namespace gzot::harness

#endif  // GZOT_HARNESS_CONFIG_HPP_
