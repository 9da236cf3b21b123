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

#ifndef GZOT_COMMON_SHA256_HPP_
#define GZOT_COMMON_SHA256_HPP_

#include <openssl/evp.h>

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string_view>

#include "gzot/common/bytes.hpp"

namespace gzot {

using Digest256 = std::array<std::uint8_t, 32>;

/// Incremental SHA-256 over OpenSSL's EVP interface.
class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new()) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) {
      throw std::runtime_error("EVP sha256 init failed");
    }
  }

  Sha256& update(std::span<const std::uint8_t> data) {
    EVP_DigestUpdate(ctx_.get(), data.data(), data.size());
    return *this;
  }

  Sha256& update(std::string_view text) {
    EVP_DigestUpdate(ctx_.get(), text.data(), text.size());
    return *this;
  }

  Sha256& update_u64(std::uint64_t v) {
    std::array<std::uint8_t, 8> be{};
    for (int i = 0; i < 8; ++i) be[i] = static_cast<std::uint8_t>(v >> (56 - 8 * i));
    return update(be);
  }

  Digest256 finish() {
    Digest256 out{};
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx_.get(), out.data(), &len);
    return out;
  }

 private:
  struct Free {
    void operator()(EVP_MD_CTX* c) const { EVP_MD_CTX_free(c); }
  };
  std::unique_ptr<EVP_MD_CTX, Free> ctx_;
};

inline Digest256 sha256(std::span<const std::uint8_t> data) {
  return Sha256().update(data).finish();
}

/// Counter-mode expansion: block_i = SHA256(i_be32 || label || input).
inline Bytes kdf_expand(std::string_view label, std::span<const std::uint8_t> input,
                        std::size_t out_len) {
  Bytes out;
  out.reserve(out_len + 32);
  for (std::uint32_t counter = 0; out.size() < out_len; ++counter) {
    std::array<std::uint8_t, 4> ctr{static_cast<std::uint8_t>(counter >> 24),
                                    static_cast<std::uint8_t>(counter >> 16),
                                    static_cast<std::uint8_t>(counter >> 8),
                                    static_cast<std::uint8_t>(counter)};
    auto block = Sha256().update(ctr).update(label).update(input).finish();
    out.insert(out.end(), block.begin(), block.end());
  }
  out.resize(out_len);
  return out;
}

}  // namespace gzot

#endif  // GZOT_COMMON_SHA256_HPP_
