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

#ifndef GZOT_SPHF_MASK_HPP_
#define GZOT_SPHF_MASK_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "gzot/common/bytes.hpp"

namespace gzot::sphf {

/// Fixed-length bit string used as a one-time pad over messages.
class MaskBytes {
 public:
  MaskBytes() = default;
  explicit MaskBytes(Bytes bytes) : bytes_(std::move(bytes)) {}
  static MaskBytes from_hex(std::string_view hex) { return MaskBytes(gzot::from_hex(hex)); }

  [[nodiscard]] std::size_t size() const { return bytes_.size(); }
  [[nodiscard]] const Bytes& bytes() const { return bytes_; }
  [[nodiscard]] std::string hex() const { return to_hex(bytes_); }

  friend bool operator==(const MaskBytes&, const MaskBytes&) = default;

 private:
  Bytes bytes_;
};

/// Bitwise XOR; both operands must have the same length.
inline MaskBytes xor_mask(const MaskBytes& a, const MaskBytes& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("xor_mask: length mismatch (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  }
  Bytes out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.bytes()[i] ^ b.bytes()[i];
  return MaskBytes(std::move(out));
}

}  // namespace gzot::sphf

#endif  // GZOT_SPHF_MASK_HPP_
