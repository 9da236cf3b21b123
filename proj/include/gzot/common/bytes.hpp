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

#ifndef GZOT_COMMON_BYTES_HPP_
#define GZOT_COMMON_BYTES_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gzot/common/errors.hpp"

namespace gzot {

using Bytes = std::vector<std::uint8_t>;

inline std::string to_hex(std::span<const std::uint8_t> data) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (std::uint8_t b : data) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

inline Bytes from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (hex.size() % 2 != 0) throw DecodeError("hex string has odd length");
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = nibble(hex[2 * i]);
    int lo = nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw DecodeError("invalid hex digit");
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

/// Append-only big-endian writer used by every codec in the library.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { buf_.push_back(v); }

  void u32be(std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) {
      buf_.push_back(static_cast<std::uint8_t>(v >> shift));
    }
  }

  void raw(std::span<const std::uint8_t> data) {
    buf_.insert(buf_.end(), data.begin(), data.end());
  }

  /// 4-byte big-endian length, then the bytes.
  void prefixed(std::span<const std::uint8_t> data) {
    u32be(static_cast<std::uint32_t>(data.size()));
    raw(data);
  }

  [[nodiscard]] const Bytes& bytes() const& { return buf_; }
  [[nodiscard]] Bytes take() && { return std::move(buf_); }

 private:
  Bytes buf_;
};

/// Bounds-checked reader; every short read throws DecodeError.
class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

  std::uint8_t u8() { return take(1)[0]; }

  std::uint32_t u32be() {
    auto s = take(4);
    return (std::uint32_t{s[0]} << 24) | (std::uint32_t{s[1]} << 16) |
           (std::uint32_t{s[2]} << 8) | std::uint32_t{s[3]};
  }

  std::span<const std::uint8_t> take(std::size_t n) {
    if (n > remaining()) throw DecodeError("truncated input");
    auto s = data_.subspan(pos_, n);
    pos_ += n;
    return s;
  }

  Bytes raw(std::size_t n) {
    auto s = take(n);
    return Bytes(s.begin(), s.end());
  }

  Bytes prefixed() { return raw(u32be()); }

  [[nodiscard]] std::size_t remaining() const { return data_.size() - pos_; }

  void expect_end() const {
    if (remaining() != 0) throw DecodeError("trailing bytes after message");
  }

 private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

/// MSB-first unpacking of bytes into a 0/1 vector.
inline std::vector<std::uint8_t> bytes_to_bits(std::span<const std::uint8_t> data) {
  std::vector<std::uint8_t> bits(data.size() * 8);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    bits[i] = (data[i / 8] >> (7 - i % 8)) & 1u;
  }
  return bits;
}

inline Bytes bits_to_bytes(std::span<const std::uint8_t> bits) {
  Bytes out((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] & 1u) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  }
  return out;
}

}  // namespace gzot

#endif  // GZOT_COMMON_BYTES_HPP_
