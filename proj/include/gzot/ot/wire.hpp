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


#ifndef GZOT_OT_WIRE_HPP_
#define GZOT_OT_WIRE_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "gzot/common/bytes.hpp"
#include "gzot/common/errors.hpp"

namespace gzot::ot {

using SessionId = std::array<std::uint8_t, 8>;

inline SessionId session_id_from_u64(std::uint64_t v) {
  SessionId sid{};
  for (std::size_t i = 0; i < 8; ++i) sid[i] = static_cast<std::uint8_t>(v >> (56 - 8 * i));
  return sid;
}

/// Accepts exactly 16 hex digits.
inline SessionId session_id_from_hex(std::string_view hex) {
  if (hex.size() != 16) throw ConfigError("sid must be 16 hex digits");
  Bytes raw;
  try {
    raw = from_hex(hex);
  } catch (const DecodeError& e) {
    throw ConfigError(std::string("sid: ") + e.what());
  }
  SessionId sid{};
  std::copy(raw.begin(), raw.end(), sid.begin());
  return sid;
}

inline std::string to_hex(const SessionId& sid) { return gzot::to_hex(sid); }

inline constexpr std::array<std::uint8_t, 4> kMagic{'G', 'Z', 'O', 'T'};
inline constexpr std::uint8_t kVersion = 1;
inline constexpr std::size_t kHeaderSize = 4 + 1 + 1 + 8 + 1 + 4;

enum class MsgType : std::uint8_t { kFlow1 = 1, kFlow2 = 2 };

/// [4B "GZOT"][1B version][1B type][8B sid][1B inst][4B BE len][payload]
struct Frame {
  MsgType type = MsgType::kFlow1;
  SessionId sid{};
  std::uint8_t inst = 0;
  Bytes payload;
};

inline Bytes encode_frame(const Frame& f) {
  ByteWriter w;
  w.raw(kMagic);
  w.u8(kVersion);
  w.u8(static_cast<std::uint8_t>(f.type));
  w.raw(f.sid);
  w.u8(f.inst);
  w.prefixed(f.payload);
  return std::move(w).take();
}

struct FrameHeader {
  MsgType type;
  SessionId sid;
  std::uint8_t inst;
  std::uint32_t payload_len;
};

/// Parses and checks the fixed 19-byte header.
inline FrameHeader decode_header(std::span<const std::uint8_t> data) {
  ByteReader r(data);
  auto magic = r.take(4);
  if (!std::equal(magic.begin(), magic.end(), kMagic.begin())) throw DecodeError("frame: bad magic");
  const std::uint8_t version = r.u8();
  if (version != kVersion) throw DecodeError("frame: unsupported version " + std::to_string(version));
  const std::uint8_t type = r.u8();
  if (type != 1 && type != 2) throw DecodeError("frame: unknown message type " + std::to_string(type));
  FrameHeader h{static_cast<MsgType>(type), {}, 0, 0};
  auto sid = r.take(8);
  std::copy(sid.begin(), sid.end(), h.sid.begin());
  h.inst = r.u8();
  h.payload_len = r.u32be();
  return h;
}

inline Frame decode_frame(std::span<const std::uint8_t> data) {
  if (data.size() < kHeaderSize) throw DecodeError("frame: truncated header");
  FrameHeader h = decode_header(data.first(kHeaderSize));
  auto rest = data.subspan(kHeaderSize);
  if (rest.size() < h.payload_len) throw DecodeError("frame: truncated payload");
  if (rest.size() > h.payload_len) throw DecodeError("frame: trailing bytes");
  return Frame{h.type, h.sid, h.inst, Bytes(rest.begin(), rest.end())};
}

/// Decodes and checks type, session and instantiation in one go. A frame
/// that parses but belongs elsewhere is a protocol error, not a decode error.
inline Frame expect_frame(std::span<const std::uint8_t> data, MsgType type, const SessionId& sid,
                          std::uint8_t inst) {
  Frame f = decode_frame(data);
  if (f.type != type) throw ProtocolError("frame: unexpected message type");
  if (f.sid != sid) throw ProtocolError("frame: session id mismatch");
  if (f.inst != inst) throw ProtocolError("frame: instantiation tag mismatch");
  return f;
}

/// c_i = (m_i xor mask_i, hp_i), hp serialized.
struct Flow2Slot {
  Bytes masked;
  Bytes hp;
  friend bool operator==(const Flow2Slot&, const Flow2Slot&) = default;
};

struct Flow2 {
  std::array<Flow2Slot, 2> c;
  friend bool operator==(const Flow2&, const Flow2&) = default;
};

inline Bytes encode_flow2_payload(const Flow2& f) {
  ByteWriter w;
  for (const auto& slot : f.c) {
    w.prefixed(slot.masked);
    w.prefixed(slot.hp);
  }
  return std::move(w).take();
}

inline Flow2 decode_flow2_payload(std::span<const std::uint8_t> data) {
  ByteReader r(data);
  Flow2 f;
  for (auto& slot : f.c) {
    slot.masked = r.prefixed();
    slot.hp = r.prefixed();
  }
  r.expect_end();
  return f;
}

/// Both flows of one run, framed as sent.
struct Transcript {
  Bytes flow1;
  Bytes flow2;
  friend bool operator==(const Transcript&, const Transcript&) = default;
};

}  // namespace gzot::ot

#endif  // GZOT_OT_WIRE_HPP_
