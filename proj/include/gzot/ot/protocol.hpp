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


#ifndef GZOT_OT_PROTOCOL_HPP_
#define GZOT_OT_PROTOCOL_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "gzot/common/bytes.hpp"
#include "gzot/common/errors.hpp"
#include "gzot/common/rng.hpp"
#include "gzot/ot/wire.hpp"
#include "gzot/sphf/crs.hpp"
#include "gzot/sphf/instantiation.hpp"
#include "gzot/sphf/mask.hpp"

namespace gzot::ot {

using sphf::MaskBytes;

enum class Phase : std::uint8_t { kInit, kSent, kDone, kAborted };

inline std::string_view to_string(Phase p) {
  switch (p) {
    case Phase::kInit: return "Init";
    case Phase::kSent: return "Sent";
    case Phase::kDone: return "Done";
    case Phase::kAborted: return "Aborted";
  }
  return "?";
}

/// Flow2 with the projection keys decoded.
template <sphf::Instantiation I>
struct ParsedFlow2 {
  std::array<MaskBytes, 2> masked;
  std::array<typename I::ProjKey, 2> hp;
};

template <sphf::Instantiation I>
Bytes frame_flow1(const I& inst, const SessionId& sid, const typename I::Word& x0) {
  return encode_frame(Frame{MsgType::kFlow1, sid, I::kTag, inst.encode_word(x0)});
}

template <sphf::Instantiation I>
typename I::Word parse_flow1(const I& inst, const SessionId& sid, std::span<const std::uint8_t> data) {
  Frame f = expect_frame(data, MsgType::kFlow1, sid, I::kTag);
  return inst.decode_word(f.payload);
}

/// Both slots must decode and carry masks of one admissible length.
template <sphf::Instantiation I>
ParsedFlow2<I> parse_flow2(const I& inst, const SessionId& sid, std::span<const std::uint8_t> data) {
  Frame f = expect_frame(data, MsgType::kFlow2, sid, I::kTag);
  Flow2 raw = decode_flow2_payload(f.payload);
  if (raw.c[0].masked.size() != raw.c[1].masked.size()) throw DecodeError("flow2: mask lengths differ");
  if (!inst.message_length_ok(raw.c[0].masked.size())) throw DecodeError("flow2: bad mask length");
  return ParsedFlow2<I>{{MaskBytes(raw.c[0].masked), MaskBytes(raw.c[1].masked)},
                        {inst.decode_proj_key(raw.c[0].hp), inst.decode_proj_key(raw.c[1].hp)}};
}

/// Receiver of the two-flow OT. Init -> Sent -> Done; any failure in finish()
/// moves to Aborted and releases nothing. Holds references to inst and crs,
/// which must outlive it.
template <sphf::Instantiation I>
class Receiver {
 public:
  Receiver(const I& inst, const sphf::Crs<I>& crs, SessionId sid, Rng rng)
      : inst_(&inst), crs_(&crs), sid_(sid), rng_(std::move(rng)) {}

  /// (x_b, w) <- WordGen_L, x_{1-b} = complement(rho, x_b); always sends x_0.
  Bytes start(unsigned b) {
    if (phase_ != Phase::kInit) throw ProtocolError("receiver: start called in phase " + std::string(to_string(phase_)));
    if (b > 1) throw ConfigError("receiver: choice bit must be 0 or 1");
    b_ = b;
    auto [xb, w] = inst_->wordgen_l(crs_->sigma, rng_);
    typename I::Word other = inst_->complement(crs_->rho, xb);
    words_[b] = std::move(xb);
    words_[1 - b] = std::move(other);
    witness_ = std::move(w);
    phase_ = Phase::kSent;
    return frame_flow1(*inst_, sid_, *words_[0]);
  }

  /// m = c_{b,0} xor mask(ProjHash(hp_b, x_b, w)).
  MaskBytes finish(std::span<const std::uint8_t> flow2) {
    if (phase_ != Phase::kSent) throw ProtocolError("receiver: finish called in phase " + std::string(to_string(phase_)));
    try {
      ParsedFlow2<I> parsed = parse_flow2(*inst_, sid_, flow2);
      auto h = inst_->proj_hash(crs_->sigma, parsed.hp[b_], *words_[b_], *witness_, rng_);
      MaskBytes m = xor_mask(parsed.masked[b_], inst_->mask(h, parsed.masked[b_].size()));
      phase_ = Phase::kDone;
      return m;
    } catch (...) {
      phase_ = Phase::kAborted;
      throw;
    }
  }

  [[nodiscard]] Phase phase() const { return phase_; }
  [[nodiscard]] unsigned choice() const { return b_; }
  [[nodiscard]] const typename I::Word& word(unsigned i) const { return *words_.at(i); }
  [[nodiscard]] const typename I::Witness& witness() const { return *witness_; }

 private:
  const I* inst_;
  const sphf::Crs<I>* crs_;
  SessionId sid_;
  Rng rng_;
  Phase phase_ = Phase::kInit;
  unsigned b_ = 0;
  std::array<std::optional<typename I::Word>, 2> words_;
  std::optional<typename I::Witness> witness_;
};

/// Sender. Its single step answers Flow1, so it goes Init -> Sent, and a
/// second respond() is rejected. A malformed Flow1 moves it to Aborted.
template <sphf::Instantiation I>
class Sender {
 public:
  Sender(const I& inst, const sphf::Crs<I>& crs, SessionId sid, Rng rng)
      : inst_(&inst), crs_(&crs), sid_(sid), rng_(std::move(rng)) {}

  Bytes respond(const MaskBytes& m0, const MaskBytes& m1, std::span<const std::uint8_t> flow1) {
    if (phase_ != Phase::kInit) throw ProtocolError("sender: respond called in phase " + std::string(to_string(phase_)));
    if (m0.size() != m1.size() || !inst_->message_length_ok(m0.size())) {
      throw ConfigError("sender: messages have unsupported length");
    }
    typename I::Word x0;
    try {
      x0 = parse_flow1(*inst_, sid_, flow1);
    } catch (...) {
      phase_ = Phase::kAborted;
      throw;
    }
    Bytes out = encode_frame(Frame{MsgType::kFlow2, sid_, I::kTag, encode_flow2_payload(answer(x0, m0, m1))});
    phase_ = Phase::kSent;
    return out;
  }

  /// The Flow2 computation on a decoded x_0; used directly by the simulator.
  Flow2 answer(const typename I::Word& x0, const MaskBytes& m0, const MaskBytes& m1) {
    const std::array<typename I::Word, 2> x{x0, inst_->complement(crs_->rho, x0)};
    const std::array<const MaskBytes*, 2> m{&m0, &m1};
    Flow2 f;
    for (unsigned i = 0; i < 2; ++i) {
      auto hk = inst_->hash_kg(crs_->sigma, rng_);
      auto hp = inst_->proj_kg(crs_->sigma, hk, x[i], rng_);
      auto h = inst_->hash(crs_->sigma, hk, x[i]);
      f.c[i].masked = xor_mask(*m[i], inst_->mask(h, m[i]->size())).bytes();
      f.c[i].hp = inst_->encode_proj_key(hp);
    }
    return f;
  }

  [[nodiscard]] Phase phase() const { return phase_; }

 private:
  const I* inst_;
  const sphf::Crs<I>* crs_;
  SessionId sid_;
  Rng rng_;
  Phase phase_ = Phase::kInit;
};

struct LocalRun {
  Transcript transcript;
  MaskBytes output;
};

/// Receiver and sender randomness for one local run, both fixed by `seed`.
inline Rng receiver_rng(std::uint64_t seed) { return Rng::from_label(seed, "gzot/party/receiver"); }
inline Rng sender_rng(std::uint64_t seed) { return Rng::from_label(seed, "gzot/party/sender"); }

/// Runs both parties in-process over the framed flows.
template <sphf::Instantiation I>
LocalRun run_local(const I& inst, const sphf::Crs<I>& crs, const SessionId& sid, unsigned b, const MaskBytes& m0,
                   const MaskBytes& m1, Rng receiver_rand, Rng sender_rand) {
  Receiver<I> receiver(inst, crs, sid, std::move(receiver_rand));
  Sender<I> sender(inst, crs, sid, std::move(sender_rand));
  LocalRun run;
  run.transcript.flow1 = receiver.start(b);
  run.transcript.flow2 = sender.respond(m0, m1, run.transcript.flow1);
  run.output = receiver.finish(run.transcript.flow2);
  return run;
}

template <sphf::Instantiation I>
LocalRun run_local(const I& inst, const sphf::Crs<I>& crs, const SessionId& sid, unsigned b, const MaskBytes& m0,
                   const MaskBytes& m1, std::uint64_t seed) {
  return run_local(inst, crs, sid, b, m0, m1, receiver_rng(seed), sender_rng(seed));
}

}  // namespace gzot::ot

#endif  // GZOT_OT_PROTOCOL_HPP_
