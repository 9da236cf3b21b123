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


#ifndef GZOT_OT_EXTRACT_HPP_
#define GZOT_OT_EXTRACT_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "gzot/common/errors.hpp"
#include "gzot/common/rng.hpp"
#include "gzot/ot/protocol.hpp"
#include "gzot/ot/wire.hpp"
#include "gzot/sphf/crs.hpp"
#include "gzot/sphf/instantiation.hpp"

namespace gzot::ot {

/// t_i = wordtest(td_sigma, x_i). b is nullopt exactly when t_0 = t_1 = 0.
struct ChoiceExtraction {
  bool t0 = false;
  bool t1 = false;
  std::optional<unsigned> b;

  [[nodiscard]] bool aborted() const { return !b.has_value(); }
  [[nodiscard]] bool both_outside() const { return t0 && t1; }
};

/// Recovers the receiver's choice from Flow1 with td_sigma: the bit whose
/// word is not in L'. Both in L' gives 0, neither gives abort.
template <sphf::Instantiation I>
ChoiceExtraction extract_choice(const I& inst, const sphf::Crs<I>& crs, const SessionId& sid,
                                std::span<const std::uint8_t> flow1) {
  if (!crs.td_sigma) throw ProtocolError("extract_choice: crs has no sigma trapdoor");
  typename I::Word x0 = parse_flow1(inst, sid, flow1);
  typename I::Word x1 = inst.complement(crs.rho, x0);
  ChoiceExtraction out;
  out.t0 = inst.wordtest(crs.sigma, *crs.td_sigma, x0);
  out.t1 = inst.wordtest(crs.sigma, *crs.td_sigma, x1);
  if (!out.t0 && !out.t1) return out;
  out.b = out.t0 && out.t1 ? 0u : (out.t0 ? 1u : 0u);
  return out;
}

/// Flow1 carrying the rho-trapdoor word x as x_0.
template <sphf::Instantiation I>
Bytes trapdoor_flow1(const I& inst, const sphf::Crs<I>& crs, const SessionId& sid) {
  if (!crs.td_rho) throw ProtocolError("trapdoor_flow1: crs has no rho trapdoor");
  return frame_flow1(inst, sid, crs.td_rho->x);
}

/// With (x, w, x', w') from an R1 rho trapdoor and x_0 = x, both slots can
/// be opened: m_i = c_{i,0} xor mask(ProjHash(hp_i, x_i, w_i)).
template <sphf::Instantiation I>
std::pair<MaskBytes, MaskBytes> extract_messages(const I& inst, const sphf::Crs<I>& crs, const SessionId& sid,
                                                 std::span<const std::uint8_t> flow1,
                                                 std::span<const std::uint8_t> flow2, Rng& rng) {
  if (crs.rho_mode != sphf::RhoMode::kR1 || !crs.td_rho || !crs.td_rho->w || !crs.td_rho->w_prime) {
    throw ProtocolError("extract_messages: crs is not in R1 mode");
  }
  const auto& td = *crs.td_rho;
  if (!(parse_flow1(inst, sid, flow1) == td.x)) throw ProtocolError("extract_messages: flow1 does not carry the trapdoor word");
  ParsedFlow2<I> parsed = parse_flow2(inst, sid, flow2);
  auto open = [&](unsigned i, const typename I::Word& x, const typename I::Witness& w) {
    auto h = inst.proj_hash(crs.sigma, parsed.hp[i], x, w, rng);
    return xor_mask(parsed.masked[i], inst.mask(h, parsed.masked[i].size()));
  };
  return {open(0, td.x, *td.w), open(1, td.x_prime, *td.w_prime)};
}

struct SimulatedRun {
  Transcript transcript;
  unsigned b = 0;
  MaskBytes m0;
  MaskBytes m1;
};

/// Flows for an honest-honest session without either input: x_0 = x from
/// an R1prime trapdoor (so x_0, x_1 are both in L'), random m_0, m_1 of
/// `message_len` bytes, random b (which the flows do not depend on).
template <sphf::Instantiation I>
SimulatedRun simulate_honest_transcript(const I& inst, const sphf::Crs<I>& crs, const SessionId& sid,
                                        std::size_t message_len, Rng& rng) {
  if (crs.rho_mode != sphf::RhoMode::kR1prime || !crs.td_rho) {
    throw ProtocolError("simulate_honest_transcript: crs is not in R1prime mode");
  }
  SimulatedRun run;
  run.b = rng.bit() ? 1 : 0;
  run.m0 = MaskBytes(rng.bytes(message_len));
  run.m1 = MaskBytes(rng.bytes(message_len));
  run.transcript.flow1 = trapdoor_flow1(inst, crs, sid);
  Sender<I> sender(inst, crs, sid, rng.fork(0));
  run.transcript.flow2 = sender.respond(run.m0, run.m1, run.transcript.flow1);
  return run;
}

}  // namespace gzot::ot

#endif  // GZOT_OT_EXTRACT_HPP_
