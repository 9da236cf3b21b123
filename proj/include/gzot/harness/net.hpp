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


#ifndef GZOT_HARNESS_NET_HPP_
#define GZOT_HARNESS_NET_HPP_

#include <utility>

#include "gzot/common/rng.hpp"
#include "gzot/harness/tcp.hpp"
#include "gzot/ot/protocol.hpp"

namespace gzot::harness {

/// Receiver over an open connection: send Flow1, read Flow2, unmask.
template <sphf::Instantiation I>
ot::MaskBytes tcp_receive(const I& inst, const sphf::Crs<I>& crs, const ot::SessionId& sid, unsigned b,
                          Rng rng, Socket& conn, ot::Transcript* transcript = nullptr) {
  ot::Receiver<I> receiver(inst, crs, sid, std::move(rng));
  Bytes flow1 = receiver.start(b);
  conn.send_all(flow1);
  Bytes flow2 = read_frame(conn);
  ot::MaskBytes m = receiver.finish(flow2);
  if (transcript != nullptr) *transcript = ot::Transcript{std::move(flow1), std::move(flow2)};
  return m;
}

/// Sender over an open connection: read Flow1, answer, close.
template <sphf::Instantiation I>
void tcp_send(const I& inst, const sphf::Crs<I>& crs, const ot::SessionId& sid, const ot::MaskBytes& m0,
              const ot::MaskBytes& m1, Rng rng, Socket& conn, ot::Transcript* transcript = nullptr) {
  ot::Sender<I> sender(inst, crs, sid, std::move(rng));
  Bytes flow1 = read_frame(conn);
  Bytes flow2 = sender.respond(m0, m1, flow1);
  conn.send_all(flow2);
  conn.shutdown_write();
  if (transcript != nullptr) *transcript = ot::Transcript{std::move(flow1), std::move(flow2)};
}

}  // namespace gzot::harness

#endif  // GZOT_HARNESS_NET_HPP_
