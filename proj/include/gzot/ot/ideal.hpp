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


#ifndef GZOT_OT_IDEAL_HPP_
#define GZOT_OT_IDEAL_HPP_

#include <optional>
#include <variant>

#include "gzot/ot/wire.hpp"
#include "gzot/sphf/mask.hpp"

namespace gzot::ot {

/// Executable F_OT for one session. Records are first-write-wins; the
/// output m_b is released on an answer message once both records exist,
/// after which the functionality halts.
class IdealOt {
 public:
  struct SenderInput {
    SessionId sid;
    sphf::MaskBytes m0;
    sphf::MaskBytes m1;
  };
  struct ReceiverInput {
    SessionId sid;
    unsigned b = 0;
  };
  struct Answer {
    SessionId sid;
  };
  using Message = std::variant<SenderInput, ReceiverInput, Answer>;

  explicit IdealOt(SessionId sid) : sid_(sid) {}

  /// Returns m_b for the receiver role, or nothing ("send nothing but continue").
  std::optional<sphf::MaskBytes> step(const Message& msg) {
    if (halted_) return std::nullopt;
    return std::visit([this](const auto& m) { return handle(m); }, msg);
  }

  [[nodiscard]] bool halted() const { return halted_; }
  [[nodiscard]] bool has_sender() const { return sender_.has_value(); }
  [[nodiscard]] bool has_receiver() const { return receiver_.has_value(); }

 private:
  std::optional<sphf::MaskBytes> handle(const SenderInput& m) {
    if (m.sid == sid_ && !sender_) sender_ = m;
    return std::nullopt;
  }

  std::optional<sphf::MaskBytes> handle(const ReceiverInput& m) {
    if (m.sid == sid_ && !receiver_ && m.b <= 1) receiver_ = m;
    return std::nullopt;
  }

  std::optional<sphf::MaskBytes> handle(const Answer& m) {
    if (m.sid != sid_ || !sender_ || !receiver_) return std::nullopt;
    halted_ = true;
    return receiver_->b == 0 ? sender_->m0 : sender_->m1;
  }

  SessionId sid_;
  std::optional<SenderInput> sender_;
  std::optional<ReceiverInput> receiver_;
  bool halted_ = false;
};

}  // namespace gzot::ot

#endif  // GZOT_OT_IDEAL_HPP_
