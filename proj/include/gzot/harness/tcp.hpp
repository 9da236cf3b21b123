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


#ifndef GZOT_HARNESS_TCP_HPP_
#define GZOT_HARNESS_TCP_HPP_

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "gzot/common/bytes.hpp"
#include "gzot/common/errors.hpp"
#include "gzot/ot/wire.hpp"

namespace gzot::harness {

/// Transport failure (refused, reset, timed out). Not a decode error.
class TransportError : public std::runtime_error {
 public:
  explicit TransportError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::chrono::milliseconds kIdleTimeout{30000};

/// Upper bound on a frame payload read from the network.
inline constexpr std::uint32_t kMaxPayload = 256u << 20;

class Socket {
 public:
  Socket() = default;
  explicit Socket(int fd) : fd_(fd) {}
  Socket(Socket&& o) noexcept : fd_(std::exchange(o.fd_, -1)) {}
  Socket& operator=(Socket&& o) noexcept {
    if (this != &o) {
      close();
      fd_ = std::exchange(o.fd_, -1);
    }
    return *this;
  }
  Socket(const Socket&) = delete;
  Socket& operator=(const Socket&) = delete;
  ~Socket() { close(); }

  [[nodiscard]] int fd() const { return fd_; }
  [[nodiscard]] bool valid() const { return fd_ >= 0; }

  void close() {
    if (fd_ >= 0) ::close(fd_);
    fd_ = -1;
  }

  void send_all(std::span<const std::uint8_t> data, std::chrono::milliseconds timeout = kIdleTimeout) {
    std::size_t sent = 0;
    while (sent < data.size()) {
      wait(POLLOUT, timeout);
      const ssize_t n = ::send(fd_, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
      if (n < 0) {
        if (errno == EINTR || errno == EAGAIN) continue;
        throw TransportError(std::string("send: ") + std::strerror(errno));
      }
      sent += static_cast<std::size_t>(n);
    }
  }

  /// Reads exactly n bytes. Returns fewer only if the peer closed first.
  Bytes recv_up_to(std::size_t n, std::chrono::milliseconds timeout = kIdleTimeout) {
    Bytes out(n);
    std::size_t got = 0;
    while (got < n) {
      wait(POLLIN, timeout);
      const ssize_t r = ::recv(fd_, out.data() + got, n - got, 0);
      if (r < 0) {
        if (errno == EINTR || errno == EAGAIN) continue;
        throw TransportError(std::string("recv: ") + std::strerror(errno));
      }
      if (r == 0) break;
      got += static_cast<std::size_t>(r);
    }
    out.resize(got);
    return out;
  }

  void shutdown_write() {
    if (fd_ >= 0) ::shutdown(fd_, SHUT_WR);
  }

 private:
  void wait(short events, std::chrono::milliseconds timeout) const {
    pollfd p{fd_, events, 0};
    for (;;) {
      const int r = ::poll(&p, 1, static_cast<int>(timeout.count()));
      if (r > 0) return;
      if (r == 0) throw TransportError("idle timeout");
      if (errno != EINTR) throw TransportError(std::string("poll: ") + std::strerror(errno));
    }
  }

  int fd_ = -1;
};

/// Reads one frame: the fixed header, then exactly the announced payload.
/// A bad header or a stream that ends early is a DecodeError.
inline Bytes read_frame(Socket& s, std::chrono::milliseconds timeout = kIdleTimeout) {
  Bytes frame = s.recv_up_to(ot::kHeaderSize, timeout);
  if (frame.size() < ot::kHeaderSize) throw DecodeError("frame: truncated header");
  const ot::FrameHeader h = ot::decode_header(frame);
  if (h.payload_len > kMaxPayload) throw DecodeError("frame: payload too large");
  Bytes payload = s.recv_up_to(h.payload_len, timeout);
  if (payload.size() < h.payload_len) throw DecodeError("frame: truncated payload");
  frame.insert(frame.end(), payload.begin(), payload.end());
  return frame;
}

inline sockaddr_in resolve_ipv4(const std::string& host, std::uint16_t port) {
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  if (int rc = ::getaddrinfo(host.c_str(), nullptr, &hints, &res); rc != 0 || res == nullptr) {
    throw TransportError("cannot resolve " + host + ": " + ::gai_strerror(rc));
  }
  sockaddr_in addr{};
  std::memcpy(&addr, res->ai_addr, sizeof(addr));
  ::freeaddrinfo(res);
  addr.sin_port = htons(port);
  return addr;
}

class Listener {
 public:
  /// Binds host:port; port 0 picks a free port, see port().
  Listener(const std::string& host, std::uint16_t port) {
    Socket s(::socket(AF_INET, SOCK_STREAM, 0));
    if (!s.valid()) throw TransportError(std::string("socket: ") + std::strerror(errno));
    int one = 1;
    ::setsockopt(s.fd(), SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
    sockaddr_in addr = resolve_ipv4(host, port);
    if (::bind(s.fd(), reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
      throw TransportError("bind " + host + ":" + std::to_string(port) + ": " + std::strerror(errno));
    }
    if (::listen(s.fd(), 1) != 0) throw TransportError(std::string("listen: ") + std::strerror(errno));
    socklen_t len = sizeof(addr);
    ::getsockname(s.fd(), reinterpret_cast<sockaddr*>(&addr), &len);
    port_ = ntohs(addr.sin_port);
    sock_ = std::move(s);
  }

  [[nodiscard]] std::uint16_t port() const { return port_; }

  Socket accept(std::chrono::milliseconds timeout = kIdleTimeout) {
    pollfd p{sock_.fd(), POLLIN, 0};
    for (;;) {
      const int r = ::poll(&p, 1, static_cast<int>(timeout.count()));
      if (r > 0) break;
      if (r == 0) throw TransportError("accept: idle timeout");
      if (errno != EINTR) throw TransportError(std::string("poll: ") + std::strerror(errno));
    }
    Socket c(::accept(sock_.fd(), nullptr, nullptr));
    if (!c.valid()) throw TransportError(std::string("accept: ") + std::strerror(errno));
    return c;
  }

 private:
  Socket sock_;
  std::uint16_t port_ = 0;
};

/// Connects, retrying refused connections until `timeout` passes, so a
/// receiver may start slightly before its sender.
inline Socket connect_to(const std::string& host, std::uint16_t port,
                         std::chrono::milliseconds timeout = kIdleTimeout) {
  const sockaddr_in addr = resolve_ipv4(host, port);
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  for (;;) {
    Socket s(::socket(AF_INET, SOCK_STREAM, 0));
    if (!s.valid()) throw TransportError(std::string("socket: ") + std::strerror(errno));
    if (::connect(s.fd(), reinterpret_cast<const sockaddr*>(&addr), sizeof(addr)) == 0) {
      int one = 1;
      ::setsockopt(s.fd(), IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
      return s;
    }
    const int err = errno;
    if ((err != ECONNREFUSED && err != EINTR) || std::chrono::steady_clock::now() >= deadline) {
      throw TransportError("connect " + host + ":" + std::to_string(port) + ": " + std::strerror(err));
    }
    ::usleep(50000);
  }
}

}  // namespace gzot::harness

#endif  // GZOT_HARNESS_TCP_HPP_
