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

#ifndef GZOT_DH_GROUP_HPP_
#define GZOT_DH_GROUP_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gzot/common/bytes.hpp"
#include "gzot/common/errors.hpp"
#include "gzot/common/rng.hpp"

namespace gzot::dh {

// NOTE: none of the arithmetic here is constant time.

/// Order-Q subgroup of (Z/PZ)^* with P = 2Q + 1.
struct GroupParams {
  std::string name;
  mpz_class p;
  mpz_class q;
  mpz_class g;

  [[nodiscard]] std::size_t element_bytes() const { return (mpz_sizeinbase(p.get_mpz_t(), 2) + 7) / 8; }

  /// Throws ConfigError unless P, Q are prime, Q | P-1, and g generates the
  /// order-Q subgroup.
  void validate() const {
    if (mpz_probab_prime_p(p.get_mpz_t(), 50) == 0) throw ConfigError(name + ": P is not prime");
    if (mpz_probab_prime_p(q.get_mpz_t(), 50) == 0) throw ConfigError(name + ": Q is not prime");
    if (mpz_divisible_p(mpz_class(p - 1).get_mpz_t(), q.get_mpz_t()) == 0) {
      throw ConfigError(name + ": Q does not divide P-1");
    }
    if (g <= 1 || g >= p) throw ConfigError(name + ": generator out of range");
    mpz_class t;
    mpz_powm(t.get_mpz_t(), g.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    if (t != 1) throw ConfigError(name + ": generator order is not Q");
  }

  /// Length-prefixed big-endian P, Q, g.
  [[nodiscard]] Bytes serialize() const {
    ByteWriter w;
    for (const mpz_class* v : {&p, &q, &g}) {
      std::size_t len = (mpz_sizeinbase(v->get_mpz_t(), 2) + 7) / 8;
      Bytes buf(len);
      mpz_export(buf.data(), nullptr, 1, 1, 1, 0, v->get_mpz_t());
      w.prefixed(buf);
    }
    return std::move(w).take();
  }

  static GroupParams deserialize(std::span<const std::uint8_t> data, std::string name = "wire") {
    ByteReader r(data);
    GroupParams gp{std::move(name), 0, 0, 0};
    for (mpz_class* v : {&gp.p, &gp.q, &gp.g}) {
      Bytes buf = r.prefixed();
      mpz_import(v->get_mpz_t(), buf.size(), 1, 1, 1, 0, buf.data());
    }
    r.expect_end();
    return gp;
  }

  /// `toy` (P=23), `test` (Q ~ 2^127) or `demo` (Q ~ 2^255). Safe primes were
  /// found offline as the smallest Q >= 2^k with 2Q+1 prime and are
  /// re-checked here.
  static GroupParams preset(std::string_view which) {
    GroupParams gp;
    if (which == "toy") {
      gp = {"toy", 23, 11, 2};
    } else if (which == "test") {
      gp.name = "test";
      gp.q = mpz_class("170141183460469231731687303715884111953");
      gp.p = 2 * gp.q + 1;
      gp.g = 4;
    } else if (which == "demo") {
      gp.name = "demo";
      gp.q = mpz_class(
          "57896044618658097711785492504343953926634992332820282019728792003956564935063");
      gp.p = 2 * gp.q + 1;
      gp.g = 4;
    } else {
      throw ConfigError("unknown DH preset: " + std::string(which));
    }
    gp.validate();
    return gp;
  }
};

/// Element of the order-Q subgroup, stored as its residue in [1, P-1].
struct GroupElement {
  mpz_class value;
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.value == b.value; }
};

/// Group operations over fixed parameters. Immutable after construction.
class Group {
 public:
  explicit Group(GroupParams params) : params_(std::move(params)) {}

  [[nodiscard]] const GroupParams& params() const { return params_; }
  [[nodiscard]] const mpz_class& order() const { return params_.q; }

  [[nodiscard]] GroupElement one() const { return {1}; }
  [[nodiscard]] GroupElement generator() const { return {params_.g}; }

  [[nodiscard]] GroupElement mul(const GroupElement& a, const GroupElement& b) const {
    mpz_class r = a.value * b.value;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), params_.p.get_mpz_t());
    return {r};
  }

  [[nodiscard]] GroupElement inv(const GroupElement& a) const {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.value.get_mpz_t(), params_.p.get_mpz_t()) == 0) {
      throw std::domain_error("group: element not invertible");
    }
    return {r};
  }

  [[nodiscard]] GroupElement div(const GroupElement& a, const GroupElement& b) const {
    return mul(a, inv(b));
  }

  /// base^e with e reduced mod Q.
  [[nodiscard]] GroupElement exp(const GroupElement& base, const mpz_class& e) const {
    mpz_class reduced = reduce_exponent(e);
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.value.get_mpz_t(), reduced.get_mpz_t(), params_.p.get_mpz_t());
    return {r};
  }

  [[nodiscard]] GroupElement exp_g(const mpz_class& e) const { return exp(generator(), e); }

  [[nodiscard]] mpz_class reduce_exponent(const mpz_class& e) const {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), e.get_mpz_t(), params_.q.get_mpz_t());
    return r;
  }

  /// Uniform in [0, Q), by rejection on the bit length of Q.
  mpz_class random_exponent(Rng& rng) const {
    const std::size_t bits = mpz_sizeinbase(params_.q.get_mpz_t(), 2);
    const std::size_t nbytes = (bits + 7) / 8;
    const unsigned top_mask = (bits % 8 == 0) ? 0xffu : ((1u << (bits % 8)) - 1u);
    mpz_class r;
    do {
      Bytes buf = rng.bytes(nbytes);
      buf[0] &= static_cast<std::uint8_t>(top_mask);
      mpz_import(r.get_mpz_t(), buf.size(), 1, 1, 1, 0, buf.data());
    } while (r >= params_.q);
    return r;
  }

  GroupElement random_element(Rng& rng) const { return exp_g(random_exponent(rng)); }

  [[nodiscard]] bool is_member(const GroupElement& x) const {
    if (x.value <= 0 || x.value >= params_.p) return false;
    mpz_class t;
    mpz_powm(t.get_mpz_t(), x.value.get_mpz_t(), params_.q.get_mpz_t(), params_.p.get_mpz_t());
    return t == 1;
  }

  /// Fixed-width big-endian, ceil(bits(P)/8) bytes.
  [[nodiscard]] Bytes encode(const GroupElement& x) const {
    const std::size_t width = params_.element_bytes();
    Bytes out(width, 0);
    std::size_t count = 0;
    Bytes tmp((mpz_sizeinbase(x.value.get_mpz_t(), 2) + 7) / 8 + 1);
    mpz_export(tmp.data(), &count, 1, 1, 1, 0, x.value.get_mpz_t());
    if (count > width) throw std::logic_error("group: element wider than modulus");
    std::copy(tmp.begin(), tmp.begin() + static_cast<std::ptrdiff_t>(count),
              out.end() - static_cast<std::ptrdiff_t>(count));
    return out;
  }

  /// Reads one fixed-width element and checks subgroup membership.
  GroupElement decode(ByteReader& r) const {
    auto s = r.take(params_.element_bytes());
    GroupElement x;
    mpz_import(x.value.get_mpz_t(), s.size(), 1, 1, 1, 0, s.data());
    if (!is_member(x)) throw DecodeError("group: element not in the order-Q subgroup");
    return x;
  }

 private:
  GroupParams params_;
};

}  // namespace gzot::dh

#endif  // GZOT_DH_GROUP_HPP_
