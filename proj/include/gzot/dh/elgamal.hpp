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

#ifndef GZOT_DH_ELGAMAL_HPP_
#define GZOT_DH_ELGAMAL_HPP_

#include <gmpxx.h>

#include "gzot/common/rng.hpp"
#include "gzot/dh/group.hpp"

namespace gzot::dh {

struct ElGamalKeys {
  GroupElement h;  // pk = g^beta
  mpz_class beta;  // sk

  /// beta = 0 gives h = 1 and encrypts in the clear. Accepted, but callers
  /// should warn.
  [[nodiscard]] bool degenerate() const { return beta == 0; }
};

/// (c0, c1) = (g^r, h^r * M). Also the word type of the DH hash function.
struct DhCiphertext {
  GroupElement c0;
  GroupElement c1;
  friend bool operator==(const DhCiphertext&, const DhCiphertext&) = default;
};

inline ElGamalKeys eg_keygen_from(const Group& grp, const mpz_class& beta) {
  return {grp.exp_g(beta), grp.reduce_exponent(beta)};
}

inline ElGamalKeys eg_keygen(const Group& grp, Rng& rng) {
  return eg_keygen_from(grp, grp.random_exponent(rng));
}

inline DhCiphertext eg_encrypt(const Group& grp, const GroupElement& pk, const GroupElement& msg,
                               const mpz_class& r) {
  return {grp.exp_g(r), grp.mul(grp.exp(pk, r), msg)};
}

inline GroupElement eg_decrypt(const Group& grp, const mpz_class& beta, const DhCiphertext& c) {
  return grp.div(c.c1, grp.exp(c.c0, beta));
}

/// Componentwise product: the homomorphic combination of two ciphertexts.
inline DhCiphertext eg_combine(const Group& grp, const DhCiphertext& a, const DhCiphertext& b) {
  return {grp.mul(a.c0, b.c0), grp.mul(a.c1, b.c1)};
}

}  // namespace gzot::dh

#endif  // GZOT_DH_ELGAMAL_HPP_
