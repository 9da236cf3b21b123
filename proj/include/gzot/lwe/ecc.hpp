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

#ifndef GZOT_LWE_ECC_HPP_
#define GZOT_LWE_ECC_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace gzot::lwe {

/// rep-fold repetition code over 0/1 vectors. Bit i of the message occupies
/// positions [i*rep, (i+1)*rep). rep is odd, so majority never ties.
class RepetitionCode {
 public:
  explicit RepetitionCode(std::size_t rep) : rep_(rep) {
    if (rep == 0 || rep % 2 == 0) throw std::invalid_argument("RepetitionCode: rep must be odd");
  }

  [[nodiscard]] std::size_t rep() const { return rep_; }

  [[nodiscard]] std::vector<std::uint8_t> encode(std::span<const std::uint8_t> bits) const {
    std::vector<std::uint8_t> out(bits.size() * rep_);
    for (std::size_t i = 0; i < bits.size(); ++i) {
      std::fill_n(out.begin() + static_cast<std::ptrdiff_t>(i * rep_), rep_, bits[i] & 1u);
    }
    return out;
  }

  /// Majority per block. Decoding always returns; failure shows up as wrong bits.
  [[nodiscard]] std::vector<std::uint8_t> decode(std::span<const std::uint8_t> code) const {
    if (code.size() % rep_ != 0) throw std::invalid_argument("RepetitionCode: bad codeword length");
    std::vector<std::uint8_t> out(code.size() / rep_);
    for (std::size_t i = 0; i < out.size(); ++i) {
      std::size_t ones = 0;
      for (std::size_t j = 0; j < rep_; ++j) ones += code[i * rep_ + j] & 1u;
      out[i] = ones * 2 > rep_ ? 1 : 0;
    }
    return out;
  }

 private:
  std::size_t rep_;
};

/// Pr[majority decoding of one rep-block fails] when each position flips
/// independently with probability `flip`: Pr[Bin(rep, flip) > rep/2].
inline long double repetition_block_failure(std::size_t rep, long double flip) {
  long double total = 0;
  for (std::size_t k = rep / 2 + 1; k <= rep; ++k) {
    const long double log_term = std::lgamma(static_cast<long double>(rep) + 1) -
                                 std::lgamma(static_cast<long double>(k) + 1) -
                                 std::lgamma(static_cast<long double>(rep - k) + 1) +
                                 static_cast<long double>(k) * std::log(flip) +
                                 static_cast<long double>(rep - k) * std::log1p(-flip);
    total += std::exp(log_term);
  }
  return total;
}

/// Union bound on Pr[K' != K] for `blocks` independently decoded blocks.
inline long double repetition_key_failure_bound(std::size_t rep, std::size_t blocks, long double flip) {
  return std::min<long double>(1, static_cast<long double>(blocks) * repetition_block_failure(rep, flip));
}

}  // namespace gzot::lwe

#endif  // GZOT_LWE_ECC_HPP_
