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

#ifndef GZOT_LWE_TRAPDOOR_HPP_
#define GZOT_LWE_TRAPDOOR_HPP_

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "gzot/common/rng.hpp"
#include "gzot/lwe/modq.hpp"
#include "gzot/lwe/params.hpp"

namespace gzot::lwe {

/// Short matrix T = [-R | I] with R in {-1,0,1}^{(n w) x m_bar}. Only R is
/// stored; T is applied implicitly.
class Trapdoor {
 public:
  Trapdoor() = default;
  Trapdoor(std::size_t rows, std::size_t cols, std::vector<std::int8_t> r)
      : rows_(rows), cols_(cols), r_(std::move(r)) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] std::int8_t r(std::size_t i, std::size_t j) const { return r_[i * cols_ + j]; }
  [[nodiscard]] const std::vector<std::int8_t>& r_entries() const { return r_; }

  /// T x mod q for x of length m_bar + rows.
  [[nodiscard]] ModqVector apply(std::span<const std::uint64_t> x, std::uint64_t q) const {
    if (x.size() != cols_ + rows_) throw std::invalid_argument("Trapdoor::apply: bad length");
    ModqVector out(rows_);
    const bool narrow = static_cast<long double>(cols_) * static_cast<long double>(q) < 0x1.0p62L;
    for (std::size_t i = 0; i < rows_; ++i) {
      const std::int8_t* row = r_.data() + i * cols_;
      i128 dot = 0;
      if (narrow) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * static_cast<std::int64_t>(x[j]);
        dot = acc;
      } else {
        for (std::size_t j = 0; j < cols_; ++j) dot += row[j] * static_cast<i128>(x[j]);
      }
      out[i] = reduce_signed(static_cast<i128>(x[cols_ + i]) - dot, q);
    }
    return out;
  }

  /// Estimate of the largest singular value s1(T) by power iteration on T^t T.
  [[nodiscard]] double operator_norm_estimate(Rng& rng, int iterations = 40) const {
    const std::size_t m = cols_ + rows_;
    std::vector<double> v(m), w(rows_), next(m);
    for (auto& x : v) x = rng.unit() - 0.5;
    double lambda = 0;
    for (int it = 0; it < iterations; ++it) {
      double norm = 0;
      for (double x : v) norm += x * x;
      norm = std::sqrt(norm);
      for (auto& x : v) x /= norm;
      for (std::size_t i = 0; i < rows_; ++i) {  // w = T v
        const std::int8_t* row = r_.data() + i * cols_;
        double acc = v[cols_ + i];
        for (std::size_t j = 0; j < cols_; ++j) acc -= row[j] * v[j];
        w[i] = acc;
      }
      std::fill(next.begin(), next.end(), 0.0);  // next = T^t w
      for (std::size_t i = 0; i < rows_; ++i) {
        const std::int8_t* row = r_.data() + i * cols_;
        for (std::size_t j = 0; j < cols_; ++j) next[j] -= row[j] * w[i];
        next[cols_ + i] = w[i];
      }
      double nn = 0;
      for (double x : next) nn += x * x;
      lambda = std::sqrt(nn);  // ~ s1^2
      v.swap(next);
    }
    return std::sqrt(lambda);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int8_t> r_;
};

/// G = I_n (x) g with g = (1, 2, ..., 2^k): shape (n w) x n.
inline ModqMatrix gadget_matrix(std::size_t n, std::uint64_t q) {
  const std::size_t w = gadget_exponent(q) + 1;
  ModqMatrix g(n * w, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::uint64_t pow = 1 % q;
    for (std::size_t i = 0; i < w; ++i) {
      g.at(j * w + i, j) = pow;
      pow = add_mod(pow, pow, q);
    }
  }
  return g;
}

/// A = A0 + [0 ; G] (tag fixed to the identity).
inline ModqMatrix tag_with_gadget(const ModqMatrix& a0, std::size_t n, std::uint64_t q) {
  ModqMatrix g = gadget_matrix(n, q);
  ModqMatrix a = a0;
  const std::size_t offset = a0.rows() - g.rows();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) a.at(offset + i, j) = add_mod(a.at(offset + i, j), g.at(i, j), q);
  }
  return a;
}

/// T * M applied column by column.
inline ModqMatrix apply_to_columns(const Trapdoor& td, const ModqMatrix& mat, std::uint64_t q) {
  ModqMatrix out(td.rows(), mat.cols());
  ModqVector column(mat.rows());
  for (std::size_t c = 0; c < mat.cols(); ++c) {
    for (std::size_t i = 0; i < mat.rows(); ++i) column[i] = mat.at(i, c);
    ModqVector tc = td.apply(column, q);
    for (std::size_t i = 0; i < tc.size(); ++i) out.at(i, c) = tc[i];
  }
  return out;
}

struct TrapGenResult {
  Trapdoor trapdoor;
  ModqMatrix a0;  // m x n, T a0 = 0
  ModqMatrix a;   // a0 + [0 ; G], T a = G
};

/// Resample bound on s1(T), as a multiple of sqrt(m).
inline constexpr double kTrapdoorNormFactor = 2.0;

/// Samples A_bar uniform and R with Pr[0] = 1/2, Pr[+1] = Pr[-1] = 1/4;
/// returns T = [-R | I] and A0 = [A_bar ; R A_bar]. Restarts while the
/// estimated s1(T) exceeds kTrapdoorNormFactor * sqrt(m). T A0 = 0 and
/// T A = G are verified on every call; a failure throws std::logic_error.
inline TrapGenResult trapgen(const LweParams& p, Rng& rng) {
  const std::size_t rows = p.gadget_rows();
  if (p.m < p.n * static_cast<std::size_t>(std::bit_width(p.q - 1))) {
    throw std::invalid_argument("trapgen: m below n*ceil(log2 q)");
  }
  for (;;) {
    ModqMatrix a_bar(p.m_bar, p.n);
    for (auto& x : a_bar.data()) x = rng.uniform(p.q);

    std::vector<std::int8_t> r(rows * p.m_bar);
    for (std::size_t i = 0; i < r.size(); i += 32) {
      std::uint64_t bits = rng();
      for (std::size_t j = i; j < r.size() && j < i + 32; ++j) {
        switch (bits & 3u) {
          case 2: r[j] = 1; break;
          case 3: r[j] = -1; break;
          default: r[j] = 0; break;
        }
        bits >>= 2;
      }
    }
    Trapdoor td(rows, p.m_bar, std::move(r));
    if (td.operator_norm_estimate(rng) > kTrapdoorNormFactor * std::sqrt(static_cast<double>(p.m))) {
      continue;
    }

    ModqMatrix a0(p.m, p.n);
    for (std::size_t i = 0; i < p.m_bar; ++i) {
      std::copy(a_bar.row(i).begin(), a_bar.row(i).end(), a0.row(i).begin());
    }
    std::vector<i128> acc(p.n);
    for (std::size_t i = 0; i < rows; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t j = 0; j < p.m_bar; ++j) {
        const std::int8_t rij = td.r(i, j);
        if (rij == 0) continue;
        auto src = a_bar.row(j);
        if (rij > 0) {
          for (std::size_t c = 0; c < p.n; ++c) acc[c] += src[c];
        } else {
          for (std::size_t c = 0; c < p.n; ++c) acc[c] -= src[c];
        }
      }
      auto dst = a0.row(p.m_bar + i);
      for (std::size_t c = 0; c < p.n; ++c) dst[c] = reduce_signed(acc[c], p.q);
    }

    ModqMatrix a = tag_with_gadget(a0, p.n, p.q);
    if (apply_to_columns(td, a0, p.q) != ModqMatrix(rows, p.n)) {
      throw std::logic_error("trapgen: T*A0 != 0");
    }
    if (apply_to_columns(td, a, p.q) != gadget_matrix(p.n, p.q)) {
      throw std::logic_error("trapgen: T*A != G");
    }
    return {std::move(td), std::move(a0), std::move(a)};
  }
}

/// Recovers s from one gadget block v_i = 2^i s + eps_i (mod q), i = 0..k,
/// for |eps_i| < q/8. Walks down from the top entry. The two candidates for
/// 2^i s are half of the current estimate or half of (estimate + q), and the
/// one nearer v_i wins. Each step halves the estimate's error, so at i = 0
/// rounding gives s exactly. 32 fractional bits are carried in u128.
inline std::uint64_t decode_gadget_block(std::span<const std::uint64_t> v, std::uint64_t q) {
  constexpr unsigned kFrac = 32;
  const u128 big_q = u128{q} << kFrac;
  auto dist = [&](u128 a, u128 b) {
    u128 d = a > b ? a - b : b - a;
    return d < big_q - d ? d : big_q - d;
  };
  u128 est = u128{v.back()} << kFrac;
  for (std::size_t i = v.size() - 1; i-- > 0;) {
    const u128 c0 = est >> 1;
    const u128 c1 = (est + big_q) >> 1;
    const u128 target = u128{v[i]} << kFrac;
    est = dist(c0, target) <= dist(c1, target) ? c0 : c1;
  }
  u128 s = (est + (u128{1} << (kFrac - 1))) >> kFrac;
  return static_cast<std::uint64_t>(s % q);
}

struct Inversion {
  ModqVector s;
  std::vector<std::int64_t> e;  // centered x - A s
};

/// Inverts x = A s + e using the trapdoor: T x = G s + T e, each gadget
/// block decodes one coordinate of s, and e = x - A s. Returns nullopt when
/// `bound_sq` is given and ||e||^2 exceeds it. Never throws on bad input.
inline std::optional<Inversion> gadget_invert(const LweParams& p, const ModqMatrix& a,
                                              const Trapdoor& td, std::span<const std::uint64_t> x,
                                              std::optional<u128> bound_sq) {
  if (x.size() != p.m) return std::nullopt;
  ModqVector y = td.apply(x, p.q);
  const std::size_t w = p.gadget_width();
  ModqVector s(p.n);
  for (std::size_t j = 0; j < p.n; ++j) {
    s[j] = decode_gadget_block(std::span<const std::uint64_t>(y).subspan(j * w, w), p.q);
  }
  ModqVector as = mat_vec(a, s, p.q);
  std::vector<std::int64_t> e(p.m);
  for (std::size_t i = 0; i < p.m; ++i) e[i] = centered(sub_mod(x[i], as[i], p.q), p.q);
  if (bound_sq && norm2(e) > *bound_sq) return std::nullopt;
  return Inversion{std::move(s), std::move(e)};
}

}  // namespace gzot::lwe

#endif  // GZOT_LWE_TRAPDOOR_HPP_
