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


#ifndef GZOT_HARNESS_SUITES_HPP_
#define GZOT_HARNESS_SUITES_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gzot/common/errors.hpp"
#include "gzot/dh/sphf.hpp"
#include "gzot/harness/config.hpp"
#include "gzot/harness/dispatch.hpp"
#include "gzot/harness/pool.hpp"
#include "gzot/harness/report.hpp"
#include "gzot/lwe/sphf.hpp"
#include "gzot/ot/derive.hpp"
#include "gzot/ot/extract.hpp"
#include "gzot/ot/ideal.hpp"
#include "gzot/ot/protocol.hpp"

namespace gzot::harness {

inline constexpr std::array<std::string_view, 8> kSuites = {
    "bit-correctness", "full-correctness", "smoothness-bias", "dh-decomposition",
    "lwe-half-decomposition", "kfold", "extraction", "ideal-vs-real"};

/// Suite-specific knobs.
///   words:  smoothness-bias word source, "complement" (x_{1-b} of an honest
///           receiver, kept only if it is outside L) or "uniform"
///   target: extraction target, "choice", "messages" or "uniform-flow1"
///   rho:    lwe-half-decomposition source, "uniform" or "planted"
///   plant:  kfold per-slot probability of a planted decomposable component
struct SuiteOptions {
  std::string words = "complement";
  std::string target = "choice";
  std::string rho = "uniform";
  double plant = 0.5;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline TrialReport start_report(std::string_view suite, std::string_view inst, std::string_view preset,
                                const RunConfig& cfg, std::string property) {
  TrialReport r;
  r.suite = suite;
  r.inst = inst;
  r.preset = preset;
  r.seed = cfg.seed;
  r.property = std::move(property);
  return r;
}

inline double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <class I>
std::string_view inst_name() {
  return I::kTag == dh::DhSphf::kTag ? "dh" : "lwe";
}

template <class I>
sphf::Crs<I> suite_crs(const I& inst, const RunConfig& cfg, sphf::SigmaMode s, sphf::RhoMode r) {
  return ot::derive_crs(inst, cfg.sid, s, r);
}

inline std::uint64_t count_ones(std::span<const std::uint8_t> bytes) {
  std::uint64_t n = 0;
  for (auto b : bytes) n += static_cast<std::uint64_t>(std::popcount(b));
  return n;
}

// ---- bit-correctness ----

inline TrialReport bit_correctness(const lwe::LweSphf& inst, const RunConfig& cfg) {
  auto t0 = Clock::now();
  auto report = start_report("bit-correctness", "lwe", inst.preset_name(), cfg,
                             "single-bit Hash and ProjHash agree on honest words at rate 3/4 + o(1)");
  const auto crs = suite_crs(inst, cfg, sphf::SigmaMode::kS0, sphf::RhoMode::kR0);
  const auto& p = inst.params();
  const auto& a = crs.sigma.a();
  auto hits = run_trials(cfg.trials, cfg.seed, cfg.workers, [&](std::uint64_t, Rng& rng) {
    auto [c, w] = lwe::lwe_encrypt(inst.context(), a, 0, rng);
    lwe::BitHashKey hk = lwe::bit_hash_kg(inst.context(), rng);
    lwe::ModqVector hp = lwe::bit_proj_kg(p, a, hk);
    return lwe::bit_hash(p, hk, c, rng) == lwe::bit_proj_hash(p, hp, w.s, rng) ? 1 : 0;
  });
  report.trials = cfg.trials;
  report.successes = static_cast<std::uint64_t>(std::count(hits.begin(), hits.end(), 1));
  report.extra = {{"expected", 0.75}};
  report.wall_time_ms = elapsed_ms(t0);
  return report;
}

inline TrialReport bit_correctness(const dh::DhSphf& inst, const RunConfig& cfg) {
  auto t0 = Clock::now();
  auto report = start_report("bit-correctness", "dh", inst.preset_name(), cfg,
                             "Hash and ProjHash agree on every honest word");
  const auto crs = suite_crs(inst, cfg, sphf::SigmaMode::kS0, sphf::RhoMode::kR0);
  auto hits = run_trials(cfg.trials, cfg.seed, cfg.workers, [&](std::uint64_t, Rng& rng) {
    auto [x, w] = inst.wordgen_l(crs.sigma, rng);
    auto hk = inst.hash_kg(crs.sigma, rng);
    auto hp = inst.proj_kg(crs.sigma, hk, x, rng);
    return inst.hash(crs.sigma, hk, x) == inst.proj_hash(crs.sigma, hp, x, w, rng) ? 1 : 0;
  });
  report.trials = cfg.trials;
  report.successes = static_cast<std::uint64_t>(std::count(hits.begin(), hits.end(), 1));
  report.extra = {{"expected", 1.0}};
  report.wall_time_ms = elapsed_ms(t0);
  return report;
}

// ---- full-correctness / ideal-vs-real ----

struct OtTrial {
  unsigned b = 0;
  ot::MaskBytes m0;
  ot::MaskBytes m1;
  ot::LocalRun run;
};

template <class I>
OtTrial random_ot_run(const I& inst, const sphf::Crs<I>& crs, const RunConfig& cfg, std::size_t len, Rng& rng) {
  OtTrial t;
  t.b = rng.bit() ? 1 : 0;
  t.m0 = ot::MaskBytes(rng.bytes(len));
  t.m1 = ot::MaskBytes(rng.bytes(len));
  t.run = ot::run_local(inst, crs, cfg.sid, t.b, t.m0, t.m1, rng.fork(1), rng.fork(2));
  return t;
}

template <class I>
TrialReport full_correctness(const I& inst, const RunConfig& cfg) {
  auto t0 = Clock::now();
  auto report = start_report("full-correctness", inst_name<I>(), inst.preset_name(), cfg,
                             "the OT receiver obtains exactly m_b (K' = K)");
  const auto crs = suite_crs(inst, cfg, sphf::SigmaMode::kS0, sphf::RhoMode::kR0);
  const std::size_t len = message_bytes(inst, cfg);
  auto hits = run_trials(cfg.trials, cfg.seed, cfg.workers, [&](std::uint64_t, Rng& rng) {
    OtTrial t = random_ot_run(inst, crs, cfg, len, rng);
    return t.run.output == (t.b == 0 ? t.m0 : t.m1) ? 1 : 0;
  });
  report.trials = cfg.trials;
  report.successes = static_cast<std::uint64_t>(std::count(hits.begin(), hits.end(), 1));
  report.wall_time_ms = elapsed_ms(t0);
  return report;
}

template <class I>
TrialReport ideal_vs_real(const I& inst, const RunConfig& cfg) {
  auto t0 = Clock::now();
  auto report = start_report("ideal-vs-real", inst_name<I>(), inst.preset_name(), cfg,
                             "real protocol output equals the ideal functionality's output");
  const auto crs = suite_crs(inst, cfg, sphf::SigmaMode::kS0, sphf::RhoMode::kR0);
  const std::size_t len = message_bytes(inst, cfg);
  auto hits = run_trials(cfg.trials, cfg.seed, cfg.workers, [&](std::uint64_t, Rng& rng) {
    OtTrial t = random_ot_run(inst, crs, cfg, len, rng);
    ot::IdealOt ideal(cfg.sid);
    ideal.step(ot::IdealOt::SenderInput{cfg.sid, t.m0, t.m1});
    ideal.step(ot::IdealOt::ReceiverInput{cfg.sid, t.b});
    auto out = ideal.step(ot::IdealOt::Answer{cfg.sid});
    return out && *out == t.run.output ? 1 : 0;
  });
  report.trials = cfg.trials;
  report.successes = static_cast<std::uint64_t>(std::count(hits.begin(), hits.end(), 1));
  report.wall_time_ms = elapsed_ms(t0);
  return report;
}

// ---- smoothness-bias ----

struct BiasTrial {
  std::uint64_t ones = 0;
  std::uint64_t bits = 0;
  bool excluded = false;
};

/// Monobit frequency of the sender's mask on one word per session. With
/// words=complement the word is x_{1-b} of an honest receiver and sessions
/// where td_sigma does not place it outside L are excluded and counted.
template <class I>
TrialReport smoothness_bias(const I& inst, const RunConfig& cfg, const SuiteOptions& opt) {
  auto t0 = Clock::now();
  if (opt.words != "complement" && opt.words != "uniform") throw ConfigError("smoothness-bias: words must be complement or uniform");
  auto report = start_report("smoothness-bias", inst_name<I>(), inst.preset_name(), cfg,
                             "mask bits for a word outside L are uniform (monobit frequency 1/2)");
  const auto crs = suite_crs(inst, cfg, sphf::SigmaMode::kS1, sphf::RhoMode::kR0);
  const std::size_t len = message_bytes(inst, cfg);
  auto results = run_trials(cfg.trials, cfg.seed, cfg.workers, [&](std::uint64_t, Rng& rng) {
    BiasTrial t;
    typename I::Word x;
    if (opt.words == "uniform") {
      x = inst.wordgen_x(crs.sigma, rng);
    } else {
      const unsigned b = rng.bit() ? 1 : 0;
      ot::Receiver<I> receiver(inst, crs, cfg.sid, rng.fork(1));
      receiver.start(b);
      x = receiver.word(1 - b);
      if (!inst.wordtest(crs.sigma, *crs.td_sigma, x)) {
        t.excluded = true;
        return t;
      }
    }
    auto hk = inst.hash_kg(crs.sigma, rng);
    inst.proj_kg(crs.sigma, hk, x, rng);
    auto mask = inst.mask(inst.hash(crs.sigma, hk, x), len);
    t.ones = count_ones(mask.bytes());
    t.bits = 8 * mask.size();
    return t;
  });
  std::uint64_t excluded = 0;
  for (const auto& t : results) {
    report.trials += t.bits;
    report.successes += t.ones;
    excluded += t.excluded ? 1 : 0;
  }
  report.extra = {{"sessions", cfg.trials},
                  {"excluded_sessions", excluded},
                  {"words", opt.words},
                  {"bias", std::abs(report.rate() - 0.5)}};
  report.wall_time_ms = elapsed_ms(t0);
  return report;
}

// ---- decomposition ----

/// Uniform rho in G^2 decrypting to 1 is exactly rho in L, i.e. a split of
/// rho into two L-words exists.
inline TrialReport dh_decomposition(const dh::DhSphf& inst, const RunConfig& cfg) {
  auto t0 = Clock::now();
  auto report = start_report("dh-decomposition", "dh", inst.preset_name(), cfg,
                             "a random rho splits into two words of L with probability 1/Q");
  const auto crs = suite_crs(inst, cfg, sphf::SigmaMode::kS1, sphf::RhoMode::kR0);
  const auto& grp = inst.group();
  auto hits = run_trials(cfg.trials, cfg.seed, cfg.workers, [&](std::uint64_t, Rng& rng) {
    auto [rho, td] = inst.sample_rho(sphf::RhoMode::kR0, crs.sigma, rng);
    return dh::eg_decrypt(grp, *crs.td_sigma, rho) == grp.one() ? 1 : 0;
  });
  report.trials = cfg.trials;
  report.successes = static_cast<std::uint64_t>(std::count(hits.begin(), hits.end(), 1));
  const double q = grp.order().get_d();
  report.extra = {{"Q", grp.order().get_str()}, {"expected", 1.0 / q}, {"bound", 2.0 / q}};
  report.wall_time_ms = elapsed_ms(t0);
  return report;
}

/// v splits as c + c' with both 0-decryptable iff v = A s + e with
/// ||e|| <= 2B'' = B', which the trapdoor inversion decides.
inline bool lwe_decomposable(const lwe::LweSphf& inst, const lwe::ModqMatrix& a, const lwe::Trapdoor& td,
                             std::span<const std::uint64_t> v) {
  return lwe::gadget_invert(inst.params(), a, td, v, lwe::u128{inst.params().bp_sq}).has_value();
}

inline lwe::ModqVector planted_component(const lwe::LweSphf& inst, const lwe::ModqMatrix& a, Rng& rng) {
  auto [c, wc] = lwe::lwe_encrypt(inst.context(), a, 0, rng);
  auto [d, wd] = lwe::lwe_encrypt(inst.context(), a, 0, rng);
  return lwe::vec_add(c, d, inst.params().q);
}

inline TrialReport lwe_half_decomposition(const lwe::LweSphf& inst, const RunConfig& cfg, const SuiteOptions& opt) {
  auto t0 = Clock::now();
  if (opt.rho != "uniform" && opt.rho != "planted") throw ConfigError("lwe-half-decomposition: rho must be uniform or planted");
  auto report = start_report("lwe-half-decomposition", "lwe", inst.preset_name(), cfg,
                             "a rho component lies within 2B'' of a 0-decryptable point with probability <= 1/2");
  const auto crs = suite_crs(inst, cfg, sphf::SigmaMode::kS1, sphf::RhoMode::kR0);
  const auto& a = crs.sigma.a();
  const auto& td = *crs.td_sigma->t;
  auto hits = run_trials(cfg.trials, cfg.seed, cfg.workers, [&](std::uint64_t, Rng& rng) {
    lwe::ModqVector v = opt.rho == "planted" ? planted_component(inst, a, rng)
                                             : lwe::uniform_vector(inst.params().m, inst.params().q, rng);
    return lwe_decomposable(inst, a, td, v) ? 1 : 0;
  });
  report.trials = cfg.trials;
  report.successes = static_cast<std::uint64_t>(std::count(hits.begin(), hits.end(), 1));
  report.extra = {{"rho", opt.rho}, {"bound", 0.5}};
  report.wall_time_ms = elapsed_ms(t0);
  return report;
}

struct KfoldTrial {
  std::uint64_t slot_hits = 0;
  bool all = false;
};

/// Each of the k_amp components is planted (decomposable) with probability
/// `plant`, else uniform. A tuple decomposes only if every component does,
/// so the tuple rate should match slot_rate^k_amp.
inline TrialReport kfold(const lwe::LweSphf& inst, const RunConfig& cfg, const SuiteOptions& opt) {
  auto t0 = Clock::now();
  if (!(opt.plant >= 0.0 && opt.plant <= 1.0)) throw ConfigError("kfold: plant must be in [0, 1]");
  auto report = start_report("kfold", "lwe", inst.preset_name(), cfg,
                             "a k-tuple decomposes at the single-slot rate raised to k");
  const auto crs = suite_crs(inst, cfg, sphf::SigmaMode::kS1, sphf::RhoMode::kR0);
  const auto& p = inst.params();
  const auto& a = crs.sigma.a();
  const auto& td = *crs.td_sigma->t;
  auto results = run_trials(cfg.trials, cfg.seed, cfg.workers, [&](std::uint64_t, Rng& rng) {
    KfoldTrial t;
    for (std::size_t j = 0; j < p.k_amp; ++j) {
      lwe::ModqVector v = rng.unit() < opt.plant ? planted_component(inst, a, rng) : lwe::uniform_vector(p.m, p.q, rng);
      t.slot_hits += lwe_decomposable(inst, a, td, v) ? 1 : 0;
    }
    t.all = t.slot_hits == p.k_amp;
    return t;
  });
  std::uint64_t slot_hits = 0;
  for (const auto& t : results) {
    slot_hits += t.slot_hits;
    report.successes += t.all ? 1 : 0;
  }
  report.trials = cfg.trials;
  const std::uint64_t slot_trials = cfg.trials * p.k_amp;
  const auto slot_ci = wilson_interval(slot_hits, slot_trials);
  const double k = static_cast<double>(p.k_amp);
  const double slot_rate = slot_trials == 0 ? 0.0 : static_cast<double>(slot_hits) / static_cast<double>(slot_trials);
  const auto ci = report.interval();
  const double pred_lo = std::pow(slot_ci.lo, k);
  const double pred_hi = std::pow(slot_ci.hi, k);
  report.extra = {{"k_amp", p.k_amp},
                  {"plant", opt.plant},
                  {"slot_trials", slot_trials},
                  {"slot_successes", slot_hits},
                  {"slot_rate", slot_rate},
                  {"predicted", std::pow(slot_rate, k)},
                  {"predicted_lo", pred_lo},
                  {"predicted_hi", pred_hi},
                  {"consistent", ci.lo <= pred_hi && pred_lo <= ci.hi}};
  report.wall_time_ms = elapsed_ms(t0);
  return report;
}

// ---- extraction ----

struct ExtractTrial {
  bool ok = false;
  bool aborted = false;
  bool both_outside = false;
};

template <class I>
TrialReport extraction(const I& inst, const RunConfig& cfg, const SuiteOptions& opt) {
  auto t0 = Clock::now();
  auto report = start_report("extraction", inst_name<I>(), inst.preset_name(), cfg, "");
  const std::size_t len = message_bytes(inst, cfg);
  std::vector<ExtractTrial> results;
  if (opt.target == "choice" || opt.target == "uniform-flow1") {
    const bool uniform = opt.target == "uniform-flow1";
    report.property = uniform ? "extract_choice is total on arbitrary Flow1 (rate = non-abort rate)"
                              : "extract_choice with td_sigma recovers the receiver's choice bit";
    const auto crs = suite_crs(inst, cfg, sphf::SigmaMode::kS1, sphf::RhoMode::kR0);
    results = run_trials(cfg.trials, cfg.seed, cfg.workers, [&](std::uint64_t, Rng& rng) {
      ExtractTrial t;
      const unsigned b = rng.bit() ? 1 : 0;
      Bytes flow1;
      if (uniform) {
        flow1 = ot::frame_flow1(inst, cfg.sid, inst.wordgen_x(crs.sigma, rng));
      } else {
        ot::Receiver<I> receiver(inst, crs, cfg.sid, rng.fork(1));
        flow1 = receiver.start(b);
      }
      auto e = ot::extract_choice(inst, crs, cfg.sid, flow1);
      t.aborted = e.aborted();
      t.both_outside = e.both_outside();
      t.ok = uniform ? !e.aborted() : (e.b && *e.b == b);
      return t;
    });
  } else if (opt.target == "messages") {
    report.property = "extract_messages with an R1 rho trapdoor recovers both m0 and m1";
    const auto crs = suite_crs(inst, cfg, sphf::SigmaMode::kS0, sphf::RhoMode::kR1);
    const Bytes flow1 = ot::trapdoor_flow1(inst, crs, cfg.sid);
    results = run_trials(cfg.trials, cfg.seed, cfg.workers, [&](std::uint64_t, Rng& rng) {
      ExtractTrial t;
      ot::MaskBytes m0(rng.bytes(len));
      ot::MaskBytes m1(rng.bytes(len));
      ot::Sender<I> sender(inst, crs, cfg.sid, rng.fork(2));
      Bytes flow2 = sender.respond(m0, m1, flow1);
      auto [e0, e1] = ot::extract_messages(inst, crs, cfg.sid, flow1, flow2, rng);
      t.ok = e0 == m0 && e1 == m1;
      return t;
    });
  } else {
    throw ConfigError("extraction: target must be choice, messages or uniform-flow1");
  }
  std::uint64_t aborts = 0;
  std::uint64_t both = 0;
  for (const auto& t : results) {
    report.successes += t.ok ? 1 : 0;
    aborts += t.aborted ? 1 : 0;
    both += t.both_outside ? 1 : 0;
  }
  report.trials = cfg.trials;
  report.extra = {{"target", opt.target}, {"aborts", aborts}, {"both_outside", both}};
  report.wall_time_ms = elapsed_ms(t0);
  return report;
}

[[noreturn]] inline void unsupported(std::string_view suite, std::string_view inst) {
  throw ConfigError("suite " + std::string(suite) + " is not defined for " + std::string(inst));
}

inline TrialReport run_suite(std::string_view suite, const dh::DhSphf& inst, const RunConfig& cfg,
                             const SuiteOptions& opt) {
  if (suite == "bit-correctness") return bit_correctness(inst, cfg);
  if (suite == "full-correctness") return full_correctness(inst, cfg);
  if (suite == "smoothness-bias") return smoothness_bias(inst, cfg, opt);
  if (suite == "dh-decomposition") return dh_decomposition(inst, cfg);
  if (suite == "extraction") return extraction(inst, cfg, opt);
  if (suite == "ideal-vs-real") return ideal_vs_real(inst, cfg);
  unsupported(suite, "dh");
}

inline TrialReport run_suite(std::string_view suite, const lwe::LweSphf& inst, const RunConfig& cfg,
                             const SuiteOptions& opt) {
  if (suite == "bit-correctness") return bit_correctness(inst, cfg);
  if (suite == "full-correctness") return full_correctness(inst, cfg);
  if (suite == "smoothness-bias") return smoothness_bias(inst, cfg, opt);
  if (suite == "lwe-half-decomposition") return lwe_half_decomposition(inst, cfg, opt);
  if (suite == "kfold") return kfold(inst, cfg, opt);
  if (suite == "extraction") return extraction(inst, cfg, opt);
  if (suite == "ideal-vs-real") return ideal_vs_real(inst, cfg);
  unsupported(suite, "lwe");
}

}  // namespace detail

/// Runs one estimator suite and returns its report.
inline TrialReport estimate(std::string_view suite, const RunConfig& cfg, const SuiteOptions& opt = {}) {
  if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end()) {
    throw ConfigError("unknown suite: " + std::string(suite));
  }
  return with_instantiation(cfg, [&](const auto& inst) { return detail::run_suite(suite, inst, cfg, opt); });
}

}  // namespace gzot::harness

#endif  // GZOT_HARNESS_SUITES_HPP_
