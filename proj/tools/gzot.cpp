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


// gzot: two-flow oblivious transfer from hash functions with grey zone.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gzot/common/errors.hpp"
#include "gzot/common/sha256.hpp"
#include "gzot/harness/config.hpp"
#include "gzot/harness/dispatch.hpp"
#include "gzot/harness/net.hpp"
#include "gzot/harness/suites.hpp"
#include "gzot/harness/tcp.hpp"
#include "gzot/ot/derive.hpp"
#include "gzot/ot/protocol.hpp"

namespace {

using gzot::harness::RunConfig;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitAbort = 2;
constexpr int kExitDecode = 3;
constexpr int kExitConfig = 4;

/// Flag values; unset flags leave the config file / env values alone.
struct Flags {
  std::string config;
  std::optional<std::string> inst, preset, sid, host, m0, m1, report;
  std::optional<std::uint64_t> seed, trials;
  std::optional<std::size_t> kappa;
  std::optional<unsigned> b, workers;
  std::optional<std::uint16_t> port;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "flat key = value config file");
  cmd->add_option("--inst", f.inst, "instantiation: dh or lwe");
  cmd->add_option("--preset", f.preset, "parameter preset: toy, test or demo");
  cmd->add_option("--sid", f.sid, "session id, 16 hex digits");
  cmd->add_option("--seed", f.seed, "rng seed (overrides GZOT_SEED)");
  cmd->add_option("--kappa", f.kappa, "message length in bits");
}

RunConfig resolve(const Flags& f) {
  RunConfig cfg;
  if (!f.config.empty()) gzot::harness::apply_config_file(cfg, f.config);
  gzot::harness::apply_env(cfg);
  auto set = [&](const char* key, const std::optional<std::string>& v) {
    if (v) gzot::harness::apply_setting(cfg, key, *v);
  };
  set("inst", f.inst);
  set("preset", f.preset);
  set("sid", f.sid);
  set("host", f.host);
  set("m0", f.m0);
  set("m1", f.m1);
  set("report", f.report);
  if (f.seed) cfg.seed = *f.seed;
  if (f.trials) cfg.trials = *f.trials;
  if (f.kappa) gzot::harness::apply_setting(cfg, "kappa", std::to_string(*f.kappa));
  if (f.b) gzot::harness::apply_setting(cfg, "b", std::to_string(*f.b));
  if (f.workers) gzot::harness::apply_setting(cfg, "workers", std::to_string(*f.workers));
  if (f.port) cfg.port = *f.port;
  gzot::ot::parse_inst_name(cfg.inst);
  return cfg;
}

/// m0/m1 from the config, else pseudorandom from the seed.
template <class I>
std::pair<gzot::ot::MaskBytes, gzot::ot::MaskBytes> messages(const I& inst, const RunConfig& cfg) {
  const std::size_t len = gzot::harness::message_bytes(inst, cfg);
  gzot::Rng rng = gzot::Rng::from_label(cfg.seed, "gzot/cli/messages");
  gzot::ot::MaskBytes m0 = cfg.m0 ? gzot::harness::parse_message("m0", *cfg.m0) : gzot::ot::MaskBytes(rng.bytes(len));
  gzot::ot::MaskBytes m1 = cfg.m1 ? gzot::harness::parse_message("m1", *cfg.m1) : gzot::ot::MaskBytes(rng.bytes(len));
  return {m0, m1};
}

void warn_degenerate(const gzot::dh::DhSphf& inst, const gzot::sphf::Crs<gzot::dh::DhSphf>& crs) {
  if (crs.sigma == inst.group().one()) std::cerr << "warning: sigma is the identity (beta = 0)\n";
}
void warn_degenerate(const gzot::lwe::LweSphf&, const gzot::sphf::Crs<gzot::lwe::LweSphf>&) {}

int cmd_run_local(const RunConfig& cfg) {
  return gzot::harness::with_instantiation(cfg, [&](const auto& inst) {
    auto crs = gzot::ot::derive_crs(inst, cfg.sid);
    warn_degenerate(inst, crs);
    auto [m0, m1] = messages(inst, cfg);
    auto run = gzot::ot::run_local(inst, crs, cfg.sid, cfg.b, m0, m1, cfg.seed);
    std::cout << "flow1 " << gzot::to_hex(run.transcript.flow1) << "\n";
    std::cout << "flow2 " << gzot::to_hex(run.transcript.flow2) << "\n";
    std::cout << "output " << run.output.hex() << "\n";
    return kExitOk;
  });
}

int cmd_serve(const RunConfig& cfg, const std::string& port_file) {
  return gzot::harness::with_instantiation(cfg, [&](const auto& inst) {
    auto crs = gzot::ot::derive_crs(inst, cfg.sid);
    warn_degenerate(inst, crs);
    auto [m0, m1] = messages(inst, cfg);
    gzot::harness::Listener listener(cfg.host, cfg.port);
    std::cerr << "listening on " << cfg.host << ":" << listener.port() << "\n";
    if (!port_file.empty()) {
      const std::string tmp = port_file + ".tmp";
      std::ofstream(tmp) << listener.port() << "\n";
      std::rename(tmp.c_str(), port_file.c_str());
    }
    gzot::harness::Socket conn = listener.accept();
    gzot::harness::tcp_send(inst, crs, cfg.sid, m0, m1, gzot::ot::sender_rng(cfg.seed), conn);
    std::cout << "sent\n";
    return kExitOk;
  });
}

int cmd_connect(const RunConfig& cfg) {
  return gzot::harness::with_instantiation(cfg, [&](const auto& inst) {
    auto crs = gzot::ot::derive_crs(inst, cfg.sid);
    warn_degenerate(inst, crs);
    gzot::harness::Socket conn = gzot::harness::connect_to(cfg.host, cfg.port);
    auto m = gzot::harness::tcp_receive(inst, crs, cfg.sid, cfg.b, gzot::ot::receiver_rng(cfg.seed), conn);
    std::cout << "output " << m.hex() << "\n";
    return kExitOk;
  });
}

int cmd_estimate(const RunConfig& cfg, const std::string& suite, const gzot::harness::SuiteOptions& opt) {
  auto report = gzot::harness::estimate(suite, cfg, opt);
  std::cout << report.json_line() << std::endl;
  if (!cfg.report.empty()) gzot::harness::append_report(cfg.report, report);
  return kExitOk;
}

int cmd_derive_crs(const RunConfig& cfg, const std::string& sigma_mode, const std::string& rho_mode,
                   const std::string& out, bool hex) {
  const auto smode = gzot::sphf::parse_sigma_mode(sigma_mode);
  const auto rmode = gzot::sphf::parse_rho_mode(rho_mode);
  return gzot::harness::with_instantiation(cfg, [&](const auto& inst) {
    auto crs = gzot::ot::derive_crs(inst, cfg.sid, smode, rmode);
    warn_degenerate(inst, crs);
    const gzot::Bytes pub = gzot::sphf::serialize_public(inst, crs);
    json j = {{"inst", std::string(gzot::ot::to_string(gzot::ot::parse_inst_name(cfg.inst)))},
              {"preset", std::string(inst.preset_name())},
              {"sid", gzot::ot::to_hex(cfg.sid)},
              {"sigma_mode", std::string(gzot::sphf::to_string(smode))},
              {"rho_mode", std::string(gzot::sphf::to_string(rmode))},
              {"public_bytes", pub.size()},
              {"public_sha256", gzot::to_hex(gzot::sha256(pub))},
              {"has_td_sigma", crs.td_sigma.has_value()},
              {"has_td_rho", crs.td_rho.has_value()},
              {"consistent", gzot::sphf::check_crs_consistency(inst, crs)}};
    if (hex) j["public_hex"] = gzot::to_hex(pub);
    if (!out.empty()) {
      std::ofstream f(out, std::ios::binary);
      if (!f) throw gzot::ConfigError("cannot write " + out);
      f.write(reinterpret_cast<const char*>(pub.data()), static_cast<std::streamsize>(pub.size()));
    }
    std::cout << j.dump() << std::endl;
    return kExitOk;
  });
}

std::string u128_string(gzot::lwe::u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

json params_json(const gzot::dh::DhSphf& inst, const RunConfig&) {
  const auto& p = inst.group().params();
  return {{"inst", "dh"}, {"preset", p.name}, {"P", p.p.get_str()}, {"Q", p.q.get_str()},
          {"g", p.g.get_str()}, {"element_bytes", p.element_bytes()},
          {"P_bits", mpz_sizeinbase(p.p.get_mpz_t(), 2)}};
}

json params_json(const gzot::lwe::LweSphf& inst, const RunConfig&) {
  const auto& p = inst.params();
  const std::size_t blocks = p.kappa * p.k_amp;
  return {{"inst", "lwe"},
          {"preset", p.name},
          {"n", p.n},
          {"q", p.q},
          {"k_gadget", p.k_gadget},
          {"m_bar", p.m_bar},
          {"m", p.m},
          {"sigma_lwe", p.sigma_lwe},
          {"omega", p.omega},
          {"t", p.t},
          {"s_hk", p.s_hk},
          {"kappa", p.kappa},
          {"rep", p.rep},
          {"ell", p.ell},
          {"k_amp", p.k_amp},
          {"B", p.bound_b()},
          {"B_prime", p.bound_bp()},
          {"B_double_prime", p.bound_bpp()},
          {"B_sq", u128_string(p.b_sq)},
          {"B_prime_sq", u128_string(p.bp_sq)},
          {"B_double_prime_sq", u128_string(p.bpp_sq)},
          {"entry_bytes", p.entry_bytes()},
          {"digest", gzot::to_hex(p.digest())},
          {"block_failure_at_flip_0.25", static_cast<double>(gzot::lwe::repetition_block_failure(p.rep, 0.25L))},
          {"predicted_key_agreement_lower_bound",
           static_cast<double>(1.0L - gzot::lwe::repetition_key_failure_bound(p.rep, blocks, 0.25L))}};
}

int cmd_dump_params(const RunConfig& cfg) {
  return gzot::harness::with_instantiation(cfg, [&](const auto& inst) {
    std::cout << params_json(inst, cfg).dump(2) << std::endl;
    return kExitOk;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gzot: oblivious transfer from smooth projective hashing with grey zone"};
  app.require_subcommand(1);

  Flags f;
  std::string suite, words = "complement", target = "choice", rho = "uniform";
  double plant = 0.5;
  std::string sigma_mode = "S0", rho_mode = "R0", out, port_file;
  bool hex = false;

  auto* run_local = app.add_subcommand("run-local", "run both parties in-process and print the transcript");
  add_common(run_local, f);
  run_local->add_option("--b", f.b, "receiver choice bit");
  run_local->add_option("--m0", f.m0, "sender message 0 (hex)");
  run_local->add_option("--m1", f.m1, "sender message 1 (hex)");

  auto* serve = app.add_subcommand("serve", "act as sender: listen, answer one Flow1, exit");
  add_common(serve, f);
  serve->add_option("--host", f.host, "bind address");
  serve->add_option("--port", f.port, "port (0 picks a free one)");
  serve->add_option("--port-file", port_file, "write the bound port here once listening");
  serve->add_option("--m0", f.m0, "message 0 (hex)");
  serve->add_option("--m1", f.m1, "message 1 (hex)");

  auto* connect = app.add_subcommand("connect", "act as receiver: connect, send Flow1, print m_b");
  add_common(connect, f);
  connect->add_option("--host", f.host, "sender address");
  connect->add_option("--port", f.port, "sender port");
  connect->add_option("--b", f.b, "choice bit");

  auto* estimate = app.add_subcommand("estimate", "run a Monte Carlo estimator suite, print a JSON report");
  add_common(estimate, f);
  estimate->add_option("--suite", suite, "suite name")->required();
  estimate->add_option("--trials", f.trials, "trial count");
  estimate->add_option("--workers", f.workers, "worker threads");
  estimate->add_option("--report", f.report, "append the report to this JSON-lines file");
  estimate->add_option("--words", words, "smoothness-bias words: complement or uniform");
  estimate->add_option("--target", target, "extraction target: choice, messages or uniform-flow1");
  estimate->add_option("--rho", rho, "lwe-half-decomposition rho: uniform or planted");
  estimate->add_option("--plant", plant, "kfold planted-slot probability");

  auto* derive = app.add_subcommand("derive-crs", "derive the CRS for a session id in any mode");
  add_common(derive, f);
  derive->add_option("--sigma-mode", sigma_mode, "S0 or S1");
  derive->add_option("--rho-mode", rho_mode, "R0, R1 or R1prime");
  derive->add_option("--out", out, "write the public CRS bytes to this file");
  derive->add_flag("--hex", hex, "include the public CRS as hex");

  auto* dump = app.add_subcommand("dump-params", "print the parameter preset as JSON");
  add_common(dump, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    const RunConfig cfg = resolve(f);
    if (run_local->parsed()) return cmd_run_local(cfg);
    if (serve->parsed()) return cmd_serve(cfg, port_file);
    if (connect->parsed()) return cmd_connect(cfg);
    if (estimate->parsed()) return cmd_estimate(cfg, suite, {words, target, rho, plant});
    if (derive->parsed()) return cmd_derive_crs(cfg, sigma_mode, rho_mode, out, hex);
    if (dump->parsed()) return cmd_dump_params(cfg);
  } catch (const gzot::ProtocolError& e) {
    std::cerr << "protocol abort: " << e.what() << "\n";
    return kExitAbort;
  } catch (const gzot::harness::TransportError& e) {
    std::cerr << "transport failure: " << e.what() << "\n";
    return kExitAbort;
  } catch (const gzot::DecodeError& e) {
    std::cerr << "decode error: " << e.what() << "\n";
    return kExitDecode;
  } catch (const gzot::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitConfig;
}
