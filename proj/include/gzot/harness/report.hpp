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


#ifndef GZOT_HARNESS_REPORT_HPP_
#define GZOT_HARNESS_REPORT_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <string>

#include <json.hpp>

#include "gzot/common/errors.hpp"

namespace gzot::harness {

/// 95% Wilson score interval for k successes in n trials.
struct WilsonInterval {
  double lo = 0;
  double hi = 0;
  [[nodiscard]] double radius() const { return (hi - lo) / 2; }
};

inline WilsonInterval wilson_interval(std::uint64_t k, std::uint64_t n, double z = 1.959963984540054) {
  if (n == 0) return {0.0, 1.0};
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(k) / nn;
  const double z2 = z * z;
  const double denom = 1 + z2 / nn;
  const double centre = (p + z2 / (2 * nn)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

struct TrialReport {
  std::string suite;
  std::string inst;
  std::string preset;
  std::string property;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t seed = 0;
  double wall_time_ms = 0;
  nlohmann::json extra = nlohmann::json::object();

  [[nodiscard]] double rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
  }
  [[nodiscard]] WilsonInterval interval() const { return wilson_interval(successes, trials); }

  [[nodiscard]] nlohmann::json to_json() const {
    const auto ci = interval();
    nlohmann::json j = {
        {"suite", suite},       {"inst", inst},         {"preset", preset},
        {"property", property}, {"trials", trials},     {"successes", successes},
        {"rate", rate()},       {"radius", ci.radius()}, {"ci_lo", ci.lo},
        {"ci_hi", ci.hi},       {"wall_time_ms", wall_time_ms}, {"seed", seed},
    };
    if (!extra.empty()) j["extra"] = extra;
    return j;
  }

  [[nodiscard]] std::string json_line() const { return to_json().dump(); }
};

/// Appends one JSON line; never truncates an existing report file.
inline void append_report(const std::string& path, const TrialReport& report) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw ConfigError("cannot open report file " + path);
  out << report.json_line() << '\n';
}

}  // namespace gzot::harness

#endif  // GZOT_HARNESS_REPORT_HPP_
