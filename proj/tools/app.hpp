// Copyright 2026 The qrepeater Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QREPEATER_TOOLS_APP_HPP
#define QREPEATER_TOOLS_APP_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrepeater/performance.hpp"

namespace qrep::app {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitGuard = 3;

/// Bad or unknown configuration value; the message names the key.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(const std::string &key, const std::string &what)
      : std::invalid_argument("config key '" + key + "': " + what), key_(key) {}
  const std::string &key() const { return key_; }

 private:
  std::string key_;
};

enum class Scenario { single_eval, sweep, fig6, fig7, sec64, network_verify };
enum class OutputFormat { csv, json };

Scenario parse_scenario(const std::string &s);
const char *to_string(Scenario s);

struct RunConfig {
    Scenario scenario = Scenario::single_eval;
    std::string out;  // empty: stdout
    OutputFormat format = OutputFormat::csv;
    uint64_t seed = 1;
    uint64_t trials = 0;
    RateMode mode = RateMode::exact;
    bool mode_given = false;
    ChainConfig chain;
    std::string code_spec = "steane";
    double f_G = -1;  // total gate rate, split by gate_split when >= 0
    std::string gate_split = "unnoticed";
    std::vector<double> L_values;
    std::vector<std::size_t> N_values;
    std::vector<std::size_t> n_max_values;
    std::vector<double> T_M_values;
    std::vector<std::size_t> w_values;
    std::string network;
    unsigned threads = 0;
    /// Keys that were given explicitly (config file or flag).
    std::map<std::string, std::string> given;
};

/// Every recognised key; each is both a config-file key and a flag.
const std::vector<std::string> &config_keys();

/// "a:b:step" (inclusive) or "a,b,c". Throws ConfigError on empty ranges.
std::vector<double> parse_double_range(const std::string &key, const std::string &text);
std::vector<std::size_t> parse_size_range(const std::string &key, const std::string &text);

/// Merges the JSON config file (if any) with flags (flags win) and applies
/// the scenario presets. Throws ConfigError.
RunConfig build_run_config(const std::map<std::string, std::string> &file_values,
                           const std::map<std::string, std::string> &flag_values);
std::map<std::string, std::string> read_config_file(const std::string &path);

/// Runs one scenario and writes the table to `out`. Returns an exit code.
int run(const RunConfig &cfg, std::ostream &out, std::ostream &err);
/// Full command line entry point.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qrep::app

#endif
