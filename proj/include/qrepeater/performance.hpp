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

#ifndef QREPEATER_PERFORMANCE_HPP
#define QREPEATER_PERFORMANCE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qrepeater/css_code.hpp"
#include "qrepeater/error_model.hpp"
#include "qrepeater/logical_rates.hpp"
#include "qrepeater/rates.hpp"

namespace qrep {

enum class CircuitVariant { single_qubit, two_qubit };

enum class RateMode {
    exact,             // closed-form station rates
    first_order,       // linear unnoticed rate, exact noticed rate
    first_order_full,  // both rates linearized
};

enum class PsuccMode {
    per_block,    // success probability of one decoded block
    per_station,  // one factor per measured station
};

const char *to_string(CircuitVariant v);
const char *to_string(RateMode m);
const char *to_string(PsuccMode m);
CircuitVariant parse_circuit_variant(const std::string &s);
RateMode parse_rate_mode(const std::string &s);
PsuccMode parse_psucc_mode(const std::string &s);

/// Maps block-level (f_u, f_n) to (f̄_u, P_succ) for one code and policy.
/// Enumerates once on construction; the [[23,1,7]] code without abortion
/// uses its closed form instead.
class LogicalRateModel {
 public:
  LogicalRateModel(const CssCode &code, const AbortPolicy &policy, TieMode tie = TieMode::average);
  LogicalRates operator()(double f_u, double f_n) const;
  bool closed_form() const { return closed_form_; }
  std::size_t n() const { return n_; }

 private:
  std::size_t n_ = 0;
  bool closed_form_ = false;
  TieMode tie_ = TieMode::average;
  LogicalCounts counts_;
};

struct ChainConfig {
    double L = 100;         // km
    std::size_t N = 4;      // stations, endpoints included
    CssCode code;
    AbortPolicy policy;
    FailureRates rates;     // f_T_n is replaced by the channel loss
    std::optional<double> f_T_n_override;
    double L_att = 20;      // km
    double f_C_n = 0;
    double T_M = 1;         // s
    CircuitVariant variant = CircuitVariant::single_qubit;
    std::optional<FailureRates> flying_rates;  // two-qubit variant only
    PsuccMode psucc = PsuccMode::per_block;
    TieMode tie = TieMode::average;

    /// check_code = false skips the (costly) code and policy checks.
    void validate(bool check_code = true) const;
    double spacing() const { return L / double(N - 1); }
};

struct PerformanceReport {
    double L = 0;
    std::size_t N = 0;
    std::size_t n = 0;
    std::string code;
    std::string policy;
    std::string mode;
    std::string variant;
    double f_T_n = 0;
    double f_u = 0, f_n = 0;      // physical (stationary qubit for two-qubit)
    double f_u_f = 0, f_n_f = 0;  // flying qubit, two-qubit only
    double fbar_u = 0;    // logical error rate among accepted blocks
    double fbar_u_f = 0;
    double p_succ_block = 0;
    double p_succ_total = 0;
    double e_A = 0, e_B = 0;
    double F = 0;
    double r_inf = 0;
    double R_raw = 0;
    double R_QKD = 0;
    double C_prime = 0;  // +inf when R_QKD = 0
    bool outside_regime = false;
};

/// e_A = e_B = P_odd(f̄_u, floor((N-2)/2)).
std::pair<double, double> final_state_errors(double fbar_u, std::size_t N);
double fidelity(double e_A, double e_B);
/// h(p) with h(0) = h(1) = 0.
double binary_entropy(double p);
double secret_fraction(double e_A, double e_B);

struct KeyRate {
    double R_raw = 0;
    double R_QKD = 0;
    double C_prime = 0;
};
/// R_raw = P_succ/T_M, R_QKD = R_raw r_inf, C' = qubits/(R_QKD L).
KeyRate key_rate_and_cost(double p_succ_total, double T_M, double r_inf, double qubits, double L);

/// Full pipeline. `model` may be shared across calls with the same code and
/// policy; it is built on demand otherwise.
PerformanceReport evaluate_chain(const ChainConfig &cfg, RateMode mode,
                                 const LogicalRateModel *model = nullptr);

struct SweepResult {
    std::vector<PerformanceReport> grid;  // code-major, then n_max, then N
    std::size_t best = 0;
};

/// Every (code, n_max, N) point; best = first minimum of C'.
SweepResult sweep_optimize(const ChainConfig &base, const std::vector<CssCode> &codes,
                           const std::vector<std::size_t> &n_max_values, const std::vector<std::size_t> &N_values,
                           RateMode mode, unsigned threads = 0);

/// Stand-in two-way scheme (not from the one-way analysis): deterministic
/// entanglement swapping over 2^Ñ segments, heralded elementary links,
/// Werner-state noise, no distillation.
struct TwoWayConfig {
    std::size_t nesting = 0;  // Ñ
    std::size_t distill = 0;  // k̃, must be 0
    double L = 100;
    double T_M = 1e-5;
    double f_G = 0;
    double c = 2e5;  // km/s
    double beta = 1;
    double L_att = 20;
    double f_C_n = 0;

    void validate() const;
};

struct TwoWayReport {
    std::size_t nesting = 0;
    double L0 = 0;
    double T0 = 0;
    double F0 = 0;
    double qubits = 0;
    double fidelity = 0;
    double time_per_pair = 0;
    double r_inf = 0;
    double R_QKD = 0;
    double C_prime = 0;
};

TwoWayReport twoway_baseline(const TwoWayConfig &cfg);
/// Lowest-cost nesting level in 0..max_nesting.
TwoWayReport twoway_optimize(TwoWayConfig cfg, std::size_t max_nesting = 12);

/// One CSV row per report; the header line names the same fields as JSON.
std::string report_csv_header();
std::string report_csv_row(const PerformanceReport &r);
std::string report_json(const PerformanceReport &r);

}  // namespace qrep

#endif
