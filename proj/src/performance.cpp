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

#include "qrepeater/performance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "qrepeater/parallel.hpp"

namespace qrep {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp01(double x, bool &clamped) {
    if (x < 0.0) {
        clamped = true;
        return 0.0;
    }
    if (x > 1.0) {
        clamped = true;
        return 1.0;
    }
    return x;
}

std::string policy_name(const AbortPolicy &p) {
    if (p.kind == AbortPolicy::Kind::custom) {
        return "custom";
    }
    return "n_max=" + std::to_string(p.n_max);
}

std::string fmt(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// error rate among accepted blocks
double conditional_rate(const LogicalRates &lr) { return lr.p_succ > 0 ? std::min(1.0, lr.fbar_u / lr.p_succ) : 0.0; }

bool is_golay_without_abort(const CssCode &code, const AbortPolicy &policy) {
    return code.name == "golay" && code.n == 23 && policy.kind == AbortPolicy::Kind::max_losses &&
           policy.n_max == code.n;
}

}  // namespace

const char *to_string(CircuitVariant v) { return v == CircuitVariant::single_qubit ? "single-qubit" : "two-qubit"; }

const char *to_string(RateMode m) {
    switch (m) {
        case RateMode::exact:
            return "exact";
        case RateMode::first_order:
            return "first-order";
        case RateMode::first_order_full:
            return "first-order-full";
    }
    return "?";
}

const char *to_string(PsuccMode m) { return m == PsuccMode::per_block ? "per-block" : "per-station"; }

CircuitVariant parse_circuit_variant(const std::string &s) {
    if (s == "single-qubit" || s == "single") {
        return CircuitVariant::single_qubit;
    }
    if (s == "two-qubit" || s == "two") {
        return CircuitVariant::two_qubit;
    }
    throw std::invalid_argument("unknown circuit variant '" + s + "'");
}

RateMode parse_rate_mode(const std::string &s) {
    if (s == "exact") {
        return RateMode::exact;
    }
    if (s == "first-order" || s == "first_order") {
        return RateMode::first_order;
    }
    if (s == "first-order-full" || s == "first_order_full") {
        return RateMode::first_order_full;
    }
    throw std::invalid_argument("unknown mode '" + s + "'");
}

PsuccMode parse_psucc_mode(const std::string &s) {
    if (s == "per-block") {
        return PsuccMode::per_block;
    }
    if (s == "per-station") {
        return PsuccMode::per_station;
    }
    throw std::invalid_argument("unknown psucc mode '" + s + "'");
}

LogicalRateModel::LogicalRateModel(const CssCode &code, const AbortPolicy &policy, TieMode tie)
    : n_(code.n), tie_(tie) {
    policy.validate(code.n);
    if (is_golay_without_abort(code, policy)) {
        closed_form_ = true;
        return;
    }
    if (code.k != 1) {
        throw std::invalid_argument("rate model supports k = 1 codes only");
    }
    counts_ = enumerate_logical_errors(code, policy);
}

LogicalRates LogicalRateModel::operator()(double f_u, double f_n) const {
    if (closed_form_) {
        return golay_logical_error_rate(f_u, f_n);
    }
    LogicalRates r;
    r.fbar_u = evaluate_counts(counts_.errors(tie_), n_, f_u, f_n);
    r.p_succ = evaluate_masks(counts_.masks, n_, f_n);
    return r;
}

void ChainConfig::validate(bool check_code) const {
    if (!(L > 0)) {
        throw std::invalid_argument("L must be positive");
    }
    if (N < 3) {
        throw std::invalid_argument("N must be at least 3");
    }
    if (!(T_M > 0)) {
        throw std::invalid_argument("T_M must be positive");
    }
    if (!(L_att > 0)) {
        throw std::invalid_argument("L_att must be positive");
    }
    if (!(f_C_n >= 0 && f_C_n <= 1)) {
        throw std::invalid_argument("f_C_n outside [0,1]");
    }
    if (f_T_n_override && !(*f_T_n_override >= 0 && *f_T_n_override <= 1)) {
        throw std::invalid_argument("f_T_n outside [0,1]");
    }
    rates.validate();
    if (flying_rates) {
        flying_rates->validate();
    }
    if (check_code) {
        code.validate();
        policy.validate(code.n);
    }
}

std::pair<double, double> final_state_errors(double fbar_u, std::size_t N) {
    if (N < 3) {
        throw std::invalid_argument("N must be at least 3");
    }
    double e = p_odd(fbar_u, (N - 2) / 2);
    return {e, e};
}

double fidelity(double e_A, double e_B) { return (1 - e_A) * (1 - e_B); }

double binary_entropy(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("binary entropy needs p in [0,1]");
    }
    if (p == 0.0 || p == 1.0) {
        return 0.0;
    }
    return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

double secret_fraction(double e_A, double e_B) {
    return std::max(1.0 - binary_entropy(e_A) - binary_entropy(e_B), 0.0);
}

KeyRate key_rate_and_cost(double p_succ_total, double T_M, double r_inf, double qubits, double L) {
    if (!(T_M > 0) || !(L > 0)) {
        throw std::invalid_argument("T_M and L must be positive");
    }
    KeyRate k;
    k.R_raw = p_succ_total / T_M;
    k.R_QKD = k.R_raw * r_inf;
    k.C_prime = k.R_QKD > 0 ? qubits / (k.R_QKD * L) : kInf;
    return k;
}

PerformanceReport evaluate_chain(const ChainConfig &cfg, RateMode mode, const LogicalRateModel *model) {
    cfg.validate(model == nullptr);
    std::unique_ptr<LogicalRateModel> owned;
    if (!model) {
        owned = std::make_unique<LogicalRateModel>(cfg.code, cfg.policy, cfg.tie);
        model = owned.get();
    } else if (model->n() != cfg.code.n) {
        throw std::invalid_argument("logical rate model built for a different block size");
    }
    PerformanceReport rep;
    rep.L = cfg.L;
    rep.N = cfg.N;
    rep.n = cfg.code.n;
    rep.code = cfg.code.name;
    rep.policy = policy_name(cfg.policy);
    rep.mode = to_string(mode);
    rep.variant = to_string(cfg.variant);

    ChannelParams ch;
    ch.L0 = cfg.spacing();
    ch.L_att = cfg.L_att;
    ch.f_C_n = cfg.f_C_n;
    rep.f_T_n = cfg.f_T_n_override ? *cfg.f_T_n_override : transmission_loss(ch);

    FailureRates r = cfg.rates;
    r.f_T_n = rep.f_T_n;
    rep.outside_regime = r.outside_model_regime();
    bool clamped = false;
    double qubits = double(cfg.N) * double(cfg.code.n);

    if (cfg.variant == CircuitVariant::single_qubit) {
        PhysicalRates pr;
        switch (mode) {
            case RateMode::exact:
                pr = physical_rates_single(r);
                break;
            case RateMode::first_order:
                pr = first_order_unnoticed_rates(r);
                break;
            case RateMode::first_order_full:
                pr = first_order_rates(r);
                break;
        }
        rep.f_u = clamp01(pr.f_u, clamped);
        rep.f_n = clamp01(pr.f_n, clamped);
        LogicalRates lr = (*model)(rep.f_u, rep.f_n);
        rep.fbar_u = conditional_rate(lr);
        rep.p_succ_block = lr.p_succ;
        auto [ea, eb] = final_state_errors(rep.fbar_u, cfg.N);
        rep.e_A = ea;
        rep.e_B = eb;
        rep.p_succ_total =
            cfg.psucc == PsuccMode::per_block ? lr.p_succ : std::pow(lr.p_succ, double(cfg.N - 2));
    } else {
        StationFlavoredRates sr;
        sr.stationary = cfg.rates;
        sr.flying = cfg.flying_rates ? *cfg.flying_rates : cfg.rates;
        sr.flying.f_T_n = rep.f_T_n;
        rep.outside_regime = sr.stationary.outside_model_regime() || sr.flying.outside_model_regime();
        TwoQubitRates tr;
        switch (mode) {
            case RateMode::exact:
                tr = physical_rates_two_qubit(sr);
                break;
            case RateMode::first_order: {
                tr = physical_rates_two_qubit(sr);
                TwoQubitRates lin = first_order_two_qubit(sr);
                tr.f_q_s = lin.f_q_s;
                tr.f_q_f = lin.f_q_f;
                break;
            }
            case RateMode::first_order_full:
                tr = first_order_two_qubit(sr);
                break;
        }
        rep.f_u = clamp01(tr.f_q_s, clamped);
        rep.f_n = clamp01(tr.f_l_s, clamped);
        rep.f_u_f = clamp01(tr.f_q_f, clamped);
        rep.f_n_f = clamp01(tr.f_l_f, clamped);
        LogicalRates ls = (*model)(rep.f_u, rep.f_n);
        LogicalRates lf = (*model)(rep.f_u_f, rep.f_n_f);
        rep.fbar_u = conditional_rate(ls);
        rep.fbar_u_f = conditional_rate(lf);
        rep.p_succ_block = ls.p_succ * lf.p_succ;
        // the two main stabilizers collect the stationary and the flying
        // measurements respectively
        rep.e_A = p_odd(rep.fbar_u, cfg.N - 2);
        rep.e_B = p_odd(rep.fbar_u_f, cfg.N - 1);
        rep.p_succ_total = cfg.psucc == PsuccMode::per_block
                               ? rep.p_succ_block
                               : std::pow(ls.p_succ, double(cfg.N - 2)) * std::pow(lf.p_succ, double(cfg.N - 1));
        qubits *= 2;
    }
    rep.outside_regime = rep.outside_regime || clamped || rep.f_u > 0.5 || rep.f_u_f > 0.5;
    rep.F = fidelity(rep.e_A, rep.e_B);
    rep.r_inf = secret_fraction(rep.e_A, rep.e_B);
    KeyRate k = key_rate_and_cost(rep.p_succ_total, cfg.T_M, rep.r_inf, qubits, cfg.L);
    rep.R_raw = k.R_raw;
    rep.R_QKD = k.R_QKD;
    rep.C_prime = k.C_prime;
    return rep;
}

SweepResult sweep_optimize(const ChainConfig &base, const std::vector<CssCode> &codes,
                           const std::vector<std::size_t> &n_max_values, const std::vector<std::size_t> &N_values,
                           RateMode mode, unsigned threads) {
    if (codes.empty() || n_max_values.empty() || N_values.empty()) {
        throw std::invalid_argument("sweep grid is empty");
    }
    std::vector<std::unique_ptr<LogicalRateModel>> models;
    std::vector<ChainConfig> configs;
    for (const auto &code : codes) {
        code.validate();
        for (std::size_t n_max : n_max_values) {
            ChainConfig c = base;
            c.code = code;
            c.policy = AbortPolicy::max_losses(n_max);
            models.push_back(std::make_unique<LogicalRateModel>(c.code, c.policy, c.tie));
            for (std::size_t N : N_values) {
                c.N = N;
                c.validate(false);
                configs.push_back(c);
            }
        }
    }
    SweepResult out;
    out.grid.resize(configs.size());
    const std::size_t per_model = N_values.size();
    parallel_for(
        configs.size(),
        [&](std::size_t i) { out.grid[i] = evaluate_chain(configs[i], mode, models[i / per_model].get()); },
        threads);
    for (std::size_t i = 1; i < out.grid.size(); i++) {
        if (out.grid[i].C_prime < out.grid[out.best].C_prime) {
            out.best = i;
        }
    }
    return out;
}

void TwoWayConfig::validate() const {
    if (distill != 0) {
        throw std::invalid_argument("the two-way stand-in model has no distillation (k = 0)");
    }
    if (!(L > 0) || !(T_M >= 0) || !(c > 0) || !(beta >= 0) || !(L_att > 0)) {
        throw std::invalid_argument("two-way config: L, c, L_att must be positive, T_M and beta non-negative");
    }
    if (!(f_G >= 0 && f_G <= 1) || !(f_C_n >= 0 && f_C_n <= 1)) {
        throw std::invalid_argument("two-way config: rates outside [0,1]");
    }
    if (nesting > 40) {
        throw std::invalid_argument("nesting level too large");
    }
}

TwoWayReport twoway_baseline(const TwoWayConfig &cfg) {
    cfg.validate();
    TwoWayReport r;
    r.nesting = cfg.nesting;
    double segments = std::ldexp(1.0, int(cfg.nesting));
    r.L0 = cfg.L / segments;
    r.T0 = cfg.beta * r.L0 / cfg.c + cfg.T_M;
    r.F0 = 1 - 0.75 * cfg.f_G;
    r.qubits = std::ldexp(1.0, int(cfg.nesting + cfg.distill + 1));
    double p = (1 - cfg.f_C_n) * std::exp(-r.L0 / cfg.L_att);
    // expected time per elementary link, then per swapping level: wait for
    // the slower of two halves (factor 3/2) plus the classical message
    double t = p > 0 ? r.T0 / p : std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j <= cfg.nesting; j++) {
        t = 1.5 * t + std::ldexp(r.L0, int(j - 1)) / cfg.c;
    }
    r.time_per_pair = t;
    double w0 = (4 * r.F0 - 1) / 3;
    double w = std::pow(w0, segments);
    double e = (1 - w) / 2;
    r.fidelity = 1 - 1.5 * (1 - w) / 2;
    r.r_inf = secret_fraction(e, e);
    r.R_QKD = std::isinf(t) ? 0.0 : r.r_inf / t;
    r.C_prime = r.R_QKD > 0 ? r.qubits / (r.R_QKD * cfg.L) : kInf;
    return r;
}

TwoWayReport twoway_optimize(TwoWayConfig cfg, std::size_t max_nesting) {
    TwoWayReport best;
    best.C_prime = kInf;
    bool first = true;
    for (std::size_t k = 0; k <= max_nesting; k++) {
        cfg.nesting = k;
        TwoWayReport r = twoway_baseline(cfg);
        if (first || r.C_prime < best.C_prime) {
            best = r;
            first = false;
        }
    }
    return best;
}

std::string report_csv_header() {
    return "L,N,n,code,policy,mode,variant,f_T_n,f_u,f_n,f_u_f,f_n_f,fbar_u,fbar_u_f,p_succ_block,p_succ_total,"
           "e_A,e_B,F,r_inf,R_raw,R_QKD,C_prime,outside_regime";
}

std::string report_csv_row(const PerformanceReport &r) {
    std::string s;
    for (const std::string &v :
         {fmt(r.L), std::to_string(r.N), std::to_string(r.n), r.code, r.policy, r.mode, r.variant, fmt(r.f_T_n),
          fmt(r.f_u), fmt(r.f_n), fmt(r.f_u_f), fmt(r.f_n_f), fmt(r.fbar_u), fmt(r.fbar_u_f), fmt(r.p_succ_block),
          fmt(r.p_succ_total), fmt(r.e_A), fmt(r.e_B), fmt(r.F), fmt(r.r_inf), fmt(r.R_raw), fmt(r.R_QKD),
          fmt(r.C_prime), std::string(r.outside_regime ? "1" : "0")}) {
        if (!s.empty()) {
            s += ',';
        }
        s += v;
    }
    return s;
}

std::string report_json(const PerformanceReport &r) {
    nlohmann::ordered_json j;
    j["L"] = r.L;
    j["N"] = r.N;
    j["n"] = r.n;
    j["code"] = r.code;
    j["policy"] = r.policy;
    j["mode"] = r.mode;
    j["variant"] = r.variant;
    j["f_T_n"] = r.f_T_n;
    j["f_u"] = r.f_u;
    j["f_n"] = r.f_n;
    j["f_u_f"] = r.f_u_f;
    j["f_n_f"] = r.f_n_f;
    j["fbar_u"] = r.fbar_u;
    j["fbar_u_f"] = r.fbar_u_f;
    j["p_succ_block"] = r.p_succ_block;
    j["p_succ_total"] = r.p_succ_total;
    j["e_A"] = r.e_A;
    j["e_B"] = r.e_B;
    j["F"] = r.F;
    j["r_inf"] = r.r_inf;
    j["R_raw"] = r.R_raw;
    j["R_QKD"] = r.R_QKD;
    if (std::isinf(r.C_prime)) {
        j["C_prime"] = "inf";
    } else {
        j["C_prime"] = r.C_prime;
    }
    j["outside_regime"] = r.outside_regime;
    return j.dump();
}

}  // namespace qrep
