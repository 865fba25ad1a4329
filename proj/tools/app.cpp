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

#include "app.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qrepeater/circuit.hpp"
#include "qrepeater/monte_carlo.hpp"
#include "qrepeater/network.hpp"

namespace qrep::app {

namespace {

using Row = nlohmann::ordered_json;

const std::map<std::string, std::string> &key_help() {
    static const std::map<std::string, std::string> help = {
        {"scenario", "single-eval | sweep | fig6 | fig7 | sec64 | network-verify"},
        {"config", "flat JSON file of key/value pairs; flags override it"},
        {"out", "output path (default: stdout)"},
        {"format", "csv | json"},
        {"seed", "Monte Carlo seed"},
        {"trials", "Monte Carlo trials (0 = none)"},
        {"mode", "exact | first-order | first-order-full"},
        {"fPu", "unnoticed preparation failure rate"},
        {"fPn", "noticed preparation failure rate"},
        {"fGu", "unnoticed gate failure rate"},
        {"fGn", "noticed gate failure rate"},
        {"fG", "total gate failure rate, split by gate-split"},
        {"fTu", "unnoticed transmission failure rate"},
        {"fTn", "noticed transmission rate (default: from L0, L-att, fCn)"},
        {"fMu", "unnoticed measurement failure rate"},
        {"fMn", "noticed measurement failure rate"},
        {"fCn", "coupling loss"},
        {"L", "total distance in km"},
        {"N", "stations including both endpoints"},
        {"w", "repeater stations between the endpoints (N = w + 2); list allowed"},
        {"L-att", "attenuation length in km"},
        {"T-M", "measurement time in s"},
        {"code", "steane | golay | path to a code file"},
        {"n-max", "maximal tolerated losses per block"},
        {"variant", "single-qubit | two-qubit"},
        {"gate-split", "how fG is split: unnoticed | noticed | both"},
        {"psucc", "per-block | per-station"},
        {"tie", "average | lexicographic decoder tie scoring"},
        {"L-range", "distances, a:b:step or a,b,c"},
        {"N-range", "station counts, a:b:step or a,b,c"},
        {"n-max-range", "n_max values, a:b:step or a,b,c"},
        {"T-M-range", "measurement times, a,b,c"},
        {"network", "edge-list file for network-verify"},
        {"threads", "worker threads (0 = all cores)"},
    };
    return help;
}

std::string trim(const std::string &s) {
    auto a = s.find_first_not_of(" \t");
    auto b = s.find_last_not_of(" \t");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

double to_double(const std::string &key, const std::string &text) {
    std::string t = trim(text);
    try {
        std::size_t pos = 0;
        double v = std::stod(t, &pos);
        if (pos != t.size() || !std::isfinite(v)) {
            throw std::invalid_argument(t);
        }
        return v;
    } catch (const std::exception &) {
        throw ConfigError(key, "expected a number, got '" + text + "'");
    }
}

uint64_t to_uint(const std::string &key, const std::string &text) {
    std::string t = trim(text);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
        throw ConfigError(key, "expected a non-negative integer, got '" + text + "'");
    }
    try {
        return std::stoull(t);
    } catch (const std::exception &) {
        throw ConfigError(key, "integer out of range: '" + text + "'");
    }
}

double probability(const std::string &key, const std::string &text) {
    double v = to_double(key, text);
    if (v < 0 || v > 1) {
        throw ConfigError(key, "probability must lie in [0,1], got " + text);
    }
    return v;
}

std::string fmt(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string cell(const Row &v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_boolean()) {
        return v.get<bool>() ? "1" : "0";
    }
    if (v.is_number_unsigned()) {
        return std::to_string(v.get<uint64_t>());
    }
    if (v.is_number_integer()) {
        return std::to_string(v.get<int64_t>());
    }
    if (v.is_number()) {
        return fmt(v.get<double>());
    }
    return v.dump();
}

Row number_or_inf(double v) {
    if (std::isinf(v)) {
        return "inf";
    }
    return v;
}

Row report_row(const PerformanceReport &r) { return Row::parse(report_json(r)); }

void write_table(const RunConfig &cfg, const std::vector<Row> &rows, std::ostream &out) {
    if (cfg.format == OutputFormat::json) {
        Row doc;
        doc["schema"] = 1;
        doc["scenario"] = to_string(cfg.scenario);
        doc["seed"] = cfg.seed;
        doc["trials"] = cfg.trials;
        doc["rows"] = rows;
        out << doc.dump(1) << "\n";
        return;
    }
    out << "# schema=1\n";
    if (rows.empty()) {
        return;
    }
    bool first = true;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
        out << (first ? "" : ",") << it.key();
        first = false;
    }
    out << "\n";
    for (const auto &row : rows) {
        first = true;
        for (auto it = row.begin(); it != row.end(); ++it) {
            out << (first ? "" : ",") << cell(it.value());
            first = false;
        }
        out << "\n";
    }
}

CssCode load_code(const std::string &spec) {
    if (spec == "steane") {
        return steane_code();
    }
    if (spec == "golay") {
        return golay_code();
    }
    try {
        return read_css_code_file(spec);
    } catch (const std::invalid_argument &e) {
        throw ConfigError("code", e.what());
    }
}

// Monte Carlo cross-check of the station rates used by a single evaluation:
// interior station of a six-station line (or the two-qubit chain).
void add_station_monte_carlo(const RunConfig &cfg, const PerformanceReport &rep, Row &row) {
    FailureRates r = cfg.chain.rates;
    r.f_T_n = rep.f_T_n;
    StationEstimate est;
    if (cfg.chain.variant == CircuitVariant::single_qubit) {
        Circuit c = build_line_circuit(6, LineOrdering::sequential);
        est = monte_carlo_station_rates(c, r, 3, cfg.trials, cfg.seed);
    } else {
        StationFlavoredRates sr;
        sr.stationary = cfg.chain.rates;
        sr.flying = cfg.chain.flying_rates ? *cfg.chain.flying_rates : cfg.chain.rates;
        sr.flying.f_T_n = rep.f_T_n;
        Circuit c = build_two_qubit_line_circuit(4);
        est = monte_carlo_station_rates(c, sr, 5, cfg.trials, cfg.seed);
    }
    row["mc_f_u"] = est.f_u;
    row["mc_se_u"] = est.se_u;
    row["mc_f_n"] = est.f_n;
    row["mc_se_n"] = est.se_n;
    LogicalMonteCarlo lm =
        monte_carlo_logical_rate(cfg.chain.code, cfg.chain.policy, rep.f_u, rep.f_n, cfg.trials, cfg.seed + 1);
    row["mc_fbar_u"] = lm.fbar_u;
    row["mc_se_fbar_u"] = lm.se_fbar;
    row["mc_p_succ"] = lm.p_succ;
    row["seed"] = cfg.seed;
    row["trials"] = cfg.trials;
}

std::vector<Row> scenario_single(const RunConfig &cfg) {
    std::vector<Row> rows;
    for (RateMode m : std::vector<RateMode>{cfg.mode}) {
        PerformanceReport rep = evaluate_chain(cfg.chain, m);
        Row row = report_row(rep);
        if (cfg.trials > 0) {
            add_station_monte_carlo(cfg, rep, row);
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<Row> scenario_sweep(const RunConfig &cfg) {
    std::vector<Row> rows;
    CssCode code = cfg.chain.code;
    for (double L : cfg.L_values) {
        ChainConfig base = cfg.chain;
        base.L = L;
        SweepResult res = sweep_optimize(base, {code}, cfg.n_max_values, cfg.N_values, cfg.mode, cfg.threads);
        for (std::size_t i = 0; i < res.grid.size(); i++) {
            Row row = report_row(res.grid[i]);
            row["best"] = i == res.best;
            rows.push_back(row);
        }
    }
    return rows;
}

// Best N per (L, n_max).
std::vector<Row> scenario_fig6(const RunConfig &cfg) {
    std::vector<Row> rows;
    for (double L : cfg.L_values) {
        ChainConfig base = cfg.chain;
        base.L = L;
        std::vector<PerformanceReport> best_per_nmax;
        for (std::size_t n_max : cfg.n_max_values) {
            SweepResult res = sweep_optimize(base, {cfg.chain.code}, {n_max}, cfg.N_values, cfg.mode, cfg.threads);
            best_per_nmax.push_back(res.grid[res.best]);
        }
        std::size_t winner = 0;
        for (std::size_t i = 1; i < best_per_nmax.size(); i++) {
            if (best_per_nmax[i].C_prime < best_per_nmax[winner].C_prime) {
                winner = i;
            }
        }
        for (std::size_t i = 0; i < best_per_nmax.size(); i++) {
            Row row = report_row(best_per_nmax[i]);
            row["n_max"] = cfg.n_max_values[i];
            row["best"] = i == winner;
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<Row> scenario_fig7(const RunConfig &cfg) {
    std::vector<Row> rows;
    for (double T_M : cfg.T_M_values) {
        for (double L : cfg.L_values) {
            ChainConfig base = cfg.chain;
            base.L = L;
            base.T_M = T_M;
            SweepResult res = sweep_optimize(base, {cfg.chain.code}, cfg.n_max_values, cfg.N_values, cfg.mode,
                                             cfg.threads);
            const PerformanceReport &one = res.grid[res.best];
            Row a;
            a["scheme"] = "one-way";
            a["L"] = L;
            a["T_M"] = T_M;
            a["N"] = one.N;
            a["nesting"] = 0;
            a["qubits"] = double(one.N * one.n);
            a["r_inf"] = one.r_inf;
            a["R_QKD"] = one.R_QKD;
            a["C_prime"] = number_or_inf(one.C_prime);
            a["code"] = one.code;
            a["policy"] = one.policy;
            a["mode"] = one.mode;
            rows.push_back(a);

            TwoWayConfig tw;
            tw.L = L;
            tw.T_M = T_M;
            tw.f_G = cfg.chain.rates.f_G_u + cfg.chain.rates.f_G_n;
            tw.L_att = cfg.chain.L_att;
            tw.f_C_n = cfg.chain.f_C_n;
            TwoWayReport two = twoway_optimize(tw);
            Row b;
            b["scheme"] = "two-way-stand-in";
            b["L"] = L;
            b["T_M"] = T_M;
            b["N"] = (std::size_t{1} << two.nesting) + 1;
            b["nesting"] = two.nesting;
            b["qubits"] = two.qubits;
            b["r_inf"] = two.r_inf;
            b["R_QKD"] = two.R_QKD;
            b["C_prime"] = number_or_inf(two.C_prime);
            b["code"] = "none";
            b["policy"] = "none";
            b["mode"] = "stand-in";
            rows.push_back(b);
        }
    }
    return rows;
}

std::vector<Row> scenario_sec64(const RunConfig &cfg) {
    std::vector<Row> rows;
    std::vector<RateMode> modes = cfg.mode_given ? std::vector<RateMode>{cfg.mode}
                                                 : std::vector<RateMode>{RateMode::exact, RateMode::first_order};
    LogicalRateModel model(cfg.chain.code, cfg.chain.policy, cfg.chain.tie);
    for (std::size_t w : cfg.w_values) {
        for (RateMode m : modes) {
            ChainConfig c = cfg.chain;
            c.N = w + 2;
            c.validate();
            Row row = report_row(evaluate_chain(c, m, &model));
            row["w"] = w;
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<Row> scenario_network(const RunConfig &cfg, bool &ok, std::ostream &err) {
    EdgeListFile f;
    try {
        f = read_edge_list_file(cfg.network);
    } catch (const std::invalid_argument &e) {
        throw ConfigError("network", e.what());
    }
    NetworkSpec spec;
    try {
        spec = NetworkSpec::from_edge_list(f);
    } catch (const std::invalid_argument &e) {
        throw ConfigError("network", e.what());
    }
    AugmentedGraph ag = insert_repeaters(spec);
    NetworkVerification v = verify_network_state(ag);
    ok = v.ok;
    if (!v.ok) {
        err << "network state verification failed: " << v.failure << "\n";
    }
    FailureRates r = cfg.chain.rates;
    if (cfg.chain.f_T_n_override) {
        r.f_T_n = *cfg.chain.f_T_n_override;
    }
    std::vector<Row> rows;
    for (const auto &s : network_station_rates(ag, r)) {
        Row row;
        row["vertex"] = s.vertex;
        auto label = ag.graph.label(s.vertex);
        row["label"] = label ? *label : "";
        row["role"] = s.role == VertexRole::party ? "party" : "repeater";
        row["deg"] = s.profile.deg;
        row["deg_in"] = s.profile.deg_in;
        row["deg_out"] = s.profile.deg_out;
        row["measured"] = s.measured;
        row["f_u"] = s.f_u;
        row["f_n"] = s.f_n;
        row["verified"] = v.ok;
        row["patterns"] = v.outcomes.size();
        row["oracle_checked"] = v.oracle_checked;
        row["mode"] = "exact";
        rows.push_back(row);
    }
    return rows;
}

template <typename T>
std::vector<T> parse_range(const std::string &key, const std::string &text, T (*conv)(const std::string &,
                                                                                     const std::string &)) {
    std::vector<T> out;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        std::string p;
        while (std::getline(ss, p, ':')) {
            parts.push_back(p);
        }
        if (parts.size() != 2 && parts.size() != 3) {
            throw ConfigError(key, "range must be a:b or a:b:step, got '" + text + "'");
        }
        T a = conv(key, parts[0]);
        T b = conv(key, parts[1]);
        T step = parts.size() == 3 ? conv(key, parts[2]) : T(1);
        if (!(step > T(0))) {
            throw ConfigError(key, "range step must be positive");
        }
        if (a > b) {
            throw ConfigError(key, "empty range '" + text + "'");
        }
        for (std::size_t k = 0;; k++) {
            T v = T(a + T(k) * step);
            if (v > b + (std::is_floating_point_v<T> ? T(1e-9) * std::abs(double(step)) : T(0))) {
                break;
            }
            out.push_back(v);
            if (out.size() > 10000000) {
                throw ConfigError(key, "range too large");
            }
        }
    } else {
        std::stringstream ss(text);
        std::string p;
        while (std::getline(ss, p, ',')) {
            if (!trim(p).empty()) {
                out.push_back(conv(key, p));
            }
        }
    }
    if (out.empty()) {
        throw ConfigError(key, "empty range '" + text + "'");
    }
    return out;
}

double conv_double(const std::string &key, const std::string &text) { return to_double(key, text); }
std::size_t conv_size(const std::string &key, const std::string &text) {
    return static_cast<std::size_t>(to_uint(key, text));
}

}  // namespace

Scenario parse_scenario(const std::string &s) {
    if (s == "single-eval") return Scenario::single_eval;
    if (s == "sweep") return Scenario::sweep;
    if (s == "fig6") return Scenario::fig6;
    if (s == "fig7") return Scenario::fig7;
    if (s == "sec64") return Scenario::sec64;
    if (s == "network-verify") return Scenario::network_verify;
    throw ConfigError("scenario", "unknown scenario '" + s + "'");
}

const char *to_string(Scenario s) {
    switch (s) {
        case Scenario::single_eval:
            return "single-eval";
        case Scenario::sweep:
            return "sweep";
        case Scenario::fig6:
            return "fig6";
        case Scenario::fig7:
            return "fig7";
        case Scenario::sec64:
            return "sec64";
        case Scenario::network_verify:
            return "network-verify";
    }
    return "?";
}

const std::vector<std::string> &config_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto &kv : key_help()) {
            k.push_back(kv.first);
        }
        return k;
    }();
    return keys;
}

std::vector<double> parse_double_range(const std::string &key, const std::string &text) {
    return parse_range<double>(key, text, conv_double);
}

std::vector<std::size_t> parse_size_range(const std::string &key, const std::string &text) {
    return parse_range<std::size_t>(key, text, conv_size);
}

std::map<std::string, std::string> read_config_file(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw ConfigError("config", "cannot open '" + path + "'");
    }
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError("config", std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw ConfigError("config", "top level must be an object");
    }
    std::map<std::string, std::string> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string &k = it.key();
        if (!key_help().count(k)) {
            throw ConfigError(k, "unknown key");
        }
        if (k == "config") {
            throw ConfigError(k, "config files cannot include other config files");
        }
        const auto &v = it.value();
        if (v.is_string()) {
            out[k] = v.get<std::string>();
        } else if (v.is_number() || v.is_boolean()) {
            out[k] = v.dump();
        } else {
            throw ConfigError(k, "value must be a string or a number");
        }
    }
    return out;
}

RunConfig build_run_config(const std::map<std::string, std::string> &file_values,
                           const std::map<std::string, std::string> &flag_values) {
    std::map<std::string, std::string> v = file_values;
    for (const auto &kv : flag_values) {
        if (!key_help().count(kv.first)) {
            throw ConfigError(kv.first, "unknown key");
        }
        v[kv.first] = kv.second;
    }
    RunConfig cfg;
    cfg.given = v;
    auto has = [&](const std::string &k) { return v.count(k) > 0; };
    auto get = [&](const std::string &k, const std::string &def) { return has(k) ? v.at(k) : def; };

    cfg.scenario = parse_scenario(get("scenario", "single-eval"));
    const Scenario sc = cfg.scenario;

    // scenario presets, used only where the key is absent
    std::map<std::string, std::string> preset;
    switch (sc) {
        case Scenario::single_eval:
            break;
        case Scenario::sweep:
            preset = {{"N-range", "4:40:2"}, {"n-max-range", "2"}};
            break;
        case Scenario::fig6:
            preset = {{"code", "steane"},       {"fG", "1e-4"},        {"L-range", "50:1000:50"},
                      {"N-range", "4:4000:2"}, {"n-max-range", "0:7"}};
            break;
        case Scenario::fig7:
            preset = {{"code", "golay"},       {"fG", "1e-3"},         {"L-range", "100:2000:100"},
                      {"N-range", "4:4000:2"}, {"T-M-range", "1e-6,1e-5,1e-4"}};
            break;
        case Scenario::sec64:
            preset = {{"code", "golay"}, {"fG", "5e-3"}, {"L", "600"}, {"w", "1500,1400"}};
            break;
        case Scenario::network_verify:
            break;
    }
    for (const auto &kv : preset) {
        if (!has(kv.first)) {
            v[kv.first] = kv.second;
        }
    }

    cfg.out = get("out", "");
    std::string format = get("format", "csv");
    if (format == "csv") {
        cfg.format = OutputFormat::csv;
    } else if (format == "json") {
        cfg.format = OutputFormat::json;
    } else {
        throw ConfigError("format", "expected csv or json, got '" + format + "'");
    }
    cfg.seed = to_uint("seed", get("seed", "1"));
    cfg.trials = to_uint("trials", get("trials", "0"));
    cfg.threads = static_cast<unsigned>(to_uint("threads", get("threads", "0")));
    cfg.mode_given = has("mode");
    try {
        cfg.mode = parse_rate_mode(get("mode", "exact"));
    } catch (const std::invalid_argument &e) {
        throw ConfigError("mode", e.what());
    }

    ChainConfig &ch = cfg.chain;
    cfg.code_spec = get("code", "steane");
    ch.code = load_code(cfg.code_spec);
    std::size_t default_nmax = cfg.code_spec == "golay" ? ch.code.n : 2;
    std::size_t n_max = has("n-max") ? to_uint("n-max", v.at("n-max")) : default_nmax;
    if (n_max > ch.code.n) {
        throw ConfigError("n-max", "exceeds block size " + std::to_string(ch.code.n));
    }
    ch.policy = AbortPolicy::max_losses(n_max);

    cfg.gate_split = get("gate-split", "unnoticed");
    if (has("fG")) {
        cfg.f_G = probability("fG", v.at("fG"));
        if (cfg.gate_split == "unnoticed") {
            ch.rates.f_G_u = cfg.f_G;
        } else if (cfg.gate_split == "noticed") {
            ch.rates.f_G_n = cfg.f_G;
        } else if (cfg.gate_split == "both") {
            ch.rates.f_G_u = cfg.f_G;
            ch.rates.f_G_n = cfg.f_G;
        } else {
            throw ConfigError("gate-split", "expected unnoticed, noticed or both, got '" + cfg.gate_split + "'");
        }
    }
    struct RateKey {
        const char *key;
        double FailureRates::*field;
    };
    for (const RateKey &rk : {RateKey{"fPu", &FailureRates::f_P_u}, RateKey{"fPn", &FailureRates::f_P_n},
                              RateKey{"fGu", &FailureRates::f_G_u}, RateKey{"fGn", &FailureRates::f_G_n},
                              RateKey{"fTu", &FailureRates::f_T_u}, RateKey{"fMu", &FailureRates::f_M_u},
                              RateKey{"fMn", &FailureRates::f_M_n}}) {
        if (has(rk.key)) {
            ch.rates.*rk.field = probability(rk.key, v.at(rk.key));
        }
    }
    if (ch.rates.f_P_u + ch.rates.f_P_n > 1) {
        throw ConfigError("fPn", "fPu + fPn exceeds 1");
    }
    if (ch.rates.f_G_u + ch.rates.f_G_n > 1) {
        throw ConfigError("fGn", "fGu + fGn exceeds 1");
    }
    if (ch.rates.f_M_u + ch.rates.f_M_n > 1) {
        throw ConfigError("fMn", "fMu + fMn exceeds 1");
    }
    if (has("fTn")) {
        ch.f_T_n_override = probability("fTn", v.at("fTn"));
    }
    ch.f_C_n = probability("fCn", get("fCn", "0"));
    ch.L = to_double("L", get("L", "100"));
    if (!(ch.L > 0)) {
        throw ConfigError("L", "must be positive");
    }
    ch.L_att = to_double("L-att", get("L-att", "20"));
    if (!(ch.L_att > 0)) {
        throw ConfigError("L-att", "must be positive");
    }
    ch.T_M = to_double("T-M", get("T-M", "1"));
    if (!(ch.T_M > 0)) {
        throw ConfigError("T-M", "must be positive");
    }
    if (has("N") && has("w") && sc != Scenario::sec64) {
        throw ConfigError("w", "give either N or w, not both");
    }
    if (has("w")) {
        cfg.w_values = parse_size_range("w", v.at("w"));
        ch.N = cfg.w_values.front() + 2;
    } else {
        ch.N = to_uint("N", get("N", "4"));
    }
    if (ch.N < 3) {
        throw ConfigError(has("w") ? "w" : "N", "need at least 3 stations");
    }
    try {
        ch.variant = parse_circuit_variant(get("variant", "single-qubit"));
    } catch (const std::invalid_argument &e) {
        throw ConfigError("variant", e.what());
    }
    try {
        ch.psucc = parse_psucc_mode(get("psucc", "per-block"));
    } catch (const std::invalid_argument &e) {
        throw ConfigError("psucc", e.what());
    }
    std::string tie = get("tie", "average");
    if (tie == "average") {
        ch.tie = TieMode::average;
    } else if (tie == "lexicographic") {
        ch.tie = TieMode::lexicographic;
    } else {
        throw ConfigError("tie", "expected average or lexicographic, got '" + tie + "'");
    }

    cfg.L_values = has("L-range") ? parse_double_range("L-range", v.at("L-range")) : std::vector<double>{ch.L};
    for (double L : cfg.L_values) {
        if (!(L > 0)) {
            throw ConfigError("L-range", "distances must be positive");
        }
    }
    cfg.N_values = has("N-range") ? parse_size_range("N-range", v.at("N-range")) : std::vector<std::size_t>{ch.N};
    for (std::size_t N : cfg.N_values) {
        if (N < 3) {
            throw ConfigError("N-range", "station counts must be at least 3");
        }
    }
    cfg.n_max_values = has("n-max-range") ? parse_size_range("n-max-range", v.at("n-max-range"))
                                          : std::vector<std::size_t>{n_max};
    for (std::size_t m : cfg.n_max_values) {
        if (m > ch.code.n) {
            throw ConfigError("n-max-range", "n_max " + std::to_string(m) + " exceeds block size");
        }
    }
    cfg.T_M_values =
        has("T-M-range") ? parse_double_range("T-M-range", v.at("T-M-range")) : std::vector<double>{ch.T_M};
    for (double t : cfg.T_M_values) {
        if (!(t > 0)) {
            throw ConfigError("T-M-range", "times must be positive");
        }
    }
    if (cfg.w_values.empty()) {
        cfg.w_values = {ch.N - 2};
    }
    cfg.network = get("network", "");
    if (sc == Scenario::network_verify && cfg.network.empty()) {
        throw ConfigError("network", "network-verify needs an edge-list file");
    }
    return cfg;
}

int run(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    try {
        std::vector<Row> rows;
        bool ok = true;
        switch (cfg.scenario) {
            case Scenario::single_eval:
                rows = scenario_single(cfg);
                break;
            case Scenario::sweep:
                rows = scenario_sweep(cfg);
                break;
            case Scenario::fig6:
                rows = scenario_fig6(cfg);
                break;
            case Scenario::fig7:
                rows = scenario_fig7(cfg);
                break;
            case Scenario::sec64:
                rows = scenario_sec64(cfg);
                break;
            case Scenario::network_verify:
                rows = scenario_network(cfg, ok, err);
                break;
        }
        if (cfg.out.empty()) {
            write_table(cfg, rows, out);
        } else {
            std::ofstream f(cfg.out);
            if (!f) {
                err << "error: cannot write '" << cfg.out << "'\n";
                return kExitConfig;
            }
            write_table(cfg, rows, f);
        }
        return ok ? kExitOk : kExitFailure;
    } catch (const EnumerationTooLarge &e) {
        err << "numerical guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App cli{"One-way quantum repeater performance: rates, costs and sweeps"};
    cli.set_help_flag("-h,--help", "print this help and exit");
    std::map<std::string, std::string> flags;
    std::map<std::string, std::string> values;
    for (const auto &kv : key_help()) {
        values[kv.first];
        cli.add_option("--" + kv.first, values[kv.first], kv.second);
    }
    try {
        cli.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << cli.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    for (const auto &kv : key_help()) {
        if (cli.count("--" + kv.first) > 0) {
            flags[kv.first] = values[kv.first];
        }
    }
    RunConfig cfg;
    try {
        std::map<std::string, std::string> file;
        if (flags.count("config")) {
            file = read_config_file(flags.at("config"));
        }
        cfg = build_run_config(file, flags);
    } catch (const EnumerationTooLarge &e) {
        err << "numerical guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return run(cfg, out, err);
}

}  // namespace qrep::app
