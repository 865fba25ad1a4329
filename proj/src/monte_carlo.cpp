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

#include "qrepeater/monte_carlo.hpp"

#include <cmath>
#include <stdexcept>

#include "qrepeater/parallel.hpp"

namespace qrep {

namespace {

NoisyOp single_op(ElementKind kind, std::size_t q, double u, double n) {
    NoisyOp op;
    op.kind = kind;
    op.q1 = q;
    op.u1 = u;
    op.n1 = n;
    return op;
}

struct RatePick {
    double pu, pn, gu, gn, tu, tn, mu, mn;
};

RatePick pick(const FailureRates &r) {
    return {r.f_P_u, r.f_P_n, r.f_G_u, r.f_G_n, r.f_T_u, r.f_T_n, r.f_M_u, r.f_M_n};
}

template <typename RateOf>
NoisyCircuit build(const Circuit &c, RateOf rate_of, GateNoise noise) {
    c.validate();
    NoisyCircuit nc;
    nc.n_qubits = c.n_qubits;
    nc.measurements = c.measurements;
    for (std::size_t q = 1; q <= c.n_qubits; q++) {
        RatePick r = rate_of(q);
        nc.ops.push_back(single_op(ElementKind::preparation, q - 1, r.pu, r.pn));
    }
    for (std::size_t k = 0; k < c.gates.size(); k++) {
        const CliffordGate &g = c.gates[k];
        if (g.kind != GateKind::CZ) {
            throw std::invalid_argument("noisy circuits support CZ gates only, got " + g.to_string());
        }
        RatePick ra = rate_of(g.a);
        RatePick rb = rate_of(g.b);
        NoisyOp op;
        op.kind = ElementKind::gate;
        op.q1 = g.a - 1;
        op.q2 = g.b - 1;
        op.joint = noise == GateNoise::joint;
        op.u1 = ra.gu;
        op.n1 = ra.gn;
        op.u2 = rb.gu;
        op.n2 = rb.gn;
        nc.ops.push_back(op);
        for (const auto &ch : c.channels) {
            if (ch.after_gate == k) {
                RatePick r = rate_of(ch.qubit);
                nc.ops.push_back(single_op(ElementKind::transmission, ch.qubit - 1, r.tu, r.tn));
            }
        }
    }
    for (const auto &m : c.measurements) {
        RatePick r = rate_of(m.qubit);
        nc.ops.push_back(single_op(ElementKind::measurement, m.qubit - 1, r.mu, r.mn));
    }
    return nc;
}

// 0 = nothing, 1 = unnoticed, 2 = noticed. Loss is drawn first; the
// unnoticed fault only happens on a surviving qubit.
inline int draw_fault(std::mt19937_64 &rng, double u, double n) {
    if (u == 0 && n == 0) {
        return 0;
    }
    double r = uniform01(rng);
    if (r < n) {
        return 2;
    }
    if (r < n + (1 - n) * u) {
        return 1;
    }
    return 0;
}

struct Frame {
    std::vector<uint8_t> x, z, flag;
    explicit Frame(std::size_t n) : x(n, 0), z(n, 0), flag(n, 0) {}
    void clear() {
        std::fill(x.begin(), x.end(), 0);
        std::fill(z.begin(), z.end(), 0);
        std::fill(flag.begin(), flag.end(), 0);
    }
};

template <bool kRecord>
void run_trial(const NoisyCircuit &nc, std::mt19937_64 &rng, Frame &f, std::vector<ErrorEvent> *events) {
    f.clear();
    for (std::size_t k = 0; k < nc.ops.size(); k++) {
        const NoisyOp &op = nc.ops[k];
        auto hit = [&](std::size_t q, int fault, uint64_t bits) {
            bool bx = bits & 1, bz = (bits >> 1) & 1;
            f.x[q] ^= bx;
            f.z[q] ^= bz;
            if (fault == 2) {
                f.flag[q] = 1;
            }
            if constexpr (kRecord) {
                events->push_back({op.kind, k, q + 1, bx, bz, fault == 2});
            }
        };
        if (op.kind == ElementKind::gate) {
            // CZ first, faults after the gate
            f.z[op.q1] ^= f.x[op.q2];
            f.z[op.q2] ^= f.x[op.q1];
            if (op.joint) {
                int fault = draw_fault(rng, op.u1, op.n1);
                if (fault) {
                    uint64_t bits = rng();
                    hit(op.q1, fault, bits);
                    hit(op.q2, fault, bits >> 2);
                }
            } else {
                int fa = draw_fault(rng, op.u1, op.n1);
                if (fa) {
                    hit(op.q1, fa, rng());
                }
                int fb = draw_fault(rng, op.u2, op.n2);
                if (fb) {
                    hit(op.q2, fb, rng());
                }
            }
            continue;
        }
        int fault = draw_fault(rng, op.u1, op.n1);
        if (fault) {
            hit(op.q1, fault, rng());
        }
    }
}

void check_trials(uint64_t trials) {
    if (trials == 0) {
        throw std::invalid_argument("Monte Carlo needs at least one trial");
    }
}

}  // namespace

NoisyCircuit make_noisy_circuit(const Circuit &c, const FailureRates &r, GateNoise noise) {
    r.validate();
    RatePick p = pick(r);
    return build(c, [&](std::size_t) { return p; }, noise);
}

NoisyCircuit make_noisy_circuit(const Circuit &c, const StationFlavoredRates &r) {
    r.validate();
    if (c.kinds.size() != c.n_qubits) {
        throw std::invalid_argument("circuit carries no qubit kinds");
    }
    RatePick s = pick(r.stationary);
    RatePick fl = pick(r.flying);
    return build(
        c, [&](std::size_t q) { return c.kinds[q - 1] == QubitKind::stationary ? s : fl; }, GateNoise::per_qubit);
}

TrialRecord sample_trial(const NoisyCircuit &nc, std::mt19937_64 &rng) {
    Frame f(nc.n_qubits);
    TrialRecord rec;
    run_trial<true>(nc, rng, f, &rec.events);
    for (const auto &m : nc.measurements) {
        bool marked = false;
        for (std::size_t q : m.marked_by) {
            marked |= f.flag[q - 1] != 0;
        }
        rec.marked.push_back(marked);
        rec.flipped.push_back(f.z[m.qubit - 1]);
    }
    return rec;
}

std::vector<StationEstimate> monte_carlo_measurement_rates(const NoisyCircuit &nc, uint64_t trials, uint64_t seed,
                                                           unsigned threads) {
    check_trials(trials);
    std::size_t nm = nc.measurements.size();
    if (nm == 0) {
        throw std::invalid_argument("circuit has no measurements");
    }
    uint64_t chunks = (trials + kTrialsPerChunk - 1) / kTrialsPerChunk;
    std::vector<std::vector<uint64_t>> flips(chunks, std::vector<uint64_t>(nm, 0));
    std::vector<std::vector<uint64_t>> marks(chunks, std::vector<uint64_t>(nm, 0));
    parallel_for(
        chunks,
        [&](std::size_t c) {
            std::mt19937_64 rng = stream_rng(seed, c);
            uint64_t begin = c * kTrialsPerChunk;
            uint64_t end = std::min(trials, begin + kTrialsPerChunk);
            Frame f(nc.n_qubits);
            for (uint64_t t = begin; t < end; t++) {
                run_trial<false>(nc, rng, f, nullptr);
                for (std::size_t m = 0; m < nm; m++) {
                    const Measurement &meas = nc.measurements[m];
                    bool marked = false;
                    for (std::size_t q : meas.marked_by) {
                        marked |= f.flag[q - 1] != 0;
                    }
                    if (marked) {
                        marks[c][m]++;
                    } else if (f.z[meas.qubit - 1]) {
                        flips[c][m]++;
                    }
                }
            }
        },
        threads);
    std::vector<StationEstimate> out(nm);
    for (std::size_t m = 0; m < nm; m++) {
        StationEstimate &e = out[m];
        e.qubit = nc.measurements[m].qubit;
        e.trials = trials;
        e.seed = seed;
        for (uint64_t c = 0; c < chunks; c++) {
            e.flips += flips[c][m];
            e.marked += marks[c][m];
        }
        uint64_t kept = trials - e.marked;
        e.f_n = double(e.marked) / double(trials);
        e.se_n = std::sqrt(e.f_n * (1 - e.f_n) / double(trials));
        if (kept > 0) {
            e.f_u = double(e.flips) / double(kept);
            e.se_u = std::sqrt(e.f_u * (1 - e.f_u) / double(kept));
        }
    }
    return out;
}

namespace {

StationEstimate pick_station(const NoisyCircuit &nc, std::size_t station, uint64_t trials, uint64_t seed) {
    std::size_t idx = nc.measurements.size();
    for (std::size_t m = 0; m < nc.measurements.size(); m++) {
        if (nc.measurements[m].qubit == station) {
            idx = m;
        }
    }
    if (idx == nc.measurements.size()) {
        throw std::invalid_argument("station " + std::to_string(station) + " is not measured");
    }
    NoisyCircuit only = nc;
    only.measurements = {nc.measurements[idx]};
    return monte_carlo_measurement_rates(only, trials, seed)[0];
}

}  // namespace

StationEstimate monte_carlo_station_rates(const Circuit &c, const FailureRates &r, std::size_t station,
                                          uint64_t trials, uint64_t seed) {
    check_trials(trials);
    return pick_station(make_noisy_circuit(c, r), station, trials, seed);
}

StationEstimate monte_carlo_station_rates(const Circuit &c, const StationFlavoredRates &r, std::size_t station,
                                          uint64_t trials, uint64_t seed) {
    check_trials(trials);
    return pick_station(make_noisy_circuit(c, r), station, trials, seed);
}

}  // namespace qrep
