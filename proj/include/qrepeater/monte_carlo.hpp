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

#ifndef QREPEATER_MONTE_CARLO_HPP
#define QREPEATER_MONTE_CARLO_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "qrepeater/circuit.hpp"
#include "qrepeater/error_model.hpp"

namespace qrep {

enum class GateNoise {
    joint,      // one failure event per gate, depolarizes and flags both qubits
    per_qubit,  // each qubit of the gate fails on its own, with its own rates
};

struct NoisyOp {
    ElementKind kind;
    std::size_t q1 = 0;  // 0-based
    std::size_t q2 = 0;  // second gate qubit
    double u1 = 0, n1 = 0;
    double u2 = 0, n2 = 0;  // second qubit rates for per-qubit gate noise
    bool joint = true;
};

/// Flat Pauli-frame program: faults at preparation (all qubits, first),
/// after each gate, in transit after the channel marker's gate, and right
/// before each X measurement.
struct NoisyCircuit {
    std::size_t n_qubits = 0;
    std::vector<NoisyOp> ops;
    std::vector<Measurement> measurements;
};

NoisyCircuit make_noisy_circuit(const Circuit &c, const FailureRates &r, GateNoise noise = GateNoise::joint);
/// Rates chosen per qubit kind; gates use per-qubit noise.
NoisyCircuit make_noisy_circuit(const Circuit &c, const StationFlavoredRates &r);

struct TrialRecord {
    std::vector<ErrorEvent> events;
    std::vector<uint8_t> flipped;  // per measurement
    std::vector<uint8_t> marked;   // per measurement ("?")
};

/// One trial with every sampled fault recorded.
TrialRecord sample_trial(const NoisyCircuit &nc, std::mt19937_64 &rng);

struct StationEstimate {
    std::size_t qubit = 0;
    double f_u = 0;   // flips among unmarked trials
    double f_n = 0;   // marked fraction
    double se_u = 0;
    double se_n = 0;
    uint64_t flips = 0;
    uint64_t marked = 0;
    uint64_t trials = 0;
    uint64_t seed = 0;
};

/// Estimates for every measurement. Trials are cut into fixed chunks with
/// their own stream, so results do not depend on the thread count.
std::vector<StationEstimate> monte_carlo_measurement_rates(const NoisyCircuit &nc, uint64_t trials, uint64_t seed,
                                                           unsigned threads = 0);

StationEstimate monte_carlo_station_rates(const Circuit &c, const FailureRates &r, std::size_t station,
                                          uint64_t trials, uint64_t seed);
StationEstimate monte_carlo_station_rates(const Circuit &c, const StationFlavoredRates &r, std::size_t station,
                                          uint64_t trials, uint64_t seed);

constexpr uint64_t kTrialsPerChunk = 1 << 16;

}  // namespace qrep

#endif
