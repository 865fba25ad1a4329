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

#ifndef QREPEATER_RATES_HPP
#define QREPEATER_RATES_HPP

#include <cstddef>
#include <vector>

#include "qrepeater/error_model.hpp"

namespace qrep {

/// Probability of an even / odd number of events among N independent events
/// of probability P: (1 +- (1-2P)^N) / 2. N = 1 returns P itself for odd.
double p_even(double P, std::size_t N);
double p_odd(double P, std::size_t N);

/// Same for independent events with individual probabilities (product form).
double p_odd_vec(const std::vector<double> &p);
double p_even_vec(const std::vector<double> &p);
/// Direct sum over all 2^N event patterns (N <= 30); reference implementation.
double p_odd_enumerate(const std::vector<double> &p);

struct DegreeProfile {
    std::size_t deg = 0;
    std::size_t deg_in = 0;
    std::size_t deg_out = 0;
    void validate() const;
};

struct PhysicalRates {
    double f_u = 0;
    double f_n = 0;
};

struct TwoQubitRates {
    double f_q_s = 0;
    double f_q_f = 0;
    double f_l_s = 0;
    double f_l_f = 0;
};

/// Single-qubit repeater station rates.
PhysicalRates physical_rates_single(const FailureRates &r);
/// Two qubits per station, closed form.
TwoQubitRates physical_rates_two_qubit(const StationFlavoredRates &r);
/// The same four rates derived from the reconstructed two-qubit circuit
/// (adds the second flying-gate term and both second gate-loss factors).
TwoQubitRates physical_rates_two_qubit_circuit(const StationFlavoredRates &r);
/// Degree-dependent rates for a network vertex.
PhysicalRates physical_rates_network(const FailureRates &r, const DegreeProfile &d);
/// Linearized rates.
PhysicalRates first_order_rates(const FailureRates &r);
/// First-order unnoticed rate with the exact noticed rate.
PhysicalRates first_order_unnoticed_rates(const FailureRates &r);
/// Linearized two-qubit rates: sums of the vector entries and of
/// the loss factors.
TwoQubitRates first_order_two_qubit(const StationFlavoredRates &r);

}  // namespace qrep

#endif
