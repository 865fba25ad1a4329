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

#ifndef QREPEATER_ERROR_MODEL_HPP
#define QREPEATER_ERROR_MODEL_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace qrep {

/// Failure probabilities for preparation (P), gate (G), transmission (T)
/// and measurement (M); u = unnoticed, n = noticed.
struct FailureRates {
    double f_P_u = 0, f_P_n = 0;
    double f_G_u = 0, f_G_n = 0;
    double f_T_u = 0, f_T_n = 0;
    double f_M_u = 0, f_M_n = 0;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
    /// True if any rate exceeds 1/2 (defined, but outside the intended regime).
    bool outside_model_regime() const;
    static FailureRates uniform(double f);
    std::array<double, 8> as_array() const;
    static FailureRates from_array(const std::array<double, 8> &a);
    static const std::array<const char *, 8> &field_names();
};

struct StationFlavoredRates {
    FailureRates stationary;
    FailureRates flying;
    void validate() const;
};

struct ChannelParams {
    double L0 = 0;        // km
    double L_att = 20.0;  // km
    double f_C_n = 0;     // coupling loss
    void validate() const;
};

/// f_{T,n} = 1 - (1 - f_{C,n}) exp(-L0 / L_att).
double transmission_loss(const ChannelParams &c);

/// Probabilities of I, X, Z, XZ after one failure channel with rate f.
struct PauliDistribution {
    double p_i = 1, p_x = 0, p_z = 0, p_xz = 0;
    double marginal_x() const { return p_x + p_xz; }
    double marginal_z() const { return p_z + p_xz; }
};

PauliDistribution depolarize_discretize(double f);

/// Joint distribution over the 4^k Pauli patterns of a k-qubit failure:
/// index = sum_q (x_q + 2 z_q) 4^q. With probability 1-f nothing happens,
/// otherwise every X and Z bit is an independent fair coin.
std::vector<double> depolarize_discretize_joint(double f, std::size_t k);

enum class ElementKind { preparation, gate, transmission, measurement };

/// One sampled fault.
struct ErrorEvent {
    ElementKind element;
    std::size_t op_index;  // position in the noisy circuit's op list
    std::size_t qubit;
    bool x = false;
    bool z = false;
    bool noticed = false;
};

}  // namespace qrep

#endif
