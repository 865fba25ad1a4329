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

#include "qrepeater/error_model.hpp"

#include <cmath>
#include <stdexcept>

namespace qrep {

namespace {

void check_probability(double p, const std::string &name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(name + " = " + std::to_string(p) + " is not a probability in [0,1]");
    }
}

}  // namespace

const std::array<const char *, 8> &FailureRates::field_names() {
    static const std::array<const char *, 8> names = {"f_P_u", "f_P_n", "f_G_u", "f_G_n",
                                                      "f_T_u", "f_T_n", "f_M_u", "f_M_n"};
    return names;
}

std::array<double, 8> FailureRates::as_array() const {
    return {f_P_u, f_P_n, f_G_u, f_G_n, f_T_u, f_T_n, f_M_u, f_M_n};
}

FailureRates FailureRates::from_array(const std::array<double, 8> &a) {
    FailureRates r;
    r.f_P_u = a[0];
    r.f_P_n = a[1];
    r.f_G_u = a[2];
    r.f_G_n = a[3];
    r.f_T_u = a[4];
    r.f_T_n = a[5];
    r.f_M_u = a[6];
    r.f_M_n = a[7];
    return r;
}

FailureRates FailureRates::uniform(double f) {
    std::array<double, 8> a;
    a.fill(f);
    return from_array(a);
}

void FailureRates::validate() const {
    auto a = as_array();
    const auto &names = field_names();
    for (std::size_t k = 0; k < 8; k++) {
        check_probability(a[k], names[k]);
    }
    const char *procs[4] = {"P", "G", "T", "M"};
    for (std::size_t k = 0; k < 4; k++) {
        if (a[2 * k] + a[2 * k + 1] > 1.0 + 1e-15) {
            throw std::invalid_argument(std::string("f_") + procs[k] + "_u + f_" + procs[k] + "_n exceeds 1");
        }
    }
}

bool FailureRates::outside_model_regime() const {
    for (double v : as_array()) {
        if (v > 0.5) {
            return true;
        }
    }
    return false;
}

void StationFlavoredRates::validate() const {
    stationary.validate();
    flying.validate();
}

void ChannelParams::validate() const {
    if (!(L0 >= 0.0) || !std::isfinite(L0)) {
        throw std::invalid_argument("L0 must be finite and >= 0");
    }
    if (!(L_att > 0.0) || !std::isfinite(L_att)) {
        throw std::invalid_argument("L_att must be finite and > 0");
    }
    check_probability(f_C_n, "f_C_n");
}

double transmission_loss(const ChannelParams &c) {
    c.validate();
    return 1.0 - (1.0 - c.f_C_n) * std::exp(-c.L0 / c.L_att);
}

PauliDistribution depolarize_discretize(double f) {
    check_probability(f, "f");
    PauliDistribution d;
    d.p_x = d.p_z = d.p_xz = f / 4;
    d.p_i = 1.0 - f + f / 4;
    return d;
}

std::vector<double> depolarize_discretize_joint(double f, std::size_t k) {
    check_probability(f, "f");
    if (k > 10) {
        throw std::invalid_argument("joint distribution limited to 10 qubits");
    }
    std::size_t m = std::size_t{1} << (2 * k);
    std::vector<double> out(m, f / double(m));
    out[0] += 1.0 - f;
    return out;
}

}  // namespace qrep
