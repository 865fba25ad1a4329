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

#include "qrepeater/rates.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qrep {

namespace {

double ipow(double base, std::size_t e) {
    double r = 1.0;
    while (e) {
        if (e & 1) {
            r *= base;
        }
        base *= base;
        e >>= 1;
    }
    return r;
}

void check_p(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("probability " + std::to_string(p) + " outside [0,1]");
    }
}

// Shared by the line and network formulas so both follow one arithmetic path.
PhysicalRates station_rates(const FailureRates &r, std::size_t own_and_parent, std::size_t children,
                            std::size_t gates) {
    r.validate();
    std::vector<double> v = {
        p_odd(r.f_P_u / 2, own_and_parent),
        p_odd((r.f_P_n + r.f_P_u) / 2, children),
        p_odd(r.f_G_u / 2, gates),
        p_odd(r.f_T_u / 2, own_and_parent),
        r.f_M_u / 2,
    };
    PhysicalRates out;
    out.f_u = p_odd_vec(v);
    out.f_n = 1.0 - ipow(1 - r.f_P_n, own_and_parent) * ipow(1 - r.f_G_n, gates) *
                        ipow(1 - r.f_T_n, own_and_parent) * ipow(1 - r.f_M_n, own_and_parent);
    return out;
}

}  // namespace

double p_even(double P, std::size_t N) { return 1.0 - p_odd(P, N); }

double p_odd(double P, std::size_t N) {
    check_p(P);
    if (N == 0) {
        return 0.0;
    }
    if (N == 1) {
        return P;
    }
    return 0.5 * (1.0 - ipow(1.0 - 2.0 * P, N));
}

double p_odd_vec(const std::vector<double> &p) {
    double prod = 1.0;
    for (double x : p) {
        check_p(x);
        prod *= 1.0 - 2.0 * x;
    }
    return 0.5 * (1.0 - prod);
}

double p_even_vec(const std::vector<double> &p) { return 1.0 - p_odd_vec(p); }

double p_odd_enumerate(const std::vector<double> &p) {
    if (p.size() > 30) {
        throw std::invalid_argument("enumeration limited to 30 events");
    }
    for (double x : p) {
        check_p(x);
    }
    double odd = 0.0;
    uint64_t total = uint64_t{1} << p.size();
    for (uint64_t pattern = 0; pattern < total; pattern++) {
        if (!(__builtin_popcountll(pattern) & 1)) {
            continue;
        }
        double prob = 1.0;
        for (std::size_t k = 0; k < p.size(); k++) {
            prob *= (pattern >> k) & 1 ? p[k] : 1.0 - p[k];
        }
        odd += prob;
    }
    return odd;
}

void DegreeProfile::validate() const {
    if (deg != deg_in + deg_out) {
        throw std::invalid_argument("degree profile needs deg = deg_in + deg_out");
    }
}

PhysicalRates physical_rates_single(const FailureRates &r) { return station_rates(r, 2, 1, 3); }

PhysicalRates physical_rates_network(const FailureRates &r, const DegreeProfile &d) {
    d.validate();
    return station_rates(r, 1 + d.deg_in, d.deg_out, 1 + d.deg);
}

TwoQubitRates physical_rates_two_qubit(const StationFlavoredRates &r) {
    r.validate();
    const FailureRates &s = r.stationary;
    const FailureRates &f = r.flying;
    TwoQubitRates out;
    out.f_q_s = p_odd_vec({f.f_P_u / 2, f.f_G_u / 2, f.f_T_u / 2, s.f_P_u / 2, s.f_G_u / 2, s.f_G_u / 2, s.f_M_u / 2,
                           (f.f_P_u + f.f_P_n) / 2});
    out.f_q_f = p_odd_vec({(s.f_P_u + s.f_P_n) / 2, f.f_P_u / 2, f.f_T_u / 2, f.f_G_u / 2, f.f_M_u / 2,
                           (s.f_P_u + s.f_P_n) / 2, (s.f_G_u + s.f_G_n) / 2});
    out.f_l_s = 1 - (1 - f.f_P_n) * (1 - f.f_G_n) * (1 - f.f_T_n) * (1 - f.f_M_n) * (1 - s.f_P_n) *
                        (1 - s.f_G_n) * (1 - s.f_M_n);
    out.f_l_f = 1 - (1 - f.f_P_n) * (1 - f.f_G_n) * (1 - f.f_G_n) * (1 - f.f_T_n) * (1 - f.f_M_n);
    return out;
}

TwoQubitRates physical_rates_two_qubit_circuit(const StationFlavoredRates &r) {
    r.validate();
    const FailureRates &s = r.stationary;
    const FailureRates &f = r.flying;
    TwoQubitRates out = physical_rates_two_qubit(r);
    out.f_q_f = p_odd_vec({(s.f_P_u + s.f_P_n) / 2, f.f_P_u / 2, f.f_T_u / 2, f.f_G_u / 2, f.f_G_u / 2, f.f_M_u / 2,
                           (s.f_P_u + s.f_P_n) / 2, (s.f_G_u + s.f_G_n) / 2});
    out.f_l_s = 1 - (1 - f.f_P_n) * (1 - f.f_G_n) * (1 - f.f_G_n) * (1 - f.f_T_n) * (1 - f.f_M_n) *
                        (1 - s.f_P_n) * (1 - s.f_G_n) * (1 - s.f_G_n) * (1 - s.f_M_n);
    return out;
}

PhysicalRates first_order_rates(const FailureRates &r) {
    r.validate();
    PhysicalRates out;
    out.f_u = 1.5 * r.f_P_u + 0.5 * r.f_P_n + 1.5 * r.f_G_u + r.f_T_u + 0.5 * r.f_M_u;
    out.f_n = 2 * r.f_P_n + 3 * r.f_G_n + 2 * r.f_T_n + 2 * r.f_M_n;
    return out;
}

PhysicalRates first_order_unnoticed_rates(const FailureRates &r) {
    PhysicalRates out = physical_rates_single(r);
    out.f_u = first_order_rates(r).f_u;
    return out;
}

TwoQubitRates first_order_two_qubit(const StationFlavoredRates &r) {
    r.validate();
    const FailureRates &s = r.stationary;
    const FailureRates &f = r.flying;
    TwoQubitRates out;
    out.f_q_s = (f.f_P_u + f.f_G_u + f.f_T_u + s.f_P_u + 2 * s.f_G_u + s.f_M_u + f.f_P_u + f.f_P_n) / 2;
    out.f_q_f = (2 * (s.f_P_u + s.f_P_n) + f.f_P_u + f.f_T_u + f.f_G_u + f.f_M_u + s.f_G_u + s.f_G_n) / 2;
    out.f_l_s = f.f_P_n + f.f_G_n + f.f_T_n + f.f_M_n + s.f_P_n + s.f_G_n + s.f_M_n;
    out.f_l_f = f.f_P_n + 2 * f.f_G_n + f.f_T_n + f.f_M_n;
    return out;
}

}  // namespace qrep
