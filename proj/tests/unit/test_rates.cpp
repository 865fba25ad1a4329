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

#include <cmath>
#include <stdexcept>
#include <random>

#include "doctest.h"
#include "qrepeater/error_model.hpp"
#include "qrepeater/rates.hpp"
#include "support/oracles.hpp"

using qrep::FailureRates;

namespace {

FailureRates random_rates(std::mt19937_64 &rng, double hi) {
    std::uniform_real_distribution<double> u(0, hi);
    std::array<double, 8> a;
    for (double &v : a) v = u(rng);
    return FailureRates::from_array(a);
}

}  // namespace

TEST_CASE("parity probabilities") {
    CHECK(qrep::p_odd(0.1, 1) == 0.1);
    CHECK(qrep::p_odd(0.1, 2) == doctest::Approx(0.18).epsilon(1e-15));
    CHECK(qrep::p_odd(0.3, 0) == 0.0);
    CHECK(qrep::p_even(0.3, 0) == 1.0);
    CHECK(qrep::p_odd(0.5, 7) == 0.5);
    CHECK_THROWS_AS(qrep::p_odd(-0.1, 2), std::invalid_argument);
    CHECK(qrep::p_odd_vec({0.1, 0.2}) == doctest::Approx(0.26).epsilon(1e-15));
    CHECK(qrep::p_odd_vec({}) == 0.0);
    CHECK(qrep::p_even_vec({}) == 1.0);
    CHECK(qrep::p_odd_vec({0.07, 0.07, 0.07}) == doctest::Approx(qrep::p_odd(0.07, 3)).epsilon(1e-15));
    CHECK_THROWS_AS(qrep::p_odd_enumerate(std::vector<double>(31, 0.1)), std::invalid_argument);
}

TEST_CASE("parity identities") {
    for (int i = 0; i <= 100; i++) {
        double P = i / 100.0;
        for (std::size_t N = 0; N <= 100; N++) CHECK(std::abs(qrep::p_odd(P, N) + qrep::p_even(P, N) - 1) <= 1e-12);
        for (std::size_t N = 1; N <= 50; N++) {
            double rec = P * qrep::p_even(P, N - 1) + (1 - P) * qrep::p_odd(P, N - 1);
            CHECK(std::abs(qrep::p_odd(P, N) - rec) <= 1e-12);
        }
        CHECK(std::abs(qrep::p_odd(P, 40) - oracle::p_odd_recursive(P, 40)) <= 1e-12);
    }
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0, 1);
    for (std::size_t N = 0; N <= 12; N++) {
        for (int t = 0; t < 10; t++) {
            std::vector<double> p(N);
            for (double &x : p) x = u(rng);
            CHECK(std::abs(qrep::p_odd_vec(p) - qrep::p_odd_enumerate(p)) <= 1e-12);
        }
    }
}

TEST_CASE("single station rates examples") {
    auto z = qrep::physical_rates_single(FailureRates{});
    CHECK(z.f_u == 0.0);
    CHECK(z.f_n == 0.0);
    FailureRates r;
    r.f_T_n = 0.5;
    CHECK(qrep::physical_rates_single(r).f_n == doctest::Approx(0.75).epsilon(1e-15));
    FailureRates g;
    g.f_G_n = 0.1;
    CHECK(qrep::first_order_rates(g).f_n == doctest::Approx(0.3));
    CHECK(qrep::physical_rates_single(g).f_n == doctest::Approx(0.271));
}

TEST_CASE("first-order coefficients by finite differences") {
    const double h = 1e-7;
    const std::array<double, 8> want_u = {1.5, 0.5, 1.5, 0, 1, 0, 0.5, 0};
    const std::array<double, 8> want_n = {0, 2, 0, 3, 0, 2, 0, 2};
    for (std::size_t k = 0; k < 8; k++) {
        std::array<double, 8> a{};
        a[k] = h;
        auto ex = qrep::physical_rates_single(FailureRates::from_array(a));
        auto fo = qrep::first_order_rates(FailureRates::from_array(a));
        CHECK(ex.f_u / h == doctest::Approx(want_u[k]).epsilon(1e-5));
        CHECK(ex.f_n / h == doctest::Approx(want_n[k]).epsilon(1e-5));
        CHECK(fo.f_u / h == doctest::Approx(want_u[k]).epsilon(1e-12));
        CHECK(fo.f_n / h == doctest::Approx(want_n[k]).epsilon(1e-12));
    }
}

TEST_CASE("first order agreement is quadratic") {
    // |exact - first order| <= C max^2; C bounds the pairwise terms of nine factors
    const double C = 36.0;
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; t++) {
        auto r = random_rates(rng, 1e-3);
        double mx = 0;
        for (double v : r.as_array()) mx = std::max(mx, v);
        auto ex = qrep::physical_rates_single(r);
        auto fo = qrep::first_order_rates(r);
        CHECK(std::abs(ex.f_u - fo.f_u) <= C * mx * mx);
        CHECK(std::abs(ex.f_n - fo.f_n) <= C * mx * mx);
        CHECK(qrep::first_order_unnoticed_rates(r).f_n == ex.f_n);
        CHECK(qrep::first_order_unnoticed_rates(r).f_u == fo.f_u);
    }
}

TEST_CASE("rates are monotone in every argument") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 100; t++) {
        auto r = random_rates(rng, 0.4);
        auto base = qrep::physical_rates_single(r);
        for (std::size_t k = 0; k < 8; k++) {
            auto a = r.as_array();
            a[k] = std::min(0.5, a[k] + 0.05);
            auto up = qrep::physical_rates_single(FailureRates::from_array(a));
            CHECK(up.f_u >= base.f_u - 1e-15);
            CHECK(up.f_n >= base.f_n - 1e-15);
        }
    }
}

TEST_CASE("two-qubit station rates") {
    qrep::StationFlavoredRates z;
    auto r0 = qrep::physical_rates_two_qubit(z);
    CHECK(r0.f_q_s == 0.0);
    CHECK(r0.f_l_f == 0.0);
    qrep::StationFlavoredRates t;
    t.flying.f_T_n = 0.2;
    auto r1 = qrep::physical_rates_two_qubit(t);
    CHECK(r1.f_l_s == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(r1.f_l_f == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(r1.f_q_s == 0.0);
    // the circuit-derived variant adds the second flying gate term
    qrep::StationFlavoredRates g;
    g.flying.f_G_u = 0.02;
    auto pr = qrep::physical_rates_two_qubit(g);
    auto cr = qrep::physical_rates_two_qubit_circuit(g);
    CHECK(pr.f_q_f == doctest::Approx(0.01));
    CHECK(cr.f_q_f == doctest::Approx(qrep::p_odd(0.01, 2)));
    auto fo = qrep::first_order_two_qubit(g);
    CHECK(fo.f_q_f == doctest::Approx(0.01));
}

TEST_CASE("network profile rates") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; t++) {
        auto r = random_rates(rng, 0.05);
        auto a = qrep::physical_rates_single(r);
        auto b = qrep::physical_rates_network(r, {2, 1, 1});
        CHECK(a.f_u == b.f_u);
        CHECK(a.f_n == b.f_n);
    }
    FailureRates m;
    m.f_M_u = 0.02;
    m.f_G_u = 0.3;
    auto iso = qrep::physical_rates_network(m, {0, 0, 0});
    // isolated vertex: own preparation, one gate term and the measurement
    CHECK(iso.f_u == doctest::Approx(qrep::p_odd_vec({0.01, 0.15})));
    CHECK_THROWS_AS(qrep::physical_rates_network(m, {3, 1, 1}), std::invalid_argument);
    FailureRates r = FailureRates::uniform(0.01);
    double prev = -1;
    for (std::size_t d = 1; d <= 6; d++) {
        auto x = qrep::physical_rates_network(r, {d, 1, d - 1});
        CHECK(x.f_u >= prev);
        prev = x.f_u;
    }
}
