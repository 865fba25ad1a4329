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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "qrepeater/logical_rates.hpp"
#include "support/oracles.hpp"
#include "support/reference_forms.hpp"

using qrep::AbortPolicy;
using qrep::BiPoly;
using qrep::TieMode;

namespace {

double max_coeff_diff(const BiPoly &a, const BiPoly &b, std::size_t deg) {
    double d = 0;
    for (std::size_t i = 0; i <= deg; i++)
        for (std::size_t j = 0; j <= deg; j++) d = std::max(d, std::abs(a.coefficient(i, j) - b.coefficient(i, j)));
    return d;
}

qrep::CssCode permuted(const qrep::CssCode &c, const std::vector<std::size_t> &perm) {
    auto move = [&](const qrep::PauliOperator &p) {
        qrep::PauliOperator q(p.num_qubits());
        for (std::size_t i = 0; i < perm.size(); i++) {
            q.set_x(perm[i] + 1, p.x(i + 1));
            q.set_z(perm[i] + 1, p.z(i + 1));
        }
        return q;
    };
    qrep::CssCode out = c;
    for (auto &p : out.x_stabilizers) p = move(p);
    for (auto &p : out.z_stabilizers) p = move(p);
    for (auto &p : out.logical_x) p = move(p);
    for (auto &p : out.logical_z) p = move(p);
    return out;
}

}  // namespace

TEST_CASE("steane averaged-tie rates equal the published polynomials") {
    auto code = qrep::steane_code();
    for (std::size_t n_max = 0; n_max <= 7; n_max++) {
        auto polys = qrep::logical_error_polynomials(code, AbortPolicy::max_losses(n_max), TieMode::average);
        auto ref_f = reference::steane_fbar<BiPoly>(n_max, BiPoly::fu(), BiPoly::fn());
        auto ref_p = reference::steane_psucc<BiPoly>(n_max, BiPoly::fn());
        CHECK(max_coeff_diff(polys.fbar_u, ref_f, 14) <= 1e-9);
        CHECK(max_coeff_diff(polys.p_succ, ref_p, 14) <= 1e-9);
    }
}

TEST_CASE("point values against the published forms") {
    auto code = qrep::steane_code();
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0, 1);
    for (std::size_t n_max = 0; n_max <= 7; n_max++) {
        for (int t = 0; t < 10; t++) {
            double fu = u(rng), fn = u(rng);
            auto r = qrep::logical_error_rate_exact(code, AbortPolicy::max_losses(n_max), fu, fn);
            CHECK(std::abs(r.fbar_u - reference::steane_fbar(n_max, fu, fn)) <= 1e-9);
            CHECK(std::abs(r.p_succ - reference::steane_psucc(n_max, fn)) <= 1e-12);
        }
    }
    auto r0 = qrep::logical_error_rate_exact(code, AbortPolicy::max_losses(0), 0.01, 0);
    CHECK(r0.fbar_u == doctest::Approx(2.00408e-3).epsilon(1e-5));
    auto z = qrep::logical_error_rate_exact(code, AbortPolicy::max_losses(3), 0, 0);
    CHECK(z.fbar_u == 0.0);
    CHECK(z.p_succ == 1.0);
}

TEST_CASE("lexicographic ties differ only on tied patterns") {
    auto code = qrep::steane_code();
    for (std::size_t n_max = 0; n_max <= 7; n_max++) {
        auto c = qrep::enumerate_logical_errors(code, AbortPolicy::max_losses(n_max));
        for (std::size_t l = 0; l <= 7; l++) {
            for (std::size_t w = 0; w + l <= 7; w++) {
                CHECK(c.err_lex[l][w] - c.tied_err_lex[l][w] == c.err_avg[l][w] - c.tied_err_avg[l][w]);
                if (c.tied_patterns[l][w] == 0) CHECK(c.err_lex[l][w] == c.err_avg[l][w]);
            }
        }
        // leading term 21 f_u^2 at f_n = 0 holds for both tie rules
        for (auto mode : {TieMode::lexicographic, TieMode::average}) {
            auto p = qrep::logical_error_polynomials(code, AbortPolicy::max_losses(n_max), mode);
            CHECK(p.fbar_u.coefficient(0, 0) == 0.0);
            CHECK(p.fbar_u.coefficient(1, 0) == 0.0);
            CHECK(p.fbar_u.coefficient(2, 0) == 21.0);
        }
    }
}

TEST_CASE("syndrome lookup oracle agrees with the codeword scan") {
    auto code = qrep::steane_code();
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0, 0.5);
    for (std::size_t n_max = 0; n_max <= 7; n_max++) {
        for (int t = 0; t < 5; t++) {
            double fu = u(rng), fn = u(rng);
            auto a = qrep::logical_error_rate_exact(code, AbortPolicy::max_losses(n_max), fu, fn);
            auto b = oracle::steane_syndrome_lookup(n_max, fu, fn);
            CHECK(std::abs(a.fbar_u - b.fbar_u) <= 1e-12);
            CHECK(std::abs(a.p_succ - b.p_succ) <= 1e-12);
        }
    }
}

TEST_CASE("rates are invariant under code automorphisms") {
    auto code = qrep::steane_code();
    auto cc = qrep::parity_check_from_stabilizers(code);
    std::vector<std::size_t> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    int found = 0;
    while (std::next_permutation(perm.begin(), perm.end()) && found < 6) {
        bool automorphism = true;
        for (qrep::Word c : cc.codewords()) {
            qrep::Word m = 0;
            for (std::size_t i = 0; i < 7; i++)
                if ((c >> i) & 1) m |= qrep::Word{1} << perm[i];
            automorphism = automorphism && cc.is_codeword(m);
        }
        if (!automorphism) continue;
        found++;
        auto pc = permuted(code, perm);
        for (std::size_t n_max : {1u, 2u, 4u}) {
            auto a = qrep::logical_error_rate_exact(code, AbortPolicy::max_losses(n_max), 0.07, 0.13);
            auto b = qrep::logical_error_rate_exact(pc, AbortPolicy::max_losses(n_max), 0.07, 0.13);
            CHECK(std::abs(a.fbar_u - b.fbar_u) <= 1e-14);
            CHECK(std::abs(a.p_succ - b.p_succ) <= 1e-14);
        }
    }
    CHECK(found == 6);
}

TEST_CASE("enumeration counts are consistent") {
    auto c = qrep::enumerate_logical_errors(qrep::steane_code(), AbortPolicy::max_losses(2));
    double masks = 0;
    for (std::size_t l = 0; l <= 7; l++) masks += c.masks[l];
    CHECK(masks == 1 + 7 + 21);
    for (std::size_t l = 0; l <= 2; l++)
        for (std::size_t w = 0; w + l <= 7; w++) CHECK(c.patterns[l][w] <= c.masks[l] * std::pow(2, 7 - l));
    CHECK(qrep::enumeration_cost(7, 7, 16) == doctest::Approx(16 * std::pow(3, 7)));
}

TEST_CASE("custom policy matches the equivalent max-loss policy") {
    auto code = qrep::steane_code();
    auto custom = AbortPolicy::custom([](const qrep::ErrorPattern &e) { return e.loss_count() > 2; });
    auto a = qrep::logical_error_rate_exact(code, custom, 0.05, 0.1);
    auto b = qrep::logical_error_rate_exact(code, AbortPolicy::max_losses(2), 0.05, 0.1);
    CHECK(a.fbar_u == doctest::Approx(b.fbar_u).epsilon(1e-14));
    CHECK(a.p_succ == doctest::Approx(b.p_succ).epsilon(1e-14));
}

TEST_CASE("enumeration guard") {
    CHECK_THROWS_AS(qrep::enumerate_logical_errors(qrep::golay_code(), AbortPolicy::max_losses(2)),
                    qrep::EnumerationTooLarge);
    CHECK_THROWS_AS(qrep::logical_error_rate_exact(qrep::steane_code(), AbortPolicy::max_losses(1), 1.5, 0),
                    std::invalid_argument);
}

TEST_CASE("golay closed form") {
    CHECK(std::abs(qrep::golay_logical_error_rate(0, 0).fbar_u) <= 1e-12);
    CHECK(qrep::golay_logical_error_rate(0, 0).p_succ == 1.0);
    CHECK(qrep::golay_logical_error_rate(0, 1).fbar_u == doctest::Approx(4095.0 / 8192).epsilon(1e-12));
    CHECK(qrep::golay_logical_error_rate(0.01, 0.05).fbar_u == doctest::Approx(4.85729069e-4).epsilon(1e-8));
    auto p = qrep::golay_word_error_half(BiPoly::fu(), BiPoly(0.0));
    for (std::size_t i = 0; i <= 3; i++) CHECK(std::abs(p.coefficient(i, 0)) <= 1e-9);
    // weight-4 patterns that are wrongly decoded, halved
    CHECK(p.coefficient(4, 0) == doctest::Approx(8855.0 / 2).epsilon(1e-9));
}

TEST_CASE("sampled decoding agrees with the enumeration") {
    auto code = qrep::steane_code();
    for (std::size_t n_max : {2u, 7u}) {
        auto ex = qrep::logical_error_rate_exact(code, AbortPolicy::max_losses(n_max), 0.05, 0.1);
        auto mc = qrep::monte_carlo_logical_rate(code, AbortPolicy::max_losses(n_max), 0.05, 0.1, 300000, 4);
        CHECK(std::abs(mc.fbar_u - ex.fbar_u / ex.p_succ) <= 4 * mc.se_fbar);
        CHECK(std::abs(mc.p_succ - ex.p_succ) <= 4 * std::sqrt(std::max(0.0, ex.p_succ * (1 - ex.p_succ)) / 300000) + 1e-12);
        CHECK(mc.trials == 300000);
        CHECK(mc.seed == 4);
    }
    auto a = qrep::monte_carlo_logical_rate(code, AbortPolicy::max_losses(2), 0.05, 0.1, 100000, 9, 1);
    auto b = qrep::monte_carlo_logical_rate(code, AbortPolicy::max_losses(2), 0.05, 0.1, 100000, 9, 2);
    CHECK(a.fbar_u == b.fbar_u);
    CHECK(a.accepted == b.accepted);
}
