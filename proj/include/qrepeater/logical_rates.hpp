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

#ifndef QREPEATER_LOGICAL_RATES_HPP
#define QREPEATER_LOGICAL_RATES_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qrepeater/css_code.hpp"
#include "qrepeater/polynomial.hpp"

namespace qrep {

/// How a decoder tie between codewords at equal distance is scored.
enum class TieMode {
    lexicographic,  // the decode() choice
    average,        // each tied codeword counts with weight 1/|ties|
};

struct LogicalRates {
    double fbar_u = 0;
    double p_succ = 1;
};

/// Error counts of the exhaustive enumeration, grouped by the number of
/// losses l and of flips w on the remaining positions. Entry [l][w] holds the
/// number of (loss mask, flip pattern) pairs in that class, or the summed
/// logical error weight.
struct LogicalCounts {
    std::size_t n = 0;
    std::vector<std::vector<double>> patterns;  // non-fatal patterns
    std::vector<std::vector<double>> err_lex;
    std::vector<std::vector<double>> err_avg;
    std::vector<std::vector<double>> tied_patterns;
    std::vector<std::vector<double>> tied_err_lex;  // part of err_lex from tied patterns
    std::vector<std::vector<double>> tied_err_avg;
    std::vector<double> masks;  // non-fatal loss masks per l

    const std::vector<std::vector<double>> &errors(TieMode mode) const {
        return mode == TieMode::lexicographic ? err_lex : err_avg;
    }
};

/// Work estimate sum_l C(n,l) 2^(n-l) |C| over the non-fatal loss counts.
double enumeration_cost(std::size_t n, std::size_t n_max, std::size_t codewords);
constexpr double kMaxEnumerationCost = 2e9;

/// Exhaustive enumeration over loss masks and flip patterns for logical X
/// number `logical` (the all-zero codeword is sent). Throws
/// EnumerationTooLarge past kMaxEnumerationCost.
LogicalCounts enumerate_logical_errors(const CssCode &c, const AbortPolicy &policy, std::size_t logical = 0,
                                       unsigned threads = 0);

/// sum_{l,w} t[l][w] f_n^l (1-f_n)^(n-l) f_u^w (1-f_u)^(n-l-w)
double evaluate_counts(const std::vector<std::vector<double>> &t, std::size_t n, double f_u, double f_n);
BiPoly counts_polynomial(const std::vector<std::vector<double>> &t, std::size_t n);
/// sum_l m[l] f_n^l (1-f_n)^(n-l)
double evaluate_masks(const std::vector<double> &m, std::size_t n, double f_n);
BiPoly masks_polynomial(const std::vector<double> &m, std::size_t n);

/// Logical error rate averaged over the k logical qubits and P_succ.
LogicalRates logical_error_rate_exact(const CssCode &c, const AbortPolicy &policy, double f_u, double f_n,
                                      TieMode mode = TieMode::average);

struct LogicalPolynomials {
    BiPoly fbar_u;
    BiPoly p_succ;
};
LogicalPolynomials logical_error_polynomials(const CssCode &c, const AbortPolicy &policy,
                                             TieMode mode = TieMode::average);

/// Published closed-form word error rate of the [[23,1,7]] code with a
/// non-aborting erasure/flip decoder, halved (half of the wrong codewords
/// flip the logical parity). Generic so it can be expanded symbolically.
template <typename T>
T golay_word_error_half(const T &fu, const T &fn) {
    auto P = [](const T &x, unsigned k) { return ipow(x, k); };
    const T q = fn + fu - 1.0;
    const T m = fn - 1.0;
    const T a2 = 1.0 - fn + 2.0 * fu;
    const T a6 = 1.0 - fn + 6.0 * fu;
    const T a14 = 1.0 - fn + 14.0 * fu;
    T s = -P(fn, 23) * (1.0 / 4096) + 23.0 / 2048 * q * P(fn, 22) - 253.0 / 1024 * P(q, 2) * P(fn, 21) +
          1771.0 / 512 * P(q, 3) * P(fn, 20) - 8855.0 / 256 * P(q, 4) * P(fn, 19) +
          33649.0 / 128 * P(q, 5) * P(fn, 18) - 100947.0 / 64 * P(q, 6) * P(fn, 17) +
          245157.0 / 32 * P(q, 7) * P(fn, 16) - 30613.0 * P(q, 8) * P(fn, 15);
    s = s - 253.0 / 16 * m * P(q, 7) * P(fn, 15) + 101200.0 * P(q, 9) * P(fn, 14) +
        3795.0 / 8 * m * P(q, 8) * P(fn, 14) - 272734.0 * P(q, 10) * P(fn, 13) -
        26565.0 / 4 * m * P(q, 9) * P(fn, 13) + 560924.0 * P(q, 11) * P(fn, 12) +
        115115.0 / 2 * m * P(q, 10) * P(fn, 12) - 695520.0 * P(q, 12) * P(fn, 11);
    s = s - 319424.0 * m * P(q, 11) * P(fn, 11) + 8855.0 / 2 * P(q, 11) * a2 * P(fn, 11) +
        949256.0 * m * P(q, 12) * P(fn, 10) - 97405.0 * P(q, 12) * a2 * P(fn, 10) +
        779240.0 * P(q, 13) * a2 * P(fn, 9) + 18975.0 * P(q, 13) * a6 * P(fn, 9) -
        485760.0 * P(q, 14) * a6 * P(fn, 8) - 2277.0 * P(q, 14) * a14 * P(fn, 8);
    s = s + 32384.0 * P(q, 15) * a14 * P(fn, 7) + 253.0 / 2 * m * P(q, 14) * a14 * P(fn, 7) +
        212520.0 * P(q, 14) * (-P(m, 2) + 10.0 * fu * m + 8.0 * P(fu, 2)) * P(fn, 7) -
        100947.0 * m * P(q, 15) * a14 * P(fn, 6) - 28336.0 * P(q, 16) * a2 * a14 * P(fn, 5) -
        5313.0 * P(q, 16) * (P(m, 2) - 15.0 * fu * m + 30.0 * P(fu, 2)) * P(fn, 5) +
        8855.0 * P(q, 17) * (P(m, 2) - 17.0 * fu * m + 90.0 * P(fu, 2)) * P(fn, 4);
    s = s -
        1771.0 * P(q, 17) * (P(m, 3) - 17.0 * fu * P(m, 2) + 138.0 * P(fu, 2) * m + 96.0 * P(fu, 3)) * P(fn, 3) -
        253.0 * P(q, 18) * (-P(m, 3) + 18.0 * fu * P(m, 2) - 171.0 * P(fu, 2) * m + 90.0 * P(fu, 3)) * P(fn, 2) +
        23.0 * P(q, 19) * (-P(m, 3) + 19.0 * fu * P(m, 2) - 190.0 * P(fu, 2) * m + 560.0 * P(fu, 3)) * fn;
    s = s + P(q, 23) - 23.0 * fu * P(q, 22) + 253.0 * P(fu, 2) * P(q, 21) - 1771.0 * P(fu, 3) * P(q, 20) + 1.0;
    return 0.5 * s;
}

/// Closed-form rate of the [[23,1,7]] code; P_succ = 1 (no abortion).
LogicalRates golay_logical_error_rate(double f_u, double f_n);

struct LogicalMonteCarlo {
    double fbar_u = 0;  // directly counted wrong logical parity, averaged ties
    double se_fbar = 0;
    double pw_half = 0;  // half the word error rate
    double se_pw_half = 0;
    double p_succ = 0;
    uint64_t accepted = 0;
    uint64_t trials = 0;
    uint64_t seed = 0;
};

/// Sampled decoding of one block: each position is lost with f_n, otherwise
/// flipped with f_u; fatal masks are counted against P_succ.
LogicalMonteCarlo monte_carlo_logical_rate(const CssCode &c, const AbortPolicy &policy, double f_u, double f_n,
                                           uint64_t trials, uint64_t seed, unsigned threads = 0);

}  // namespace qrep

#endif
