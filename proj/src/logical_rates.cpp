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

#include "qrepeater/logical_rates.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qrepeater/monte_carlo.hpp"
#include "qrepeater/parallel.hpp"

namespace qrep {

namespace {

using Table = std::vector<std::vector<double>>;

Table zero_table(std::size_t n) { return Table(n + 1, std::vector<double>(n + 1, 0.0)); }

void add_into(Table &dst, const Table &src) {
    for (std::size_t i = 0; i < dst.size(); i++) {
        for (std::size_t j = 0; j < dst[i].size(); j++) {
            dst[i][j] += src[i][j];
        }
    }
}

double binom(std::size_t n, std::size_t k) {
    double r = 1.0;
    for (std::size_t i = 1; i <= k; i++) {
        r = r * double(n - k + i) / double(i);
    }
    return r;
}

std::size_t loss_limit(const AbortPolicy &policy, std::size_t n) {
    return policy.kind == AbortPolicy::Kind::max_losses ? policy.n_max : n;
}

bool mask_fatal(const AbortPolicy &policy, Word mask, std::size_t n) {
    if (policy.kind == AbortPolicy::Kind::max_losses) {
        return std::size_t(__builtin_popcountll(mask)) > policy.n_max;
    }
    ErrorPattern e;
    e.flips.assign(n, 0);
    e.erasures = from_word(mask, n);
    return policy.is_fatal(e);
}

struct Scan {
    int best = 0;
    std::size_t ties = 0;
    std::size_t odd = 0;
    Word lex = 0;
};

Scan scan(Word received, Word live, Word logical, const std::vector<Word> &codewords) {
    Scan s;
    s.best = 65;
    for (Word c : codewords) {
        int d = __builtin_popcountll((c ^ received) & live);
        if (d < s.best) {
            s.best = d;
            s.ties = 0;
            s.odd = 0;
            s.lex = c;
        } else if (d == s.best && lex_less(c, s.lex)) {
            s.lex = c;
        }
        if (d == s.best) {
            s.ties++;
            s.odd += __builtin_popcountll(c & logical) & 1;
        }
    }
    return s;
}

}  // namespace

double enumeration_cost(std::size_t n, std::size_t n_max, std::size_t codewords) {
    double total = 0.0;
    for (std::size_t l = 0; l <= std::min(n, n_max); l++) {
        total += binom(n, l) * std::ldexp(1.0, int(n - l));
    }
    return total * double(codewords);
}

LogicalCounts enumerate_logical_errors(const CssCode &c, const AbortPolicy &policy, std::size_t logical,
                                       unsigned threads) {
    policy.validate(c.n);
    if (c.n > 25) {
        throw EnumerationTooLarge("exact enumeration needs n <= 25, code " + c.name + " has n = " +
                                  std::to_string(c.n));
    }
    ClassicalCode cc = parity_check_from_stabilizers(c);
    double cost = enumeration_cost(c.n, loss_limit(policy, c.n), cc.codewords().size());
    if (cost > kMaxEnumerationCost) {
        throw EnumerationTooLarge("enumeration for code " + c.name + " needs ~" + std::to_string(cost) +
                                  " codeword comparisons (limit " + std::to_string(kMaxEnumerationCost) + ")");
    }
    const std::size_t n = c.n;
    const Word full = (Word{1} << n) - 1;
    const Word lsupp = logical_x_support(c, logical);
    const uint64_t n_masks = uint64_t{1} << n;
    const std::size_t chunks = std::size_t(std::min<uint64_t>(n_masks, 256));
    const uint64_t per_chunk = (n_masks + chunks - 1) / chunks;

    std::vector<LogicalCounts> parts(chunks);
    parallel_for(
        chunks,
        [&](std::size_t ci) {
            LogicalCounts &p = parts[ci];
            p.patterns = p.err_lex = p.err_avg = zero_table(n);
            p.tied_patterns = p.tied_err_lex = p.tied_err_avg = zero_table(n);
            p.masks.assign(n + 1, 0.0);
            uint64_t lo = ci * per_chunk;
            uint64_t hi = std::min(n_masks, lo + per_chunk);
            for (uint64_t mask = lo; mask < hi; mask++) {
                if (mask_fatal(policy, mask, n)) {
                    continue;
                }
                std::size_t l = __builtin_popcountll(mask);
                p.masks[l] += 1;
                Word live = full & ~Word(mask);
                Word f = live;
                while (true) {
                    std::size_t w = __builtin_popcountll(f);
                    Scan s = scan(f, live, lsupp, cc.codewords());
                    double lex_err = __builtin_popcountll(s.lex & lsupp) & 1;
                    double avg_err = double(s.odd) / double(s.ties);
                    p.patterns[l][w] += 1;
                    p.err_lex[l][w] += lex_err;
                    p.err_avg[l][w] += avg_err;
                    if (s.ties > 1) {
                        p.tied_patterns[l][w] += 1;
                        p.tied_err_lex[l][w] += lex_err;
                        p.tied_err_avg[l][w] += avg_err;
                    }
                    if (f == 0) {
                        break;
                    }
                    f = (f - 1) & live;
                }
            }
        },
        threads);

    LogicalCounts out;
    out.n = n;
    out.patterns = out.err_lex = out.err_avg = zero_table(n);
    out.tied_patterns = out.tied_err_lex = out.tied_err_avg = zero_table(n);
    out.masks.assign(n + 1, 0.0);
    for (const auto &p : parts) {
        add_into(out.patterns, p.patterns);
        add_into(out.err_lex, p.err_lex);
        add_into(out.err_avg, p.err_avg);
        add_into(out.tied_patterns, p.tied_patterns);
        add_into(out.tied_err_lex, p.tied_err_lex);
        add_into(out.tied_err_avg, p.tied_err_avg);
        for (std::size_t l = 0; l <= n; l++) {
            out.masks[l] += p.masks[l];
        }
    }
    return out;
}

double evaluate_counts(const std::vector<std::vector<double>> &t, std::size_t n, double f_u, double f_n) {
    double total = 0.0;
    for (std::size_t l = 0; l < t.size(); l++) {
        double pl = std::pow(f_n, double(l)) * std::pow(1 - f_n, double(n - l));
        for (std::size_t w = 0; w < t[l].size() && l + w <= n; w++) {
            if (t[l][w] == 0.0) {
                continue;
            }
            total += t[l][w] * pl * std::pow(f_u, double(w)) * std::pow(1 - f_u, double(n - l - w));
        }
    }
    return total;
}

BiPoly counts_polynomial(const std::vector<std::vector<double>> &t, std::size_t n) {
    BiPoly total;
    BiPoly u = BiPoly::fu();
    BiPoly v = BiPoly::fn();
    for (std::size_t l = 0; l < t.size(); l++) {
        BiPoly pl = ipow(v, unsigned(l)) * ipow(1.0 - v, unsigned(n - l));
        BiPoly inner;
        for (std::size_t w = 0; w < t[l].size() && l + w <= n; w++) {
            if (t[l][w] == 0.0) {
                continue;
            }
            inner += t[l][w] * ipow(u, unsigned(w)) * ipow(1.0 - u, unsigned(n - l - w));
        }
        total += pl * inner;
    }
    return total;
}

double evaluate_masks(const std::vector<double> &m, std::size_t n, double f_n) {
    double total = 0.0;
    for (std::size_t l = 0; l < m.size(); l++) {
        total += m[l] * std::pow(f_n, double(l)) * std::pow(1 - f_n, double(n - l));
    }
    return total;
}

BiPoly masks_polynomial(const std::vector<double> &m, std::size_t n) {
    BiPoly total;
    BiPoly v = BiPoly::fn();
    for (std::size_t l = 0; l < m.size(); l++) {
        if (m[l] != 0.0) {
            total += m[l] * ipow(v, unsigned(l)) * ipow(1.0 - v, unsigned(n - l));
        }
    }
    return total;
}

LogicalRates logical_error_rate_exact(const CssCode &c, const AbortPolicy &policy, double f_u, double f_n,
                                      TieMode mode) {
    if (!(f_u >= 0 && f_u <= 1 && f_n >= 0 && f_n <= 1)) {
        throw std::invalid_argument("f_u and f_n must lie in [0,1]");
    }
    LogicalRates r;
    r.fbar_u = 0;
    for (std::size_t i = 0; i < c.k; i++) {
        LogicalCounts counts = enumerate_logical_errors(c, policy, i);
        r.fbar_u += evaluate_counts(counts.errors(mode), c.n, f_u, f_n);
        if (i == 0) {
            r.p_succ = evaluate_masks(counts.masks, c.n, f_n);
        }
    }
    r.fbar_u /= double(c.k);
    return r;
}

LogicalPolynomials logical_error_polynomials(const CssCode &c, const AbortPolicy &policy, TieMode mode) {
    LogicalPolynomials out;
    for (std::size_t i = 0; i < c.k; i++) {
        LogicalCounts counts = enumerate_logical_errors(c, policy, i);
        out.fbar_u += counts_polynomial(counts.errors(mode), c.n);
        if (i == 0) {
            out.p_succ = masks_polynomial(counts.masks, c.n);
        }
    }
    out.fbar_u = (1.0 / double(c.k)) * out.fbar_u;
    return out;
}

LogicalRates golay_logical_error_rate(double f_u, double f_n) {
    if (!(f_u >= 0 && f_u <= 1 && f_n >= 0 && f_n <= 1)) {
        throw std::invalid_argument("f_u and f_n must lie in [0,1]");
    }
    LogicalRates r;
    r.fbar_u = golay_word_error_half(f_u, f_n);
    r.p_succ = 1.0;
    return r;
}

LogicalMonteCarlo monte_carlo_logical_rate(const CssCode &c, const AbortPolicy &policy, double f_u, double f_n,
                                           uint64_t trials, uint64_t seed, unsigned threads) {
    policy.validate(c.n);
    if (trials == 0) {
        throw std::invalid_argument("trials must be positive");
    }
    if (!(f_u >= 0 && f_u <= 1 && f_n >= 0 && f_n <= 1)) {
        throw std::invalid_argument("f_u and f_n must lie in [0,1]");
    }
    ClassicalCode cc = parity_check_from_stabilizers(c);
    const Word full = c.n == 64 ? ~Word{0} : (Word{1} << c.n) - 1;
    const Word lsupp = logical_x_support(c, 0);
    struct Acc {
        double f = 0, f2 = 0, w = 0, w2 = 0;
        uint64_t accepted = 0;
    };
    uint64_t chunks = (trials + kTrialsPerChunk - 1) / kTrialsPerChunk;
    std::vector<Acc> acc(chunks);
    parallel_for(
        chunks,
        [&](std::size_t ci) {
            auto rng = stream_rng(seed, ci);
            uint64_t count = std::min<uint64_t>(kTrialsPerChunk, trials - ci * kTrialsPerChunk);
            Acc &a = acc[ci];
            for (uint64_t t = 0; t < count; t++) {
                Word lost = 0, flips = 0;
                for (std::size_t q = 0; q < c.n; q++) {
                    double r = uniform01(rng);
                    if (r < f_n) {
                        lost |= Word{1} << q;
                    } else if (r < f_n + (1 - f_n) * f_u) {
                        flips |= Word{1} << q;
                    }
                }
                if (mask_fatal(policy, lost, c.n)) {
                    continue;
                }
                a.accepted++;
                Scan s = scan(flips, full & ~lost, lsupp, cc.codewords());
                double fv = double(s.odd) / double(s.ties);
                // the sent all-zero word is among the ties or not
                bool zero_tied = __builtin_popcountll(flips & ~lost) == s.best;
                double wv = (double(s.ties) - (zero_tied ? 1.0 : 0.0)) / double(s.ties) / 2.0;
                a.f += fv;
                a.f2 += fv * fv;
                a.w += wv;
                a.w2 += wv * wv;
            }
        },
        threads);
    Acc total;
    for (const auto &a : acc) {
        total.f += a.f;
        total.f2 += a.f2;
        total.w += a.w;
        total.w2 += a.w2;
        total.accepted += a.accepted;
    }
    LogicalMonteCarlo out;
    out.trials = trials;
    out.seed = seed;
    out.accepted = total.accepted;
    out.p_succ = double(total.accepted) / double(trials);
    if (total.accepted > 0) {
        double m = double(total.accepted);
        out.fbar_u = total.f / m;
        out.pw_half = total.w / m;
        out.se_fbar = std::sqrt(std::max(0.0, total.f2 / m - out.fbar_u * out.fbar_u) / m);
        out.se_pw_half = std::sqrt(std::max(0.0, total.w2 / m - out.pw_half * out.pw_half) / m);
    }
    return out;
}

}  // namespace qrep
