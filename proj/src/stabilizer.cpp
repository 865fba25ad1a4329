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

#include "qrepeater/stabilizer.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace qrep {

namespace {

bool column_bit(const PauliOperator &p, std::size_t col) {
    std::size_t n = p.num_qubits();
    return col < n ? p.x_bits()[col] : p.z_bits()[col - n];
}

// Which generators multiply (up to sign) to target. Caller guarantees target is in the span.
std::vector<uint8_t> expansion_of(const std::vector<PauliOperator> &gens, const PauliOperator &target) {
    std::size_t m = gens.size();
    std::size_t n = target.num_qubits();
    std::vector<std::vector<uint8_t>> rows(m);
    for (std::size_t i = 0; i < m; i++) {
        rows[i].assign(2 * n + m, 0);
        for (std::size_t c = 0; c < 2 * n; c++) {
            rows[i][c] = column_bit(gens[i], c);
        }
        rows[i][2 * n + i] = 1;
    }
    std::vector<uint8_t> t(2 * n + m, 0);
    for (std::size_t c = 0; c < 2 * n; c++) {
        t[c] = column_bit(target, c);
    }
    std::size_t r = 0;
    for (std::size_t col = 0; col < 2 * n && r < m; col++) {
        std::size_t p = r;
        while (p < m && !rows[p][col]) {
            p++;
        }
        if (p == m) {
            continue;
        }
        std::swap(rows[r], rows[p]);
        for (std::size_t i = 0; i < m; i++) {
            if (i != r && rows[i][col]) {
                for (std::size_t c = 0; c < rows[i].size(); c++) {
                    rows[i][c] ^= rows[r][c];
                }
            }
        }
        if (t[col]) {
            for (std::size_t c = 0; c < t.size(); c++) {
                t[c] ^= rows[r][c];
            }
        }
        r++;
    }
    return std::vector<uint8_t>(t.begin() + 2 * n, t.end());
}

}  // namespace

std::vector<std::size_t> row_reduce(std::vector<PauliOperator> &rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) {
        return pivots;
    }
    std::size_t n = rows[0].num_qubits();
    std::size_t r = 0;
    for (std::size_t col = 0; col < 2 * n && r < rows.size(); col++) {
        std::size_t p = r;
        while (p < rows.size() && !column_bit(rows[p], col)) {
            p++;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[p]);
        for (std::size_t i = 0; i < rows.size(); i++) {
            if (i != r && column_bit(rows[i], col)) {
                rows[i] *= rows[r];
            }
        }
        pivots.push_back(col);
        r++;
    }
    rows.resize(r);
    return pivots;
}

std::size_t symplectic_rank(const std::vector<PauliOperator> &rows) {
    std::vector<PauliOperator> copy = rows;
    for (auto &p : copy) {
        p.set_sign(1);
    }
    return row_reduce(copy).size();
}

StabilizerSet::StabilizerSet(std::size_t n_qubits, std::vector<PauliOperator> generators)
    : n_(n_qubits), gens_(std::move(generators)) {
    for (const auto &g : gens_) {
        if (g.num_qubits() != n_) {
            throw std::invalid_argument("generator length " + std::to_string(g.num_qubits()) + " != " +
                                        std::to_string(n_));
        }
        if (g.y_count() % 2) {
            throw std::invalid_argument("generator is not Hermitian: " + g.to_string());
        }
    }
    for (std::size_t a = 0; a < gens_.size(); a++) {
        for (std::size_t b = a + 1; b < gens_.size(); b++) {
            if (!gens_[a].commutes(gens_[b])) {
                throw std::invalid_argument("generators anticommute: " + gens_[a].to_string() + " and " +
                                            gens_[b].to_string());
            }
        }
    }
    if (symplectic_rank(gens_) != gens_.size()) {
        throw std::invalid_argument("generators are not independent");
    }
}

StabilizerSet StabilizerSet::from_strings(const std::vector<std::string_view> &gens) {
    std::vector<PauliOperator> ps;
    for (auto s : gens) {
        ps.push_back(PauliOperator::from_string(s));
    }
    std::size_t n = ps.empty() ? 0 : ps[0].num_qubits();
    return StabilizerSet(n, std::move(ps));
}

StabilizerSet StabilizerSet::canonical() const {
    std::vector<PauliOperator> rows = gens_;
    row_reduce(rows);
    StabilizerSet out;
    out.n_ = n_;
    out.gens_ = std::move(rows);
    return out;
}

StabilizerSet StabilizerSet::unsigned_copy() const {
    StabilizerSet out = *this;
    for (auto &g : out.gens_) {
        g.set_sign(1);
    }
    return out;
}

std::optional<int> StabilizerSet::membership_sign(const PauliOperator &p) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("membership: qubit count mismatch");
    }
    for (const auto &g : gens_) {
        if (!g.commutes(p)) {
            return std::nullopt;
        }
    }
    std::vector<PauliOperator> rows = gens_;
    std::vector<std::size_t> pivots = row_reduce(rows);
    PauliOperator rem = p;
    for (std::size_t r = 0; r < rows.size(); r++) {
        if (column_bit(rem, pivots[r])) {
            rem *= rows[r];
        }
    }
    if (!rem.is_identity()) {
        return std::nullopt;
    }
    return rem.sign();
}

bool StabilizerSet::contains(const PauliOperator &p) const {
    auto s = membership_sign(p);
    return s.has_value() && *s == 1;
}

bool StabilizerSet::same_group(const StabilizerSet &other) const {
    if (other.n_ != n_ || other.size() != size()) {
        return false;
    }
    for (const auto &g : other.gens_) {
        if (!contains(g)) {
            return false;
        }
    }
    return true;
}

bool StabilizerSet::same_group_up_to_signs(const StabilizerSet &other) const {
    if (other.n_ != n_ || other.size() != size()) {
        return false;
    }
    for (const auto &g : other.gens_) {
        if (!membership_sign(g).has_value()) {
            return false;
        }
    }
    return true;
}

MeasurementReduction measure_x_and_reduce(const StabilizerSet &s, const std::vector<std::size_t> &measured,
                                          const std::vector<int> &outcomes) {
    if (measured.size() != outcomes.size()) {
        throw std::invalid_argument("measured and outcomes lists differ in length");
    }
    std::size_t n = s.n_qubits();
    std::vector<uint8_t> is_measured(n + 1, 0);
    for (std::size_t k = 0; k < measured.size(); k++) {
        std::size_t q = measured[k];
        if (q < 1 || q > n) {
            throw std::invalid_argument("measured qubit " + std::to_string(q) + " out of range");
        }
        if (is_measured[q]) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " measured twice");
        }
        if (outcomes[k] != 1 && outcomes[k] != -1) {
            throw std::invalid_argument("outcomes must be +1 or -1");
        }
        is_measured[q] = 1;
    }

    std::vector<PauliOperator> gens = s.generators();
    // index into gens of the m*X_q generator for each measured qubit
    std::vector<std::size_t> meas_gen(n + 1, 0);
    for (std::size_t k = 0; k < measured.size(); k++) {
        std::size_t q = measured[k];
        PauliOperator mx = PauliOperator::single(n, q, 'X');
        mx.set_sign(outcomes[k]);
        std::vector<std::size_t> anti;
        for (std::size_t i = 0; i < gens.size(); i++) {
            if (gens[i].z(q)) {
                anti.push_back(i);
            }
        }
        if (!anti.empty()) {
            std::size_t pivot = anti[0];
            for (std::size_t j = 1; j < anti.size(); j++) {
                gens[anti[j]] *= gens[pivot];
            }
            gens[pivot] = mx;
            meas_gen[q] = pivot;
            continue;
        }
        StabilizerSet current(n, gens);
        auto sgn = current.membership_sign(PauliOperator::single(n, q, 'X'));
        if (!sgn.has_value()) {
            // incomplete set: X_q is independent, outcome is free
            gens.push_back(mx);
            meas_gen[q] = gens.size() - 1;
            continue;
        }
        if (*sgn != outcomes[k]) {
            throw std::domain_error("outcome " + std::to_string(outcomes[k]) + " on qubit " + std::to_string(q) +
                                    " has zero probability");
        }
        // deterministic: swap m*X_q in for one non-measurement generator of its expansion
        std::vector<uint8_t> combo = expansion_of(gens, PauliOperator::single(n, q, 'X'));
        std::size_t kept = gens.size();
        for (std::size_t i = 0; i < gens.size(); i++) {
            bool taken = false;
            for (std::size_t j = 0; j < k; j++) {
                taken |= meas_gen[measured[j]] == i;
            }
            if (combo[i] && !taken) {
                kept = i;
                break;
            }
        }
        if (kept == gens.size()) {
            throw std::domain_error("cannot place X measurement on qubit " + std::to_string(q));
        }
        gens[kept] = mx;
        meas_gen[q] = kept;
    }

    std::vector<PauliOperator> rest;
    for (std::size_t i = 0; i < gens.size(); i++) {
        bool is_meas = false;
        for (std::size_t q : measured) {
            if (meas_gen[q] == i) {
                is_meas = true;
            }
        }
        if (is_meas) {
            continue;
        }
        PauliOperator g = gens[i];
        for (std::size_t q : measured) {
            if (g.z(q)) {
                throw std::domain_error("measured qubit " + std::to_string(q) + " carries an unremovable Z");
            }
            if (g.x(q)) {
                g *= gens[meas_gen[q]];
            }
        }
        rest.push_back(g);
    }

    MeasurementReduction out;
    for (std::size_t q = 1; q <= n; q++) {
        if (!is_measured[q]) {
            out.remaining.push_back(q);
        }
    }
    std::size_t m = out.remaining.size();
    std::vector<PauliOperator> shrunk;
    for (const auto &g : rest) {
        PauliOperator h(m);
        h.set_sign(g.sign());
        for (std::size_t j = 0; j < m; j++) {
            h.set_x(j + 1, g.x(out.remaining[j]));
            h.set_z(j + 1, g.z(out.remaining[j]));
        }
        if (h.is_identity()) {
            if (h.sign() < 0) {
                throw std::domain_error("measurement produced -I in the stabilizer");
            }
            continue;
        }
        shrunk.push_back(h);
    }
    row_reduce(shrunk);
    out.reduced = StabilizerSet(m, std::move(shrunk));
    out.byproduct = solve_byproduct(out.reduced, out.reduced.unsigned_copy());
    return out;
}

PauliOperator solve_byproduct(const StabilizerSet &actual, const StabilizerSet &target) {
    if (actual.n_qubits() != target.n_qubits() || actual.size() != target.size()) {
        throw std::invalid_argument("solve_byproduct: shape mismatch");
    }
    std::size_t n = target.n_qubits();
    std::size_t nv = 2 * n;
    // one equation per target generator: <B, t_j> = [t_j appears with sign -1 in actual]
    std::vector<std::vector<uint8_t>> eqs;
    for (const auto &t : target.generators()) {
        auto sgn = actual.membership_sign(t);
        if (!sgn.has_value()) {
            throw std::invalid_argument("groups differ beyond signs: " + t.to_string());
        }
        std::vector<uint8_t> row(nv + 1, 0);
        for (std::size_t q = 0; q < n; q++) {
            // variable 2q is x_q of B, 2q+1 is z_q of B; B anticommutes through x_B z_t + z_B x_t
            row[2 * q] = t.z_bits()[q];
            row[2 * q + 1] = t.x_bits()[q];
        }
        row[nv] = *sgn < 0 ? 1 : 0;
        eqs.push_back(std::move(row));
    }
    std::vector<std::size_t> pivot_of_row;
    std::size_t r = 0;
    for (std::size_t col = 0; col < nv && r < eqs.size(); col++) {
        std::size_t p = r;
        while (p < eqs.size() && !eqs[p][col]) {
            p++;
        }
        if (p == eqs.size()) {
            continue;
        }
        std::swap(eqs[r], eqs[p]);
        for (std::size_t i = 0; i < eqs.size(); i++) {
            if (i != r && eqs[i][col]) {
                for (std::size_t c = 0; c <= nv; c++) {
                    eqs[i][c] ^= eqs[r][c];
                }
            }
        }
        pivot_of_row.push_back(col);
        r++;
    }
    for (std::size_t i = r; i < eqs.size(); i++) {
        if (eqs[i][nv]) {
            throw std::domain_error("no Pauli by-product reconciles the signs");
        }
    }
    PauliOperator b(n);
    for (std::size_t i = 0; i < r; i++) {
        if (!eqs[i][nv]) {
            continue;
        }
        std::size_t col = pivot_of_row[i];
        if (col % 2 == 0) {
            b.set_x(col / 2 + 1, true);
        } else {
            b.set_z(col / 2 + 1, true);
        }
    }
    return b;
}

std::vector<double> apply_pauli(const PauliOperator &p, const std::vector<double> &state) {
    std::size_t n = p.num_qubits();
    if (state.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("state size does not match Pauli length");
    }
    uint64_t xm = 0, zm = 0;
    for (std::size_t q = 0; q < n; q++) {
        xm |= uint64_t(p.x_bits()[q]) << q;
        zm |= uint64_t(p.z_bits()[q]) << q;
    }
    std::vector<double> out(state.size(), 0.0);
    for (uint64_t b = 0; b < state.size(); b++) {
        double v = state[b];
        if (__builtin_popcountll(zm & b) & 1) {
            v = -v;
        }
        out[b ^ xm] = p.sign() * v;
    }
    return out;
}

double inner_product(const std::vector<double> &a, const std::vector<double> &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("inner_product: size mismatch");
    }
    double acc = 0;
    for (std::size_t k = 0; k < a.size(); k++) {
        acc += a[k] * b[k];
    }
    return acc;
}

std::vector<double> statevector_oracle(const StabilizerSet &s) {
    std::size_t n = s.n_qubits();
    if (n > kMaxOracleQubits) {
        throw std::invalid_argument("statevector oracle limited to " + std::to_string(kMaxOracleQubits) + " qubits");
    }
    if (s.size() != n) {
        throw std::invalid_argument("statevector oracle needs a full-rank stabilizer set");
    }
    std::mt19937_64 rng(0x5eed5eedULL);
    std::vector<double> psi(std::size_t{1} << n);
    for (auto &a : psi) {
        a = double(rng() >> 11) * 0x1.0p-53 - 0.5;
    }
    for (const auto &g : s.generators()) {
        std::vector<double> gp = apply_pauli(g, psi);
        for (std::size_t k = 0; k < psi.size(); k++) {
            psi[k] = 0.5 * (psi[k] + gp[k]);
        }
    }
    double norm = std::sqrt(inner_product(psi, psi));
    if (!(norm > 1e-10)) {
        throw std::domain_error("generators have no common +1 eigenstate");
    }
    for (auto &a : psi) {
        a /= norm;
    }
    return psi;
}

}  // namespace qrep
