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

#include "qrepeater/pauli.hpp"

#include <stdexcept>

namespace qrep {

PauliOperator::PauliOperator(std::size_t n) : x_(n, 0), z_(n, 0), sign_(1) {}

PauliOperator PauliOperator::from_string(std::string_view text) {
    // phase counted in powers of i
    int phase = 0;
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') {
            phase += 2;
        }
        pos++;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase += 1;
        pos++;
    }
    PauliOperator p(text.size() - pos);
    for (std::size_t k = pos; k < text.size(); k++) {
        std::size_t q = k - pos;
        switch (text[k]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.x_[q] = 1;
                break;
            case 'Z':
                p.z_[q] = 1;
                break;
            case 'Y':
                // Y = i XZ
                p.x_[q] = 1;
                p.z_[q] = 1;
                phase += 1;
                break;
            default:
                throw std::invalid_argument("unrecognized Pauli character '" + std::string(1, text[k]) + "' in '" +
                                            std::string(text) + "'");
        }
    }
    phase &= 3;
    if (phase & 1) {
        throw std::invalid_argument("Pauli string has imaginary overall phase: " + std::string(text));
    }
    p.sign_ = phase == 0 ? 1 : -1;
    return p;
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t qubit, char kind) {
    PauliOperator p(n);
    p.check_qubit(qubit);
    if (kind == 'X') {
        p.x_[qubit - 1] = 1;
    } else if (kind == 'Z') {
        p.z_[qubit - 1] = 1;
    } else if (kind != 'I') {
        throw std::invalid_argument("single() takes 'I', 'X' or 'Z'");
    }
    return p;
}

void PauliOperator::set_sign(int s) {
    if (s != 1 && s != -1) {
        throw std::invalid_argument("sign must be +1 or -1");
    }
    sign_ = s;
}

void PauliOperator::check_qubit(std::size_t qubit) const {
    if (qubit < 1 || qubit > x_.size()) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " outside 1.." + std::to_string(x_.size()));
    }
}

bool PauliOperator::x(std::size_t qubit) const {
    check_qubit(qubit);
    return x_[qubit - 1];
}
bool PauliOperator::z(std::size_t qubit) const {
    check_qubit(qubit);
    return z_[qubit - 1];
}
void PauliOperator::set_x(std::size_t qubit, bool v) {
    check_qubit(qubit);
    x_[qubit - 1] = v;
}
void PauliOperator::set_z(std::size_t qubit, bool v) {
    check_qubit(qubit);
    z_[qubit - 1] = v;
}

bool PauliOperator::is_identity() const {
    for (std::size_t k = 0; k < x_.size(); k++) {
        if (x_[k] || z_[k]) {
            return false;
        }
    }
    return true;
}

std::size_t PauliOperator::weight() const {
    std::size_t w = 0;
    for (std::size_t k = 0; k < x_.size(); k++) {
        w += (x_[k] | z_[k]);
    }
    return w;
}

std::size_t PauliOperator::y_count() const {
    std::size_t m = 0;
    for (std::size_t k = 0; k < x_.size(); k++) {
        m += (x_[k] & z_[k]);
    }
    return m;
}

bool PauliOperator::commutes(const PauliOperator &other) const {
    if (other.num_qubits() != num_qubits()) {
        throw std::invalid_argument("commutes: qubit count mismatch");
    }
    unsigned acc = 0;
    for (std::size_t k = 0; k < x_.size(); k++) {
        acc ^= (x_[k] & other.z_[k]) ^ (z_[k] & other.x_[k]);
    }
    return acc == 0;
}

PauliOperator &PauliOperator::operator*=(const PauliOperator &rhs) {
    if (rhs.num_qubits() != num_qubits()) {
        throw std::invalid_argument("product: qubit count mismatch");
    }
    // X^a Z^b X^c Z^d = (-1)^{b c} X^{a+c} Z^{b+d}
    unsigned flips = 0;
    for (std::size_t k = 0; k < x_.size(); k++) {
        flips ^= z_[k] & rhs.x_[k];
        x_[k] ^= rhs.x_[k];
        z_[k] ^= rhs.z_[k];
    }
    sign_ *= rhs.sign_;
    if (flips) {
        sign_ = -sign_;
    }
    return *this;
}

PauliOperator operator*(const PauliOperator &a, const PauliOperator &b) {
    PauliOperator r = a;
    r *= b;
    return r;
}

bool PauliOperator::operator==(const PauliOperator &other) const {
    return sign_ == other.sign_ && x_ == other.x_ && z_ == other.z_;
}

bool PauliOperator::equal_up_to_sign(const PauliOperator &other) const {
    return x_ == other.x_ && z_ == other.z_;
}

std::string PauliOperator::to_string() const {
    // coefficient of the Y-letter form: sign * (-i)^m
    std::size_t m = y_count() & 3;
    static const char *prefixes[2][4] = {{"+", "-i", "-", "+i"}, {"-", "+i", "+", "-i"}};
    std::string out = prefixes[sign_ < 0 ? 1 : 0][m];
    for (std::size_t k = 0; k < x_.size(); k++) {
        if (x_[k] && z_[k]) {
            out += 'Y';
        } else if (x_[k]) {
            out += 'X';
        } else if (z_[k]) {
            out += 'Z';
        } else {
            out += '_';
        }
    }
    return out;
}

}  // namespace qrep
