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

#include "qrepeater/circuit.hpp"

#include <stdexcept>

namespace qrep {

CliffordGate CliffordGate::h(std::size_t q) { return {GateKind::H, q, 0}; }
CliffordGate CliffordGate::cx(std::size_t control, std::size_t target) {
    if (control == target) {
        throw std::invalid_argument("CX needs two distinct qubits");
    }
    return {GateKind::CX, control, target};
}
CliffordGate CliffordGate::cz(std::size_t a, std::size_t b) {
    if (a == b) {
        throw std::invalid_argument("CZ needs two distinct qubits");
    }
    return {GateKind::CZ, a, b};
}
CliffordGate CliffordGate::mx(std::size_t q) { return {GateKind::MX, q, 0}; }

std::string CliffordGate::to_string() const {
    switch (kind) {
        case GateKind::H:
            return "H(" + std::to_string(a) + ")";
        case GateKind::CX:
            return "CX(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case GateKind::CZ:
            return "CZ(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case GateKind::MX:
            return "MX(" + std::to_string(a) + ")";
    }
    return "?";
}

PauliOperator conjugate_pauli(const CliffordGate &gate, const PauliOperator &p) {
    std::size_t n = p.num_qubits();
    auto check = [&](std::size_t q) {
        if (q < 1 || q > n) {
            throw std::out_of_range("gate " + gate.to_string() + " outside " + std::to_string(n) + " qubits");
        }
    };
    check(gate.a);
    if (gate.two_qubit()) {
        check(gate.b);
        if (gate.a == gate.b) {
            throw std::invalid_argument("two-qubit gate on a single qubit");
        }
    }
    if (gate.kind == GateKind::MX) {
        return p;
    }

    // images of X_q and Z_q on the gate support
    auto image = [&](std::size_t q, char which) {
        PauliOperator r = PauliOperator::single(n, q, which);
        switch (gate.kind) {
            case GateKind::H:
                if (q == gate.a) {
                    r = PauliOperator::single(n, q, which == 'X' ? 'Z' : 'X');
                }
                break;
            case GateKind::CZ:
                if (which == 'X' && (q == gate.a || q == gate.b)) {
                    r *= PauliOperator::single(n, q == gate.a ? gate.b : gate.a, 'Z');
                }
                break;
            case GateKind::CX:
                if (which == 'X' && q == gate.a) {
                    r *= PauliOperator::single(n, gate.b, 'X');
                } else if (which == 'Z' && q == gate.b) {
                    r = PauliOperator::single(n, gate.a, 'Z') * r;
                }
                break;
            case GateKind::MX:
                break;
        }
        return r;
    };

    // factors on different qubits commute blockwise, so the support can be
    // split off and conjugated on its own
    PauliOperator rest = p;
    PauliOperator support(n);
    std::size_t qs[2] = {gate.a, gate.two_qubit() ? gate.b : 0};
    if (qs[1] != 0 && qs[1] < qs[0]) {
        std::swap(qs[0], qs[1]);
    }
    for (std::size_t q : qs) {
        if (q == 0) {
            continue;
        }
        if (p.x(q)) {
            support *= image(q, 'X');
        }
        if (p.z(q)) {
            support *= image(q, 'Z');
        }
        rest.set_x(q, false);
        rest.set_z(q, false);
    }
    return rest * support;
}

StabilizerSet conjugate_set(const CliffordGate &gate, const StabilizerSet &s) {
    std::vector<PauliOperator> gens;
    gens.reserve(s.size());
    for (const auto &g : s.generators()) {
        gens.push_back(conjugate_pauli(gate, g));
    }
    return StabilizerSet(s.n_qubits(), std::move(gens));
}

bool Circuit::is_measured(std::size_t q) const {
    for (const auto &m : measurements) {
        if (m.qubit == q) {
            return true;
        }
    }
    return false;
}

const Measurement &Circuit::measurement_of(std::size_t q) const {
    for (const auto &m : measurements) {
        if (m.qubit == q) {
            return m;
        }
    }
    throw std::invalid_argument("qubit " + std::to_string(q) + " is not measured");
}

void Circuit::validate() const {
    auto in_range = [&](std::size_t q) { return q >= 1 && q <= n_qubits; };
    for (const auto &g : gates) {
        if (!in_range(g.a) || (g.two_qubit() && (!in_range(g.b) || g.a == g.b))) {
            throw std::invalid_argument("gate " + g.to_string() + " has a bad index");
        }
    }
    std::vector<int> seen(n_qubits + 1, 0);
    for (const auto &m : measurements) {
        if (!in_range(m.qubit)) {
            throw std::invalid_argument("measurement index out of range");
        }
        if (seen[m.qubit]++) {
            throw std::invalid_argument("qubit " + std::to_string(m.qubit) + " measured twice");
        }
        for (std::size_t q : m.marked_by) {
            if (!in_range(q)) {
                throw std::invalid_argument("marking qubit out of range");
            }
        }
    }
    for (const auto &c : channels) {
        if (!in_range(c.qubit) || c.after_gate >= gates.size()) {
            throw std::invalid_argument("channel marker references a missing qubit or gate");
        }
    }
    if (!kinds.empty() && kinds.size() != n_qubits) {
        throw std::invalid_argument("qubit kind list has wrong length");
    }
}

Circuit build_line_circuit(std::size_t n, LineOrdering ordering) {
    if (n < 2) {
        throw std::invalid_argument("line circuit needs N >= 2");
    }
    Circuit c;
    c.n_qubits = n;
    c.kinds.assign(n, QubitKind::flying);
    c.kinds[0] = QubitKind::stationary;
    if (ordering == LineOrdering::sequential) {
        for (std::size_t i = 1; i < n; i++) {
            c.gates.push_back(CliffordGate::cz(i, i + 1));
        }
    } else {
        for (std::size_t i = 1; i < n; i += 2) {
            c.gates.push_back(CliffordGate::cz(i, i + 1));
        }
        for (std::size_t i = 2; i < n; i += 2) {
            c.gates.push_back(CliffordGate::cz(i, i + 1));
        }
    }
    for (std::size_t q = 2; q <= n; q++) {
        for (std::size_t k = 0; k < c.gates.size(); k++) {
            if (c.gates[k].a == q || c.gates[k].b == q) {
                c.channels.push_back({q, k});
                break;
            }
        }
    }
    for (std::size_t q = 2; q + 1 <= n; q++) {
        c.measurements.push_back({q, {q, q - 1}});
    }
    c.validate();
    return c;
}

Circuit build_two_qubit_line_circuit(std::size_t stations) {
    if (stations < 2) {
        throw std::invalid_argument("two-qubit line needs at least 2 stations");
    }
    Circuit c;
    c.n_qubits = 2 * stations - 1;
    c.kinds.resize(c.n_qubits);
    for (std::size_t q = 1; q <= c.n_qubits; q++) {
        c.kinds[q - 1] = q % 2 ? QubitKind::stationary : QubitKind::flying;
    }
    auto s = [](std::size_t j) { return 2 * j - 1; };
    auto f = [](std::size_t j) { return 2 * j; };
    for (std::size_t j = 1; j < stations; j++) {
        c.gates.push_back(CliffordGate::cz(s(j), f(j)));
        c.channels.push_back({f(j), c.gates.size() - 1});
    }
    for (std::size_t j = 1; j < stations; j++) {
        c.gates.push_back(CliffordGate::cz(f(j), s(j + 1)));
    }
    for (std::size_t j = 1; j < stations; j++) {
        c.measurements.push_back({f(j), {f(j)}});
        if (j + 1 < stations) {
            c.measurements.push_back({s(j + 1), {s(j + 1), f(j)}});
        }
    }
    c.validate();
    return c;
}

StabilizerSet run_clifford(const Circuit &c) {
    c.validate();
    std::vector<PauliOperator> gens;
    for (std::size_t q = 1; q <= c.n_qubits; q++) {
        gens.push_back(PauliOperator::single(c.n_qubits, q, 'X'));
    }
    for (const auto &g : c.gates) {
        for (auto &p : gens) {
            p = conjugate_pauli(g, p);
        }
    }
    return StabilizerSet(c.n_qubits, std::move(gens));
}

}  // namespace qrep
