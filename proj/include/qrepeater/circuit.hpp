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

#ifndef QREPEATER_CIRCUIT_HPP
#define QREPEATER_CIRCUIT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "qrepeater/pauli.hpp"
#include "qrepeater/stabilizer.hpp"

namespace qrep {

enum class GateKind { H, CX, CZ, MX };

/// Clifford gate on 1-based qubit indices. MX is a placeholder marking an
/// X-measurement position; it is the identity under conjugation.
struct CliffordGate {
    GateKind kind;
    std::size_t a = 0;
    std::size_t b = 0;

    static CliffordGate h(std::size_t q);
    static CliffordGate cx(std::size_t control, std::size_t target);
    static CliffordGate cz(std::size_t a, std::size_t b);
    static CliffordGate mx(std::size_t q);
    bool two_qubit() const { return kind == GateKind::CX || kind == GateKind::CZ; }
    std::string to_string() const;
};

/// U p U^dag, factor by factor in qubit order.
PauliOperator conjugate_pauli(const CliffordGate &gate, const PauliOperator &p);

enum class LineOrdering { sequential, two_step };
enum class QubitKind { stationary, flying };

struct ChannelMarker {
    std::size_t qubit;
    /// Index into Circuit::gates of the gate after which the qubit is sent.
    std::size_t after_gate;
};

struct Measurement {
    std::size_t qubit;
    /// Qubits whose noticed errors turn this outcome into "?" (always
    /// includes the measured qubit itself).
    std::vector<std::size_t> marked_by;
};

/// Every qubit starts in |+>, gates run in order, X-measurements at the end.
struct Circuit {
    std::size_t n_qubits = 0;
    std::vector<CliffordGate> gates;
    std::vector<Measurement> measurements;
    std::vector<ChannelMarker> channels;
    std::vector<QubitKind> kinds;

    /// Throws std::invalid_argument on broken invariants.
    void validate() const;
    bool is_measured(std::size_t q) const;
    const Measurement &measurement_of(std::size_t q) const;
};

/// Line of N qubits, CZ(i, i+1), measurements on 2..N-1. Qubit q >= 2 is sent
/// once, right after the first gate that touches it.
Circuit build_line_circuit(std::size_t n, LineOrdering ordering);

/// Two qubits per station (s_j kept, f_j sent): line s_1 f_1 s_2 ... f_{N-1} s_N
/// with 2N-1 qubits. Station j applies CZ(s_j, f_j) and sends f_j; station j+1
/// applies CZ(f_j, s_{j+1}) and measures f_j and s_{j+1}. s_1 and s_N are kept.
/// Qubit numbering: s_j = 2j-1, f_j = 2j.
Circuit build_two_qubit_line_circuit(std::size_t stations);

/// Stabilizer of the circuit's state before measurement, starting from |+>^n.
StabilizerSet run_clifford(const Circuit &c);
StabilizerSet conjugate_set(const CliffordGate &gate, const StabilizerSet &s);

}  // namespace qrep

#endif
