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

#include <random>

#include "doctest.h"
#include "qrepeater/circuit.hpp"
#include "qrepeater/graph.hpp"
#include "qrepeater/stabilizer.hpp"
#include "support/oracles.hpp"

using qrep::PauliOperator;
using qrep::StabilizerSet;

namespace {

qrep::Graph random_graph(std::size_t n, double p, std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(p);
    qrep::Graph g(n);
    for (std::size_t a = 1; a <= n; a++)
        for (std::size_t b = a + 1; b <= n; b++)
            if (coin(rng)) g.add_edge(a, b);
    return g;
}

qrep::Graph line(std::size_t n) {
    qrep::Graph g(n);
    for (std::size_t i = 1; i < n; i++) g.add_edge(i, i + 1);
    return g;
}

// endpoint pair (|0>|+> + |1>|->)/sqrt(2), qubit 1 in bit 0.
const std::vector<double> kBellPair = {0.5, 0.5, 0.5, -0.5};

}  // namespace

TEST_CASE("stabilizer set validation") {
    CHECK_THROWS_AS(StabilizerSet::from_strings({"XI", "ZI"}), std::invalid_argument);
    CHECK_THROWS_AS(StabilizerSet::from_strings({"XX", "XX"}), std::invalid_argument);
    CHECK_THROWS_AS(StabilizerSet::from_strings({"XX", "ZZZ"}), std::invalid_argument);
    auto s = StabilizerSet::from_strings({"XZ", "ZX"});
    CHECK(s.size() == 2);
    CHECK(s.membership_sign(PauliOperator::from_string("YY")) == 1);
    CHECK(s.membership_sign(PauliOperator::from_string("-XZ")) == -1);
    CHECK(!s.membership_sign(PauliOperator::from_string("XX")).has_value());
}

TEST_CASE("group equality ignores generator choice") {
    auto a = StabilizerSet::from_strings({"XZI", "ZXZ", "IZX"});
    auto b = StabilizerSet::from_strings({"XZI", "YYZ", "XIX"});
    CHECK(a.same_group(b));
    CHECK(a.canonical().generators() == b.canonical().generators());
    auto c = StabilizerSet::from_strings({"-XZI", "ZXZ", "IZX"});
    CHECK(!a.same_group(c));
    CHECK(a.same_group_up_to_signs(c));
}

TEST_CASE("symplectic rank") {
    std::vector<PauliOperator> rows = {PauliOperator::from_string("XX"), PauliOperator::from_string("ZZ"),
                                       PauliOperator::from_string("YY")};
    CHECK(qrep::symplectic_rank(rows) == 2);
}

TEST_CASE("graph state generators") {
    qrep::Graph e(2);
    e.add_edge(1, 2);
    CHECK(qrep::graph_state_stabilizers(e).same_group(StabilizerSet::from_strings({"XZ", "ZX"})));
    CHECK(qrep::graph_state_stabilizers(qrep::Graph(3)).same_group(StabilizerSet::from_strings({"XII", "IXI", "IIX"})));
    auto g5 = qrep::graph_state_stabilizers(line(5));
    for (std::size_t i = 1; i <= 5; i++) {
        PauliOperator p = PauliOperator::single(5, i, 'X');
        if (i > 1) p.set_z(i - 1, true);
        if (i < 5) p.set_z(i + 1, true);
        CHECK(g5.generators()[i - 1] == p);
    }
}

TEST_CASE("circuit builds the graph state") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 60; t++) {
        auto g = random_graph(2 + rng() % 11, 0.4, rng);
        auto s = qrep::run_clifford(qrep::build_graph_circuit(g));
        CHECK(s.same_group(qrep::graph_state_stabilizers(g)));
    }
}

TEST_CASE("line orderings agree") {
    for (std::size_t n = 2; n <= 12; n++) {
        auto a = qrep::run_clifford(qrep::build_line_circuit(n, qrep::LineOrdering::sequential));
        auto b = qrep::run_clifford(qrep::build_line_circuit(n, qrep::LineOrdering::two_step));
        CHECK(a.same_group(b));
        CHECK(a.same_group(qrep::graph_state_stabilizers(line(n))));
    }
}

TEST_CASE("line circuit layout") {
    auto c2 = qrep::build_line_circuit(2, qrep::LineOrdering::sequential);
    CHECK(c2.gates.size() == 1);
    CHECK(c2.measurements.empty());
    auto c4 = qrep::build_line_circuit(4, qrep::LineOrdering::sequential);
    REQUIRE(c4.gates.size() == 3);
    for (std::size_t i = 0; i < 3; i++) {
        CHECK(c4.gates[i].kind == qrep::GateKind::CZ);
        CHECK(c4.gates[i].a == i + 1);
        CHECK(c4.gates[i].b == i + 2);
    }
    REQUIRE(c4.measurements.size() == 2);
    CHECK(c4.measurements[0].qubit == 2);
    CHECK(c4.measurements[1].qubit == 3);
    auto t6 = qrep::build_line_circuit(6, qrep::LineOrdering::two_step);
    REQUIRE(t6.gates.size() == 5);
    // odd controls first
    CHECK(t6.gates[0].a == 1);
    CHECK(t6.gates[1].a == 3);
    CHECK(t6.gates[2].a == 5);
    CHECK(t6.gates[3].a == 2);
    CHECK(t6.gates[4].a == 4);
}

TEST_CASE("main stabilizers on a line") {
    auto ms = qrep::main_stabilizers(line(4), {1, 4});
    REQUIRE(ms.size() == 2);
    CHECK(ms[0] == PauliOperator::from_string("XIXZ"));
    CHECK(ms[1] == PauliOperator::from_string("ZXIX"));
    CHECK_THROWS_AS(qrep::main_stabilizers(line(3), {1, 3}), std::invalid_argument);
}

TEST_CASE("measurement reduction on the 4-vertex line") {
    auto s = qrep::run_clifford(qrep::build_line_circuit(4, qrep::LineOrdering::sequential));
    auto r = qrep::measure_x_and_reduce(s, {2, 3}, {1, 1});
    CHECK(r.reduced.same_group(StabilizerSet::from_strings({"XZ", "ZX"})));
    CHECK(r.byproduct.is_identity());
    CHECK(r.remaining == std::vector<std::size_t>{1, 4});

    auto m = qrep::measure_x_and_reduce(s, {2, 3}, {-1, 1});
    CHECK(m.byproduct.equal_up_to_sign(PauliOperator::from_string("XI")));

    auto none = qrep::measure_x_and_reduce(s, {}, {});
    CHECK(none.reduced.same_group(s));
    CHECK(none.byproduct.is_identity());
}

TEST_CASE("measurement input checks") {
    auto s = qrep::run_clifford(qrep::build_line_circuit(4, qrep::LineOrdering::sequential));
    CHECK_THROWS_AS(qrep::measure_x_and_reduce(s, {2}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(qrep::measure_x_and_reduce(s, {2}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(qrep::measure_x_and_reduce(s, {9}, {1}), std::invalid_argument);
    // |+> has no -1 outcome
    CHECK_THROWS_AS(qrep::measure_x_and_reduce(StabilizerSet::from_strings({"X"}), {1}, {-1}), std::domain_error);
}

TEST_CASE("every outcome on short lines yields the pair after correction") {
    for (std::size_t n = 3; n <= 8; n++) {
        auto s = qrep::run_clifford(qrep::build_line_circuit(n, qrep::LineOrdering::sequential));
        std::vector<std::size_t> measured;
        for (std::size_t q = 2; q < n; q++) measured.push_back(q);
        for (std::size_t pat = 0; pat < (std::size_t{1} << measured.size()); pat++) {
            std::vector<int> out;
            for (std::size_t k = 0; k < measured.size(); k++) out.push_back((pat >> k) & 1 ? -1 : 1);
            auto r = qrep::measure_x_and_reduce(s, measured, out);
            REQUIRE(r.reduced.size() == 2);
            if (n % 2 == 0) {
                auto psi = qrep::apply_pauli(r.byproduct, qrep::statevector_oracle(r.reduced));
                CHECK(std::abs(std::abs(qrep::inner_product(psi, kBellPair)) - 1) < 1e-12);
            } else {
                // odd number of measured repeaters: the pair is locally rotated
                CHECK(r.reduced.unsigned_copy().same_group(StabilizerSet::from_strings({"XX", "ZZ"})));
            }
        }
    }
}

TEST_CASE("state vector oracle") {
    auto plus = qrep::statevector_oracle(StabilizerSet::from_strings({"X"}));
    CHECK(plus[0] == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(plus[1] == doctest::Approx(1 / std::sqrt(2.0)));
    auto pair = qrep::statevector_oracle(StabilizerSet::from_strings({"XZ", "ZX"}));
    CHECK(std::abs(std::abs(qrep::inner_product(pair, kBellPair)) - 1) < 1e-12);

    std::mt19937_64 rng(8);
    for (int t = 0; t < 10; t++) {
        auto g = random_graph(8, 0.5, rng);
        auto s = qrep::graph_state_stabilizers(g);
        auto psi = qrep::statevector_oracle(s);
        CHECK(std::abs(qrep::inner_product(psi, psi) - 1) < 1e-12);
        for (const auto &gen : s.generators()) {
            auto phi = qrep::apply_pauli(gen, psi);
            double d = 0;
            for (std::size_t i = 0; i < psi.size(); i++) d = std::max(d, std::abs(phi[i] - psi[i]));
            CHECK(d < 1e-12);
        }
        CHECK(std::abs(std::abs(qrep::inner_product(psi, oracle::graph_state_vector(g))) - 1) < 1e-12);
    }
}
