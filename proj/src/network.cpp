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

#include "qrepeater/network.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qrepeater/stabilizer.hpp"

namespace qrep {

namespace {

std::string label_or_index(const Graph &g, std::size_t v) {
    auto l = g.label(v);
    return l ? *l : std::to_string(v);
}

// Tail of party edge (a, b): explicit direction, else the endpoint whose
// label sorts first (unlabelled vertices use their index).
std::size_t path_tail(const Graph &g, std::size_t a, std::size_t b) {
    if (auto t = g.edge_tail(a, b)) {
        return *t;
    }
    std::string la = label_or_index(g, a);
    std::string lb = label_or_index(g, b);
    if (la != lb) {
        return la < lb ? a : b;
    }
    return std::min(a, b);
}

}  // namespace

NetworkSpec NetworkSpec::from_edge_list(const EdgeListFile &f) {
    NetworkSpec s;
    s.party_graph = f.graph;
    s.repeater_counts = f.repeater_counts;
    s.validate();
    return s;
}

std::size_t NetworkSpec::count(std::size_t a, std::size_t b) const {
    for (const auto &rc : repeater_counts) {
        if ((rc.a == a && rc.b == b) || (rc.a == b && rc.b == a)) {
            return rc.count;
        }
    }
    return 0;
}

void NetworkSpec::validate() const {
    if (party_graph.size() == 0) {
        throw std::invalid_argument("network has no parties");
    }
    for (std::size_t i = 0; i < repeater_counts.size(); i++) {
        const auto &rc = repeater_counts[i];
        if (rc.a < 1 || rc.b < 1 || rc.a > party_graph.size() || rc.b > party_graph.size() ||
            !party_graph.has_edge(rc.a, rc.b)) {
            throw std::invalid_argument("repeater count on " + std::to_string(rc.a) + "-" + std::to_string(rc.b) +
                                        ", which is not a party edge");
        }
        if (rc.count % 2 != 0) {
            throw std::invalid_argument("odd repeater count " + std::to_string(rc.count) + " on edge " +
                                        std::to_string(rc.a) + "-" + std::to_string(rc.b));
        }
        for (std::size_t j = 0; j < i; j++) {
            const auto &o = repeater_counts[j];
            if ((o.a == rc.a && o.b == rc.b) || (o.a == rc.b && o.b == rc.a)) {
                throw std::invalid_argument("repeater count given twice for edge " + std::to_string(rc.a) + "-" +
                                            std::to_string(rc.b));
            }
        }
    }
}

std::vector<std::size_t> AugmentedGraph::repeaters() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 1; v <= roles.size(); v++) {
        if (roles[v - 1] == VertexRole::repeater) {
            out.push_back(v);
        }
    }
    return out;
}

AugmentedGraph insert_repeaters(const NetworkSpec &spec) {
    spec.validate();
    const Graph &pg = spec.party_graph;
    std::size_t total = pg.size();
    for (const auto &e : pg.edges()) {
        total += spec.count(e.first, e.second);
    }
    AugmentedGraph ag;
    ag.graph = Graph(total);
    ag.parties = pg.size();
    ag.party_graph = pg;
    ag.roles.assign(total, VertexRole::party);
    ag.provenance.assign(total, std::nullopt);
    for (std::size_t v = 1; v <= pg.size(); v++) {
        if (auto l = pg.label(v)) {
            ag.graph.set_label(v, *l);
        }
    }
    std::size_t next = pg.size() + 1;
    for (const auto &e : pg.edges()) {
        std::size_t w = spec.count(e.first, e.second);
        std::vector<std::size_t> path = {e.first};
        for (std::size_t k = 0; k < w; k++) {
            ag.roles[next - 1] = VertexRole::repeater;
            ag.provenance[next - 1] = e;
            path.push_back(next++);
        }
        path.push_back(e.second);
        bool forward = path_tail(pg, e.first, e.second) == e.first;
        for (std::size_t k = 0; k + 1 < path.size(); k++) {
            ag.graph.add_edge(path[k], path[k + 1]);
            if (forward) {
                ag.graph.set_direction(path[k], path[k + 1]);
            } else {
                ag.graph.set_direction(path[k + 1], path[k]);
            }
        }
    }
    return ag;
}

Graph contract_repeaters(const AugmentedGraph &ag) {
    Graph g(ag.parties);
    for (std::size_t p = 1; p <= ag.parties; p++) {
        for (std::size_t start : ag.graph.neighbors(p)) {
            std::size_t prev = p;
            std::size_t cur = start;
            while (ag.role(cur) == VertexRole::repeater) {
                const auto &nb = ag.graph.neighbors(cur);
                if (nb.size() != 2) {
                    throw std::invalid_argument("repeater vertex " + std::to_string(cur) + " is not on a path");
                }
                std::size_t nxt = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = nxt;
            }
            if (cur != p) {
                g.add_edge(p, cur);
            }
        }
    }
    return g;
}

std::vector<DegreeProfile> degree_profiles(const AugmentedGraph &ag) {
    std::vector<DegreeProfile> out(ag.graph.size());
    for (const auto &e : ag.graph.edges()) {
        auto tail = ag.graph.edge_tail(e.first, e.second);
        if (!tail) {
            throw std::invalid_argument("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                                        " has no transmission direction");
        }
        std::size_t head = *tail == e.first ? e.second : e.first;
        out[*tail - 1].deg_out++;
        out[head - 1].deg_in++;
    }
    for (std::size_t v = 1; v <= ag.graph.size(); v++) {
        out[v - 1].deg = ag.graph.degree(v);
        out[v - 1].validate();
    }
    return out;
}

NetworkVerification verify_network_state(const AugmentedGraph &ag, std::size_t max_patterns) {
    NetworkVerification res;
    std::vector<std::size_t> reps = ag.repeaters();
    StabilizerSet produced = run_clifford(build_graph_circuit(ag.graph));
    StabilizerSet target = graph_state_stabilizers(ag.party_graph);
    if (!produced.same_group(graph_state_stabilizers(ag.graph))) {
        res.failure = "circuit does not produce the augmented graph state";
        return res;
    }
    const std::size_t n = ag.graph.size();
    const bool dense = n <= kMaxOracleQubits;
    std::vector<double> psi;
    std::vector<double> want;
    if (dense) {
        psi = statevector_oracle(produced);
        want = statevector_oracle(target);
        res.oracle_checked = true;
    }
    uint64_t total = reps.size() >= 63 ? ~uint64_t{0} : (uint64_t{1} << reps.size());
    uint64_t patterns = std::min<uint64_t>(total, std::max<std::size_t>(max_patterns, 1));
    for (uint64_t pat = 0; pat < patterns; pat++) {
        std::vector<int> outcomes(reps.size());
        for (std::size_t k = 0; k < reps.size(); k++) {
            outcomes[k] = (pat >> k) & 1 ? -1 : 1;
        }
        MeasurementReduction red;
        try {
            red = measure_x_and_reduce(produced, reps, outcomes);
        } catch (const std::domain_error &e) {
            res.failure = std::string("measurement reduction failed: ") + e.what();
            return res;
        }
        if (!red.reduced.same_group_up_to_signs(target)) {
            res.failure = "reduced generators differ from the party graph state";
            return res;
        }
        PauliOperator b = solve_byproduct(red.reduced, target);
        // conjugating by a Pauli flips the sign of anticommuting generators
        std::vector<PauliOperator> fixed;
        for (const auto &g : red.reduced.generators()) {
            PauliOperator h = g;
            if (!h.commutes(b)) {
                h.negate();
            }
            fixed.push_back(h);
        }
        if (!StabilizerSet(red.reduced.n_qubits(), fixed).same_group(target)) {
            res.failure = "by-product does not restore the party graph state";
            return res;
        }
        if (dense) {
            // project the measured vertices onto |+-> and drop them
            std::size_t m = ag.parties;
            std::vector<double> phi(std::size_t{1} << m, 0.0);
            for (std::size_t i = 0; i < psi.size(); i++) {
                double sgn = 1.0;
                for (std::size_t k = 0; k < reps.size(); k++) {
                    if (outcomes[k] < 0 && ((i >> (reps[k] - 1)) & 1)) {
                        sgn = -sgn;
                    }
                }
                std::size_t low = i & ((std::size_t{1} << m) - 1);
                phi[low] += sgn * psi[i];
            }
            double norm = std::sqrt(inner_product(phi, phi));
            if (norm < 1e-9) {
                res.failure = "outcome pattern has zero probability on the state vector";
                return res;
            }
            for (auto &a : phi) {
                a /= norm;
            }
            phi = apply_pauli(b, phi);
            double overlap = std::fabs(inner_product(phi, want));
            if (std::fabs(overlap - 1.0) > 1e-9) {
                res.failure = "state vector overlap " + std::to_string(overlap) + " after by-product";
                return res;
            }
        }
        res.outcomes.push_back(outcomes);
        res.byproducts.push_back(b);
    }
    res.ok = true;
    return res;
}

std::vector<StationRate> network_station_rates(const AugmentedGraph &ag, const FailureRates &r) {
    auto profiles = degree_profiles(ag);
    std::vector<StationRate> out;
    for (std::size_t v = 1; v <= ag.graph.size(); v++) {
        StationRate s;
        s.vertex = v;
        s.role = ag.role(v);
        s.profile = profiles[v - 1];
        s.measured = s.role == VertexRole::repeater;
        PhysicalRates pr = physical_rates_network(r, s.profile);
        s.f_u = pr.f_u;
        s.f_n = pr.f_n;
        out.push_back(s);
    }
    return out;
}

}  // namespace qrep
