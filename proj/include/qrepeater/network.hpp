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

#ifndef QREPEATER_NETWORK_HPP
#define QREPEATER_NETWORK_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qrepeater/error_model.hpp"
#include "qrepeater/graph.hpp"
#include "qrepeater/rates.hpp"

namespace qrep {

/// Party graph plus an even repeater count per edge. Directions set on the
/// party graph override the default orientation of the inserted path.
struct NetworkSpec {
    Graph party_graph;
    std::vector<RepeaterCount> repeater_counts;  // edges not listed get 0

    static NetworkSpec from_edge_list(const EdgeListFile &f);
    std::size_t count(std::size_t a, std::size_t b) const;
    void validate() const;
};

enum class VertexRole { party, repeater };

/// Parties keep their indices 1..P; repeaters follow, path by path in the
/// party graph's edge order, each path listed from its lower endpoint.
struct AugmentedGraph {
    Graph graph;
    std::size_t parties = 0;
    std::vector<VertexRole> roles;          // index v-1
    std::vector<std::optional<Edge>> provenance;  // party edge of a repeater
    Graph party_graph;

    VertexRole role(std::size_t v) const { return roles.at(v - 1); }
    std::vector<std::size_t> repeaters() const;
};

/// Replaces every party edge by a path with its repeater count of interior
/// vertices and orients every path. Throws std::invalid_argument on odd
/// counts or counts on non-edges.
AugmentedGraph insert_repeaters(const NetworkSpec &spec);

/// Party graph recovered by contracting every repeater path.
Graph contract_repeaters(const AugmentedGraph &ag);

/// deg / deg_in / deg_out for every vertex (index v-1). Throws
/// std::invalid_argument if an edge has no direction.
std::vector<DegreeProfile> degree_profiles(const AugmentedGraph &ag);

struct NetworkVerification {
    bool ok = false;
    bool oracle_checked = false;
    std::vector<std::vector<int>> outcomes;  // one pattern per check, repeater order
    std::vector<PauliOperator> byproducts;   // on the parties
    std::string failure;
};

/// Builds the CZ circuit of the augmented graph, measures every repeater in
/// X and checks that the parties end up in the party graph state once the
/// by-product is applied. All 2^r patterns are tried when r is small,
/// otherwise the first `max_patterns` in counting order. With at most 14
/// vertices every pattern is also checked on dense state vectors.
NetworkVerification verify_network_state(const AugmentedGraph &ag, std::size_t max_patterns = 4096);

struct StationRate {
    std::size_t vertex = 0;
    VertexRole role = VertexRole::party;
    DegreeProfile profile;
    bool measured = false;
    double f_u = 0;
    double f_n = 0;
};

/// Degree-dependent rates for every vertex; only repeaters are measured.
std::vector<StationRate> network_station_rates(const AugmentedGraph &ag, const FailureRates &r);

}  // namespace qrep

#endif
