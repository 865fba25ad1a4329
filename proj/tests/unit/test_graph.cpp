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
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "qrepeater/graph.hpp"

TEST_CASE("graph basics") {
    qrep::Graph g(4);
    g.add_edge(3, 1);
    g.add_edge(2, 3);
    CHECK(g.has_edge(1, 3));
    CHECK(g.has_edge(3, 2));
    CHECK(!g.has_edge(1, 2));
    CHECK(g.neighbors(3) == std::vector<std::size_t>{1, 2});
    CHECK(g.edges() == std::vector<qrep::Edge>{{1, 3}, {2, 3}});
    CHECK(g.degree(4) == 0);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS(g.add_edge(1, 5));
    CHECK(!g.fully_directed());
    g.set_direction(3, 1);
    g.set_direction(2, 3);
    CHECK(g.fully_directed());
    CHECK(g.edge_tail(1, 3) == 3u);
    CHECK_THROWS_AS(g.set_direction(1, 2), std::invalid_argument);
}

TEST_CASE("edge list parsing") {
    std::istringstream in(
        "# party line\n"
        "4\n"
        "1 2\n2 3\n3 4  # tail\n"
        "party 1 A\nparty 4 B\n"
        "w 1 4 6\n"
        "dir 2 1\n");
    auto f = qrep::parse_edge_list(in);
    CHECK(f.graph.size() == 4);
    CHECK(f.graph.edges().size() == 3);
    CHECK(f.graph.label(1) == std::string("A"));
    CHECK(f.graph.labelled_vertices() == std::vector<std::size_t>{1, 4});
    CHECK(f.graph.edge_tail(1, 2) == 2u);
    REQUIRE(f.repeater_counts.size() == 1);
    CHECK(f.repeater_counts[0].count == 6);
}

TEST_CASE("edge list errors") {
    std::istringstream bad1("3\n1 4\n");
    CHECK_THROWS_AS(qrep::parse_edge_list(bad1), std::invalid_argument);
    std::istringstream bad2("3\n1 x\n");
    CHECK_THROWS_AS(qrep::parse_edge_list(bad2), std::invalid_argument);
    std::istringstream bad3("");
    CHECK_THROWS_AS(qrep::parse_edge_list(bad3), std::invalid_argument);
    CHECK_THROWS(qrep::read_edge_list_file("/nonexistent/graph.txt"));
}

TEST_CASE("tree circuit marks parent and self") {
    qrep::Graph g(4);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(2, 4);
    auto c = qrep::build_tree_circuit(g, 1, {2});
    REQUIRE(c.measurements.size() == 1);
    auto m = c.measurements[0].marked_by;
    std::sort(m.begin(), m.end());
    CHECK(m == std::vector<std::size_t>{1, 2});
    CHECK(qrep::run_clifford(c).same_group(qrep::graph_state_stabilizers(g)));
}
