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

#include "qrepeater/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace qrep {

Graph::Graph(std::size_t n) : adj_(n) {}

void Graph::check(std::size_t v) const {
    if (v < 1 || v > adj_.size()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(adj_.size()));
    }
}

void Graph::add_edge(std::size_t a, std::size_t b) {
    check(a);
    check(b);
    if (a == b) {
        throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
    }
    if (has_edge(a, b)) {
        return;
    }
    auto &na = adj_[a - 1];
    auto &nb = adj_[b - 1];
    na.insert(std::lower_bound(na.begin(), na.end(), b), b);
    nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
}

bool Graph::has_edge(std::size_t a, std::size_t b) const {
    check(a);
    check(b);
    const auto &na = adj_[a - 1];
    return std::binary_search(na.begin(), na.end(), b);
}

const std::vector<std::size_t> &Graph::neighbors(std::size_t v) const {
    check(v);
    return adj_[v - 1];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (std::size_t v = 1; v <= adj_.size(); v++) {
        for (std::size_t w : adj_[v - 1]) {
            if (v < w) {
                out.emplace_back(v, w);
            }
        }
    }
    return out;
}

void Graph::set_label(std::size_t v, std::string label) {
    check(v);
    labels_[v] = std::move(label);
}

std::optional<std::string> Graph::label(std::size_t v) const {
    check(v);
    auto it = labels_.find(v);
    if (it == labels_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<std::size_t> Graph::labelled_vertices() const {
    std::vector<std::size_t> out;
    for (const auto &kv : labels_) {
        out.push_back(kv.first);
    }
    return out;
}

void Graph::set_direction(std::size_t from, std::size_t to) {
    if (!has_edge(from, to)) {
        throw std::invalid_argument("no edge " + std::to_string(from) + "-" + std::to_string(to) + " to direct");
    }
    tails_[{std::min(from, to), std::max(from, to)}] = from;
}

std::optional<std::size_t> Graph::edge_tail(std::size_t a, std::size_t b) const {
    auto it = tails_.find({std::min(a, b), std::max(a, b)});
    if (it == tails_.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool Graph::fully_directed() const {
    for (const auto &e : edges()) {
        if (!edge_tail(e.first, e.second).has_value()) {
            return false;
        }
    }
    return true;
}

StabilizerSet graph_state_stabilizers(const Graph &g) {
    std::size_t n = g.size();
    std::vector<PauliOperator> gens;
    for (std::size_t v = 1; v <= n; v++) {
        PauliOperator p = PauliOperator::single(n, v, 'X');
        for (std::size_t w : g.neighbors(v)) {
            p.set_z(w, true);
        }
        gens.push_back(std::move(p));
    }
    return StabilizerSet(n, std::move(gens));
}

std::vector<PauliOperator> main_stabilizers(const Graph &g, const std::vector<std::size_t> &parties) {
    std::size_t n = g.size();
    std::vector<uint8_t> is_party(n + 1, 0);
    for (std::size_t p : parties) {
        g.neighbors(p);
        is_party[p] = 1;
    }
    auto gen = [&](std::size_t v) {
        PauliOperator p = PauliOperator::single(n, v, 'X');
        for (std::size_t w : g.neighbors(v)) {
            p.set_z(w, true);
        }
        return p;
    };
    std::vector<PauliOperator> out;
    for (std::size_t p : parties) {
        PauliOperator s = gen(p);
        for (std::size_t first : g.neighbors(p)) {
            std::size_t prev = p;
            std::size_t cur = first;
            std::size_t step = 1;
            while (!is_party[cur]) {
                const auto &nb = g.neighbors(cur);
                if (nb.size() != 2) {
                    throw std::invalid_argument("repeater vertex " + std::to_string(cur) + " has degree " +
                                                std::to_string(nb.size()) + ", expected 2");
                }
                if (step % 2 == 0) {
                    s *= gen(cur);
                }
                std::size_t next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
                step++;
                if (cur == p) {
                    throw std::invalid_argument("repeater path returns to its starting party");
                }
            }
            if ((step - 1) % 2 != 0) {
                throw std::invalid_argument("odd number of repeaters between parties " + std::to_string(p) +
                                            " and " + std::to_string(cur));
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

Circuit build_graph_circuit(const Graph &g) {
    Circuit c;
    c.n_qubits = g.size();
    for (const auto &e : g.edges()) {
        c.gates.push_back(CliffordGate::cz(e.first, e.second));
    }
    c.validate();
    return c;
}

Circuit build_tree_circuit(const Graph &g, std::size_t root, const std::vector<std::size_t> &measured) {
    std::size_t n = g.size();
    g.neighbors(root);
    if (g.edges().size() + 1 != n) {
        throw std::invalid_argument("tree circuit needs a tree (|E| = N - 1)");
    }
    std::vector<std::size_t> parent(n + 1, 0);
    std::vector<uint8_t> seen(n + 1, 0);
    std::vector<std::size_t> order;
    std::deque<std::size_t> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        order.push_back(u);
        for (std::size_t v : g.neighbors(u)) {
            if (seen[v]) {
                continue;
            }
            auto tail = g.edge_tail(u, v);
            if (tail.has_value() && *tail != u) {
                throw std::invalid_argument("edge direction " + std::to_string(v) + "->" + std::to_string(u) +
                                            " points towards the root");
            }
            seen[v] = 1;
            parent[v] = u;
            queue.push_back(v);
        }
    }
    if (order.size() != n) {
        throw std::invalid_argument("tree circuit needs a connected graph");
    }
    Circuit c;
    c.n_qubits = n;
    c.kinds.assign(n, QubitKind::flying);
    c.kinds[root - 1] = QubitKind::stationary;
    for (std::size_t u : order) {
        for (std::size_t v : g.neighbors(u)) {
            if (parent[v] == u) {
                c.gates.push_back(CliffordGate::cz(u, v));
                c.channels.push_back({v, c.gates.size() - 1});
            }
        }
    }
    for (std::size_t v : measured) {
        g.neighbors(v);
        Measurement m{v, {v}};
        if (parent[v] != 0) {
            m.marked_by.push_back(parent[v]);
        }
        c.measurements.push_back(m);
    }
    c.validate();
    return c;
}

EdgeListFile parse_edge_list(std::istream &in) {
    EdgeListFile out;
    std::string line;
    std::size_t lineno = 0;
    bool have_n = false;
    std::vector<std::pair<std::size_t, std::size_t>> dirs;
    auto fail = [&](const std::string &msg) {
        throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream ss(line);
        std::string head;
        if (!(ss >> head)) {
            continue;
        }
        auto read_index = [&]() {
            long long v;
            if (!(ss >> v) || v < 1) {
                fail("expected a positive vertex index");
            }
            return static_cast<std::size_t>(v);
        };
        if (!have_n) {
            std::size_t n = 0;
            try {
                n = std::stoul(head);
            } catch (const std::exception &) {
                fail("first line must be the vertex count");
            }
            out.graph = Graph(n);
            have_n = true;
            continue;
        }
        try {
            if (head == "party") {
                std::size_t v = read_index();
                std::string label;
                if (!(ss >> label)) {
                    fail("party line needs a label");
                }
                out.graph.set_label(v, label);
            } else if (head == "w") {
                std::size_t a = read_index();
                std::size_t b = read_index();
                long long cnt;
                if (!(ss >> cnt) || cnt < 0) {
                    fail("w line needs a non-negative count");
                }
                out.repeater_counts.push_back({a, b, static_cast<std::size_t>(cnt)});
            } else if (head == "dir") {
                std::size_t a = read_index();
                std::size_t b = read_index();
                dirs.emplace_back(a, b);
            } else {
                std::size_t a = std::stoul(head);
                std::size_t b = read_index();
                out.graph.add_edge(a, b);
            }
        } catch (const std::invalid_argument &e) {
            if (std::string(e.what()).rfind("edge list line", 0) == 0) {
                throw;
            }
            fail(e.what());
        } catch (const std::out_of_range &e) {
            fail(e.what());
        }
        std::string extra;
        if (ss >> extra) {
            fail("unexpected trailing token '" + extra + "'");
        }
    }
    if (!have_n) {
        throw std::invalid_argument("edge list is empty");
    }
    for (const auto &d : dirs) {
        out.graph.set_direction(d.first, d.second);
    }
    return out;
}

EdgeListFile read_edge_list_file(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw std::invalid_argument("cannot open edge list file " + path);
    }
    return parse_edge_list(f);
}

}  // namespace qrep
