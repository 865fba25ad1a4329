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

#ifndef QREPEATER_GRAPH_HPP
#define QREPEATER_GRAPH_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrepeater/circuit.hpp"
#include "qrepeater/pauli.hpp"
#include "qrepeater/stabilizer.hpp"

namespace qrep {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 1..N with optional labels and an
/// optional transmission direction per edge.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t size() const { return adj_.size(); }
  void add_edge(std::size_t a, std::size_t b);
  bool has_edge(std::size_t a, std::size_t b) const;
  /// Sorted neighbor list.
  const std::vector<std::size_t> &neighbors(std::size_t v) const;
  std::size_t degree(std::size_t v) const { return neighbors(v).size(); }
  /// All edges as (low, high), sorted.
  std::vector<Edge> edges() const;

  void set_label(std::size_t v, std::string label);
  std::optional<std::string> label(std::size_t v) const;
  /// Labelled vertices in increasing order.
  std::vector<std::size_t> labelled_vertices() const;

  /// Marks the edge {from, to} as transmitted from `from` to `to`.
  void set_direction(std::size_t from, std::size_t to);
  /// Tail of the edge if a direction was set.
  std::optional<std::size_t> edge_tail(std::size_t a, std::size_t b) const;
  bool fully_directed() const;

 private:
  void check(std::size_t v) const;
  std::vector<std::vector<std::size_t>> adj_;
  std::map<std::size_t, std::string> labels_;
  std::map<Edge, std::size_t> tails_;
};

/// g_i = X_i prod_{(i,j) in E} Z_j, one generator per vertex.
StabilizerSet graph_state_stabilizers(const Graph &g);

/// Per-party product of every second generator along each path of
/// unlabelled degree-2 vertices towards the neighbouring parties. Throws
/// std::invalid_argument if a path has an odd number of interior vertices.
std::vector<PauliOperator> main_stabilizers(const Graph &g, const std::vector<std::size_t> &parties);

/// |+> on every vertex, then CZ per edge (edges() order). No measurements.
Circuit build_graph_circuit(const Graph &g);

/// Tree circuit: every non-root vertex is prepared at its parent, entangled by
/// CZ(parent, child) and sent. Parents follow set directions, otherwise the
/// tree is oriented away from root. Each measured vertex is marked by itself
/// and its parent.
Circuit build_tree_circuit(const Graph &g, std::size_t root, const std::vector<std::size_t> &measured);

struct RepeaterCount {
    std::size_t a;
    std::size_t b;
    std::size_t count;
};

struct EdgeListFile {
    Graph graph;
    std::vector<RepeaterCount> repeater_counts;
};

/// Reads "N", then lines "i j", "party i LABEL", "w i j COUNT" and
/// "dir i j" (edge transmitted from i to j). '#' starts a comment.
EdgeListFile parse_edge_list(std::istream &in);
EdgeListFile read_edge_list_file(const std::string &path);

}  // namespace qrep

#endif
