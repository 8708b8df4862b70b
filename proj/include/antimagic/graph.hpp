// Copyright 2026 The Antimagic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ANTIMAGIC_GRAPH_HPP
#define ANTIMAGIC_GRAPH_HPP

#include <map>
#include <vector>

#include "antimagic/error.hpp"

namespace antimagic {

using VertexId = int;
using EdgeId = int;

/// Unordered vertex pair; normalized so that u <= v never holds with
/// equality (no self loops).
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with dense 0-based vertex ids. Edge ids are
/// positions in the edge sequence. Immutable after construction; the
/// adjacency index is built once and kept consistent by construction.
class Graph {
 public:
  Graph() = default;

  /// Validates: endpoints in range, no self loops, no duplicate unordered
  /// pairs. Endpoints are stored normalized (u < v).
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return static_cast<int>(incident_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Edge ids incident to v, in increasing id order.
  const std::vector<EdgeId>& incident_edges(VertexId v) const {
    return incident_[v];
  }

  int degree(VertexId v) const { return static_cast<int>(incident_[v].size()); }
  int min_degree() const;
  int max_degree() const;

  VertexId other_end(EdgeId e, VertexId v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  bool adjacent(VertexId a, VertexId b) const;

  /// Edge id joining a and b, or -1.
  EdgeId find_edge(VertexId a, VertexId b) const;

  bool connected() const;
  bool is_tree() const { return connected() && edge_count() == vertex_count() - 1; }

  std::vector<VertexId> leaves() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.edges_ == b.edges_ && a.vertex_count() == b.vertex_count();
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

/// Partition of V(G) by degree: degree -> vertices of that degree,
/// each list in increasing vertex id order.
std::map<int, std::vector<VertexId>> degree_classes(const Graph& g);

}  // namespace antimagic

#endif  // ANTIMAGIC_GRAPH_HPP
