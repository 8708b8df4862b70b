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

#include "antimagic/graph.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace antimagic {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)) {
  require(vertex_count >= 0, Errc::shape_invalid, "negative vertex count");
  incident_.resize(vertex_count);
  std::set<std::pair<VertexId, VertexId>> seen;
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
    Edge& ed = edges_[e];
    if (ed.u > ed.v) std::swap(ed.u, ed.v);
    require(ed.u >= 0 && ed.v < vertex_count, Errc::shape_invalid,
            "edge endpoint out of range");
    require(ed.u != ed.v, Errc::shape_invalid, "self loop");
    require(seen.insert({ed.u, ed.v}).second, Errc::shape_invalid,
            "duplicate edge");
    incident_[ed.u].push_back(e);
    incident_[ed.v].push_back(e);
  }
}

int Graph::min_degree() const {
  int d = edge_count() == 0 && vertex_count() == 0 ? 0 : vertex_count();
  for (VertexId v = 0; v < vertex_count(); ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (VertexId v = 0; v < vertex_count(); ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::adjacent(VertexId a, VertexId b) const {
  return find_edge(a, b) != -1;
}

EdgeId Graph::find_edge(VertexId a, VertexId b) const {
  for (EdgeId e : incident_[a]) {
    if (other_end(e, a) == b) return e;
  }
  return -1;
}

bool Graph::connected() const {
  if (vertex_count() == 0) return true;
  std::vector<char> seen(vertex_count(), 0);
  std::vector<VertexId> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : incident_[v]) {
      VertexId w = other_end(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertex_count();
}

std::vector<VertexId> Graph::leaves() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (degree(v) == 1) out.push_back(v);
  }
  return out;
}

std::map<int, std::vector<VertexId>> degree_classes(const Graph& g) {
  std::map<int, std::vector<VertexId>> classes;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    classes[g.degree(v)].push_back(v);
  }
  return classes;
}

}  // namespace antimagic
