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

#include "antimagic/inductive.hpp"

#include <algorithm>
#include <utility>

namespace antimagic {

namespace {

// Vertex with the largest phi among leaves; the graph must have one.
VertexId top_leaf(const LabeledGraph& lg) {
  VertexId best = -1;
  for (VertexId v : lg.graph().leaves()) {
    if (best == -1 || lg.phi(v) > lg.phi(best)) best = v;
  }
  require(best != -1, Errc::leaf_count_invalid, "no leaves");
  return best;
}

}  // namespace

int ordering_position(const LabeledGraph& lg, VertexId v) {
  VertexOrdering order = lg.ordering();
  auto it = std::find(order.begin(), order.end(), v);
  require(it != order.end(), Errc::index_invalid, "vertex not in graph");
  return static_cast<int>(it - order.begin()) + 1;
}

LabeledGraph extend(const LabeledGraph& lg, ExtensionTarget t) {
  require(lg.strongly_antimagic(), Errc::not_strongly_antimagic,
          "extension requires a strongly antimagic input");
  require(lg.graph().min_degree() >= 1, Errc::target_invalid,
          "extension requires minimum degree >= 1");
  const Graph& g = lg.graph();
  const int n = g.vertex_count();
  VertexOrdering order = lg.ordering();
  require(t.position >= 1 && t.position <= n, Errc::target_invalid,
          "ordering position out of range");
  VertexId target = order[t.position - 1];
  if (t.position < n) {
    require(g.degree(target) < g.degree(order[t.position]),
            Errc::target_invalid,
            "next vertex in the ordering must have larger degree");
  }

  std::vector<Edge> edges = g.edges();
  int vertex_count = n;
  if (t.mode == ExtendMode::new_leaf) {
    edges.push_back({target, vertex_count++});
  } else {
    require(t.position >= 2, Errc::target_invalid,
            "connect-to-predecessor needs a predecessor");
    VertexId pred = order[t.position - 2];
    require(!g.adjacent(pred, target), Errc::already_adjacent,
            "target already adjacent to its predecessor");
    edges.push_back({pred, target});
  }

  EdgeLabeling labels(lg.labels());
  for (int& l : labels) ++l;
  labels.push_back(1);
  LabeledGraph out(Graph(vertex_count, std::move(edges)), std::move(labels));
  require(out.strongly_antimagic(), Errc::verification_failed,
          "extension no longer strongly antimagic");
  return out;
}

LabeledGraph extend_at(const LabeledGraph& lg, VertexId v, ExtendMode mode) {
  return extend(lg, ExtensionTarget{ordering_position(lg, v), mode});
}

LabeledGraph extend_all_in_class(const LabeledGraph& lg, int degree) {
  auto classes = degree_classes(lg.graph());
  auto it = classes.find(degree);
  require(it != classes.end() && !it->second.empty(), Errc::empty_class,
          "no vertices of that degree");
  std::vector<VertexId> members = it->second;
  std::sort(members.begin(), members.end(), [&](VertexId a, VertexId b) {
    return lg.phi(a) > lg.phi(b);
  });
  LabeledGraph out = lg;
  for (VertexId v : members) {
    try {
      out = extend_at(out, v, ExtendMode::new_leaf);
    } catch (const Error& e) {
      fail(Errc::verification_failed,
           "pendant batch broke down at vertex " + std::to_string(v) + ": " +
               e.what());
    }
  }
  require(out.strongly_antimagic(), Errc::verification_failed,
          "pendant batch output failed the verifier");
  return out;
}

LabeledGraph attach_cycle(const LabeledGraph& lg, VertexId v, int k) {
  require(k >= 3, Errc::shape_invalid, "cycle length >= 3");
  require(lg.graph().min_degree() >= 2, Errc::has_leaves,
          "cycle attachment requires a leafless graph");
  int pos = ordering_position(lg, v);
  if (pos < lg.graph().vertex_count()) {
    const Graph& g = lg.graph();
    VertexOrdering order = lg.ordering();
    require(g.degree(v) <= g.degree(order[pos]) - 2, Errc::target_invalid,
            "need deg(v) <= deg(successor) - 2 or v topmost");
  }

  // Two pendant stubs at v, then grow the two chains leaf by leaf (always
  // at the current top leaf, which alternates sides), and close the cycle.
  LabeledGraph out = extend_at(lg, v, ExtendMode::new_leaf);
  out = extend_at(out, v, ExtendMode::new_leaf);
  for (int i = 0; i < k - 3; ++i) {
    out = extend_at(out, top_leaf(out), ExtendMode::new_leaf);
  }
  out = extend_at(out, top_leaf(out), ExtendMode::connect_to_predecessor);
  require(out.strongly_antimagic(), Errc::verification_failed,
          "cycle attachment output failed the verifier");
  return out;
}

LabeledGraph attach_path(const LabeledGraph& lg, int k) {
  require(k >= 1, Errc::shape_invalid, "path length >= 1");
  require(lg.graph().leaves().size() == 2, Errc::leaf_count_invalid,
          "path attachment requires exactly two leaves");
  LabeledGraph out = lg;
  for (int i = 0; i < k - 1; ++i) {
    out = extend_at(out, top_leaf(out), ExtendMode::new_leaf);
  }
  out = extend_at(out, top_leaf(out), ExtendMode::connect_to_predecessor);
  require(out.strongly_antimagic(), Errc::verification_failed,
          "path attachment output failed the verifier");
  return out;
}

LabeledGraph label_level_wise_tree(const LevelWiseTreeShape& shape) {
  validate(shape);
  for (size_t i = 1; i < shape.degrees.size(); ++i) {
    require(shape.degrees[i] <= shape.degrees[i - 1], Errc::shape_invalid,
            "construction needs nonincreasing level degrees");
  }

  // Base: the root star (one root) or double star (two roots), grown from
  // the smallest strongly antimagic path.
  LabeledGraph lg = shape.roots == 1
                        ? LabeledGraph(generate(PathShape{3}), {1, 2})
                        : LabeledGraph(generate(PathShape{4}), {1, 3, 2});
  std::vector<VertexId> roots =
      shape.roots == 1 ? std::vector<VertexId>{1} : std::vector<VertexId>{1, 2};
  for (int d = 3; d <= shape.degrees[0]; ++d) {
    std::vector<VertexId> by_phi = roots;
    std::sort(by_phi.begin(), by_phi.end(), [&](VertexId a, VertexId b) {
      return lg.phi(a) > lg.phi(b);
    });
    for (VertexId r : by_phi) lg = extend_at(lg, r, ExtendMode::new_leaf);
  }

  // Deeper levels: give every current leaf t_i - 1 children, one pendant
  // batch per child. Batch j touches only the former leaves: internal
  // degrees stay >= t_i > j under the nonincreasing hypothesis.
  for (size_t i = 1; i < shape.degrees.size(); ++i) {
    for (int j = 1; j <= shape.degrees[i] - 1; ++j) {
      lg = extend_all_in_class(lg, j);
    }
  }

  return remap_to_canonical(lg, FamilySpec(shape), roots);
}

}  // namespace antimagic
