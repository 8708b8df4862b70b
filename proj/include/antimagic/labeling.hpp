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

#ifndef ANTIMAGIC_LABELING_HPP
#define ANTIMAGIC_LABELING_HPP

#include <optional>
#include <string>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

/// Edge labeling: labels[e] is the label of edge e. A valid labeling is a
/// bijection onto {1..m}, m = edge count. Labels are 1-based to match the
/// usual label set [m]; edge ids stay 0-based.
using EdgeLabeling = std::vector<int>;

/// Vertex sums: phi[x] = sum of labels over edges incident to x.
using PhiProfile = std::vector<long long>;

/// Permutation of vertex ids sorted by phi ascending. Only defined when all
/// sums are distinct.
using VertexOrdering = std::vector<VertexId>;

/// Throws Errc::label_set_invalid unless f is a bijection onto {1..m}.
void check_label_set(const Graph& g, const EdgeLabeling& f);

/// Vertex sums for every vertex; isolated vertices get 0.
PhiProfile phi_profile(const Graph& g, const EdgeLabeling& f);

/// True iff all vertex sums are pairwise distinct.
bool is_antimagic(const Graph& g, const EdgeLabeling& f);

/// True iff antimagic and phi(u) > phi(v) whenever deg(u) > deg(v).
/// Equivalently: along the induced ordering, degrees are nondecreasing.
bool is_strongly_antimagic(const Graph& g, const EdgeLabeling& f);

/// Human-readable reason the labeling fails the (strong) antimagic check,
/// or nullopt if it passes. Reports the first violating vertex pair.
std::optional<std::string> explain_violation(const Graph& g,
                                             const EdgeLabeling& f,
                                             bool strong);

/// Graph together with a labeling and its derived sums. phi and the induced
/// ordering are always derived from graph+labeling, never stored stale:
/// the object is immutable after construction.
class LabeledGraph {
 public:
  LabeledGraph(Graph g, EdgeLabeling f);

  const Graph& graph() const { return graph_; }
  const EdgeLabeling& labels() const { return labels_; }
  int label(EdgeId e) const { return labels_[e]; }
  const PhiProfile& phi() const { return phi_; }
  long long phi(VertexId v) const { return phi_[v]; }

  /// Induced ordering (1): vertices by phi ascending. Throws
  /// Errc::not_antimagic if two sums tie (the ordering is undefined then).
  VertexOrdering ordering() const;

  bool antimagic() const { return is_antimagic(graph_, labels_); }
  bool strongly_antimagic() const {
    return is_strongly_antimagic(graph_, labels_);
  }

 private:
  Graph graph_;
  EdgeLabeling labels_;
  PhiProfile phi_;
};

/// Ordering of an explicit (graph, labeling) pair; same contract as
/// LabeledGraph::ordering().
VertexOrdering induced_ordering(const Graph& g, const EdgeLabeling& f);

}  // namespace antimagic

#endif  // ANTIMAGIC_LABELING_HPP
