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

#include "antimagic/labeling.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace antimagic {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::label_set_invalid: return "LabelSetInvalid";
    case Errc::not_antimagic: return "NotAntimagic";
    case Errc::not_strongly_antimagic: return "NotStronglyAntimagic";
    case Errc::target_invalid: return "TargetInvalid";
    case Errc::already_adjacent: return "AlreadyAdjacent";
    case Errc::empty_class: return "EmptyClass";
    case Errc::verification_failed: return "VerificationFailed";
    case Errc::has_leaves: return "HasLeaves";
    case Errc::leaf_count_invalid: return "LeafCountInvalid";
    case Errc::index_invalid: return "IndexInvalid";
    case Errc::layout_invalid: return "LayoutInvalid";
    case Errc::shape_invalid: return "ShapeInvalid";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::subcase_unmatched: return "SubcaseUnmatched";
    case Errc::not_reduced: return "NotReduced";
    case Errc::residual_unsolved: return "ResidualUnsolved";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::oracle_guard: return "OracleGuard";
    case Errc::parse_error: return "ParseError";
    case Errc::internal: return "InternalError";
  }
  return "UnknownError";
}

void check_label_set(const Graph& g, const EdgeLabeling& f) {
  const int m = g.edge_count();
  require(static_cast<int>(f.size()) == m, Errc::label_set_invalid,
          "labeling size does not match edge count");
  std::vector<char> used(m + 1, 0);
  for (int label : f) {
    require(label >= 1 && label <= m, Errc::label_set_invalid,
            "label outside {1..m}");
    require(!used[label], Errc::label_set_invalid, "repeated label");
    used[label] = 1;
  }
}

PhiProfile phi_profile(const Graph& g, const EdgeLabeling& f) {
  check_label_set(g, f);
  PhiProfile phi(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    phi[g.edge(e).u] += f[e];
    phi[g.edge(e).v] += f[e];
  }
  return phi;
}

namespace {

VertexOrdering sorted_by_phi(const PhiProfile& phi) {
  VertexOrdering order(phi.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return phi[a] < phi[b]; });
  return order;
}

}  // namespace

bool is_antimagic(const Graph& g, const EdgeLabeling& f) {
  PhiProfile phi = phi_profile(g, f);
  VertexOrdering order = sorted_by_phi(phi);
  for (size_t i = 1; i < order.size(); ++i) {
    if (phi[order[i - 1]] == phi[order[i]]) return false;
  }
  return true;
}

bool is_strongly_antimagic(const Graph& g, const EdgeLabeling& f) {
  PhiProfile phi = phi_profile(g, f);
  VertexOrdering order = sorted_by_phi(phi);
  for (size_t i = 1; i < order.size(); ++i) {
    if (phi[order[i - 1]] == phi[order[i]]) return false;
    // phi strictly increases along the order, so degrees must not decrease.
    if (g.degree(order[i - 1]) > g.degree(order[i])) return false;
  }
  return true;
}

std::optional<std::string> explain_violation(const Graph& g,
                                             const EdgeLabeling& f,
                                             bool strong) {
  PhiProfile phi = phi_profile(g, f);
  VertexOrdering order = sorted_by_phi(phi);
  for (size_t i = 1; i < order.size(); ++i) {
    VertexId a = order[i - 1];
    VertexId b = order[i];
    std::ostringstream os;
    if (phi[a] == phi[b]) {
      os << "equal sums: phi(" << a << ") = phi(" << b << ") = " << phi[a];
      return os.str();
    }
    if (strong && g.degree(a) > g.degree(b)) {
      os << "degree order violated: deg(" << a << ")=" << g.degree(a)
         << " > deg(" << b << ")=" << g.degree(b) << " but phi(" << a
         << ")=" << phi[a] << " < phi(" << b << ")=" << phi[b];
      return os.str();
    }
  }
  return std::nullopt;
}

LabeledGraph::LabeledGraph(Graph g, EdgeLabeling f)
    : graph_(std::move(g)), labels_(std::move(f)) {
  phi_ = phi_profile(graph_, labels_);
}

VertexOrdering LabeledGraph::ordering() const {
  return induced_ordering(graph_, labels_);
}

VertexOrdering induced_ordering(const Graph& g, const EdgeLabeling& f) {
  PhiProfile phi = phi_profile(g, f);
  VertexOrdering order = sorted_by_phi(phi);
  for (size_t i = 1; i < order.size(); ++i) {
    require(phi[order[i - 1]] != phi[order[i]], Errc::not_antimagic,
            "tied vertex sums, ordering undefined");
  }
  return order;
}

}  // namespace antimagic
