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

#ifndef ANTIMAGIC_INDUCTIVE_HPP
#define ANTIMAGIC_INDUCTIVE_HPP

#include "antimagic/families.hpp"
#include "antimagic/labeling.hpp"

namespace antimagic {

enum class ExtendMode {
  new_leaf,                 // attach a pendant edge to the target vertex
  connect_to_predecessor,   // join the target to the vertex just below it
};

/// Where a single-edge extension lands: the vertex at `position` (1-based)
/// in the current induced ordering. Valid when the next vertex up has
/// strictly larger degree, or the target is the top of the ordering.
struct ExtensionTarget {
  int position = 0;
  ExtendMode mode = ExtendMode::new_leaf;
};

/// Single-edge extension of a strongly antimagic graph. Every old label is
/// incremented by 1 and the new edge gets label 1, so the old vertices keep
/// their relative order; a new leaf (if any) enters at the bottom of the
/// ordering. The new vertex (mode new_leaf) is appended with the next free
/// id, the new edge with the next free edge id.
LabeledGraph extend(const LabeledGraph& lg, ExtensionTarget t);

/// 1-based position of v in the induced ordering.
int ordering_position(const LabeledGraph& lg, VertexId v);

/// extend() addressed by vertex instead of ordering position.
LabeledGraph extend_at(const LabeledGraph& lg, VertexId v, ExtendMode mode);

/// Adds one pendant edge to every vertex of the given degree, processing
/// the class from highest phi downward (each step's successor then has
/// degree i+1, so the single-edge extension applies). The result is
/// verified post hoc and fails loudly rather than trusting the chain.
LabeledGraph extend_all_in_class(const LabeledGraph& lg, int degree);

/// Attaches a k-cycle sharing exactly the vertex v with the old graph,
/// realized as two pendant edges at v, paired leaf growth, and one closing
/// connect-to-predecessor extension. Requires a leafless input and
/// deg(v) <= deg(successor) - 2 (or v topmost).
LabeledGraph attach_cycle(const LabeledGraph& lg, VertexId v, int k);

/// Adds a new path of length k between the only two leaves of lg, by
/// alternating pendant growth at the current top leaf and one closing
/// connection.
LabeledGraph attach_path(const LabeledGraph& lg, int k);

/// Strongly antimagic labeling of a complete level-wise regular tree with
/// nonincreasing level degrees, built by pendant-batch extensions from a
/// small base path. Output is on the canonical embedding.
LabeledGraph label_level_wise_tree(const LevelWiseTreeShape& shape);

}  // namespace antimagic

#endif  // ANTIMAGIC_INDUCTIVE_HPP
