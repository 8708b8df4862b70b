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

#ifndef ANTIMAGIC_SPIDER_LAB_HPP
#define ANTIMAGIC_SPIDER_LAB_HPP

#include "antimagic/families.hpp"
#include "antimagic/inductive.hpp"

namespace antimagic {

/// Edge ids of one path, element 0 holding the path's first edge e_1.
/// Left paths run leaf -> center (the last edge touches u), the middle path
/// runs u -> v, right paths run v -> leaf.
using PathEdges = std::vector<EdgeId>;

/// Input of the alternating three-phase edge order ("Labeling A"). The
/// order interleaves same-parity edges of the parity-split paths so that
/// consecutive labels on one path always leave a gap edge, filled in the
/// next phase; a handful of edges (the saved first right-odd edge, deferred
/// left-odd last edges, and one or two middle edges) are promoted to the
/// final phase.
struct AlternatingPlan {
  std::vector<PathEdges> right_odd;   // RO_1.. ; RO_1's first edge is saved
  std::vector<PathEdges> right_even;  // RE_1..
  std::vector<PathEdges> left_odd;    // LO_1..LO_c, lengths >= 3
  std::vector<PathEdges> left_even;   // LE_1..LE_d
  PathEdges middle;                   // X, length >= 1
  std::vector<EdgeId> pendants_u;     // Y
  std::vector<EdgeId> pendants_v;     // labeled right after Y, if present
  int deferred_left_odd = 1;          // LO paths whose last edge moves to phase III
  bool swap_saved_right_with_last_left_even = false;  // even-even-odd exception
};

/// The complete edge order; position j gets label j+1.
std::vector<EdgeId> labeling_a_order(const AlternatingPlan& plan);

/// A spider with a designated degree-2 vertex v (not adjacent to a leaf),
/// decomposed for Labeling A: middle path u->v, right path v->leaf, left
/// paths split by parity, plus the pendant edges at u.
struct SpiderExtLayout {
  SpiderShape shape;       // canonical
  Graph graph;             // canonical embedding of shape
  VertexId center = 0;     // u
  VertexId designated = 0; // v
  int v_leg = 0;           // canonical leg carrying v
  int middle_len = 0;      // x = distance from u to v
  AlternatingPlan plan;
};

/// Builds the layout for v sitting on leg `leg_index` at `distance` from the
/// center. Throws Errc::layout_invalid unless v has degree 2, is not
/// adjacent to a leaf, and the spider has either a second leg longer than 1
/// or exactly degree 4 with three pendant legs.
SpiderExtLayout make_spider_ext_layout(const SpiderShape& shape, int leg_index,
                                       int distance);

/// Strongly antimagic labeling with phi(v) maximal among degree-2 vertices.
/// Pendant edges at u beyond the one the scheme needs are stripped first
/// and re-attached by single-edge extensions; the even-even-odd signature
/// swaps two ordering slots; the 4-legged spider whose only long leg splits
/// as |X|=2, |R|=3 uses a fixed label table.
LabeledGraph labeling_A(const SpiderExtLayout& layout);

/// Strongly antimagic labeling of the canonical P_n with phi(v_u) maximal
/// among degree-2 vertices (u is the 1-based vertex index, 2 <= u <= n-1).
/// u = n-1 is the closed form f(e_i) = floor((i+1)/2) when n and i differ
/// in parity and (n+i)/2 when they agree; other positions label a centered
/// sub-path and grow it leaf by leaf.
LabeledGraph path_max_at(int n, int u);

/// Reduction pipeline: leaf rounds and pendant-leg strips down to a path,
/// then the path labeling and the inverse extensions.
LabeledGraph label_spider(const SpiderShape& shape);

/// Strongly antimagic labeling of C_n: 1..n around for odd n, and
/// 1..n-2, n, n-1 for even n. The top vertex is the one before the cycle
/// closes (phi = 2n-1). Distinctness for even n: interior vertices carry
/// the odd sums 3..2n-5, the remaining sums n, 2n-2, 2n-1 avoid them.
LabeledGraph label_cycle(int n);

/// First cycle via label_cycle, remaining cycles attached one by one at the
/// running maximum-phi vertex.
LabeledGraph label_cycle_spider(const CycleSpiderShape& shape);

}  // namespace antimagic

#endif  // ANTIMAGIC_SPIDER_LAB_HPP
