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

#ifndef ANTIMAGIC_FAMILIES_HPP
#define ANTIMAGIC_FAMILIES_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "antimagic/labeling.hpp"

namespace antimagic {

// Canonical embeddings. Every generator numbers vertices and edges the same
// way on every run, so labelings can be expressed (and golden-tested) as
// plain label arrays:
//
//   path(n)    vertices 0..n-1 in order, edge i = (i, i+1).
//   cycle(n)   vertices 0..n-1, edges (0,1)..(n-2,n-1) then (n-1,0).
//   spider     legs sorted by nonincreasing length; center = vertex 0; each
//              leg numbered outward from the center, edges likewise (edge 0
//              of a leg touches the center).
//   double     u = vertex 0, middle path vertices 1..x (v = vertex x) with
//   spider     edges 0..x-1 running u -> v, then the right legs (at v), then
//              the left legs (at u), each side sorted by nonincreasing
//              length and numbered outward from its center.
//   cycle      center = vertex 0, cycles sorted by nonincreasing length;
//   spider     a k-cycle contributes vertices c1..c_{k-1} and edges
//              (0,c1), (c1,c2), ..., (c_{k-1},0) in that order.
//   cycle dbl  u = 0, middle 1..x (v = x), then right cycles at v, then left
//   spider     cycles at u, ordered as above.
//   level tree roots first (0, or 0 and 1 joined by edge 0), then vertices
//              level by level; edges in BFS order (parent, child).

struct PathShape {
  int n = 0;  // vertex count, >= 2
};

struct CycleShape {
  int n = 0;  // length, >= 3
};

struct SpiderShape {
  std::vector<int> legs;  // multiset of leg lengths, size >= 3
};

struct DoubleSpiderShape {
  std::vector<int> left;   // legs at u, size >= 2
  int middle = 0;          // length of the u-v path, >= 1
  std::vector<int> right;  // legs at v, size >= 2, |left| >= |right|
};

struct CycleSpiderShape {
  std::vector<int> cycles;  // cycle lengths, each >= 3, size >= 2
};

struct CycleDoubleSpiderShape {
  std::vector<int> left;   // cycle lengths at u, each >= 3, size >= 1
  int middle = 0;          // >= 1
  std::vector<int> right;  // cycle lengths at v, |left| >= |right| >= 1
};

struct LevelWiseTreeShape {
  std::vector<int> degrees;  // t_0..t_{h-1}, each >= 2
  int roots = 1;             // 1 or 2 (adjacent roots)
};

using FamilySpec =
    std::variant<PathShape, CycleShape, SpiderShape, DoubleSpiderShape,
                 CycleSpiderShape, CycleDoubleSpiderShape, LevelWiseTreeShape>;

/// Throw Errc::shape_invalid on violated constraints.
void validate(const PathShape&);
void validate(const CycleShape&);
void validate(const SpiderShape&);
void validate(const DoubleSpiderShape&);
void validate(const CycleSpiderShape&);
void validate(const CycleDoubleSpiderShape&);
void validate(const LevelWiseTreeShape&);
void validate(const FamilySpec&);

/// Sort legs nonincreasing; for two-sided shapes also order the sides so
/// that the u side is the larger one (more legs, ties by lexicographic
/// comparison of the sorted leg lists).
SpiderShape canonical(SpiderShape s);
DoubleSpiderShape canonical(DoubleSpiderShape s);
CycleSpiderShape canonical(CycleSpiderShape s);
CycleDoubleSpiderShape canonical(CycleDoubleSpiderShape s);

/// Deterministic canonical embedding (see table above).
Graph generate(const FamilySpec& spec);

int edge_count(const FamilySpec& spec);
std::string family_name(const FamilySpec& spec);
std::string describe(const FamilySpec& spec);  // e.g. "double_spider 1,1,1 5 3,5"

/// Every multiset of >= 3 positive leg lengths with sum <= max_edges,
/// exactly once, in deterministic order (total ascending, then
/// reverse-lexicographic).
std::vector<SpiderShape> enumerate_spiders(int max_edges);

/// Every double-spider shape with total edge count <= max_edges, exactly
/// once up to isomorphism (|left| >= |right|; equal sizes are deduplicated
/// by lexicographic side order).
std::vector<DoubleSpiderShape> enumerate_double_spiders(int max_edges);

std::vector<CycleSpiderShape> enumerate_cycle_spiders(int max_edges);
std::vector<CycleDoubleSpiderShape> enumerate_cycle_double_spiders(
    int max_edges);

/// All shapes with nonincreasing degree sequences and <= max_edges edges.
std::vector<LevelWiseTreeShape> enumerate_level_wise_trees(int max_edges);

/// Recognize which family a graph belongs to, if any. Used by the CLI to
/// dispatch `label --scheme auto` on bare documents.
std::optional<FamilySpec> detect_family(const Graph& g);

/// Transfer a labeling from an arbitrary isomorphic copy onto the canonical
/// embedding of `spec`. Equivalent legs (equal length) are matched
/// deterministically by their label sequences. `root_hint` disambiguates
/// level-wise trees (built root vertex, or the two roots).
LabeledGraph remap_to_canonical(const LabeledGraph& built,
                                const FamilySpec& spec,
                                std::vector<VertexId> root_hint = {});

}  // namespace antimagic

#endif  // ANTIMAGIC_FAMILIES_HPP
