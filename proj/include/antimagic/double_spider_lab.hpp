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

#ifndef ANTIMAGIC_DOUBLE_SPIDER_LAB_HPP
#define ANTIMAGIC_DOUBLE_SPIDER_LAB_HPP

#include <utility>

#include "antimagic/spider_lab.hpp"

namespace antimagic {

enum class ReductionStepKind {
  delete_leaves_round,  // remove every leaf together with its pendant edge
  delete_pendant,       // remove one pendant edge at a named center
  swap_centers,         // exchange the u/v names
};

struct ReductionStep {
  ReductionStepKind kind;
  char center = 'u';  // for delete_pendant: 'u' or 'v' in the naming current
                      // at that moment
};

/// Replayable record of the reduction. Replaying the inverses in reverse
/// order on a labeling of the reduced shape rebuilds the original double
/// spider: a leaves round becomes a pendant batch on the degree-1 class, a
/// pendant deletion becomes a single-edge extension at its center, and a
/// swap just renames.
struct ReductionLog {
  std::vector<ReductionStep> steps;
};

/// True when the shape is maximally reduced: either deg(v) = 3 with a leaf
/// at v (and deg(u) < 5 or no leaf at u), or deg(u) = deg(v) + 1 with a
/// leaf at u and none at v.
bool reduction_complete(const DoubleSpiderShape& s);

/// Runs the reduction loop. Equal-degree naming rule: when both centers
/// have the same degree and exactly one of them carries a leaf, that center
/// is named v (the opposite naming would loop forever making no deletions).
std::pair<DoubleSpiderShape, ReductionLog> reduce(const DoubleSpiderShape& s);

enum class ReducedTag {
  coro_i,          // v has one leaf, u keeps an internal neighbor
  coro_ii,         // v has one leaf, deg(u) = 4 with only pendant legs
  a3_i,            // v has two leaves, deg(u) >= 4 with an internal neighbor
  a3_ii,           // deg(u) = 3, u has two leaves, v has a leaf
  u4_all_leaves,   // deg(u) = 4 all pendants, v has two leaves
  b_case1,         // deg(u) = deg(v) + 1, every v-leg odd (length >= 3)
  b_case2,         // deg(u) = deg(v) + 1, some v-leg even
  residual_gap,    // both centers degree 3, two pendants at one, none at the
                   // other: matched by no constructive case; falls back to
                   // the search oracle
};

struct ReducedClass {
  ReducedTag tag;
  bool swap_uv = false;  // equal degrees, roles matched with u and v renamed
};

/// Classifies a maximally reduced shape; Errc::not_reduced otherwise.
ReducedClass classify(const DoubleSpiderShape& s);

/// The explicit edge orderings for deg(u) = 3 with two leaves at u: the
/// parity-split path orderings when v has one leaf, and the double-pendant
/// ordering when v has two. Errc::subcase_unmatched if the shape fits none.
LabeledGraph a3_ordering(const DoubleSpiderShape& s);

/// Labeling A applied across the whole double spider when every v-leg is an
/// odd path of length >= 3 (the saved edge goes to the shortest v-leg).
LabeledGraph labeling_A_double(const DoubleSpiderShape& s);

/// Quantities steering Labeling B. RE paths are sorted by nondecreasing
/// length (ties keep canonical order); the star flag reverses the middle
/// path, the subtlety that keeps the two center sums apart.
struct BLayout {
  int a = 0, b = 0, c = 0, d = 0, y = 0;
  int b2 = 0;     // number of length-2 RE paths
  int alpha = 0;  // max(0, b - 1 - (c + d))
  int beta = 0;   // min(alpha, b2)
  bool star = false;  // x even, a = c = d = beta = 0, b = 2
};

BLayout make_b_layout(const DoubleSpiderShape& s);

/// Labeling B for shapes with deg(u) = deg(v) + 1, a leaf at u, no leaf at
/// v and at least one even v-leg.
LabeledGraph labeling_B(const DoubleSpiderShape& s);

/// Raw Labeling B label array with the middle-path reversal forced on or
/// off; unverified. Exposed so the regression can show the reversal is
/// exactly what keeps the two center sums apart.
EdgeLabeling labeling_B_labels(const DoubleSpiderShape& s, bool star_reversal);

/// Full pipeline: reduce, classify, label the base case, replay the log
/// inverse with single-edge extensions, return on the canonical embedding.
/// Residual-gap bases come from the search oracle; if the oracle budget is
/// exceeded the error is Errc::residual_unsolved, never a wrong labeling.
LabeledGraph label_double_spider(const DoubleSpiderShape& s);

struct DoubleSpiderLabeling {
  LabeledGraph graph;
  ReducedTag base;  // which base case the reduced shape hit
};

DoubleSpiderLabeling label_double_spider_ex(const DoubleSpiderShape& s);

/// Cycle double spiders: a one-cycle-per-side base built from the
/// double-pendant ordering or Labeling A (case analysis on the two cycle
/// lengths and the middle parity), then cycles attached alternately at u
/// and v.
LabeledGraph label_cycle_double_spider(const CycleDoubleSpiderShape& s);

}  // namespace antimagic

#endif  // ANTIMAGIC_DOUBLE_SPIDER_LAB_HPP
