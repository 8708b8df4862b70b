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
#include <random>

#include "antimagic/oracle.hpp"
#include "gtest/gtest.h"
#include "support/test_oracles.hpp"

namespace antimagic {
namespace {

LabeledGraph p4_base() {
  return LabeledGraph(generate(PathShape{4}), {1, 3, 2});
}

TEST(Extend, PendantAtTopOfPathThree) {
  LabeledGraph p3(generate(PathShape{3}), {1, 2});
  LabeledGraph out = extend(p3, {3, ExtendMode::new_leaf});
  EXPECT_EQ(out.labels(), (EdgeLabeling{2, 3, 1}));
  EXPECT_TRUE(out.strongly_antimagic());
  EXPECT_EQ(out.graph().degree(1), 3);  // the old center became a star hub
}

TEST(Extend, ConnectLeavesOfPathFourIntoCycle) {
  LabeledGraph out = extend(p4_base(), {2, ExtendMode::connect_to_predecessor});
  EXPECT_EQ(out.labels(), (EdgeLabeling{2, 4, 3, 1}));
  EXPECT_EQ(out.phi(), (PhiProfile{3, 6, 7, 4}));
  EXPECT_TRUE(out.strongly_antimagic());
  EXPECT_EQ(out.graph().edge_count(), 4);
}

TEST(Extend, EqualDegreeSuccessorIsInvalid) {
  // Position 3 holds a degree-2 vertex whose successor also has degree 2.
  try {
    extend(p4_base(), {3, ExtendMode::new_leaf});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::target_invalid);
  }
}

TEST(Extend, ConnectRequiresNonAdjacentPredecessor) {
  // P_3 labeled (1,2): ordering v1(1) v3(2) v2(3); position 3 target = the
  // center, predecessor = leaf 2 which is adjacent.
  LabeledGraph p3(generate(PathShape{3}), {1, 2});
  try {
    extend(p3, {3, ExtendMode::connect_to_predecessor});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::already_adjacent);
  }
}

TEST(Extend, RequiresStronglyAntimagicInput) {
  LabeledGraph bad(generate(PathShape{4}), {3, 1, 2});  // tied sums
  try {
    extend(bad, {4, ExtendMode::new_leaf});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_strongly_antimagic);
  }
}

TEST(Extend, LabelShiftAndOrderPreservation) {
  std::mt19937 rng(4242);
  auto trees = testing::all_free_trees(8);
  SearchConfig cfg;
  int done = 0;
  for (size_t i = 0; i < trees.size() && done < 60; ++i) {
    const Graph& g = trees[i];
    if (g.edge_count() < 2) continue;  // the single edge has no labeling
    SearchResult base = find_labeling(g, cfg);
    ASSERT_EQ(base.status, SearchStatus::found);
    LabeledGraph lg(g, base.labeling);
    VertexOrdering before = lg.ordering();
    // Collect every valid target and apply one.
    for (int pos = 1; pos <= g.vertex_count(); ++pos) {
      for (ExtendMode mode :
           {ExtendMode::new_leaf, ExtendMode::connect_to_predecessor}) {
        LabeledGraph out = lg;
        try {
          out = extend(lg, {pos, mode});
        } catch (const Error&) {
          continue;
        }
        ++done;
        // Labels are the old ones shifted, plus 1 on the new edge.
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
          EXPECT_EQ(out.label(e), lg.label(e) + 1);
        }
        EXPECT_EQ(out.label(g.edge_count()), 1);
        // Old sums rise by the old degree, +1 for the new edge's ends.
        VertexId target = before[pos - 1];
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
          long long expected = lg.phi(v) + g.degree(v);
          const Edge& ne = out.graph().edge(g.edge_count());
          if (v == ne.u || v == ne.v) expected += 1;
          EXPECT_EQ(out.phi(v), expected) << "v=" << v << " target=" << target;
        }
        // Relative order of old vertices is preserved.
        VertexOrdering after = out.ordering();
        std::vector<VertexId> old_only;
        for (VertexId v : after) {
          if (v < g.vertex_count()) old_only.push_back(v);
        }
        EXPECT_EQ(old_only, before);
        EXPECT_TRUE(out.strongly_antimagic());
      }
    }
  }
  EXPECT_GT(done, 20);
}

TEST(ExtendAllInClass, PathThreeCenterBecomesStar) {
  LabeledGraph p3(generate(PathShape{3}), {1, 2});
  LabeledGraph out = extend_all_in_class(p3, 2);
  EXPECT_EQ(out.graph().vertex_count(), 4);
  EXPECT_EQ(out.graph().degree(1), 3);
  EXPECT_TRUE(out.strongly_antimagic());
}

TEST(ExtendAllInClass, PathFourInnerPendants) {
  LabeledGraph out = extend_all_in_class(p4_base(), 2);
  EXPECT_EQ(out.graph().vertex_count(), 6);
  EXPECT_EQ(out.graph().degree(1), 3);
  EXPECT_EQ(out.graph().degree(2), 3);
  EXPECT_TRUE(out.strongly_antimagic());
}

TEST(ExtendAllInClass, HigherDegreeClasses) {
  // Pendants on the whole degree-2 class of a cycle (a sun graph).
  LabeledGraph c4(generate(CycleShape{4}), {1, 2, 4, 3});
  LabeledGraph sun = extend_all_in_class(c4, 2);
  EXPECT_EQ(sun.graph().vertex_count(), 8);
  EXPECT_TRUE(sun.strongly_antimagic());
  for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(sun.graph().degree(v), 3);

  // Degree-3 class of the star.
  LabeledGraph star(generate(SpiderShape{{1, 1, 1}}), {1, 2, 3});
  LabeledGraph bigger = extend_all_in_class(star, 3);
  EXPECT_EQ(bigger.graph().degree(0), 4);
  EXPECT_TRUE(bigger.strongly_antimagic());
}

TEST(ExtendAllInClass, EmptyClass) {
  try {
    extend_all_in_class(p4_base(), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::empty_class);
  }
}

TEST(ExtendAllInClass, LeafRoundOnEveryTreeUpTo12Edges) {
  SearchConfig cfg;
  for (const Graph& g : testing::all_free_trees(13)) {
    if (g.edge_count() < 2) continue;  // the single edge has no labeling
    SearchResult base = find_labeling(g, cfg);
    ASSERT_EQ(base.status, SearchStatus::found)
        << "tree with " << g.edge_count() << " edges";
    LabeledGraph out = extend_all_in_class(LabeledGraph(g, base.labeling), 1);
    EXPECT_TRUE(out.strongly_antimagic());
    EXPECT_EQ(out.graph().vertex_count(),
              g.vertex_count() + static_cast<int>(g.leaves().size()));
  }
}

TEST(AttachCycle, TriangleOnTriangle) {
  LabeledGraph c3(generate(CycleShape{3}), {1, 2, 3});
  // phi = (4, 3, 5): attach at the top vertex 2.
  LabeledGraph out = attach_cycle(c3, 2, 3);
  EXPECT_EQ(out.graph().vertex_count(), 5);
  EXPECT_EQ(out.graph().edge_count(), 6);
  EXPECT_EQ(out.graph().degree(2), 4);
  EXPECT_TRUE(out.strongly_antimagic());
}

TEST(AttachCycle, SquareOnPentagon) {
  LabeledGraph c5(generate(CycleShape{5}), {1, 2, 3, 4, 5});
  // phi = (6, 3, 5, 7, 9): vertex 4 is on top.
  LabeledGraph out = attach_cycle(c5, 4, 4);
  EXPECT_EQ(out.graph().edge_count(), 9);
  EXPECT_TRUE(out.strongly_antimagic());
}

TEST(AttachCycle, NonMaximalEqualDegreeVertexIsInvalid) {
  LabeledGraph c4(generate(CycleShape{4}), {1, 2, 4, 3});
  // phi = (4, 3, 6, 7): vertex 0 is not last and all degrees are equal.
  try {
    attach_cycle(c4, 0, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::target_invalid);
  }
}

TEST(AttachCycle, RefusesLeaves) {
  try {
    attach_cycle(p4_base(), 1, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::has_leaves);
  }
}

TEST(AttachPath, ClosesPathFourIntoCycle) {
  LabeledGraph out = attach_path(p4_base(), 1);
  EXPECT_EQ(out.labels(), (EdgeLabeling{2, 4, 3, 1}));
  EXPECT_TRUE(out.strongly_antimagic());
}

TEST(AttachPath, LongerClosures) {
  LabeledGraph c6 = attach_path(p4_base(), 3);
  EXPECT_EQ(c6.graph().vertex_count(), 6);
  EXPECT_EQ(c6.graph().edge_count(), 6);
  EXPECT_EQ(c6.graph().min_degree(), 2);
  EXPECT_TRUE(c6.strongly_antimagic());
}

TEST(AttachPath, NeedsExactlyTwoLeaves) {
  LabeledGraph c4(generate(CycleShape{4}), {1, 2, 4, 3});
  try {
    attach_path(c4, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::leaf_count_invalid);
  }
}

TEST(LevelWiseTree, SmallShapes) {
  for (const LevelWiseTreeShape& s :
       {LevelWiseTreeShape{{3}, 1}, LevelWiseTreeShape{{2, 2}, 1},
        LevelWiseTreeShape{{3, 2}, 1}, LevelWiseTreeShape{{3, 3, 2}, 1},
        LevelWiseTreeShape{{2}, 2}, LevelWiseTreeShape{{3, 2}, 2},
        LevelWiseTreeShape{{4, 3, 2}, 2}}) {
    LabeledGraph lg = label_level_wise_tree(s);
    EXPECT_TRUE(lg.strongly_antimagic()) << describe(FamilySpec(s));
    EXPECT_TRUE(lg.graph() == generate(FamilySpec(s)));
  }
}

TEST(LevelWiseTree, RejectsIncreasingDegrees) {
  try {
    label_level_wise_tree(LevelWiseTreeShape{{2, 3}, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::shape_invalid);
  }
}

}  // namespace
}  // namespace antimagic
