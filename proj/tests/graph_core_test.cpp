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

#include <random>

#include "antimagic/families.hpp"
#include "antimagic/labeling.hpp"
#include "gtest/gtest.h"
#include "support/test_oracles.hpp"

namespace antimagic {
namespace {

Graph path(int n) { return generate(PathShape{n}); }
Graph star3() { return generate(SpiderShape{{1, 1, 1}}); }

TEST(Graph, RejectsMalformedInput) {
  EXPECT_THROW(Graph(2, {{0, 0}}), Error);             // self loop
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), Error);     // duplicate pair
  EXPECT_THROW(Graph(2, {{0, 2}}), Error);             // out of range
  EXPECT_NO_THROW(Graph(3, {{2, 0}}));                 // normalized storage
  EXPECT_EQ(Graph(3, {{2, 0}}).edge(0).u, 0);
}

TEST(Graph, AdjacencyIndexMatchesEdges) {
  Graph g = star3();
  EXPECT_EQ(g.degree(0), 3);
  for (VertexId v = 1; v <= 3; ++v) {
    EXPECT_EQ(g.degree(v), 1);
    EXPECT_TRUE(g.adjacent(0, v));
  }
  EXPECT_FALSE(g.adjacent(1, 2));
}

TEST(PhiProfile, StarSumsAreForced) {
  PhiProfile phi = phi_profile(star3(), {1, 2, 3});
  EXPECT_EQ(phi, (PhiProfile{6, 1, 2, 3}));
}

TEST(PhiProfile, PathFourFromHandEvaluation) {
  PhiProfile phi = phi_profile(path(4), {1, 3, 2});
  EXPECT_EQ(phi, (PhiProfile{1, 4, 5, 2}));
}

TEST(PhiProfile, SingleEdge) {
  PhiProfile phi = phi_profile(path(2), {1});
  EXPECT_EQ(phi, (PhiProfile{1, 1}));
}

TEST(PhiProfile, RejectsNonBijections) {
  EXPECT_THROW(phi_profile(path(3), {1, 1}), Error);
  EXPECT_THROW(phi_profile(path(3), {0, 1}), Error);
  EXPECT_THROW(phi_profile(path(3), {1, 3}), Error);
  EXPECT_THROW(phi_profile(path(3), {1}), Error);
  try {
    phi_profile(path(3), {2, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::label_set_invalid);
  }
}

TEST(IsAntimagic, SpecExamples) {
  EXPECT_FALSE(is_antimagic(path(2), {1}));
  EXPECT_TRUE(is_antimagic(generate(CycleShape{3}), {1, 2, 3}));
  EXPECT_FALSE(is_antimagic(path(4), {2, 1, 3}));  // two vertices reach 3
}

TEST(IsStronglyAntimagic, SpecExamples) {
  EXPECT_TRUE(is_strongly_antimagic(star3(), {1, 2, 3}));
  EXPECT_TRUE(is_strongly_antimagic(path(4), {1, 3, 2}));
  // (3,1,2): phi = (3,4,3,2) has a tie, so already not antimagic.
  EXPECT_FALSE(is_strongly_antimagic(path(4), {3, 1, 2}));
}

TEST(InducedOrdering, PathFour) {
  LabeledGraph lg(path(4), {1, 3, 2});
  EXPECT_EQ(lg.ordering(), (VertexOrdering{0, 3, 1, 2}));
}

TEST(InducedOrdering, StarLeavesAscendThenCenter) {
  LabeledGraph lg(star3(), {1, 2, 3});
  EXPECT_EQ(lg.ordering(), (VertexOrdering{1, 2, 3, 0}));
}

TEST(InducedOrdering, TiesAreAnError) {
  try {
    induced_ordering(path(2), {1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_antimagic);
  }
}

TEST(DegreeClasses, SmallGraphs) {
  auto star = degree_classes(star3());
  EXPECT_EQ(star[1], (std::vector<VertexId>{1, 2, 3}));
  EXPECT_EQ(star[3], (std::vector<VertexId>{0}));
  auto p4 = degree_classes(path(4));
  EXPECT_EQ(p4[1], (std::vector<VertexId>{0, 3}));
  EXPECT_EQ(p4[2], (std::vector<VertexId>{1, 2}));
  auto c5 = degree_classes(generate(CycleShape{5}));
  EXPECT_EQ(c5[2].size(), 5u);
}

TEST(Verifiers, StrongImpliesAntimagicOnRandomTreeLabelings) {
  std::mt19937 rng(20260810);
  auto trees = testing::all_free_trees(8);
  for (int iter = 0; iter < 400; ++iter) {
    const Graph& g = trees[rng() % trees.size()];
    EdgeLabeling labels(g.edge_count());
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    if (is_strongly_antimagic(g, labels)) {
      EXPECT_TRUE(is_antimagic(g, labels));
    }
    // Both verdicts agree with the naive recomputation.
    EXPECT_EQ(is_antimagic(g, labels), testing::naive_valid(g, labels, false));
    EXPECT_EQ(is_strongly_antimagic(g, labels),
              testing::naive_valid(g, labels, true));
  }
}

TEST(Verifiers, StrongIffDegreesNondecreaseAlongOrdering) {
  std::mt19937 rng(7);
  auto trees = testing::all_free_trees(8);
  for (int iter = 0; iter < 400; ++iter) {
    const Graph& g = trees[rng() % trees.size()];
    EdgeLabeling labels(g.edge_count());
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    if (!is_antimagic(g, labels)) continue;
    VertexOrdering order = induced_ordering(g, labels);
    bool nondecreasing = true;
    for (size_t i = 1; i < order.size(); ++i) {
      if (g.degree(order[i - 1]) > g.degree(order[i])) nondecreasing = false;
    }
    EXPECT_EQ(is_strongly_antimagic(g, labels), nondecreasing);
  }
}

TEST(Verifiers, PhiTotalIsConserved) {
  std::mt19937 rng(99);
  auto trees = testing::all_free_trees(9);
  for (int iter = 0; iter < 200; ++iter) {
    const Graph& g = trees[rng() % trees.size()];
    EdgeLabeling labels(g.edge_count());
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    PhiProfile phi = phi_profile(g, labels);
    long long total = 0;
    for (long long p : phi) total += p;
    long long m = g.edge_count();
    EXPECT_EQ(total, m * (m + 1));
  }
}

// Relabeling the graph by an automorphism must not change either verdict.
TEST(Verifiers, AutomorphismInvariance) {
  // Path reversal.
  Graph p5 = path(5);
  EdgeLabeling labels = {2, 4, 1, 3};
  EdgeLabeling reversed(labels.rbegin(), labels.rend());
  EXPECT_EQ(is_antimagic(p5, labels), is_antimagic(p5, reversed));
  EXPECT_EQ(is_strongly_antimagic(p5, labels),
            is_strongly_antimagic(p5, reversed));

  // Cycle rotation.
  Graph c6 = generate(CycleShape{6});
  EdgeLabeling c = {1, 2, 3, 4, 6, 5};
  EdgeLabeling rotated = {5, 1, 2, 3, 4, 6};
  EXPECT_EQ(is_antimagic(c6, c), is_antimagic(c6, rotated));
  EXPECT_EQ(is_strongly_antimagic(c6, c), is_strongly_antimagic(c6, rotated));

  // Star leaf permutation.
  Graph s = star3();
  EXPECT_EQ(is_strongly_antimagic(s, {1, 2, 3}),
            is_strongly_antimagic(s, {3, 1, 2}));
}

TEST(PhiProfile, IsolatedVerticesGetZero) {
  // Isolated vertices are allowed in the data model; the verifier treats
  // their zero sum like any other value.
  Graph g(4, {{0, 1}, {1, 2}});
  PhiProfile phi = phi_profile(g, {1, 2});
  EXPECT_EQ(phi[3], 0);
  EXPECT_TRUE(is_antimagic(g, {1, 2}));
  EXPECT_TRUE(is_strongly_antimagic(g, {1, 2}));
  // A second isolated vertex ties at zero.
  Graph h(5, {{0, 1}, {1, 2}});
  EXPECT_FALSE(is_antimagic(h, {1, 2}));
}

TEST(LabeledGraph, PhiNeverStale) {
  LabeledGraph lg(path(4), {1, 3, 2});
  EXPECT_EQ(lg.phi(2), 5);
  EXPECT_EQ(lg.phi(), (PhiProfile{1, 4, 5, 2}));
}

}  // namespace
}  // namespace antimagic
