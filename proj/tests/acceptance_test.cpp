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

// Acceptance suite. Each test is one acceptance criterion; the runner
// prints a pass/fail line per criterion. All expectations are exact.

#include <algorithm>
#include <map>
#include <random>

#include "antimagic/document.hpp"
#include "antimagic/double_spider_lab.hpp"
#include "antimagic/inductive.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/spider_lab.hpp"
#include "gtest/gtest.h"
#include "support/test_oracles.hpp"

namespace antimagic {
namespace {

long long max_phi_of_degree(const LabeledGraph& lg, int degree) {
  long long best = -1;
  for (VertexId v = 0; v < lg.graph().vertex_count(); ++v) {
    if (lg.graph().degree(v) == degree) best = std::max(best, lg.phi(v));
  }
  return best;
}

TEST(Acceptance, Criterion1_GoldenLabelings) {
  // Labeling A on the four-legged spider with legs 8 (v at distance 4),
  // 3, 2, 2: phi(v) = 25 is the maximum over degree-2 vertices.
  SpiderExtLayout fig1 = make_spider_ext_layout(SpiderShape{{8, 3, 2, 2}}, 0, 4);
  LabeledGraph lg1 = labeling_A(fig1);
  EXPECT_TRUE(lg1.strongly_antimagic());
  EXPECT_EQ(lg1.phi(fig1.designated), 25);
  EXPECT_EQ(max_phi_of_degree(lg1, 2), 25);

  // The |X|=2, |R|=3 special case: fixed labels, phi(v)=14, phi(u)=16.
  SpiderExtLayout fig2 = make_spider_ext_layout(SpiderShape{{5, 1, 1, 1}}, 0, 2);
  LabeledGraph lg2 = labeling_A(fig2);
  EXPECT_EQ(lg2.labels(), (EdgeLabeling{7, 6, 8, 1, 5, 2, 3, 4}));
  EXPECT_EQ(lg2.phi(fig2.designated), 14);
  EXPECT_EQ(max_phi_of_degree(lg2, 2), 14);
  EXPECT_EQ(lg2.phi(fig2.center), 16);

  // Labeling A across the double spider ({1,1,1}, 5, {3,5}): all 16 labels.
  LabeledGraph lg3 = labeling_A_double(DoubleSpiderShape{{1, 1, 1}, 5, {3, 5}});
  EXPECT_EQ(lg3.labels(), (EdgeLabeling{15, 12, 5, 13, 16, 2, 10, 3, 11, 4,
                                        14, 9, 1, 6, 7, 8}));
  EXPECT_EQ(lg3.phi(0), 36);
  EXPECT_EQ(lg3.phi(5), 32);

  // Labeling B bit-exact on both golden instances.
  LabeledGraph lg4a = labeling_B(DoubleSpiderShape{{1, 1, 1}, 5, {4, 3}});
  EXPECT_EQ(lg4a.labels(), (EdgeLabeling{14, 10, 3, 11, 15, 12, 4, 13, 5, 1,
                                         9, 2, 6, 7, 8}));
  LabeledGraph lg4b = labeling_B(DoubleSpiderShape{{1, 1, 1}, 4, {4, 4}});
  EXPECT_EQ(lg4b.labels(), (EdgeLabeling{15, 10, 2, 11, 5, 14, 9, 1, 12, 3,
                                         13, 4, 6, 7, 8}));
  EXPECT_TRUE(lg4a.strongly_antimagic());
  EXPECT_TRUE(lg4b.strongly_antimagic());
}

TEST(Acceptance, Criterion2_ReversalRegression) {
  DoubleSpiderShape shape{{1, 1, 1}, 4, {4, 4}};
  Graph g = generate(FamilySpec(shape));
  EdgeLabeling off = labeling_B_labels(shape, /*star_reversal=*/false);
  PhiProfile phi = phi_profile(g, off);
  EXPECT_EQ(phi[0], 32);
  EXPECT_EQ(phi[4], 32);
  EXPECT_FALSE(is_strongly_antimagic(g, off));

  EdgeLabeling on = labeling_B_labels(shape, /*star_reversal=*/true);
  EXPECT_TRUE(is_strongly_antimagic(g, on));
}

TEST(Acceptance, Criterion3_ExhaustiveSpiders) {
  long long checked = 0;
  for (const SpiderShape& s : enumerate_spiders(12)) {
    LabeledGraph lg = label_spider(s);
    ASSERT_TRUE(lg.strongly_antimagic()) << describe(FamilySpec(s));
    ASSERT_TRUE(lg.graph() == generate(FamilySpec(canonical(s))));
    ++checked;
  }
  EXPECT_EQ(checked, static_cast<long long>(enumerate_spiders(12).size()));
  EXPECT_GT(checked, 200);
}

TEST(Acceptance, Criterion4_ExhaustiveDoubleSpiders) {
  long long checked = 0, gap = 0;
  std::map<ReducedTag, long long> per_base;
  for (const DoubleSpiderShape& s : enumerate_double_spiders(13)) {
    DoubleSpiderLabeling res = label_double_spider_ex(s);
    ASSERT_TRUE(res.graph.strongly_antimagic()) << describe(FamilySpec(s));
    // Round trip: the rebuilt labeling lives on the canonical embedding.
    ASSERT_TRUE(res.graph.graph() == generate(FamilySpec(canonical(s))))
        << describe(FamilySpec(s));
    ++checked;
    ++per_base[res.base];
    if (res.base == ReducedTag::residual_gap) ++gap;
  }
  RecordProperty("shapes", std::to_string(checked));
  RecordProperty("gap_shapes_resolved_by_search", std::to_string(gap));
  EXPECT_GT(checked, 1000);
  EXPECT_GT(gap, 0);  // reported separately; the fallback path is exercised
  // Every constructive base case occurs in the sweep.
  for (ReducedTag tag :
       {ReducedTag::coro_i, ReducedTag::coro_ii, ReducedTag::a3_i,
        ReducedTag::a3_ii, ReducedTag::u4_all_leaves, ReducedTag::b_case1,
        ReducedTag::b_case2}) {
    EXPECT_GT(per_base[tag], 0) << static_cast<int>(tag);
  }
}

TEST(Acceptance, Criterion5_ClosedForms) {
  // Closed-form path labeling: valid and maximal for all 3 <= n <= 200.
  for (int n = 3; n <= 200; ++n) {
    LabeledGraph lg = path_max_at(n, n - 1);
    ASSERT_TRUE(lg.strongly_antimagic()) << n;
    ASSERT_EQ(lg.phi(n - 2), max_phi_of_degree(lg, 2)) << n;
  }

  // Case-2 table: the one-pendant spider's phi(u), phi(v) match the eight
  // parity signatures exactly, for every instance with m <= 40.
  for (int L = 2; L <= 36; ++L) {
    for (int x = 1; L + x + 3 + 1 <= 40; ++x) {
      for (int R = 2; L + x + R + 1 <= 40; ++R) {
        SpiderShape c = canonical(SpiderShape{{L, x + R, 1}});
        int leg = static_cast<int>(
            std::find(c.legs.begin(), c.legs.end(), x + R) - c.legs.begin());
        SpiderExtLayout layout = make_spider_ext_layout(c, leg, x);
        LabeledGraph lg = labeling_A(layout);
        ASSERT_TRUE(lg.strongly_antimagic()) << L << "," << x << "," << R;
        long long m = lg.graph().edge_count();
        long long l = L / 2, r = R / 2;
        long long pu = lg.phi(layout.center);
        long long pv = lg.phi(layout.designated);
        ASSERT_EQ(pv, max_phi_of_degree(lg, 2)) << L << "," << x << "," << R;
        if (x == 1) continue;  // no table row; validity checked above
        bool le = L % 2 == 0, xe = x % 2 == 0, re = R % 2 == 0;
        long long eu = 0, ev = 0;
        if (le && xe && re) {
          eu = 2 * m + (m - 1) / 2 - l - r - 2;
          ev = 2 * m - l - r;
        } else if (le && xe && !re) {
          eu = 2 * m + m / 2 - l - 4;
          ev = 2 * m - 2;
        } else if (!le && xe && re) {
          eu = 2 * m + m / 2 - r - 4;
          ev = 2 * m - r - 1;
        } else if (!le && xe && !re) {
          eu = 2 * m + (m - 11) / 2;
          ev = 2 * m - 2;
        } else if (le && !xe && re) {
          eu = 2 * m + m / 2 - 4;
          ev = 2 * m - l - r - 1;
        } else if (le && !xe && !re) {
          eu = 2 * m + (m - 11) / 2;
          ev = 2 * m - 2;
        } else if (!le && !xe && re) {
          eu = 2 * m + (m - 9) / 2;
          ev = 2 * m - r - 2;
        } else {
          eu = 2 * m + m / 2 - 5;
          ev = 2 * m - 3;
        }
        ASSERT_EQ(pu, eu) << "u at L=" << L << " x=" << x << " R=" << R;
        ASSERT_EQ(pv, ev) << "v at L=" << L << " x=" << x << " R=" << R;
      }
    }
  }

  // Two-pendant-center path orderings: phi(u), phi(v) formulas for k <= 60.
  for (int k = 3; k <= 60; ++k) {
    for (int t = 1; t <= k - 2; ++t) {
      LabeledGraph lg = a3_ordering(DoubleSpiderShape{{1, 1}, t, {k - t, 1}});
      ASSERT_TRUE(lg.strongly_antimagic()) << k << "," << t;
      long long pu = lg.phi(0), pv = lg.phi(t);
      if (k % 2 == 0) {
        if (t > k / 2) {
          ASSERT_EQ(pu, 3 * k / 2 + 7) << k << "," << t;
          ASSERT_EQ(pv, k + t + 7) << k << "," << t;
        } else {
          ASSERT_EQ(pu, 2 * k + 8) << k << "," << t;
          ASSERT_EQ(pv, 2 * k + 5 - t) << k << "," << t;
        }
      } else if (t % 2 == 1) {
        if (t == (k - 1) / 2) {
          ASSERT_EQ(pu, 2 * k + 6) << k << "," << t;
          ASSERT_EQ(pv, 2 * k + 8) << k << "," << t;
        } else {
          ASSERT_EQ(pu, 2 * k + 7) << k << "," << t;
          ASSERT_EQ(pv, 2 * k + 7 + (k - 2 * t - 1) / 2) << k << "," << t;
        }
      } else if (t >= 6 && t <= k - 3) {
        ASSERT_EQ(pu, 2 * k + 3) << k << "," << t;
        ASSERT_EQ(pv, 2 * k + 3 + (k + 3) / 2) << k << "," << t;
      }
    }
  }

  // Labeling A over the double spider, all-odd case: the proof's lower
  // bound phi(u) - phi(v) >= x' + s + i_X - 1 on every enumerated instance
  // with deg(v) = 3.
  for (int ro1 = 3; ro1 <= 11; ro1 += 2) {
    for (int ro2 = ro1; ro2 <= 11; ro2 += 2) {
      for (int x = 1; x <= 6; ++x) {
        for (std::vector<int> left :
             {std::vector<int>{1, 1, 1}, std::vector<int>{2, 1, 1},
              std::vector<int>{3, 2, 1}, std::vector<int>{4, 1, 1}}) {
          DoubleSpiderShape s{left, x, {ro2, ro1}};
          LabeledGraph lg = labeling_A_double(s);
          ASSERT_TRUE(lg.strongly_antimagic()) << describe(FamilySpec(s));
          long long xp = x / 2, ss = ro2 / 2, ix = x % 2;
          ASSERT_GE(lg.phi(0) - lg.phi(x), xp + ss + ix - 1)
              << describe(FamilySpec(s));
        }
      }
    }
  }
}

TEST(Acceptance, Criterion6_SingleEdgeExtensionProperties) {
  std::mt19937 rng(987654321);
  std::vector<Graph> trees;
  for (Graph& g : testing::all_free_trees(9)) {
    if (g.edge_count() >= 2) trees.push_back(std::move(g));
  }
  SearchConfig cfg;
  std::map<std::string, EdgeLabeling> cache;
  int applications = 0, invalid_checked = 0;
  while (applications < 1000) {
    const Graph& seed = trees[rng() % trees.size()];
    std::string key = testing::free_tree_canonical(seed);
    auto it = cache.find(key);
    if (it == cache.end()) {
      SearchResult res = find_labeling(seed, cfg);
      ASSERT_EQ(res.status, SearchStatus::found);
      it = cache.emplace(key, res.labeling).first;
    }
    LabeledGraph lg(seed, it->second);
    for (int step = 0; step < 8 && applications < 1000; ++step) {
      // Partition the target space into valid and invalid.
      std::vector<ExtensionTarget> valid, invalid;
      const Graph& g = lg.graph();
      VertexOrdering order = lg.ordering();
      for (int pos = 1; pos <= g.vertex_count(); ++pos) {
        for (ExtendMode mode :
             {ExtendMode::new_leaf, ExtendMode::connect_to_predecessor}) {
          bool degree_ok = pos == g.vertex_count() ||
                           g.degree(order[pos - 1]) < g.degree(order[pos]);
          bool connect_ok =
              mode == ExtendMode::new_leaf ||
              (pos >= 2 && !g.adjacent(order[pos - 2], order[pos - 1]));
          (degree_ok && connect_ok ? valid : invalid)
              .push_back({pos, mode});
        }
      }
      if (!invalid.empty()) {
        ExtensionTarget bad = invalid[rng() % invalid.size()];
        EXPECT_THROW(extend(lg, bad), Error);
        ++invalid_checked;
      }
      ASSERT_FALSE(valid.empty());
      ExtensionTarget pick = valid[rng() % valid.size()];
      VertexOrdering before = lg.ordering();
      int old_n = g.vertex_count();
      LabeledGraph out = extend(lg, pick);
      ++applications;
      ASSERT_TRUE(out.strongly_antimagic());
      VertexOrdering after = out.ordering();
      std::vector<VertexId> old_only;
      for (VertexId v : after) {
        if (v < old_n) old_only.push_back(v);
      }
      ASSERT_EQ(old_only, before);
      if (pick.mode != ExtendMode::new_leaf) break;  // no longer a tree
      lg = out;
      if (lg.graph().edge_count() >= 24) break;
    }
  }
  EXPECT_GE(applications, 1000);
  EXPECT_GT(invalid_checked, 200);
}

TEST(Acceptance, Criterion7_OracleCrossValidation) {
  // Pruned search against plain enumeration on every tree with at most 7
  // edges and every cycle C_3..C_7, in both modes.
  std::vector<Graph> graphs;
  for (const Graph& g : testing::all_free_trees(8)) graphs.push_back(g);
  for (int n = 3; n <= 7; ++n) graphs.push_back(generate(CycleShape{n}));
  SearchConfig cfg;
  for (const Graph& g : graphs) {
    for (bool strong : {false, true}) {
      cfg.mode =
          strong ? SearchMode::strongly_antimagic : SearchMode::antimagic;
      testing::NaiveSearch naive = testing::naive_enumerate(g, strong);
      CountResult count = count_labelings(g, cfg);
      ASSERT_EQ(count.count, naive.count);
      SearchResult found = find_labeling(g, cfg);
      ASSERT_EQ(found.status == SearchStatus::found, naive.exists);
      if (naive.exists) ASSERT_EQ(found.labeling, naive.least);
    }
  }

  // Determinism across 1, 2 and 8 workers.
  cfg.mode = SearchMode::strongly_antimagic;
  for (const Graph& g :
       {generate(SpiderShape{{3, 2, 2}}), generate(CycleShape{9}),
        generate(DoubleSpiderShape{{2, 2}, 3, {1, 1}})}) {
    SearchConfig c1 = cfg, c2 = cfg, c8 = cfg;
    c2.workers = 2;
    c8.workers = 8;
    SearchResult r1 = find_labeling(g, c1);
    SearchResult r2 = find_labeling(g, c2);
    SearchResult r8 = find_labeling(g, c8);
    ASSERT_EQ(r1.status, r2.status);
    ASSERT_EQ(r1.labeling, r2.labeling);
    ASSERT_EQ(r1.nodes, r2.nodes);
    ASSERT_EQ(r1.status, r8.status);
    ASSERT_EQ(r1.labeling, r8.labeling);
    ASSERT_EQ(r1.nodes, r8.nodes);
  }

  // The oracle vouches for the constructive cycle labeling, 3 <= n <= 12.
  for (int n = 3; n <= 12; ++n) {
    LabeledGraph lg = label_cycle(n);
    ASSERT_TRUE(testing::naive_valid(lg.graph(), lg.labels(), true)) << n;
    SearchResult res = find_labeling(lg.graph(), cfg);
    ASSERT_EQ(res.status, SearchStatus::found) << n;
    ASSERT_TRUE(testing::naive_valid(lg.graph(), res.labeling, true)) << n;
  }
}

TEST(Acceptance, Criterion8_CycleFamilies) {
  long long spiders = 0, doubles = 0;
  for (const CycleSpiderShape& s : enumerate_cycle_spiders(14)) {
    LabeledGraph lg = label_cycle_spider(s);
    ASSERT_TRUE(lg.strongly_antimagic()) << describe(FamilySpec(s));
    ASSERT_TRUE(lg.graph() == generate(FamilySpec(canonical(s))));
    ++spiders;
  }
  for (const CycleDoubleSpiderShape& s : enumerate_cycle_double_spiders(14)) {
    LabeledGraph lg = label_cycle_double_spider(s);
    ASSERT_TRUE(lg.strongly_antimagic()) << describe(FamilySpec(s));
    ++doubles;
  }
  EXPECT_GT(spiders, 20);
  EXPECT_GT(doubles, 20);
}

TEST(Acceptance, Criterion9_LevelWiseRegularTrees) {
  long long checked = 0;
  for (const LevelWiseTreeShape& s : enumerate_level_wise_trees(40)) {
    LabeledGraph lg = label_level_wise_tree(s);
    ASSERT_TRUE(lg.strongly_antimagic()) << describe(FamilySpec(s));
    ASSERT_TRUE(lg.graph() == generate(FamilySpec(s)));
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

}  // namespace
}  // namespace antimagic
