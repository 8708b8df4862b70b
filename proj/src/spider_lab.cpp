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

#include "antimagic/spider_lab.hpp"

#include <algorithm>
#include <numeric>

namespace antimagic {

namespace {

// Odd in-path edges e_1, e_3, ... are the even 0-based offsets.
void push_odd_edges(const PathEdges& path, int first_index,
                    std::vector<EdgeId>& out, int skip_last = 0) {
  int last = static_cast<int>(path.size()) - 1;
  if (skip_last && last % 2 == 0) last -= 1;  // drop the final odd edge
  for (int i = first_index - 1; i <= last; i += 2) out.push_back(path[i]);
}

void push_even_edges(const PathEdges& path, int first_index,
                     std::vector<EdgeId>& out) {
  for (int i = first_index - 1; i < static_cast<int>(path.size()); i += 2)
    out.push_back(path[i]);
}

}  // namespace

std::vector<EdgeId> labeling_a_order(const AlternatingPlan& plan) {
  std::vector<EdgeId> order;
  const PathEdges& x = plan.middle;
  const int xlen = static_cast<int>(x.size());

  // Phase I.
  for (size_t j = 0; j < plan.right_odd.size(); ++j) {
    push_odd_edges(plan.right_odd[j], j == 0 ? 3 : 1, order);
  }
  for (size_t j = 0; j < plan.left_odd.size(); ++j) {
    bool deferred = static_cast<int>(j) < plan.deferred_left_odd;
    push_odd_edges(plan.left_odd[j], 1, order, deferred ? 1 : 0);
  }
  if (xlen >= 4 && xlen % 2 == 0) {
    for (int i = xlen - 2; i >= 2; i -= 2) order.push_back(x[i - 1]);
  } else if (xlen >= 5 && xlen % 2 == 1) {
    for (int i = 3; i <= xlen - 2; i += 2) order.push_back(x[i - 1]);
  }
  for (const PathEdges& p : plan.right_even) push_even_edges(p, 2, order);
  for (const PathEdges& p : plan.left_even) push_odd_edges(p, 1, order);
  for (EdgeId e : plan.pendants_u) order.push_back(e);
  for (EdgeId e : plan.pendants_v) order.push_back(e);

  // Phase II.
  for (const PathEdges& p : plan.right_odd) push_even_edges(p, 2, order);
  for (const PathEdges& p : plan.left_odd) push_even_edges(p, 2, order);
  if (xlen % 2 == 0) {
    for (int i = xlen - 1; i >= 1; i -= 2) order.push_back(x[i - 1]);
  } else if (xlen >= 3) {
    for (int i = 2; i <= xlen - 1; i += 2) order.push_back(x[i - 1]);
  }
  for (const PathEdges& p : plan.right_even) push_odd_edges(p, 1, order);
  EdgeId last_left_even = -1;
  for (const PathEdges& p : plan.left_even) {
    push_even_edges(p, 2, order);
    last_left_even = order.back();
  }

  // Phase III: saved right-odd edge, deferred left-odd last edges, then the
  // middle leftovers.
  EdgeId saved_right = -1;
  if (!plan.right_odd.empty()) {
    saved_right = plan.right_odd[0][0];
    order.push_back(saved_right);
  }
  for (int j = 0; j < plan.deferred_left_odd &&
                  j < static_cast<int>(plan.left_odd.size());
       ++j) {
    order.push_back(plan.left_odd[j].back());
  }
  if (xlen % 2 == 1 && xlen >= 3) order.push_back(x[0]);
  order.push_back(x[xlen - 1]);

  if (plan.swap_saved_right_with_last_left_even) {
    require(saved_right != -1 && last_left_even != -1, Errc::internal,
            "swap exception needs both edges");
    auto a = std::find(order.begin(), order.end(), saved_right);
    auto b = std::find(order.begin(), order.end(), last_left_even);
    std::iter_swap(a, b);
  }
  return order;
}

namespace {

EdgeLabeling labels_from_order(int edge_count,
                               const std::vector<EdgeId>& order) {
  require(static_cast<int>(order.size()) == edge_count, Errc::internal,
          "edge order does not cover the graph");
  EdgeLabeling labels(edge_count, 0);
  for (int j = 0; j < edge_count; ++j) labels[order[j]] = j + 1;
  return labels;
}

int count_long_legs(const SpiderShape& s) {
  return static_cast<int>(
      std::count_if(s.legs.begin(), s.legs.end(), [](int l) { return l >= 2; }));
}

}  // namespace

SpiderExtLayout make_spider_ext_layout(const SpiderShape& shape_in,
                                       int leg_index, int distance) {
  SpiderShape shape = canonical(shape_in);
  validate(shape);
  const int nlegs = static_cast<int>(shape.legs.size());
  require(leg_index >= 0 && leg_index < nlegs, Errc::layout_invalid,
          "leg index out of range");
  const int leg_len = shape.legs[leg_index];
  require(distance >= 1 && leg_len - distance >= 2, Errc::layout_invalid,
          "v must have degree 2 and must not be adjacent to a leaf");
  const int longs = count_long_legs(shape);
  const bool case_two_legs = longs >= 2;
  const bool case_star_like = nlegs == 4 && longs == 1;
  require(case_two_legs || case_star_like, Errc::layout_invalid,
          "need a second leg longer than 1, or degree 4 with one long leg");

  SpiderExtLayout layout;
  layout.shape = shape;
  layout.graph = generate(FamilySpec(shape));
  layout.center = 0;
  layout.v_leg = leg_index;
  layout.middle_len = distance;

  std::vector<int> leg_offset(nlegs);
  int off = 0;
  for (int i = 0; i < nlegs; ++i) {
    leg_offset[i] = off;
    off += shape.legs[i];
  }
  layout.designated = leg_offset[leg_index] + distance;  // vertex ids mirror
  // edge ids along each leg: vertex (offset + d) sits at distance d.

  AlternatingPlan& plan = layout.plan;
  for (int d = 0; d < distance; ++d) {
    plan.middle.push_back(leg_offset[leg_index] + d);
  }
  PathEdges right;
  for (int d = distance; d < leg_len; ++d) {
    right.push_back(leg_offset[leg_index] + d);
  }
  ((leg_len - distance) % 2 == 1 ? plan.right_odd : plan.right_even)
      .push_back(right);

  for (int i = 0; i < nlegs; ++i) {
    if (i == leg_index) continue;
    int len = shape.legs[i];
    if (len == 1) {
      plan.pendants_u.push_back(leg_offset[i]);
      continue;
    }
    PathEdges leg;  // in-path orientation: leaf -> center
    for (int d = len - 1; d >= 0; --d) leg.push_back(leg_offset[i] + d);
    (len % 2 == 1 ? plan.left_odd : plan.left_even).push_back(leg);
  }
  return layout;
}

namespace {

// Fixed labels for the 4-legged spider whose long leg splits as |X|=2,
// |R|=3; the generic order would tie phi(u) and phi(v) here.
LabeledGraph spider_ext_fixed_small(const SpiderExtLayout& layout) {
  EdgeLabeling labels = {7, 6, 8, 1, 5, 2, 3, 4};
  return LabeledGraph(layout.graph, labels);
}

LabeledGraph labeling_A_impl(const SpiderExtLayout& layout);

// Strips `strip` pendant legs (the canonical tail), labels the reduced
// spider, and re-attaches the pendants at u. Vertex and edge ids of the
// reduced spider are a prefix of the full canonical ids, so the extensions
// land exactly on the canonical pendant slots.
LabeledGraph strip_pendants_and_relabel(const SpiderExtLayout& layout,
                                        int strip) {
  SpiderShape reduced = layout.shape;
  for (int i = 0; i < strip; ++i) {
    require(reduced.legs.back() == 1, Errc::internal, "stripping a long leg");
    reduced.legs.pop_back();
  }
  SpiderExtLayout inner =
      make_spider_ext_layout(reduced, layout.v_leg, layout.middle_len);
  LabeledGraph lg = labeling_A_impl(inner);
  for (int i = 0; i < strip; ++i) {
    lg = extend_at(lg, layout.center, ExtendMode::new_leaf);
  }
  require(lg.graph() == layout.graph, Errc::internal,
          "re-extended spider does not match the canonical embedding");
  return lg;
}

LabeledGraph labeling_A_impl(const SpiderExtLayout& layout) {
  const AlternatingPlan& plan = layout.plan;
  const int y = static_cast<int>(plan.pendants_u.size());
  const int long_left =
      static_cast<int>(plan.left_odd.size() + plan.left_even.size());

  if (long_left == 0) {
    // Degree-4 spider with one long leg (case (ii) of the hypothesis).
    int x = static_cast<int>(plan.middle.size());
    int r = layout.shape.legs[layout.v_leg] - x;
    if (x == 2 && r == 3) return spider_ext_fixed_small(layout);
    return LabeledGraph(
        layout.graph, labels_from_order(layout.graph.edge_count(),
                                        labeling_a_order(plan)));
  }
  if (y >= 1 && long_left >= 2) return strip_pendants_and_relabel(layout, y);
  if (y >= 2 && long_left == 1) {
    return strip_pendants_and_relabel(layout, y - 1);
  }
  AlternatingPlan run = plan;
  if (y == 1 && long_left == 1) {
    // Parity signature even-even-odd swaps the saved right edge with the
    // last left-even edge in the order.
    bool left_even = !plan.left_even.empty();
    bool x_even = plan.middle.size() % 2 == 0;
    bool right_odd = !plan.right_odd.empty();
    run.swap_saved_right_with_last_left_even =
        left_even && x_even && right_odd;
  }
  return LabeledGraph(
      layout.graph,
      labels_from_order(layout.graph.edge_count(), labeling_a_order(run)));
}

}  // namespace

LabeledGraph labeling_A(const SpiderExtLayout& layout) {
  LabeledGraph lg = labeling_A_impl(layout);
  require(lg.strongly_antimagic(), Errc::verification_failed,
          "labeling A output failed the verifier");
  long long best = -1;
  for (VertexId w = 0; w < lg.graph().vertex_count(); ++w) {
    if (lg.graph().degree(w) == 2) best = std::max(best, lg.phi(w));
  }
  require(lg.phi(layout.designated) == best, Errc::verification_failed,
          "labeling A did not maximize phi at the designated vertex");
  return lg;
}

LabeledGraph path_max_at(int n, int u) {
  require(n >= 3, Errc::index_invalid, "need n >= 3");
  require(u >= 2 && u <= n - 1, Errc::index_invalid,
          "u must be a degree-2 vertex index");

  if (2 * u <= n) {
    // Mirror case: label for the reflected position and reverse.
    LabeledGraph mirrored = path_max_at(n, n + 1 - u);
    EdgeLabeling labels(mirrored.labels().rbegin(), mirrored.labels().rend());
    return LabeledGraph(mirrored.graph(), labels);
  }

  if (u == n - 1) {
    EdgeLabeling labels(n - 1);
    for (int i = 1; i <= n - 1; ++i) {
      labels[i - 1] = (n % 2 != i % 2) ? (i + 1) / 2 : (n + i) / 2;
    }
    return LabeledGraph(generate(PathShape{n}), labels);
  }

  // n/2 < u <= n-2: label the sub-path centered so that u is its
  // second-to-last vertex, then grow both ends leaf by leaf. Extending the
  // top leaf alternates ends, so both sides gain n-u-1 vertices.
  const int sub_n = 2 * u - n + 2;
  LabeledGraph lg = path_max_at(sub_n, sub_n - 1);
  const VertexId designated = sub_n - 2;
  for (int i = 0; i < 2 * (n - u - 1); ++i) {
    VertexId top = -1;
    for (VertexId leaf : lg.graph().leaves()) {
      if (top == -1 || lg.phi(leaf) > lg.phi(top)) top = leaf;
    }
    lg = extend_at(lg, top, ExtendMode::new_leaf);
  }

  // Orient so the designated vertex lands at index u-1.
  const Graph& g = lg.graph();
  for (VertexId end : g.leaves()) {
    VertexId prev = end;
    EdgeId e = g.incident_edges(end)[0];
    EdgeLabeling labels;
    int dist = 0;
    bool hit = false;
    for (;;) {
      labels.push_back(lg.label(e));
      VertexId next = g.other_end(e, prev);
      ++dist;
      if (next == designated && dist == u - 1) hit = true;
      if (g.degree(next) == 1) break;
      const auto& inc = g.incident_edges(next);
      e = inc[0] == e ? inc[1] : inc[0];
      prev = next;
    }
    if (hit) return LabeledGraph(generate(PathShape{n}), labels);
  }
  fail(Errc::internal, "path orientation not found");
}

LabeledGraph label_spider(const SpiderShape& shape_in) {
  SpiderShape shape = canonical(shape_in);
  validate(shape);

  // Reduce: leaf rounds until a leg becomes a pendant edge, strip pendant
  // legs while more than three legs remain, and finally strip the last
  // pendant to leave a path through the center.
  struct Step {
    int rounds = 0;  // 0 means "strip one pendant leg"
  };
  std::vector<Step> steps;
  std::vector<int> work = shape.legs;
  for (;;) {
    int mn = *std::min_element(work.begin(), work.end());
    if (mn > 1) {
      steps.push_back({mn - 1});
      for (int& l : work) l -= mn - 1;
    }
    if (work.size() == 3) break;
    work.pop_back();
    steps.push_back({0});
  }
  std::sort(work.begin(), work.end(), std::greater<int>());
  require(work.back() == 1, Errc::internal, "reduction did not reach a pendant");
  steps.push_back({0});
  const int p = work[0], q = work[1];

  LabeledGraph lg = path_max_at(p + q + 1, p + 1);
  const VertexId center = p;  // vertex index u-1 on the canonical path
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (it->rounds == 0) {
      lg = extend_at(lg, center, ExtendMode::new_leaf);
    } else {
      for (int i = 0; i < it->rounds; ++i) lg = extend_all_in_class(lg, 1);
    }
  }
  LabeledGraph out = remap_to_canonical(lg, FamilySpec(shape));
  require(out.strongly_antimagic(), Errc::verification_failed,
          "spider labeling failed the verifier");
  return out;
}

LabeledGraph label_cycle(int n) {
  require(n >= 3, Errc::shape_invalid, "cycle length >= 3");
  EdgeLabeling labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  if (n % 2 == 0) std::swap(labels[n - 2], labels[n - 1]);
  return LabeledGraph(generate(CycleShape{n}), labels);
}

LabeledGraph label_cycle_spider(const CycleSpiderShape& shape_in) {
  CycleSpiderShape shape = canonical(shape_in);
  validate(shape);
  LabeledGraph lg = label_cycle(shape.cycles[0]);
  VertexId hub = shape.cycles[0] - 1;  // top of the cycle labeling
  for (size_t i = 1; i < shape.cycles.size(); ++i) {
    lg = attach_cycle(lg, hub, shape.cycles[i]);
  }
  LabeledGraph out = remap_to_canonical(lg, FamilySpec(shape));
  require(out.strongly_antimagic(), Errc::verification_failed,
          "cycle spider labeling failed the verifier");
  return out;
}

}  // namespace antimagic
