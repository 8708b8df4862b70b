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

#include "antimagic/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace antimagic {

namespace {

// Desk-scale guard: keeps absurd descriptors from exhausting memory while
// staying far beyond anything the sweeps or the reduction tests touch.
constexpr long long kMaxEdges = 1'000'000;

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<int>());
  return v;
}

long long checked_total(const std::vector<int>& v) {
  long long total = 0;
  for (int x : v) total += x;
  return total;
}

void require_scale(long long edges) {
  require(edges <= kMaxEdges, Errc::shape_invalid,
          "shape exceeds the supported size");
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

// Side ordering for two-sided shapes: more legs first, ties broken by
// lexicographically larger sorted leg list.
bool side_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

void validate(const PathShape& s) {
  require(s.n >= 2, Errc::shape_invalid, "path needs n >= 2");
  require_scale(s.n);
}

void validate(const CycleShape& s) {
  require(s.n >= 3, Errc::shape_invalid, "cycle needs length >= 3");
  require_scale(s.n);
}

void validate(const SpiderShape& s) {
  require(s.legs.size() >= 3, Errc::shape_invalid,
          "spider needs >= 3 legs (center degree > 2)");
  for (int l : s.legs)
    require(l >= 1, Errc::shape_invalid, "leg length must be positive");
  require_scale(checked_total(s.legs));
}

void validate(const DoubleSpiderShape& s) {
  require(s.left.size() >= 2 && s.right.size() >= 2, Errc::shape_invalid,
          "double spider needs >= 2 legs at each center");
  require(s.left.size() >= s.right.size(), Errc::shape_invalid,
          "double spider wants deg(u) >= deg(v); canonicalize first");
  require(s.middle >= 1, Errc::shape_invalid, "middle path length >= 1");
  for (int l : s.left)
    require(l >= 1, Errc::shape_invalid, "leg length must be positive");
  for (int l : s.right)
    require(l >= 1, Errc::shape_invalid, "leg length must be positive");
  require_scale(checked_total(s.left) + s.middle + checked_total(s.right));
}

void validate(const CycleSpiderShape& s) {
  require(s.cycles.size() >= 2, Errc::shape_invalid,
          "cycle spider needs >= 2 cycles (a single cycle is just a cycle)");
  for (int k : s.cycles)
    require(k >= 3, Errc::shape_invalid, "cycle length >= 3");
  require_scale(checked_total(s.cycles));
}

void validate(const CycleDoubleSpiderShape& s) {
  require(!s.left.empty() && !s.right.empty(), Errc::shape_invalid,
          "cycle double spider needs >= 1 cycle per side");
  require(s.left.size() >= s.right.size(), Errc::shape_invalid,
          "cycle double spider wants the larger side at u; canonicalize first");
  require(s.middle >= 1, Errc::shape_invalid, "middle path length >= 1");
  for (int k : s.left)
    require(k >= 3, Errc::shape_invalid, "cycle length >= 3");
  for (int k : s.right)
    require(k >= 3, Errc::shape_invalid, "cycle length >= 3");
  require_scale(checked_total(s.left) + s.middle + checked_total(s.right));
}

void validate(const LevelWiseTreeShape& s) {
  require(!s.degrees.empty(), Errc::shape_invalid, "need at least one level");
  require(s.roots == 1 || s.roots == 2, Errc::shape_invalid, "roots is 1 or 2");
  for (int t : s.degrees)
    require(t >= 2, Errc::shape_invalid, "level degrees must be >= 2");
  long long width = s.roots, edges = s.roots - 1;
  for (size_t i = 0; i < s.degrees.size(); ++i) {
    int children = s.degrees[i] - (i == 0 && s.roots == 1 ? 0 : 1);
    width *= children;
    edges += width;
    require_scale(edges);
  }
}

void validate(const FamilySpec& spec) {
  std::visit([](const auto& s) { validate(s); }, spec);
}

SpiderShape canonical(SpiderShape s) {
  s.legs = sorted_desc(std::move(s.legs));
  return s;
}

DoubleSpiderShape canonical(DoubleSpiderShape s) {
  s.left = sorted_desc(std::move(s.left));
  s.right = sorted_desc(std::move(s.right));
  if (side_less(s.left, s.right)) std::swap(s.left, s.right);
  return s;
}

CycleSpiderShape canonical(CycleSpiderShape s) {
  s.cycles = sorted_desc(std::move(s.cycles));
  return s;
}

CycleDoubleSpiderShape canonical(CycleDoubleSpiderShape s) {
  s.left = sorted_desc(std::move(s.left));
  s.right = sorted_desc(std::move(s.right));
  if (side_less(s.left, s.right)) std::swap(s.left, s.right);
  return s;
}

namespace {

Graph generate_path(const PathShape& s) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < s.n; ++i) edges.push_back({i, i + 1});
  return Graph(s.n, std::move(edges));
}

Graph generate_cycle(const CycleShape& s) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < s.n; ++i) edges.push_back({i, i + 1});
  edges.push_back({s.n - 1, 0});
  return Graph(s.n, std::move(edges));
}

// Appends a path of `len` new vertices hanging off `at`.
void append_leg(std::vector<Edge>& edges, int& next_vertex, VertexId at,
                int len) {
  VertexId prev = at;
  for (int i = 0; i < len; ++i) {
    edges.push_back({prev, next_vertex});
    prev = next_vertex++;
  }
}

// Appends a cycle of length k through `at`.
void append_cycle(std::vector<Edge>& edges, int& next_vertex, VertexId at,
                  int k) {
  VertexId prev = at;
  for (int i = 0; i < k - 1; ++i) {
    edges.push_back({prev, next_vertex});
    prev = next_vertex++;
  }
  edges.push_back({prev, at});
}

Graph generate_spider(const SpiderShape& raw) {
  SpiderShape s = canonical(raw);
  std::vector<Edge> edges;
  int next = 1;
  for (int len : s.legs) append_leg(edges, next, 0, len);
  return Graph(next, std::move(edges));
}

Graph generate_double_spider(const DoubleSpiderShape& raw) {
  DoubleSpiderShape s = raw;
  s.left = sorted_desc(std::move(s.left));
  s.right = sorted_desc(std::move(s.right));
  std::vector<Edge> edges;
  int next = 1;
  append_leg(edges, next, 0, s.middle);  // middle: u=0 .. v=s.middle
  const VertexId v = s.middle;
  for (int len : s.right) append_leg(edges, next, v, len);
  for (int len : s.left) append_leg(edges, next, 0, len);
  return Graph(next, std::move(edges));
}

Graph generate_cycle_spider(const CycleSpiderShape& raw) {
  CycleSpiderShape s = canonical(raw);
  std::vector<Edge> edges;
  int next = 1;
  for (int k : s.cycles) append_cycle(edges, next, 0, k);
  return Graph(next, std::move(edges));
}

Graph generate_cycle_double_spider(const CycleDoubleSpiderShape& raw) {
  CycleDoubleSpiderShape s = raw;
  s.left = sorted_desc(std::move(s.left));
  s.right = sorted_desc(std::move(s.right));
  std::vector<Edge> edges;
  int next = 1;
  append_leg(edges, next, 0, s.middle);
  const VertexId v = s.middle;
  for (int k : s.right) append_cycle(edges, next, v, k);
  for (int k : s.left) append_cycle(edges, next, 0, k);
  return Graph(next, std::move(edges));
}

Graph generate_level_tree(const LevelWiseTreeShape& s) {
  std::vector<Edge> edges;
  std::vector<VertexId> level;
  int next = 0;
  if (s.roots == 1) {
    level = {next++};
  } else {
    level = {0, 1};
    next = 2;
    edges.push_back({0, 1});
  }
  const int h = static_cast<int>(s.degrees.size());
  for (int i = 0; i < h; ++i) {
    // Children per level-i vertex: t_i minus the edge toward the root side
    // (roots have no parent, but two roots share the root edge).
    int children = s.degrees[i] - (i == 0 && s.roots == 1 ? 0 : 1);
    std::vector<VertexId> below;
    for (VertexId p : level) {
      for (int c = 0; c < children; ++c) {
        edges.push_back({p, next});
        below.push_back(next++);
      }
    }
    level = std::move(below);
  }
  return Graph(next, std::move(edges));
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      [](const auto& s) -> Graph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PathShape>) return generate_path(s);
        if constexpr (std::is_same_v<T, CycleShape>) return generate_cycle(s);
        if constexpr (std::is_same_v<T, SpiderShape>)
          return generate_spider(s);
        if constexpr (std::is_same_v<T, DoubleSpiderShape>)
          return generate_double_spider(s);
        if constexpr (std::is_same_v<T, CycleSpiderShape>)
          return generate_cycle_spider(s);
        if constexpr (std::is_same_v<T, CycleDoubleSpiderShape>)
          return generate_cycle_double_spider(s);
        if constexpr (std::is_same_v<T, LevelWiseTreeShape>)
          return generate_level_tree(s);
      },
      spec);
}

int edge_count(const FamilySpec& spec) {
  return generate(spec).edge_count();
}

std::string family_name(const FamilySpec& spec) {
  struct Namer {
    std::string operator()(const PathShape&) { return "path"; }
    std::string operator()(const CycleShape&) { return "cycle"; }
    std::string operator()(const SpiderShape&) { return "spider"; }
    std::string operator()(const DoubleSpiderShape&) { return "double_spider"; }
    std::string operator()(const CycleSpiderShape&) { return "cycle_spider"; }
    std::string operator()(const CycleDoubleSpiderShape&) {
      return "cycle_double_spider";
    }
    std::string operator()(const LevelWiseTreeShape&) {
      return "level_wise_tree";
    }
  };
  return std::visit(Namer{}, spec);
}

std::string describe(const FamilySpec& spec) {
  struct Desc {
    std::string operator()(const PathShape& s) {
      return "path " + std::to_string(s.n);
    }
    std::string operator()(const CycleShape& s) {
      return "cycle " + std::to_string(s.n);
    }
    std::string operator()(const SpiderShape& s) {
      return "spider " + join(s.legs);
    }
    std::string operator()(const DoubleSpiderShape& s) {
      return "double_spider " + join(s.left) + " " + std::to_string(s.middle) +
             " " + join(s.right);
    }
    std::string operator()(const CycleSpiderShape& s) {
      return "cycle_spider " + join(s.cycles);
    }
    std::string operator()(const CycleDoubleSpiderShape& s) {
      return "cycle_double_spider " + join(s.left) + " " +
             std::to_string(s.middle) + " " + join(s.right);
    }
    std::string operator()(const LevelWiseTreeShape& s) {
      return "level_wise_tree " + join(s.degrees) + " " +
             std::to_string(s.roots);
    }
  };
  return std::visit(Desc{}, spec);
}

namespace {

// Partitions of `total` with parts <= max_part, in reverse-lexicographic
// (largest-first) order.
void for_each_partition(int total, int max_part,
                        const std::function<void(const std::vector<int>&)>& fn,
                        std::vector<int>& parts) {
  if (total == 0) {
    fn(parts);
    return;
  }
  for (int p = std::min(total, max_part); p >= 1; --p) {
    parts.push_back(p);
    for_each_partition(total - p, p, fn, parts);
    parts.pop_back();
  }
}

void for_each_partition(int total,
                        const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> parts;
  for_each_partition(total, total, fn, parts);
}

// Partitions with every part >= min_part.
void for_each_partition_min(
    int total, int min_part,
    const std::function<void(const std::vector<int>&)>& fn) {
  for_each_partition(total, [&](const std::vector<int>& parts) {
    if (parts.back() >= min_part) fn(parts);
  });
}

}  // namespace

std::vector<SpiderShape> enumerate_spiders(int max_edges) {
  std::vector<SpiderShape> out;
  for (int total = 3; total <= max_edges; ++total) {
    for_each_partition(total, [&](const std::vector<int>& parts) {
      if (parts.size() >= 3) out.push_back(SpiderShape{parts});
    });
  }
  return out;
}

std::vector<DoubleSpiderShape> enumerate_double_spiders(int max_edges) {
  std::vector<DoubleSpiderShape> out;
  for (int total = 5; total <= max_edges; ++total) {
    for (int x = 1; total - x >= 4; ++x) {
      for (int sum_left = 2; sum_left <= total - x - 2; ++sum_left) {
        int sum_right = total - x - sum_left;
        for_each_partition(sum_left, [&](const std::vector<int>& left) {
          if (left.size() < 2) return;
          for_each_partition(sum_right, [&](const std::vector<int>& right) {
            if (right.size() < 2) return;
            // One shape per isomorphism class: the u side is the larger one.
            if (side_less(left, right)) return;
            out.push_back(DoubleSpiderShape{left, x, right});
          });
        });
      }
    }
  }
  return out;
}

std::vector<CycleSpiderShape> enumerate_cycle_spiders(int max_edges) {
  std::vector<CycleSpiderShape> out;
  for (int total = 6; total <= max_edges; ++total) {
    for_each_partition_min(total, 3, [&](const std::vector<int>& parts) {
      if (parts.size() >= 2) out.push_back(CycleSpiderShape{parts});
    });
  }
  return out;
}

std::vector<CycleDoubleSpiderShape> enumerate_cycle_double_spiders(
    int max_edges) {
  std::vector<CycleDoubleSpiderShape> out;
  for (int total = 7; total <= max_edges; ++total) {
    for (int x = 1; total - x >= 6; ++x) {
      for (int sum_left = 3; sum_left <= total - x - 3; ++sum_left) {
        int sum_right = total - x - sum_left;
        for_each_partition_min(sum_left, 3, [&](const std::vector<int>& left) {
          for_each_partition_min(
              sum_right, 3, [&](const std::vector<int>& right) {
                if (side_less(left, right)) return;
                out.push_back(CycleDoubleSpiderShape{left, x, right});
              });
        });
      }
    }
  }
  return out;
}

std::vector<LevelWiseTreeShape> enumerate_level_wise_trees(int max_edges) {
  std::vector<LevelWiseTreeShape> out;
  for (int roots : {1, 2}) {
    // DFS over nonincreasing degree sequences while the edge budget lasts.
    std::function<void(std::vector<int>&, long long, long long)> grow =
        [&](std::vector<int>& degrees, long long width, long long edges) {
          int cap = degrees.empty() ? max_edges : degrees.back();
          for (int t = 2; t <= cap; ++t) {
            long long level_width =
                degrees.empty() ? width * (roots == 1 ? t : t - 1)
                                : width * (t - 1);
            long long new_edges = edges + level_width;
            if (new_edges > max_edges) continue;
            degrees.push_back(t);
            out.push_back(LevelWiseTreeShape{degrees, roots});
            grow(degrees, level_width, new_edges);
            degrees.pop_back();
          }
        };
    std::vector<int> degrees;
    grow(degrees, roots == 1 ? 1 : 2, roots == 1 ? 0 : 1);
  }
  return out;
}

namespace {

// Walks a chain of degree-2 vertices starting along `first` until hitting a
// vertex that fails `keep_going` (a leaf, a center, or back at start).
struct Arc {
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;  // excludes the start vertex
};

Arc walk_arc(const Graph& g, VertexId start, EdgeId first) {
  Arc arc;
  VertexId prev = start;
  EdgeId e = first;
  for (;;) {
    VertexId next = g.other_end(e, prev);
    arc.edges.push_back(e);
    arc.vertices.push_back(next);
    if (next == start || g.degree(next) != 2) return arc;
    const auto& inc = g.incident_edges(next);
    e = inc[0] == e ? inc[1] : inc[0];
    prev = next;
  }
}

std::vector<VertexId> high_degree_vertices(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) >= 3) out.push_back(v);
  }
  return out;
}

std::optional<FamilySpec> detect_level_tree(const Graph& g) {
  auto levels_ok = [&](const std::vector<int>& level_of,
                       int height) -> std::optional<std::vector<int>> {
    std::vector<int> degree_at(height + 1, -1);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      int lv = level_of[v];
      if (lv < height && g.degree(v) == 1) return std::nullopt;
      if (lv == height && g.degree(v) != 1) return std::nullopt;
      if (degree_at[lv] == -1) degree_at[lv] = g.degree(v);
      if (degree_at[lv] != g.degree(v)) return std::nullopt;
    }
    degree_at.pop_back();  // leaf level carries no constraint
    for (int t : degree_at)
      if (t < 2) return std::nullopt;
    return degree_at;
  };

  auto bfs_levels = [&](const std::vector<VertexId>& roots) {
    std::vector<int> level(g.vertex_count(), -1);
    std::vector<VertexId> queue = roots;
    for (VertexId r : roots) level[r] = 0;
    for (size_t i = 0; i < queue.size(); ++i) {
      VertexId v = queue[i];
      for (EdgeId e : g.incident_edges(v)) {
        VertexId w = g.other_end(e, v);
        if (level[w] == -1) {
          level[w] = level[v] + 1;
          queue.push_back(w);
        }
      }
    }
    int height = 0;
    for (int l : level) height = std::max(height, l);
    return std::make_pair(level, height);
  };

  for (VertexId r = 0; r < g.vertex_count(); ++r) {
    auto [level, height] = bfs_levels({r});
    if (height < 1) continue;
    if (auto degrees = levels_ok(level, height)) {
      return FamilySpec(LevelWiseTreeShape{*degrees, 1});
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [level, height] = bfs_levels({g.edge(e).u, g.edge(e).v});
    if (height < 1) continue;
    if (auto degrees = levels_ok(level, height)) {
      return FamilySpec(LevelWiseTreeShape{*degrees, 2});
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<FamilySpec> detect_family(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n < 2 || !g.connected()) return std::nullopt;
  auto centers = high_degree_vertices(g);

  if (m == n - 1) {  // tree families
    if (centers.empty()) return FamilySpec(PathShape{n});
    if (centers.size() == 1) {
      std::vector<int> legs;
      for (EdgeId e : g.incident_edges(centers[0])) {
        legs.push_back(static_cast<int>(walk_arc(g, centers[0], e).edges.size()));
      }
      return FamilySpec(canonical(SpiderShape{legs}));
    }
    if (centers.size() == 2) {
      std::vector<int> left, right;
      int middle = -1;
      for (EdgeId e : g.incident_edges(centers[0])) {
        Arc a = walk_arc(g, centers[0], e);
        if (a.vertices.back() == centers[1]) {
          middle = static_cast<int>(a.edges.size());
        } else {
          left.push_back(static_cast<int>(a.edges.size()));
        }
      }
      for (EdgeId e : g.incident_edges(centers[1])) {
        Arc a = walk_arc(g, centers[1], e);
        if (a.vertices.back() != centers[0]) {
          right.push_back(static_cast<int>(a.edges.size()));
        }
      }
      return FamilySpec(canonical(DoubleSpiderShape{left, middle, right}));
    }
    return detect_level_tree(g);
  }

  if (m == n && centers.empty()) return FamilySpec(CycleShape{n});

  if (centers.size() == 1) {
    std::vector<int> cycles;
    std::vector<char> seen(m, 0);
    for (EdgeId e : g.incident_edges(centers[0])) {
      if (seen[e]) continue;
      Arc a = walk_arc(g, centers[0], e);
      if (a.vertices.back() != centers[0]) return std::nullopt;
      for (EdgeId ae : a.edges) seen[ae] = 1;
      cycles.push_back(static_cast<int>(a.edges.size()));
    }
    if (cycles.size() < 2) return std::nullopt;
    return FamilySpec(canonical(CycleSpiderShape{cycles}));
  }

  if (centers.size() == 2) {
    std::vector<int> left, right;
    int middle = -1;
    std::vector<char> seen(m, 0);
    for (int side = 0; side < 2; ++side) {
      VertexId c = centers[side];
      for (EdgeId e : g.incident_edges(c)) {
        if (seen[e]) continue;
        Arc a = walk_arc(g, c, e);
        for (EdgeId ae : a.edges) seen[ae] = 1;
        if (a.vertices.back() == c) {
          (side == 0 ? left : right)
              .push_back(static_cast<int>(a.edges.size()));
        } else if (a.vertices.back() == centers[1 - side] && middle == -1) {
          middle = static_cast<int>(a.edges.size());
        } else {
          return std::nullopt;
        }
      }
    }
    if (middle == -1 || left.empty() || right.empty()) return std::nullopt;
    return FamilySpec(canonical(CycleDoubleSpiderShape{left, middle, right}));
  }

  return std::nullopt;
}

namespace {

// Legs/cycles attached to one center, with their built label sequences.
struct BuiltArc {
  std::vector<int> labels;  // outward from the center
  Arc arc;
};

// Matches built arcs to canonical slots of the same length. Slots and arcs
// of equal length are paired in sorted label-sequence order, which makes the
// remap deterministic under leg symmetry.
void assign_arcs(std::vector<BuiltArc>& arcs,
                 const std::vector<std::pair<int, int>>& slots,  // (length, first edge id)
                 std::vector<int>& canon_labels) {
  std::map<int, std::vector<int>> arcs_by_len;
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
    arcs_by_len[static_cast<int>(arcs[i].labels.size())].push_back(i);
  }
  for (auto& [len, idxs] : arcs_by_len) {
    std::sort(idxs.begin(), idxs.end(), [&](int a, int b) {
      return arcs[a].labels < arcs[b].labels;
    });
  }
  std::map<int, size_t> cursor;
  for (auto [len, first_edge] : slots) {
    auto& idxs = arcs_by_len[len];
    require(cursor[len] < idxs.size(), Errc::internal,
            "arc/slot length mismatch in remap");
    const BuiltArc& arc = arcs[idxs[cursor[len]++]];
    for (int i = 0; i < len; ++i) canon_labels[first_edge + i] = arc.labels[i];
  }
}

}  // namespace

LabeledGraph remap_to_canonical(const LabeledGraph& built,
                                const FamilySpec& spec,
                                std::vector<VertexId> root_hint) {
  const Graph canon = generate(spec);
  const Graph& g = built.graph();
  require(g.vertex_count() == canon.vertex_count() &&
              g.edge_count() == canon.edge_count(),
          Errc::internal, "remap: size mismatch");
  std::vector<int> labels(canon.edge_count(), 0);

  auto arcs_from = [&](VertexId c, auto&& want) {
    std::vector<BuiltArc> arcs;
    std::vector<char> seen(g.edge_count(), 0);
    for (EdgeId e : g.incident_edges(c)) {
      if (seen[e]) continue;
      Arc a = walk_arc(g, c, e);
      for (EdgeId ae : a.edges) seen[ae] = 1;
      if (!want(a)) continue;
      BuiltArc ba;
      for (EdgeId ae : a.edges) ba.labels.push_back(built.label(ae));
      ba.arc = std::move(a);
      arcs.push_back(std::move(ba));
    }
    return arcs;
  };

  if (std::holds_alternative<PathShape>(spec)) {
    // Orientation with the lexicographically smaller label sequence.
    auto ends = g.leaves();
    require(ends.size() == 2, Errc::internal, "remap: not a path");
    std::vector<std::vector<int>> seqs;
    for (VertexId end : ends) {
      Arc a = walk_arc(g, end, g.incident_edges(end)[0]);
      std::vector<int> seq;
      for (EdgeId e : a.edges) seq.push_back(built.label(e));
      seqs.push_back(seq);
    }
    labels = std::min(seqs[0], seqs[1]);
    return LabeledGraph(canon, labels);
  }

  if (std::holds_alternative<CycleShape>(spec)) {
    // Smallest label sequence over all rotations/directions.
    std::vector<int> best;
    for (VertexId start = 0; start < g.vertex_count(); ++start) {
      for (EdgeId e : g.incident_edges(start)) {
        Arc a = walk_arc(g, start, e);
        std::vector<int> seq;
        for (EdgeId ae : a.edges) seq.push_back(built.label(ae));
        if (best.empty() || seq < best) best = seq;
      }
    }
    return LabeledGraph(canon, best);
  }

  if (const auto* ss = std::get_if<SpiderShape>(&spec)) {
    SpiderShape s = canonical(*ss);
    auto centers = high_degree_vertices(g);
    require(centers.size() == 1, Errc::internal, "remap: expected one center");
    auto arcs = arcs_from(centers[0], [](const Arc&) { return true; });
    std::vector<std::pair<int, int>> slots;
    int off = 0;
    for (int len : s.legs) {
      slots.push_back({len, off});
      off += len;
    }
    assign_arcs(arcs, slots, labels);
    return LabeledGraph(canon, labels);
  }

  auto remap_two_sided = [&](const std::vector<int>& left, int middle,
                             const std::vector<int>& right,
                             bool cycles) -> LabeledGraph {
    auto centers = high_degree_vertices(g);
    require(centers.size() == 2, Errc::internal, "remap: expected two centers");
    int mult = cycles ? 2 : 1;
    for (int flip = 0; flip < 2; ++flip) {
      VertexId cu = centers[flip], cv = centers[1 - flip];
      if (g.degree(cu) != static_cast<int>(left.size()) * mult + 1 ||
          g.degree(cv) != static_cast<int>(right.size()) * mult + 1) {
        continue;
      }
      // From u: legs end at leaves (or back at u for cycles); exactly one
      // arc, the middle path, reaches v.
      auto u_arcs =
          arcs_from(cu, [&](const Arc& a) { return a.vertices.back() != cv; });
      auto mid =
          arcs_from(cu, [&](const Arc& a) { return a.vertices.back() == cv; });
      if (mid.size() != 1 || static_cast<int>(mid[0].labels.size()) != middle) {
        continue;
      }
      auto v_arcs =
          arcs_from(cv, [&](const Arc& a) { return a.vertices.back() != cu; });
      auto lens = [](const std::vector<BuiltArc>& arcs) {
        std::vector<int> out;
        for (const auto& a : arcs) out.push_back(static_cast<int>(a.labels.size()));
        return sorted_desc(out);
      };
      std::vector<int> lsort = sorted_desc(left), rsort = sorted_desc(right);
      if (lens(u_arcs) != lsort || lens(v_arcs) != rsort) continue;

      for (int i = 0; i < middle; ++i) labels[i] = mid[0].labels[i];
      int off = middle;
      std::vector<std::pair<int, int>> v_slots, u_slots;
      for (int len : rsort) {
        v_slots.push_back({len, off});
        off += len;
      }
      for (int len : lsort) {
        u_slots.push_back({len, off});
        off += len;
      }
      // A built cycle can be read in two directions; use the
      // lexicographically smaller label sequence.
      auto normalize = [&](std::vector<BuiltArc>& arcs) {
        if (!cycles) return;
        for (auto& a : arcs) {
          std::vector<int> rev(a.labels.rbegin(), a.labels.rend());
          if (rev < a.labels) a.labels = rev;
        }
      };
      normalize(u_arcs);
      normalize(v_arcs);
      assign_arcs(v_arcs, v_slots, labels);
      assign_arcs(u_arcs, u_slots, labels);
      return LabeledGraph(canon, labels);
    }
    fail(Errc::internal, "remap: no orientation matched");
  };

  if (const auto* ds = std::get_if<DoubleSpiderShape>(&spec)) {
    DoubleSpiderShape s = *ds;
    return remap_two_sided(s.left, s.middle, s.right, false);
  }

  if (const auto* cs = std::get_if<CycleSpiderShape>(&spec)) {
    CycleSpiderShape s = canonical(*cs);
    auto centers = high_degree_vertices(g);
    require(centers.size() == 1, Errc::internal, "remap: expected one center");
    auto arcs = arcs_from(centers[0], [](const Arc&) { return true; });
    for (auto& a : arcs) {
      std::vector<int> rev(a.labels.rbegin(), a.labels.rend());
      if (rev < a.labels) a.labels = rev;
    }
    std::vector<std::pair<int, int>> slots;
    int off = 0;
    for (int len : s.cycles) {
      slots.push_back({len, off});
      off += len;
    }
    assign_arcs(arcs, slots, labels);
    return LabeledGraph(canon, labels);
  }

  if (const auto* cds = std::get_if<CycleDoubleSpiderShape>(&spec)) {
    CycleDoubleSpiderShape s = *cds;
    return remap_two_sided(s.left, s.middle, s.right, true);
  }

  if (const auto* ts = std::get_if<LevelWiseTreeShape>(&spec)) {
    require(static_cast<int>(root_hint.size()) == ts->roots, Errc::internal,
            "remap: level tree needs root hint");
    // Complete level-wise regular trees: sibling subtrees are isomorphic, so
    // children may be matched in any deterministic order; use edge labels.
    std::vector<VertexId> vmap(g.vertex_count(), -1);
    std::vector<std::pair<VertexId, VertexId>> queue;  // (built, canon)
    if (ts->roots == 1) {
      vmap[root_hint[0]] = 0;
      queue.push_back({root_hint[0], 0});
    } else {
      vmap[root_hint[0]] = 0;
      vmap[root_hint[1]] = 1;
      queue.push_back({root_hint[0], 0});
      queue.push_back({root_hint[1], 1});
      labels[0] = built.label(g.find_edge(root_hint[0], root_hint[1]));
    }
    int next_canon = ts->roots;
    for (size_t i = 0; i < queue.size(); ++i) {
      auto [bv, cv] = queue[i];
      std::vector<std::pair<int, VertexId>> children;  // (label, built child)
      for (EdgeId e : g.incident_edges(bv)) {
        VertexId w = g.other_end(e, bv);
        if (vmap[w] == -1) children.push_back({built.label(e), w});
      }
      std::sort(children.begin(), children.end());
      for (auto [lab, w] : children) {
        VertexId cw = next_canon++;
        vmap[w] = cw;
        labels[canon.find_edge(cv, cw)] = lab;
        queue.push_back({w, cw});
      }
    }
    return LabeledGraph(canon, labels);
  }

  fail(Errc::internal, "remap: unsupported family");
}

}  // namespace antimagic
