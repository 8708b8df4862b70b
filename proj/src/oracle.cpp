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

#include "antimagic/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>
#include <vector>

namespace antimagic {

namespace {

using Clock = std::chrono::steady_clock;

// Depth-first assignment state. Edges are taken in id order; a vertex
// finalizes when its last incident edge is labeled.
class Searcher {
 public:
  Searcher(const Graph& g, SearchMode mode)
      : g_(g),
        mode_(mode),
        m_(g.edge_count()),
        n_(g.vertex_count()),
        labels_(m_, 0),
        used_(m_ + 1, 0),
        partial_(n_, 0),
        remaining_(n_),
        phi_seen_(m_ * (m_ + 1) + 1, 0) {
    for (VertexId v = 0; v < n_; ++v) remaining_[v] = g.degree(v);
  }

  struct Outcome {
    long long nodes = 0;
    long long count = 0;
    bool found = false;
    long long nodes_to_first = 0;
    EdgeLabeling first;
    bool aborted = false;  // node cap or wall clock hit
  };

  // Applies labels[0..depth-1] (must be a valid prefix), then explores.
  Outcome explore(const std::vector<int>& prefix, bool count_all,
                  long long node_cap, const std::atomic<bool>* stop,
                  Clock::time_point deadline, bool use_deadline) {
    Outcome out;
    for (size_t i = 0; i < prefix.size(); ++i) {
      bool ok = place(static_cast<int>(i), prefix[i]);
      require(ok, Errc::internal, "invalid search prefix");
    }
    dfs(static_cast<int>(prefix.size()), count_all, node_cap, stop, deadline,
        use_deadline, out);
    for (int i = static_cast<int>(prefix.size()) - 1; i >= 0; --i) {
      unplace(i, prefix[i]);
    }
    return out;
  }

  // Attempts one placement; fully reverts and returns false when pruned.
  bool place(int e, int label) {
    labels_[e] = label;
    used_[label] = 1;
    const Edge& ed = g_.edge(e);
    int finals = 0;
    VertexId fin[2];
    for (VertexId x : {ed.u, ed.v}) {
      partial_[x] += label;
      if (--remaining_[x] == 0) fin[finals++] = x;
    }
    bool ok = true;
    int registered = 0;
    for (int i = 0; i < finals && ok; ++i) {
      ok = admit_finalized(fin[i]);
      if (ok) ++registered;
    }
    if (ok && mode_ == SearchMode::strongly_antimagic) ok = bounds_ok();
    if (!ok) {
      for (int i = registered - 1; i >= 0; --i) retract_finalized(fin[i]);
      for (VertexId x : {ed.u, ed.v}) {
        partial_[x] -= label;
        ++remaining_[x];
      }
      used_[label] = 0;
      labels_[e] = 0;
      return false;
    }
    return true;
  }

  void unplace(int e, int label) {
    const Edge& ed = g_.edge(e);
    for (VertexId x : {ed.v, ed.u}) {
      if (remaining_[x] == 0) retract_finalized(x);
    }
    for (VertexId x : {ed.u, ed.v}) {
      partial_[x] -= label;
      ++remaining_[x];
    }
    used_[label] = 0;
    labels_[e] = 0;
  }

  const EdgeLabeling& labels() const { return labels_; }
  bool label_used(int label) const { return used_[label]; }

 private:
  bool admit_finalized(VertexId x) {
    long long phi = partial_[x];
    if (phi_seen_[phi]) return false;
    if (mode_ == SearchMode::strongly_antimagic) {
      int dx = g_.degree(x);
      for (VertexId y : finalized_) {
        int dy = g_.degree(y);
        if (dx > dy && phi <= partial_[y]) return false;
        if (dx < dy && phi >= partial_[y]) return false;
      }
    }
    phi_seen_[phi] = 1;
    finalized_.push_back(x);
    return true;
  }

  void retract_finalized(VertexId x) {
    phi_seen_[partial_[x]] = 0;
    finalized_.pop_back();
  }

  // Degree-ordering cut: an unfinished vertex whose best reachable sum
  // range cannot sit on the right side of some finalized sum is hopeless.
  bool bounds_ok() const {
    for (VertexId z = 0; z < n_; ++z) {
      if (remaining_[z] == 0) continue;
      int need = remaining_[z];
      long long lo = partial_[z], hi = partial_[z];
      int picked = 0;
      for (int l = 1; l <= m_ && picked < need; ++l) {
        if (!used_[l]) {
          lo += l;
          ++picked;
        }
      }
      picked = 0;
      for (int l = m_; l >= 1 && picked < need; --l) {
        if (!used_[l]) {
          hi += l;
          ++picked;
        }
      }
      int dz = g_.degree(z);
      for (VertexId y : finalized_) {
        int dy = g_.degree(y);
        if (dz > dy && hi <= partial_[y]) return false;
        if (dz < dy && lo >= partial_[y]) return false;
      }
    }
    return true;
  }

  void dfs(int depth, bool count_all, long long node_cap,
           const std::atomic<bool>* stop, Clock::time_point deadline,
           bool use_deadline, Outcome& out) {
    if (depth == m_) {
      ++out.count;
      if (!out.found) {
        out.found = true;
        out.nodes_to_first = out.nodes;
        out.first = labels_;
      }
      return;
    }
    for (int label = 1; label <= m_; ++label) {
      if (used_[label]) continue;
      if (out.aborted || (out.found && !count_all)) return;
      if (++out.nodes > node_cap) {
        out.aborted = true;
        return;
      }
      if ((out.nodes & 0x3ff) == 0) {
        if (stop && stop->load(std::memory_order_relaxed)) {
          out.aborted = true;
          return;
        }
        if (use_deadline && Clock::now() > deadline) {
          out.aborted = true;
          return;
        }
      }
      if (!place(depth, label)) continue;
      dfs(depth + 1, count_all, node_cap, stop, deadline, use_deadline, out);
      unplace(depth, label);
    }
  }

  const Graph& g_;
  SearchMode mode_;
  int m_, n_;
  EdgeLabeling labels_;
  std::vector<char> used_;
  std::vector<long long> partial_;
  std::vector<int> remaining_;
  std::vector<char> phi_seen_;
  std::vector<VertexId> finalized_;
};

// Top levels of the tree, walked once up front: plain node events
// interleaved with subtree tasks, in exact sequential order.
struct SplitPlan {
  std::vector<long long> gap_nodes;           // nodes before task i
  std::vector<std::vector<int>> task_prefix;  // valid prefixes of length d
  long long tail_nodes = 0;                   // nodes after the last task
};

SplitPlan split_top_levels(const Graph& g, SearchMode mode, int depth) {
  SplitPlan plan;
  if (depth == 0) {
    plan.gap_nodes.push_back(0);
    plan.task_prefix.push_back({});
    return plan;
  }
  Searcher s(g, mode);
  long long pending = 0;
  std::vector<int> prefix;
  std::function<void(int)> walk = [&](int level) {
    for (int label = 1; label <= g.edge_count(); ++label) {
      if (s.label_used(label)) continue;
      ++pending;
      if (!s.place(level, label)) continue;
      prefix.push_back(label);
      if (level + 1 == depth) {
        plan.gap_nodes.push_back(pending);
        plan.task_prefix.push_back(prefix);
        pending = 0;
      } else {
        walk(level + 1);
      }
      prefix.pop_back();
      s.unplace(level, label);
    }
  };
  walk(0);
  plan.tail_nodes = pending;
  return plan;
}

struct TaskOutcome {
  Searcher::Outcome result;
  bool ran = false;
};

// Runs the subtree tasks on `workers` threads and replays the budget as if
// they had run sequentially, so the answer is worker-count independent.
template <typename Finish>
auto run_split(const Graph& g, const SearchConfig& cfg, bool count_all,
               Finish finish) {
  const int m = g.edge_count();
  int depth = 0;
  long long width = 1;
  while (depth < m - 1 && width < 8LL * cfg.workers) {
    width *= (m - depth);
    ++depth;
  }
  SplitPlan plan = split_top_levels(g, cfg.mode, depth);
  const int tasks = static_cast<int>(plan.task_prefix.size());
  std::vector<TaskOutcome> results(tasks);

  const bool use_deadline = cfg.wall_clock_seconds > 0;
  const Clock::time_point deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(
                             use_deadline ? cfg.wall_clock_seconds : 0));

  std::atomic<int> next{0};
  std::atomic<int> first_found{tasks};
  auto body = [&]() {
    Searcher s(g, cfg.mode);
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= tasks) return;
      // A solution in an earlier subtree makes later ones irrelevant.
      if (!count_all && i > first_found.load(std::memory_order_relaxed)) {
        continue;
      }
      results[i].result =
          s.explore(plan.task_prefix[i], count_all, cfg.node_budget + 1,
                    nullptr, deadline, use_deadline);
      results[i].ran = true;
      if (!count_all && results[i].result.found) {
        int expected = first_found.load(std::memory_order_relaxed);
        while (i < expected &&
               !first_found.compare_exchange_weak(expected, i)) {
        }
      }
    }
  };
  if (cfg.workers <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < cfg.workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  return finish(plan, results);
}

}  // namespace

SearchResult find_labeling(const Graph& g, const SearchConfig& cfg) {
  require(g.edge_count() <= 14, Errc::oracle_guard,
          "search guard: at most 14 edges");
  const int m = g.edge_count();
  if (m == 0) {
    // Empty labeling; distinct sums need at most one vertex.
    if (g.vertex_count() <= 1) return {SearchStatus::found, {}, 0};
    return {SearchStatus::none, {}, 0};
  }

  return run_split(
      g, cfg, /*count_all=*/false,
      [&](const SplitPlan& plan,
          const std::vector<TaskOutcome>& results) -> SearchResult {
        long long acc = 0;
        for (size_t i = 0; i < results.size(); ++i) {
          acc += plan.gap_nodes[i];
          const auto& r = results[i].result;
          if (r.found) {
            if (acc + r.nodes_to_first > cfg.node_budget) {
              return {SearchStatus::budget_exceeded, {}, cfg.node_budget};
            }
            return {SearchStatus::found, r.first, acc + r.nodes_to_first};
          }
          if (r.aborted || acc + r.nodes > cfg.node_budget) {
            return {SearchStatus::budget_exceeded, {}, cfg.node_budget};
          }
          acc += r.nodes;
        }
        return {SearchStatus::none, {}, acc + plan.tail_nodes};
      });
}

CountResult count_labelings(const Graph& g, const SearchConfig& cfg) {
  require(g.edge_count() <= 10, Errc::oracle_guard,
          "count guard: at most 10 edges");
  const int m = g.edge_count();
  if (m == 0) {
    long long ok = g.vertex_count() <= 1 ? 1 : 0;
    return {SearchStatus::found, ok, 0};
  }

  return run_split(
      g, cfg, /*count_all=*/true,
      [&](const SplitPlan& plan,
          const std::vector<TaskOutcome>& results) -> CountResult {
        long long acc = 0, total = 0;
        for (size_t i = 0; i < results.size(); ++i) {
          acc += plan.gap_nodes[i];
          const auto& r = results[i].result;
          if (r.aborted || acc + r.nodes > cfg.node_budget) {
            return {SearchStatus::budget_exceeded, 0, cfg.node_budget};
          }
          acc += r.nodes;
          total += r.count;
        }
        return {SearchStatus::found, total, acc + plan.tail_nodes};
      });
}

}  // namespace antimagic
