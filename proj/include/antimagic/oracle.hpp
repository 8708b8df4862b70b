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

#ifndef ANTIMAGIC_ORACLE_HPP
#define ANTIMAGIC_ORACLE_HPP

#include "antimagic/labeling.hpp"

namespace antimagic {

enum class SearchMode { antimagic, strongly_antimagic };

enum class SearchStatus {
  found,
  none,             // search exhausted: no labeling exists
  budget_exceeded,  // distinct from absence; never read a timeout as "none"
};

struct SearchConfig {
  SearchMode mode = SearchMode::strongly_antimagic;
  long long node_budget = 500'000'000;  // attempted label placements
  double wall_clock_seconds = 0;        // 0 = off; coarse safety net only
  int workers = 1;
};

struct SearchResult {
  SearchStatus status = SearchStatus::none;
  EdgeLabeling labeling;  // valid labeling when status == found
  long long nodes = 0;    // sequential-equivalent node count
};

struct CountResult {
  SearchStatus status = SearchStatus::none;
  long long count = 0;
  long long nodes = 0;
};

/// Exhaustive backtracking search over label assignments, edges in id order
/// and label values ascending, so the first hit is the lexicographically
/// least valid label array. Pruning: a vertex whose incident edges are all
/// labeled must not repeat an existing sum (and, in the strong mode, must
/// respect the degree order); unfinished vertices are cut when their
/// best-case sum range cannot respect the degree order against finalized
/// sums. Results are independent of the worker count: work is split into
/// subtrees by fixing the first few edges and the node budget is accounted
/// as if the subtrees ran in order. Guard: m <= 14.
SearchResult find_labeling(const Graph& g, const SearchConfig& cfg);

/// Exact number of labelings passing the requested verifier. Guard: m <= 10.
CountResult count_labelings(const Graph& g, const SearchConfig& cfg);

}  // namespace antimagic

#endif  // ANTIMAGIC_ORACLE_HPP
