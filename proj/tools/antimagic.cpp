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

// Command-line front end: generate family graphs, run the constructive
// labelers, verify labelings, call the search oracle, export DOT, and run
// exhaustive family sweeps. One JSON document format flows through every
// pipe stage. Exit codes: 0 success; 1 a verify answered "no"; 2 parse
// errors; 3 invalid shapes/targets; 4 failed verification or exceeded
// budgets (which indicate a bug when produced by a labeler).

#include <fstream>
#include <map>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "antimagic/document.hpp"
#include "antimagic/double_spider_lab.hpp"
#include "antimagic/inductive.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/spider_lab.hpp"

namespace {

using namespace antimagic;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::parse_error:
      return 2;
    case Errc::shape_invalid:
    case Errc::shape_mismatch:
    case Errc::layout_invalid:
    case Errc::index_invalid:
    case Errc::target_invalid:
    case Errc::already_adjacent:
    case Errc::empty_class:
    case Errc::leaf_count_invalid:
    case Errc::has_leaves:
    case Errc::subcase_unmatched:
    case Errc::not_reduced:
    case Errc::oracle_guard:
      return 3;
    default:
      return 4;
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  require(in.good(), Errc::parse_error, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// `label` and `oracle` accept either family tokens or a document path.
struct ResolvedGraph {
  Graph graph;
  std::optional<FamilySpec> spec;
};

ResolvedGraph resolve(const std::vector<std::string>& args) {
  require(!args.empty(), Errc::parse_error, "missing input");
  if (is_family_name(args[0])) {
    FamilySpec spec = parse_family(args);
    return {generate(spec), spec};
  }
  require(args.size() == 1, Errc::parse_error,
          "expected one document path or a family descriptor");
  GraphDocument doc = parse_document(read_input(args[0]));
  auto spec = detect_family(doc.graph);
  return {doc.graph, spec};
}

LabeledGraph label_auto(const FamilySpec& spec) {
  struct Dispatch {
    LabeledGraph operator()(const PathShape& s) {
      return path_max_at(s.n, s.n - 1);
    }
    LabeledGraph operator()(const CycleShape& s) { return label_cycle(s.n); }
    LabeledGraph operator()(const SpiderShape& s) { return label_spider(s); }
    LabeledGraph operator()(const DoubleSpiderShape& s) {
      return label_double_spider(s);
    }
    LabeledGraph operator()(const CycleSpiderShape& s) {
      return label_cycle_spider(s);
    }
    LabeledGraph operator()(const CycleDoubleSpiderShape& s) {
      return label_cycle_double_spider(s);
    }
    LabeledGraph operator()(const LevelWiseTreeShape& s) {
      return label_level_wise_tree(s);
    }
  };
  return std::visit(Dispatch{}, spec);
}

LabeledGraph label_with_scheme(const FamilySpec& spec,
                               const std::string& scheme) {
  if (scheme == "auto") return label_auto(spec);
  if (scheme == "path") {
    const auto* p = std::get_if<PathShape>(&spec);
    require(p != nullptr, Errc::shape_mismatch, "scheme path needs a path");
    return path_max_at(p->n, p->n - 1);
  }
  if (scheme == "labelingA") {
    if (const auto* s = std::get_if<SpiderShape>(&spec)) {
      SpiderShape c = canonical(*s);
      int len = c.legs[0];
      require(len >= 3, Errc::layout_invalid,
              "longest leg too short to place the designated vertex");
      return labeling_A(
          make_spider_ext_layout(c, 0, std::min(len / 2, len - 2)));
    }
    const auto* d = std::get_if<DoubleSpiderShape>(&spec);
    require(d != nullptr, Errc::shape_mismatch,
            "scheme labelingA needs a spider or double spider");
    return labeling_A_double(*d);
  }
  if (scheme == "labelingB") {
    const auto* d = std::get_if<DoubleSpiderShape>(&spec);
    require(d != nullptr, Errc::shape_mismatch,
            "scheme labelingB needs a double spider");
    return labeling_B(*d);
  }
  if (scheme == "eq3") {
    const auto* d = std::get_if<DoubleSpiderShape>(&spec);
    require(d != nullptr, Errc::shape_mismatch,
            "scheme eq3 needs a double spider");
    return a3_ordering(*d);
  }
  fail(Errc::parse_error, "unknown scheme: " + scheme);
}

int cmd_gen(const std::vector<std::string>& args) {
  FamilySpec spec = parse_family(args);
  GraphDocument doc{generate(spec), std::nullopt, describe(spec)};
  std::cout << emit_document(doc);
  return 0;
}

int cmd_label(const std::vector<std::string>& args,
              const std::string& scheme) {
  ResolvedGraph in = resolve(args);
  require(in.spec.has_value(), Errc::shape_invalid,
          "graph matches no constructive family; try the oracle");
  LabeledGraph lg = label_with_scheme(*in.spec, scheme);
  // The CLI must never emit an unverified labeling with exit 0.
  require(lg.strongly_antimagic(), Errc::verification_failed,
          "labeler output failed re-verification");
  std::cout << emit_document(document_for(lg, describe(*in.spec)));
  return 0;
}

int cmd_verify(const std::string& path, bool strong) {
  GraphDocument doc = parse_document(read_input(path));
  require(doc.labels.has_value(), Errc::parse_error,
          "verify needs a labeled document");
  PhiProfile phi = phi_profile(doc.graph, *doc.labels);
  std::cout << "phi:";
  for (long long p : phi) std::cout << ' ' << p;
  std::cout << '\n';
  auto violation = explain_violation(doc.graph, *doc.labels, strong);
  if (violation) {
    std::cout << "INVALID: " << *violation << '\n';
    return 1;
  }
  std::cout << (strong ? "strongly antimagic\n" : "antimagic\n");
  return 0;
}

int cmd_oracle(const std::string& path, bool count, const std::string& mode,
               int workers, long long budget, double wall_clock) {
  GraphDocument doc = parse_document(read_input(path));
  SearchConfig cfg;
  cfg.mode = mode == "anti" ? SearchMode::antimagic
                            : SearchMode::strongly_antimagic;
  cfg.workers = workers;
  cfg.node_budget = budget;
  cfg.wall_clock_seconds = wall_clock;
  if (count) {
    CountResult res = count_labelings(doc.graph, cfg);
    if (res.status == SearchStatus::budget_exceeded) {
      std::cout << "budget-exceeded nodes=" << res.nodes << '\n';
      return 4;
    }
    std::cout << "count " << res.count << " nodes=" << res.nodes << '\n';
    return 0;
  }
  SearchResult res = find_labeling(doc.graph, cfg);
  if (res.status == SearchStatus::budget_exceeded) {
    std::cout << "budget-exceeded nodes=" << res.nodes << '\n';
    return 4;
  }
  if (res.status == SearchStatus::none) {
    std::cout << "none nodes=" << res.nodes << '\n';
    return 1;
  }
  std::cout << "found nodes=" << res.nodes << '\n';
  GraphDocument out{doc.graph, res.labeling, doc.family};
  std::cout << emit_document(out);
  return 0;
}

int cmd_export_dot(const std::string& path) {
  GraphDocument doc = parse_document(read_input(path));
  require(doc.labels.has_value(), Errc::parse_error,
          "export-dot needs a labeled document");
  std::cout << export_dot(LabeledGraph(doc.graph, *doc.labels));
  return 0;
}

const char* base_name(ReducedTag tag) {
  switch (tag) {
    case ReducedTag::coro_i: return "spider-ext+pendant (one leaf at v)";
    case ReducedTag::coro_ii: return "spider-ext+pendant (deg-4 star u)";
    case ReducedTag::a3_i: return "modified scheme A (two leaves at v)";
    case ReducedTag::a3_ii: return "explicit path orderings";
    case ReducedTag::u4_all_leaves: return "double-pendant ordering + pendant";
    case ReducedTag::b_case1: return "scheme A across the middle";
    case ReducedTag::b_case2: return "scheme B";
    case ReducedTag::residual_gap: return "search fallback (gap shape)";
  }
  return "?";
}

int cmd_sweep(const std::string& family, int max_edges) {
  long long total = 0, ok = 0, fallback = 0;
  auto check = [&](const LabeledGraph& lg) {
    ++total;
    if (lg.strongly_antimagic()) ++ok;
  };
  long long unsolved = 0;
  if (family == "spider") {
    for (const auto& s : enumerate_spiders(max_edges)) check(label_spider(s));
  } else if (family == "double_spider") {
    std::map<ReducedTag, long long> per_base;
    for (const auto& s : enumerate_double_spiders(max_edges)) {
      try {
        DoubleSpiderLabeling res = label_double_spider_ex(s);
        if (res.base == ReducedTag::residual_gap) ++fallback;
        ++per_base[res.base];
        check(res.graph);
      } catch (const Error& e) {
        if (e.code() != Errc::residual_unsolved) throw;
        ++total;
        ++unsolved;
        std::cout << "  unsolved: " << describe(FamilySpec(s))
                  << " (gap shape beyond the search guard)\n";
      }
    }
    for (const auto& [tag, count] : per_base) {
      std::cout << "  " << count << "\t" << base_name(tag) << '\n';
    }
  } else if (family == "cycle_spider") {
    for (const auto& s : enumerate_cycle_spiders(max_edges)) {
      check(label_cycle_spider(s));
    }
  } else if (family == "cycle_double_spider") {
    for (const auto& s : enumerate_cycle_double_spiders(max_edges)) {
      check(label_cycle_double_spider(s));
    }
  } else if (family == "level_wise_tree") {
    for (const auto& s : enumerate_level_wise_trees(max_edges)) {
      check(label_level_wise_tree(s));
    }
  } else {
    fail(Errc::parse_error, "no sweep for family: " + family);
  }
  std::cout << family << " <= " << max_edges << " edges: " << total
            << " shapes, " << ok << " verified";
  if (fallback > 0) std::cout << ", " << fallback << " via search fallback";
  if (unsolved > 0) std::cout << ", " << unsolved << " unsolved";
  std::cout << '\n';
  if (ok == total) {
    std::cout << "all verified\n";
    return 0;
  }
  std::cout << (total - ok) << (unsolved > 0 ? " UNSOLVED\n" : " FAILED\n");
  return 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strongly antimagic labeling toolkit"};
  app.require_subcommand(1);

  std::vector<std::string> gen_args;
  auto* gen = app.add_subcommand("gen", "generate a family graph document");
  gen->add_option("family", gen_args, "family name and parameters")
      ->required()
      ->expected(-1);

  std::vector<std::string> label_args;
  std::string scheme = "auto";
  auto* label = app.add_subcommand("label", "construct a labeling");
  label->add_option("input", label_args, "family descriptor or document path")
      ->required()
      ->expected(-1);
  label->add_option("--scheme", scheme, "auto|labelingA|labelingB|path|eq3");

  std::string verify_path;
  bool strong = false;
  auto* verify = app.add_subcommand("verify", "check a labeled document");
  verify->add_option("document", verify_path)->required();
  verify->add_flag("--strong", strong, "require the strong property");

  std::string oracle_path, oracle_mode = "strong";
  bool oracle_count = false;
  int workers = 1;
  long long budget = 500'000'000;
  double wall_clock = 0;
  auto* oracle = app.add_subcommand("oracle", "exhaustive search");
  oracle->add_option("document", oracle_path)->required();
  oracle->add_flag("--count", oracle_count, "count labelings");
  oracle->add_option("--mode", oracle_mode, "strong|anti");
  oracle->add_option("--workers", workers);
  oracle->add_option("--budget", budget, "node limit");
  oracle->add_option("--wall-clock", wall_clock, "seconds, 0 = off");

  std::string dot_path;
  auto* dot = app.add_subcommand("export-dot", "DOT with labels and sums");
  dot->add_option("document", dot_path)->required();

  std::string sweep_family;
  int max_edges = 0;
  auto* sweep = app.add_subcommand("sweep", "exhaustive family sweep");
  sweep->add_option("family", sweep_family)->required();
  sweep->add_option("--max-edges", max_edges)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_args);
    if (label->parsed()) return cmd_label(label_args, scheme);
    if (verify->parsed()) return cmd_verify(verify_path, strong);
    if (oracle->parsed()) {
      return cmd_oracle(oracle_path, oracle_count, oracle_mode, workers,
                        budget, wall_clock);
    }
    if (dot->parsed()) return cmd_export_dot(dot_path);
    if (sweep->parsed()) return cmd_sweep(sweep_family, max_edges);
  } catch (const Error& e) {
    std::cerr << "{\"error\": \"" << errc_name(e.code())
              << "\", \"message\": \"" << e.what() << "\"}\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "{\"error\": \"InternalError\", \"message\": \"" << e.what()
              << "\"}\n";
    return 4;
  }
  return 0;
}
