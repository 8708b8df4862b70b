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

#include "antimagic/document.hpp"

#include <sstream>

#include <json.hpp>

namespace antimagic {

namespace {

constexpr const char* kFormat = "antimagic-graph/1";

using Json = nlohmann::ordered_json;

}  // namespace

GraphDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::parse_error, std::string("bad JSON: ") + e.what());
  }
  try {
    require(j.value("format", "") == kFormat, Errc::parse_error,
            "missing or unknown format marker");
    GraphDocument doc;
    int n = j.at("vertices").get<int>();
    require(n >= 0 && n <= 2'000'000, Errc::parse_error,
            "vertex count out of range");
    std::vector<Edge> edges;
    for (const auto& pair : j.at("edges")) {
      require(pair.is_array() && pair.size() == 2, Errc::parse_error,
              "edge must be a pair");
      edges.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    doc.graph = Graph(n, std::move(edges));
    if (j.contains("labels")) {
      EdgeLabeling labels;
      for (const auto& l : j.at("labels")) labels.push_back(l.get<int>());
      check_label_set(doc.graph, labels);
      doc.labels = std::move(labels);
    }
    if (j.contains("family")) doc.family = j.at("family").get<std::string>();
    return doc;
  } catch (const Error& e) {
    // Anything wrong inside a document, including a malformed graph or
    // label set, is a parse error to the caller.
    if (e.code() == Errc::parse_error) throw;
    fail(Errc::parse_error, std::string("bad document: ") + e.what());
  } catch (const std::exception& e) {
    fail(Errc::parse_error, std::string("bad document: ") + e.what());
  }
}

std::string emit_document(const GraphDocument& doc) {
  // Hand-formatted so edge pairs and label arrays stay on one line each;
  // parse(emit(doc)) == doc and emit(parse(text)) == text on this form.
  std::ostringstream os;
  os << "{\n";
  os << "  \"format\": \"" << kFormat << "\",\n";
  os << "  \"vertices\": " << doc.graph.vertex_count() << ",\n";
  os << "  \"edges\": [";
  for (EdgeId e = 0; e < doc.graph.edge_count(); ++e) {
    if (e) os << ", ";
    os << '[' << doc.graph.edge(e).u << ',' << doc.graph.edge(e).v << ']';
  }
  os << ']';
  if (doc.family) os << ",\n  \"family\": " << Json(*doc.family).dump();
  if (doc.labels) {
    os << ",\n  \"labels\": [";
    for (size_t i = 0; i < doc.labels->size(); ++i) {
      if (i) os << ", ";
      os << (*doc.labels)[i];
    }
    os << "],\n  \"phi\": [";
    PhiProfile phi = phi_profile(doc.graph, *doc.labels);
    for (size_t i = 0; i < phi.size(); ++i) {
      if (i) os << ", ";
      os << phi[i];
    }
    os << ']';
  }
  os << "\n}\n";
  return os.str();
}

GraphDocument document_for(const LabeledGraph& lg,
                           std::optional<std::string> family) {
  return GraphDocument{lg.graph(), lg.labels(), std::move(family)};
}

std::string export_dot(const LabeledGraph& lg) {
  std::ostringstream os;
  os << "graph antimagic {\n";
  for (VertexId v = 0; v < lg.graph().vertex_count(); ++v) {
    os << "  " << v << " [phi=" << lg.phi(v) << "];\n";
  }
  for (EdgeId e = 0; e < lg.graph().edge_count(); ++e) {
    os << "  " << lg.graph().edge(e).u << " -- " << lg.graph().edge(e).v
       << " [label=" << lg.label(e) << "];\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

int parse_int(const std::string& s) {
  try {
    size_t pos = 0;
    int value = std::stoi(s, &pos);
    require(pos == s.size(), Errc::parse_error, "trailing characters: " + s);
    return value;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::parse_error, "not an integer: " + s);
  }
}

std::vector<int> parse_csv(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
  require(!out.empty(), Errc::parse_error, "empty list");
  return out;
}

}  // namespace

bool is_family_name(const std::string& name) {
  return name == "path" || name == "cycle" || name == "spider" ||
         name == "double_spider" || name == "cycle_spider" ||
         name == "cycle_double_spider" || name == "level_wise_tree";
}

FamilySpec parse_family(const std::vector<std::string>& args) {
  require(!args.empty(), Errc::parse_error, "missing family name");
  const std::string& name = args[0];
  auto want = [&](size_t lo, size_t hi) {
    require(args.size() - 1 >= lo && args.size() - 1 <= hi, Errc::parse_error,
            name + ": wrong number of parameters");
  };
  FamilySpec spec;
  if (name == "path") {
    want(1, 1);
    spec = PathShape{parse_int(args[1])};
  } else if (name == "cycle") {
    want(1, 1);
    spec = CycleShape{parse_int(args[1])};
  } else if (name == "spider") {
    want(1, 1);
    spec = SpiderShape{parse_csv(args[1])};
  } else if (name == "double_spider") {
    want(3, 3);
    DoubleSpiderShape s{parse_csv(args[1]), parse_int(args[2]),
                        parse_csv(args[3])};
    if (s.left.size() < s.right.size()) std::swap(s.left, s.right);
    spec = s;
  } else if (name == "cycle_spider") {
    want(1, 1);
    spec = CycleSpiderShape{parse_csv(args[1])};
  } else if (name == "cycle_double_spider") {
    want(3, 3);
    CycleDoubleSpiderShape s{parse_csv(args[1]), parse_int(args[2]),
                             parse_csv(args[3])};
    if (s.left.size() < s.right.size()) std::swap(s.left, s.right);
    spec = s;
  } else if (name == "level_wise_tree") {
    want(1, 2);
    int roots = args.size() == 3 ? parse_int(args[2]) : 1;
    spec = LevelWiseTreeShape{parse_csv(args[1]), roots};
  } else {
    fail(Errc::parse_error, "unknown family: " + name);
  }
  validate(spec);
  return spec;
}

}  // namespace antimagic
