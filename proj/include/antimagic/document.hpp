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

#ifndef ANTIMAGIC_DOCUMENT_HPP
#define ANTIMAGIC_DOCUMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "antimagic/families.hpp"
#include "antimagic/labeling.hpp"

namespace antimagic {

/// One universal textual document for graphs and labeled graphs, so gen,
/// label, verify and the exporters compose over pipes. JSON with fields:
/// format, vertices, edges (pairs), optional labels (per edge id), optional
/// family metadata; the vertex sums are emitted alongside labels. Parsing
/// then emitting reproduces the canonical byte form.
struct GraphDocument {
  Graph graph;
  std::optional<EdgeLabeling> labels;
  std::optional<std::string> family;
};

GraphDocument parse_document(const std::string& text);  // Errc::parse_error
std::string emit_document(const GraphDocument& doc);

GraphDocument document_for(const LabeledGraph& lg,
                           std::optional<std::string> family = std::nullopt);

/// DOT text with edge `label` attributes and vertex `phi` attributes.
std::string export_dot(const LabeledGraph& lg);

/// Family descriptor from CLI tokens, e.g. {"double_spider","1,1,1","5","3,5"}
/// or {"level_wise_tree","3,2","2"}. Errc::parse_error on malformed input,
/// Errc::shape_invalid on violated constraints.
FamilySpec parse_family(const std::vector<std::string>& args);

bool is_family_name(const std::string& name);

}  // namespace antimagic

#endif  // ANTIMAGIC_DOCUMENT_HPP
