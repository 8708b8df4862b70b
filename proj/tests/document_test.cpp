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

#include "antimagic/spider_lab.hpp"
#include "gtest/gtest.h"

namespace antimagic {
namespace {

TEST(Document, EmitParseIdentityOnCanonicalForm) {
  GraphDocument doc{generate(SpiderShape{{3, 2, 1}}), std::nullopt,
                    "spider 3,2,1"};
  std::string text = emit_document(doc);
  GraphDocument back = parse_document(text);
  EXPECT_TRUE(back.graph == doc.graph);
  EXPECT_EQ(back.family, doc.family);
  EXPECT_EQ(emit_document(back), text);

  doc.labels = EdgeLabeling{3, 1, 2, 6, 5, 4};
  text = emit_document(doc);
  back = parse_document(text);
  ASSERT_TRUE(back.labels.has_value());
  EXPECT_EQ(*back.labels, *doc.labels);
  EXPECT_EQ(emit_document(back), text);
}

TEST(Document, ParseErrors) {
  EXPECT_THROW(parse_document("not json"), Error);
  EXPECT_THROW(parse_document("{}"), Error);
  EXPECT_THROW(parse_document(R"({"format":"antimagic-graph/1"})"), Error);
  // Bad label set.
  EXPECT_THROW(parse_document(R"({"format":"antimagic-graph/1",
     "vertices":3, "edges":[[0,1],[1,2]], "labels":[1,1]})"),
               Error);
  try {
    parse_document("[1,2]");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::parse_error);
  }
  // Malformed graphs inside a document surface as parse errors too.
  for (const char* text :
       {R"({"format":"antimagic-graph/1","vertices":2,"edges":[[0,0]]})",
        R"({"format":"antimagic-graph/1","vertices":1000000000,"edges":[]})",
        R"({"format":"antimagic-graph/1","vertices":2,"edges":[[0,5]]})"}) {
    try {
      parse_document(text);
      FAIL() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::parse_error) << text;
    }
  }
}

TEST(ParseFamily, OversizedShapesAreRejected) {
  for (auto args : std::vector<std::vector<std::string>>{
           {"path", "99999999"},
           {"spider", "90000000,1,1"},
           {"level_wise_tree", "40,40,40,40,40,40"}}) {
    try {
      generate(parse_family(args));
      FAIL() << args[0];
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::shape_invalid) << args[0];
    }
  }
}

TEST(Document, DotExportContainsLabelsAndSums) {
  LabeledGraph lg = path_max_at(4, 3);
  std::string dot = export_dot(lg);
  EXPECT_NE(dot.find("graph antimagic {"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1 [label=1];"), std::string::npos);
  EXPECT_NE(dot.find("2 [phi=5];"), std::string::npos);
}

TEST(ParseFamily, AcceptsTheCliGrammar) {
  EXPECT_EQ(family_name(parse_family({"path", "4"})), "path");
  EXPECT_EQ(describe(parse_family({"double_spider", "1,1,1", "5", "3,5"})),
            "double_spider 1,1,1 5 3,5");
  EXPECT_EQ(describe(parse_family({"level_wise_tree", "3,2"})),
            "level_wise_tree 3,2 1");
  EXPECT_EQ(describe(parse_family({"cycle_double_spider", "3", "2", "4"})),
            "cycle_double_spider 3 2 4");
  // The smaller side is moved to v.
  EXPECT_EQ(describe(parse_family({"double_spider", "2,2", "1", "1,2,3"})),
            "double_spider 1,2,3 1 2,2");
}

TEST(ParseFamily, Errors) {
  try {
    parse_family({"heptagram", "7"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::parse_error);
  }
  try {
    parse_family({"path", "x"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::parse_error);
  }
  try {
    parse_family({"spider", "1,1"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::shape_invalid);
  }
}

}  // namespace
}  // namespace antimagic
