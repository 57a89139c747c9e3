/* Copyright 2026 The segtext Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <gtest/gtest.h>

#include "segtext/cleaner.h"
#include "segtext/error.h"
#include "segtext/language.h"

namespace segtext {
namespace {

CleanReport run(std::string_view text, DocType type = DocType::kPlain,
                std::string_view lang = "en") {
  return clean(text, type, *LanguageRegistry::builtin().lookup(lang));
}

TEST(Clean, GluedSentences) {
  auto r = run("end.Next one.");
  EXPECT_EQ(r.output, "end. Next one.");
  EXPECT_EQ(r.count("missing_space"), 1u);
}

TEST(Clean, GluedRepairLeavesAcronymsAlone) {
  EXPECT_EQ(run("The U.S.A. is big.").output, "The U.S.A. is big.");
  EXPECT_EQ(run("Version 2.0.Beta").output, "Version 2.0.Beta");
}

TEST(Clean, PdfJoinsWrappedLines) {
  EXPECT_EQ(run("word wrap\ncontinues here.", DocType::kPdf).output,
            "word wrap continues here.");
  EXPECT_EQ(run("First line.\nSecond line.", DocType::kPdf).output,
            "First line.\nSecond line.");
}

TEST(Clean, PlainJoinsOnlyLowercaseContinuations) {
  EXPECT_EQ(run("the river\nran on.").output, "the river ran on.");
  EXPECT_EQ(run("A heading\nThe body.").output, "A heading\nThe body.");
  EXPECT_EQ(run("Para one.\n\nPara two.").output, "Para one.\n\nPara two.");
}

TEST(Clean, AlreadyClean) {
  auto r = run("already clean.");
  EXPECT_EQ(r.output, "already clean.");
  for (const auto& a : r.actions) EXPECT_EQ(a.count, 0u) << a.rule;
  EXPECT_EQ(r.actions.size(), 5u);
}

TEST(Clean, StripsTagsKeepsText) {
  auto r = run("<p>Hello <b>bold</b> world.</p><p>Next.</p>");
  EXPECT_EQ(r.output.find('<'), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("Hello bold world."), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("Next."), std::string::npos) << r.output;
  EXPECT_GT(r.count("html_tags"), 0u);
}

TEST(Clean, UrlsSurviveIntact) {
  auto r = run("See http://example.com/a.b.html now.Then www.test.org too.");
  EXPECT_NE(r.output.find("http://example.com/a.b.html"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("www.test.org"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("now. Then"), std::string::npos) << r.output;
}

TEST(Clean, TableOfContentsLinesRemoved) {
  auto r = run("Contents\nIntroduction ........ 1\nMethods ......... 12\nBody text.");
  EXPECT_EQ(r.output.find("........"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("Body text."), std::string::npos);
  EXPECT_EQ(r.count("toc_lines"), 2u);
  EXPECT_EQ(run("wait ..... what").output, "wait ..... what");
}

TEST(Clean, Idempotent) {
  for (std::string_view t :
       {"end.Next one.", "a\nb\nc.", "<p>x</p>\ny.Z", "Intro ...... 3\nok.Fine",
        "see www.a.com.Then more.\nand on"}) {
    for (DocType d : {DocType::kPlain, DocType::kPdf}) {
      auto once = run(t, d).output;
      EXPECT_EQ(run(once, d).output, once) << t;
    }
  }
}

TEST(Clean, RejectsReservedCodepoints) {
  EXPECT_THROW(run("a\xEE\x80\x82"), SegmenterError);
}

TEST(Clean, NoSpaceRepairForUnspacedScripts) {
  EXPECT_EQ(run("哦。好!", DocType::kPlain, "zh").output, "哦。好!");
}

}  // namespace
}  // namespace segtext
