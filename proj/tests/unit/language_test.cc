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

#include <filesystem>
#include <set>
#include <stdexcept>

#include "segtext/config.h"
#include "segtext/error.h"
#include "segtext/harness.h"
#include "segtext/language.h"
#include "segtext/placeholder.h"
#include "segtext/processor.h"
#include "support/new_language.h"

namespace segtext {
namespace {

namespace fs = std::filesystem;

const std::string kEnProfile = "code = en\nname = English\nterminals = . ! ?\n";

TEST(Registry, ShippedLanguages) {
  const auto& reg = LanguageRegistry::builtin();
  auto codes = reg.codes();
  EXPECT_GE(codes.size(), 4u);
  EXPECT_TRUE(reg.contains("en"));
  EXPECT_TRUE(reg.lookup("hi")->is_terminal(U'।'));
  EXPECT_TRUE(reg.lookup("ar")->is_terminal(U'؟'));
  EXPECT_TRUE(reg.lookup("zh")->is_terminal(U'。'));
  EXPECT_FALSE(reg.lookup("zh")->boundary_requires_space);
  EXPECT_TRUE(reg.lookup("en")->boundary_requires_space);
}

TEST(Registry, UnknownCode) {
  try {
    LanguageRegistry::builtin().lookup("zz");
    FAIL();
  } catch (const SegmenterError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnknownLanguage);
  }
  EXPECT_FALSE(LanguageRegistry::builtin().contains("zz"));
}

TEST(Registry, ColonAndSemicolonAreNotEnglishTerminals) {
  auto en = LanguageRegistry::builtin().lookup("en");
  EXPECT_FALSE(en->is_terminal(U':'));
  EXPECT_FALSE(en->is_terminal(U';'));
}

TEST(Registry, ReplacementKeepsSize) {
  LanguageRegistry reg;
  EXPECT_FALSE(reg.add(build_profile({kEnProfile, "", "", ""})));
  auto replacement = build_profile({"code = en\nname = Other\nterminals = .\n", "", "", ""});
  EXPECT_TRUE(reg.add(replacement));
  EXPECT_TRUE(reg.add(replacement));
  EXPECT_EQ(reg.codes().size(), 1u);
  EXPECT_EQ(reg.lookup("en")->name, "Other");
}

TEST(Registry, RegisterThenLookup) {
  LanguageRegistry reg;
  reg.add(build_profile({"code = mr\nterminals = . ! ?\n", "", "", ""}));
  EXPECT_EQ(reg.lookup("MR")->code, "mr");
}

TEST(BuildProfile, Errors) {
  EXPECT_THROW(build_profile({"name = x\nterminals = .\n", "", "", ""}),
               std::invalid_argument);
  EXPECT_THROW(build_profile({"code = xx\n", "", "", ""}), std::invalid_argument);
  EXPECT_THROW(build_profile({"code = xx\nterminals = .\nbogus = 1\n", "", "", ""}),
               std::invalid_argument);
  EXPECT_THROW(build_profile({"code = xx\nterminals = @\n", "", "", ""}),
               std::invalid_argument);
  EXPECT_THROW(build_profile({"code = xx\nterminals = .\n", "", "", "r\t510\t(a)\\1\tb\n"}),
               std::invalid_argument);
  EXPECT_THROW(build_profile({"code = xx\nterminals = .\nabbreviation_policy = maybe\n",
                              "", "", ""}),
               std::invalid_argument);
}

TEST(BuildProfile, RuleTableOverridesAndDeletes) {
  auto p = build_profile({"code = xx\nterminals = .\n", "", "",
                          "inner_period\t530\t-\t-\nextra\t515\tQ\tq\n"});
  bool has_inner = false, has_extra = false;
  for (const auto& r : p.standard.rules()) {
    has_inner |= r.id == "inner_period";
    has_extra |= r.id == "extra";
  }
  EXPECT_FALSE(has_inner);
  EXPECT_TRUE(has_extra);
}

TEST(BuildProfile, InheritsBaseAbbreviations) {
  ProfileSource base{"", "[prepositive]\nmr\n", "Yum!\n", ""};
  auto inherits = build_profile({"code = xx\nterminals = .\n", "", "", ""}, base);
  EXPECT_EQ(inherits.abbreviations.classify(U"mr"), AbbreviationKind::kPrepositive);
  EXPECT_EQ(inherits.exclamation_words.size(), 1u);
  auto own = build_profile(
      {"code = xx\nterminals = .\ninherit_abbreviations = false\n", "zz\n", "", ""}, base);
  EXPECT_FALSE(own.abbreviations.classify(U"mr"));
  EXPECT_TRUE(own.abbreviations.classify(U"zz"));
}

TEST(BuildProfile, ShippedProfilesHaveEnclosedTerminals) {
  const auto& reg = LanguageRegistry::builtin();
  for (const auto& code : reg.codes()) {
    auto p = reg.lookup(code);
    EXPECT_FALSE(p->terminals.empty()) << code;
    for (char32_t t : p->terminals) {
      EXPECT_TRUE(PlaceholderRegistry::instance().enclosed(t)) << code;
    }
  }
}

TEST(FromDirectory, MatchesBuiltin) {
  auto reg = LanguageRegistry::from_directory(fs::path(SEGTEXT_SOURCE_DIR) / "languages");
  EXPECT_EQ(reg.codes(), LanguageRegistry::builtin().codes());
  auto config = make_config("en", false, false, "plain", reg);
  EXPECT_EQ(segment(config, "Mr. Smith left. He ran."),
            (std::vector<std::string>{"Mr. Smith left.", "He ran."}));
}

TEST(FromDirectory, NewLanguageIsDataOnly) {
  fs::path root = testing::write_language_tree(SEGTEXT_SOURCE_DIR);
  auto reg = LanguageRegistry::from_directory(root);
  ASSERT_TRUE(reg.contains("el"));
  auto config = make_config("el", false, false, "plain", reg);
  auto rules = load_grs(root / "el" / "grs.jsonl");
  auto report = run_grs(rules, config);
  for (const auto& o : report.outcomes) EXPECT_TRUE(o.passed) << "rule " << o.id;
  EXPECT_GE(report.accuracy(), 0.9);
  fs::remove_all(root);
}

TEST(FromDirectory, MissingIndex) {
  EXPECT_ANY_THROW(LanguageRegistry::from_directory("/nonexistent/segtext"));
}

}  // namespace
}  // namespace segtext
