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

#include "segtext/config.h"
#include "segtext/error.h"

namespace segtext {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const SegmenterError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no SegmenterError thrown";
  return ErrorKind::kMalformedFixture;
}

TEST(MakeConfig, Defaults) {
  auto config = make_config("en", false, false, "plain");
  ASSERT_NE(config.profile, nullptr);
  EXPECT_EQ(config.profile->code, "en");
  EXPECT_EQ(config.doc_type, DocType::kPlain);
  EXPECT_FALSE(config.clean);
  EXPECT_FALSE(config.char_span);
}

TEST(MakeConfig, CleanWithCharSpanIsIncompatible) {
  EXPECT_EQ(kind_of([] { make_config("en", true, true, "plain"); }),
            ErrorKind::kIncompatibleOptions);
}

TEST(MakeConfig, UnknownLanguage) {
  EXPECT_EQ(kind_of([] { make_config("zz", false, false, "plain"); }),
            ErrorKind::kUnknownLanguage);
  EXPECT_EQ(kind_of([] { make_config("eng"); }), ErrorKind::kUnknownLanguage);
  EXPECT_EQ(kind_of([] { make_config(""); }), ErrorKind::kUnknownLanguage);
}

TEST(MakeConfig, LanguageCheckedBeforeOptions) {
  EXPECT_EQ(kind_of([] { make_config("zz", true, true, "plain"); }),
            ErrorKind::kUnknownLanguage);
}

TEST(MakeConfig, CodeIsCaseInsensitive) {
  EXPECT_EQ(make_config("EN").profile->code, "en");
}

TEST(MakeConfig, DocType) {
  EXPECT_EQ(make_config("en", true, false, "pdf").doc_type, DocType::kPdf);
  EXPECT_EQ(kind_of([] { make_config("en", false, false, "docx"); }),
            ErrorKind::kIncompatibleOptions);
  EXPECT_EQ(to_string(DocType::kPdf), "pdf");
  EXPECT_EQ(parse_doc_type("plain"), DocType::kPlain);
}

TEST(SegmenterError, CarriesKindAndDetail) {
  SegmenterError e(ErrorKind::kUnknownLanguage, "no profile for 'zz'");
  EXPECT_EQ(e.kind(), ErrorKind::kUnknownLanguage);
  EXPECT_EQ(e.detail(), "no profile for 'zz'");
  EXPECT_NE(std::string(e.what()).find("UnknownLanguage"), std::string::npos);
}

}  // namespace
}  // namespace segtext
