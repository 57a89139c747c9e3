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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.h"
#include "json.hpp"

namespace segtext::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, std::string_view input = "") {
  std::istringstream in{std::string(input)};
  std::ostringstream out, err;
  int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string en_fixture() {
  return (fs::path(SEGTEXT_SOURCE_DIR) / "fixtures" / "grs" / "en.jsonl").string();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(CliSegment, Lines) {
  auto r = invoke({"segment", "--lang", "en"}, "Hi. Bye.");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Hi.\nBye.\n");
}

TEST(CliSegment, JsonlSpans) {
  auto r = invoke({"segment", "--lang", "en", "--char-span", "--format", "jsonl"},
                  "Hi. Bye.");
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 2u);
  auto a = nlohmann::json::parse(rows[0]);
  auto b = nlohmann::json::parse(rows[1]);
  EXPECT_EQ(a, (nlohmann::json{{"text", "Hi."}, {"start", 0}, {"end", 3}}));
  EXPECT_EQ(b, (nlohmann::json{{"text", "Bye."}, {"start", 4}, {"end", 8}}));
}

TEST(CliSegment, JsonlWithoutSpans) {
  auto r = invoke({"segment", "--lang", "en", "--format", "jsonl"}, "Hi. Bye.");
  auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(nlohmann::json::parse(rows[0]), (nlohmann::json{{"text", "Hi."}}));
}

TEST(CliSegment, CleanWithCharSpanIsUsageError) {
  auto r = invoke({"segment", "--lang", "en", "--clean", "--char-span"}, "Hi.");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("IncompatibleOptions"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("char_span"), std::string::npos) << r.err;
}

TEST(CliSegment, Errors) {
  EXPECT_EQ(invoke({"segment", "--lang", "en", "--bogus"}).code, 2);
  EXPECT_EQ(invoke({"segment", "--lang", "zz"}, "x").code, 2);
  EXPECT_EQ(invoke({"segment", "--lang", "en", "--doc-type", "docx"}).code, 2);
  EXPECT_EQ(invoke({"segment", "--lang", "en", "/nonexistent/in.txt"}).code, 1);
  EXPECT_EQ(invoke({"segment", "--lang", "en"}, "bad \xEE\x80\x81 input").code, 1);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
}

TEST(CliSegment, ReadsFile) {
  fs::path p = fs::temp_directory_path() / "segtext-cli-input.txt";
  std::ofstream(p) << "One. Two.";
  auto r = invoke({"segment", "--lang", "en", p.string()});
  EXPECT_EQ(r.out, "One.\nTwo.\n");
  fs::remove(p);
}

TEST(CliSegment, LanguageFromEnvironment) {
  ::setenv("SEGTEXT_LANG", "zh", 1);
  auto r = invoke({"segment"}, "哦。好!");
  ::unsetenv("SEGTEXT_LANG");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "哦。\n好!\n");
  EXPECT_EQ(invoke({"segment"}, "x").code, 2);
}

TEST(CliClean, PrintsCleanedText) {
  auto r = invoke({"clean", "--lang", "en"}, "end.Next one.");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "end. Next one.");
  auto pdf = invoke({"clean", "--lang", "en", "--doc-type", "pdf"},
                    "word wrap\ncontinues here.");
  EXPECT_EQ(pdf.out, "word wrap continues here.");
}

TEST(CliGrs, ThresholdSemantics) {
  auto ok = invoke({"grs", "--lang", "en", "--fixture", en_fixture(), "--min-accuracy", "0.97"});
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_NE(ok.out.find("97.92%"), std::string::npos) << ok.out;
  auto strict = invoke({"grs", "--lang", "en", "--fixture", en_fixture(), "--min-accuracy", "1.0"});
  EXPECT_EQ(strict.code, 1);
  EXPECT_NE(strict.out.find("FAIL"), std::string::npos);
}

TEST(CliGrs, BaselinePrintsTwoRows) {
  auto r = invoke({"grs", "--lang", "en", "--fixture", en_fixture(), "--baseline"});
  size_t rows = 0;
  for (const auto& line : lines(r.out)) {
    if (line.starts_with("pipeline") || line.starts_with("baseline")) ++rows;
  }
  EXPECT_EQ(rows, 2u);
}

TEST(CliGrs, JsonFormatIsLineStructured) {
  auto r = invoke({"grs", "--lang", "en", "--fixture", en_fixture(), "--format", "json",
                   "--baseline"});
  auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 50u);
  for (const auto& row : rows) EXPECT_NO_THROW(nlohmann::json::parse(row)) << row;
  auto summary = nlohmann::json::parse(rows[48]);
  EXPECT_EQ(summary["system"], "pipeline");
  EXPECT_EQ(summary["accuracy"], "97.92");
}

TEST(CliGrs, MalformedFixture) {
  fs::path p = fs::temp_directory_path() / "segtext-bad.jsonl";
  std::ofstream(p) << "{not json\n";
  EXPECT_EQ(invoke({"grs", "--lang", "en", "--fixture", p.string()}).code, 2);
  fs::remove(p);
  EXPECT_EQ(invoke({"grs", "--lang", "en", "--fixture", "/nonexistent.jsonl"}).code, 1);
  EXPECT_EQ(invoke({"grs", "--lang", "en", "--min-accuracy", "1.5"}).code, 2);
}

TEST(CliBench, Contract) {
  auto r = invoke({"bench", "--lang", "en", "--reps", "1", "--words", "500"});
  EXPECT_EQ(r.code, 0) << r.err;
  for (const char* field : {"median_ms", "runs", "sentences", "chars"}) {
    EXPECT_NE(r.out.find(field), std::string::npos) << field;
  }
  EXPECT_EQ(invoke({"bench", "--lang", "en", "--reps", "0"}).code, 2);
  EXPECT_EQ(invoke({"bench", "--lang", "en", "--file", "/nonexistent.txt"}).code, 1);
  auto json = invoke({"bench", "--lang", "en", "--reps", "1", "--words", "200",
                      "--format", "json"});
  auto j = nlohmann::json::parse(json.out);
  EXPECT_EQ(j["runs"], 1);
}

TEST(Cli, Help) {
  auto r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("segment"), std::string::npos);
}

}  // namespace
}  // namespace segtext::cli
