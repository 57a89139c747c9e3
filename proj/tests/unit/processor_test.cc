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

#include <stdexcept>
#include <thread>

#include "segtext/error.h"
#include "segtext/language.h"
#include "segtext/processor.h"

namespace segtext {
namespace {

using Sentences = std::vector<std::string>;

Sentences seg(std::string_view text, std::string_view lang = "en") {
  return segment(make_config(lang), text);
}

// Outputs observed from the reference segmenter on the same inputs.
struct Observed {
  const char* lang;
  const char* input;
  Sentences expected;
};

const Observed kObserved[] = {
    {"en", "Hello world. My name is Jonas.", {"Hello world.", "My name is Jonas."}},
    {"en", "At 5 a.m. Mr. Smith went to the bank. He left at 6 P.M.",
     {"At 5 a.m.", "Mr. Smith went to the bank.", "He left at 6 P.M."}},
    {"en", "1. Apples 2. Oranges", {"1. Apples", "2. Oranges"}},
    {"en", "He scored 4. Then he left.", {"He scored 4.", "Then he left."}},
    {"en", "Mr. Smith left.", {"Mr. Smith left."}},
    {"en", "He got a Ph.D. Then he left.", {"He got a Ph.D.", "Then he left."}},
    {"en", "He works at Yahoo! in California.", {"He works at Yahoo! in California."}},
    {"en", "Stop! Now.", {"Stop!", "Now."}},
    {"en", "She said, \"Is it done? I hope so.\" and left.",
     {"She said, \"Is it done? I hope so.\" and left."}},
    {"en", "(See Fig. 2.) Next point.", {"(See Fig. 2.)", "Next point."}},
    {"en", "The disease spread.1 Treatment began.",
     {"The disease spread.1", "Treatment began."}},
    {"en", "It cost 3.14 dollars. Then it rose.", {"It cost 3.14 dollars.", "Then it rose."}},
    {"en", "Open file.txt now. It is small.", {"Open file.txt now.", "It is small."}},
    {"en", "I live in the U.S.A. It is big.", {"I live in the U.S.A.", "It is big."}},
    {"en", "Wait... What happened?", {"Wait...", "What happened?"}},
    {"en", "Really?! Yes.", {"Really?!", "Yes."}},
    {"en", "Visit www.example.com today. It helps.",
     {"Visit www.example.com today.", "It helps."}},
    {"en", "The temperature was 25.5 degrees. It was warm.",
     {"The temperature was 25.5 degrees.", "It was warm."}},
    {"hi", "सच्चाई यह है। इनमें से कुछ।", {"सच्चाई यह है।", "इनमें से कुछ।"}},
    {"zh", "哦。好!", {"哦。", "好!"}},
    {"ar", "هل أنت بخير؟ نعم.", {"هل أنت بخير؟", "نعم."}},
};

TEST(Segment, MatchesObservedReferenceOutputs) {
  for (const auto& c : kObserved) {
    EXPECT_EQ(seg(c.input, c.lang), c.expected) << c.input;
  }
}

TEST(Segment, EmptyAndBlank) {
  EXPECT_TRUE(seg("").empty());
  EXPECT_TRUE(seg(" \n\t ").empty());
}

TEST(Segment, RejectsReservedCodepoints) {
  try {
    seg("a\xEE\x80\x81 b.");  // U+E001
    FAIL();
  } catch (const SegmenterError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kReservedCodepointInInput);
  }
}

TEST(Segment, CleanRunsFirst) {
  auto config = make_config("en", true);
  EXPECT_EQ(segment(config, "end.Next one."), (Sentences{"end.", "Next one."}));
  auto pdf = make_config("en", true, false, "pdf");
  EXPECT_EQ(segment(pdf, "word wrap\ncontinues here."),
            Sentences{"word wrap continues here."});
}

TEST(Segment, ConcurrentCallsAgree) {
  Segmenter s("en");
  std::string text = "Dr. Who arrived at 5 p.m. sharp. \"Why?\" he asked. Fine...";
  auto expected = s.segment(text);
  std::vector<std::thread> threads;
  std::vector<Sentences> results(8);
  for (size_t i = 0; i < results.size(); ++i) {
    threads.emplace_back([&, i] {
      for (int k = 0; k < 50; ++k) results[i] = s.segment(text);
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& r : results) EXPECT_EQ(r, expected);
}

TEST(SegmentSpans, Examples) {
  auto config = make_config("en", false, true);
  EXPECT_EQ(segment_spans(config, "Hi. Bye."),
            (std::vector<TextSpan>{{"Hi.", 0, 3}, {"Bye.", 4, 8}}));
  EXPECT_EQ(segment_spans(config, "One sentence"),
            (std::vector<TextSpan>{{"One sentence", 0, 12}}));
  EXPECT_EQ(segment_spans(config, "  Hi."), (std::vector<TextSpan>{{"Hi.", 2, 5}}));
}

TEST(SegmentSpans, OffsetsAreCodePoints) {
  auto config = make_config("en", false, true);
  EXPECT_EQ(segment_spans(config, "Zoë ran. Él vino."),
            (std::vector<TextSpan>{{"Zoë ran.", 0, 8}, {"Él vino.", 9, 17}}));
}

TEST(SegmentSpans, RejectsClean) {
  auto config = make_config("en", true, false);
  EXPECT_THROW(segment_spans(config, "Hi."), SegmenterError);
}

TEST(MapSpans, Examples) {
  Sentences two{"ab.", "cd."};
  EXPECT_EQ(map_spans("ab. cd.", two),
            (std::vector<TextSpan>{{"ab.", 0, 3}, {"cd.", 4, 7}}));
  Sentences one{"x"};
  EXPECT_EQ(map_spans("x", one), (std::vector<TextSpan>{{"x", 0, 1}}));
  Sentences repeated{"Hi.", "Hi."};
  EXPECT_EQ(map_spans("Hi. Hi.", repeated),
            (std::vector<TextSpan>{{"Hi.", 0, 3}, {"Hi.", 4, 7}}));
  Sentences missing{"zz"};
  EXPECT_THROW(map_spans("ab", missing), std::logic_error);
}

std::vector<std::u32string> split(std::u32string text, std::string_view lang = "en") {
  return split_on_boundaries(MaskedText{std::move(text), {}},
                             *LanguageRegistry::builtin().lookup(lang));
}

TEST(SplitOnBoundaries, Examples) {
  EXPECT_EQ(split(U"A. B."), (std::vector<std::u32string>{U"A.", U"B."}));
  EXPECT_EQ(split(U"A\uE001 B."), (std::vector<std::u32string>{U"A\uE001 B."}));
  EXPECT_EQ(split(U"哦。好!", "zh"), (std::vector<std::u32string>{U"哦。", U"好!"}));
}

TEST(SplitOnBoundaries, WesternNeedsSpace) {
  EXPECT_EQ(split(U"a.b c."), (std::vector<std::u32string>{U"a.b c."}));
  EXPECT_EQ(split(U"Go!! Now"), (std::vector<std::u32string>{U"Go!!", U"Now"}));
}

TEST(SplitOnBoundaries, RecordedBreaksCut) {
  auto profile = LanguageRegistry::builtin().lookup("en");
  auto pieces = split_on_boundaries(MaskedText{U"one two", {3}}, *profile);
  EXPECT_EQ(pieces, (std::vector<std::u32string>{U"one", U"two"}));
}

TEST(BoundaryRanges, CoverTheText) {
  auto profile = LanguageRegistry::builtin().lookup("en");
  MaskedText m = mask_text(U"  Hi. There!  Bye", *profile);
  auto ranges = boundary_ranges(m, *profile);
  ASSERT_FALSE(ranges.empty());
  EXPECT_EQ(ranges.front().first, 0u);
  EXPECT_EQ(ranges.back().second, m.text.size());
  for (size_t i = 1; i < ranges.size(); ++i) {
    EXPECT_EQ(ranges[i].first, ranges[i - 1].second);
  }
}

}  // namespace
}  // namespace segtext
