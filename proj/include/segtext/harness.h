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

#ifndef SEGTEXT_HARNESS_H_
#define SEGTEXT_HARNESS_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "segtext/config.h"

namespace segtext {

struct GrsRule {
  int64_t id = 0;
  std::string description;
  std::string input;
  std::vector<std::string> expected;
};

using SegmentFn = std::function<std::vector<std::string>(std::string_view)>;

// One JSON object per line: {id, description, input, expected}. Throws
// SegmenterError(kMalformedFixture) naming the offending line.
std::vector<GrsRule> parse_grs(std::string_view jsonl,
                               std::string_view source = "<fixture>");
std::vector<GrsRule> load_grs(const std::filesystem::path& path);

struct RuleOutcome {
  int64_t id = 0;
  bool passed = false;
  std::vector<std::string> actual;
  std::vector<std::string> expected;
  std::string error;  // set when segmentation threw
};

struct GrsReport {
  size_t passed = 0;
  size_t total = 0;
  std::vector<RuleOutcome> outcomes;

  double accuracy() const {
    return total == 0 ? 0.0 : static_cast<double>(passed) / static_cast<double>(total);
  }
  std::vector<int64_t> failed_ids() const;
};

// A rule passes only on an exact match of the sentence list. Exceptions
// thrown by `segment` count as failures.
GrsReport run_grs(std::span<const GrsRule> rules, const SegmentFn& segment);
GrsReport run_grs(std::span<const GrsRule> rules, const SegmenterConfig& config);

// Splits after any of ? ! : ; . that precedes whitespace or the end.
std::vector<std::string> naive_segment(std::string_view text);

// One gold sentence per line; blank lines are skipped. Throws
// SegmenterError(kMalformedFixture) when the file cannot be read.
std::vector<std::string> load_corpus(const std::filesystem::path& path);

// Joins consecutive gold sentences in groups with single spaces, segments
// each group and returns the fraction of gold sentences recovered exactly.
double eval_corpus(std::span<const std::string> gold, const SegmentFn& segment,
                   size_t group_size = 10);

struct BenchReport {
  double median_ms = 0;
  size_t runs = 0;
  size_t sentences = 0;
  size_t chars = 0;
};

BenchReport bench(std::string_view text, const SegmentFn& segment,
                  size_t runs = 5);

// Deterministic novel-like English prose of about `words` words, wrapped at
// 70 columns with blank lines between paragraphs.
std::string synthetic_novel(size_t words, uint32_t seed = 1887);

}  // namespace segtext

#endif  // SEGTEXT_HARNESS_H_
