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

#ifndef SEGTEXT_PROCESSOR_H_
#define SEGTEXT_PROCESSOR_H_

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "segtext/config.h"
#include "segtext/rule.h"

namespace segtext {

// A sentence with its code point offsets in the original text, end exclusive.
struct TextSpan {
  std::string sentence;
  size_t start = 0;
  size_t end = 0;

  bool operator==(const TextSpan&) const = default;
};

// Runs every masking stage over the text.
MaskedText mask_text(std::u32string_view text, const LanguageProfile& profile);

// Half-open code point ranges of the pieces between boundaries. Ranges are
// contiguous and cover the text; some may be blank.
std::vector<std::pair<size_t, size_t>> boundary_ranges(
    const MaskedText& masked, const LanguageProfile& profile);

// Trimmed non-empty pieces, still masked.
std::vector<std::u32string> split_on_boundaries(const MaskedText& masked,
                                                const LanguageProfile& profile);

// Greedy left-to-right search for each sentence, starting where the previous
// one ended. Throws std::logic_error when a sentence cannot be found.
std::vector<TextSpan> map_spans(std::string_view original,
                                std::span<const std::string> sentences);

std::vector<std::string> segment(const SegmenterConfig& config,
                                 std::string_view text);

// Throws SegmenterError(kIncompatibleOptions) when config.clean is set.
std::vector<TextSpan> segment_spans(const SegmenterConfig& config,
                                    std::string_view text);

class Segmenter {
 public:
  explicit Segmenter(SegmenterConfig config) : config_(std::move(config)) {}
  explicit Segmenter(std::string_view language)
      : config_(make_config(language)) {}

  std::vector<std::string> segment(std::string_view text) const {
    return segtext::segment(config_, text);
  }
  std::vector<TextSpan> segment_spans(std::string_view text) const {
    return segtext::segment_spans(config_, text);
  }
  const SegmenterConfig& config() const { return config_; }

 private:
  SegmenterConfig config_;
};

}  // namespace segtext

#endif  // SEGTEXT_PROCESSOR_H_
