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

#ifndef SEGTEXT_RULES_SPECIAL_H_
#define SEGTEXT_RULES_SPECIAL_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "segtext/rule.h"

namespace segtext {

enum class AbbreviationKind { kGeneral, kPrepositive, kNumber };

// kAlways masks a known abbreviation's period regardless of what follows.
enum class AbbreviationPolicy { kContextual, kAlways };

class AbbreviationSet {
 public:
  // Entries are stored lowercased. A prepositive or number entry wins over a
  // general one.
  void add(std::u32string_view entry, AbbreviationKind kind);
  std::optional<AbbreviationKind> classify(std::u32string_view word) const;
  size_t size() const { return entries_.size(); }

  AbbreviationPolicy policy = AbbreviationPolicy::kContextual;

 private:
  std::unordered_map<std::u32string, AbbreviationKind> entries_;
};

// One entry per line, '#' comments, "[general]" / "[prepositive]" /
// "[number]" switch the class of following entries.
AbbreviationSet parse_abbreviation_list(std::string_view text);

// One entry per line, '#' comments. Throws std::invalid_argument for an entry
// without '!'.
std::vector<std::u32string> parse_exclamation_list(std::string_view text);

void mask_abbreviations(std::u32string& text, const AbbreviationSet& set);

void mask_exclamation_words(std::u32string& text,
                            std::span<const std::u32string> words);

struct PairSpec {
  PairSpec() = default;
  PairSpec(std::u32string o, std::u32string c)
      : open(std::move(o)), close(std::move(c)) {}

  std::u32string open;
  std::u32string close;
  bool require_space_before_open = false;
  // A close char directly followed by an ASCII letter may be interior, as in
  // an apostrophe inside a quoted word.
  bool letter_continues = false;
  bool mask_apostrophe = true;
  // Skip the pair when the text holds a word with a leading apostrophe and no
  // apostrophe followed by whitespace.
  bool leading_apostrophe_guard = false;
  bool backslash_escapes = true;
  // Characters that may not appear inside, such as '(' for innermost parens.
  std::u32string exclude_inside;
  size_t min_interior = 0;
};

std::vector<PairSpec> default_pairs();

// Masks terminal punctuation between matched pairs, applied in list order.
// `terminals` extends the always-masked set.
void mask_enclosures(std::u32string& text, std::span<const PairSpec> pairs,
                     std::u32string_view terminals);

// Masks every terminal (and optionally apostrophes) in text[begin, end).
void mask_terminals(std::u32string& text, size_t begin, size_t end,
                    std::u32string_view terminals, bool mask_apostrophe);

struct ListOptions {
  bool roman_numerals = false;
};

// Detects list markers. Masks their periods and records a break before each
// item.
void mark_list_items(MaskedText& text, const ListOptions& options);

}  // namespace segtext

#endif  // SEGTEXT_RULES_SPECIAL_H_
