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

#ifndef SEGTEXT_RULE_H_
#define SEGTEXT_RULE_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace segtext {

// Rank ranges select the pipeline stage a rule runs in.
enum class Stage {
  kPreAbbreviation = 1,   // 100-199, whole text
  kPostAbbreviation = 2,  // 200-299, whole text
  kNumbers = 3,           // 300-399, whole text
  kPunctuation = 4,       // 400-499, whole text
  kWholeText = 5,         // 500-599, whole text
  kEllipsis = 6,          // 600-699, per segment
  kSegment = 7,           // 700-799, per segment after enclosures
  kSegmentLate = 8,       // 800-899, per segment
};

// Throws std::invalid_argument for ranks outside 100-899.
Stage stage_for_rank(int rank);

// Replacement templates:
//   $N          text of capture group N
//   {name}      the named placeholder
//   {break}     zero-width sentence break
//   {mask:a,b}  the whole match with each char hidden by placeholder a or b
//   \$ \{ \\    literals
struct Rule {
  std::string id;
  int rank = 0;
  std::string pattern;
  std::string replacement;
};

// Masked text plus the zero-width breaks inserted so far, as code point
// offsets into `text`.
struct MaskedText {
  std::u32string text;
  std::vector<size_t> breaks;
};

class CompiledRule;

class RuleGroup {
 public:
  RuleGroup();
  RuleGroup(std::string name, std::vector<Rule> rules);
  RuleGroup(RuleGroup&&) noexcept;
  RuleGroup& operator=(RuleGroup&&) noexcept;
  RuleGroup(const RuleGroup&);
  RuleGroup& operator=(const RuleGroup&);
  ~RuleGroup();

  const std::string& name() const { return name_; }
  const std::vector<Rule>& rules() const { return rules_; }

  // Same id replaces, otherwise appended. Pattern "-" removes the rule.
  RuleGroup merged(const std::vector<Rule>& overrides) const;

  // Applies rules of one stage in rank order. `offset` is added to recorded
  // break positions.
  void apply_stage(Stage stage, std::u32string& text, std::vector<size_t>* breaks,
                   size_t offset = 0) const;
  void apply_all(MaskedText& text) const;

 private:
  void compile();

  std::string name_;
  std::vector<Rule> rules_;
  std::vector<std::shared_ptr<const CompiledRule>> compiled_;
};

// Breaks rendered in-band as the break marker.
std::u32string apply_group(std::u32string_view text, const RuleGroup& group);

// id TAB rank TAB pattern TAB replacement, '#' comments. Throws
// std::invalid_argument naming the line.
std::vector<Rule> parse_rule_table(std::string_view tsv);

// Throws std::invalid_argument for constructs outside the supported subset
// (backreferences, recursion, conditionals).
void validate_pattern(std::string_view pattern);

// Characters one of which must occur in any match, or empty if unknown.
std::u32string trigger_chars(std::string_view pattern);

}  // namespace segtext

#endif  // SEGTEXT_RULE_H_
