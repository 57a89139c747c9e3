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

#ifndef SEGTEXT_LANGUAGE_H_
#define SEGTEXT_LANGUAGE_H_

#include <filesystem>
#include <unordered_map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "segtext/rule.h"
#include "segtext/rules_special.h"

namespace segtext {

// Two lowercase ASCII letters. Construction lowercases and throws
// SegmenterError(kUnknownLanguage) for anything else.
class LanguageCode {
 public:
  explicit LanguageCode(std::string_view code);

  const std::string& str() const { return code_; }
  auto operator<=>(const LanguageCode&) const = default;

 private:
  std::string code_;
};

struct LanguageProfile {
  std::string code;
  std::string name;
  std::u32string terminals;
  bool boundary_requires_space = true;
  // Sentences may open with a quoted or bracketed span that ends them.
  bool leading_enclosures = false;
  RuleGroup common;
  RuleGroup standard;
  AbbreviationSet abbreviations;
  std::vector<std::u32string> exclamation_words;
  std::vector<PairSpec> pairs;
  std::vector<std::pair<char32_t, char32_t>> quote_styles;
  ListOptions lists;

  bool is_terminal(char32_t c) const {
    return terminals.find(c) != std::u32string::npos;
  }
};

// Raw file contents of one language directory. Only `profile` is required.
struct ProfileSource {
  std::string profile;        // profile.kv
  std::string abbreviations;  // abbreviations.txt
  std::string exclamations;   // exclamations.txt
  std::string rules;          // rules.tsv
};

// Layers the source over the shared base. Abbreviations and exclamation
// words of `base` are inherited unless the profile opts out. Throws
// std::invalid_argument for malformed data.
LanguageProfile build_profile(const ProfileSource& source,
                              const ProfileSource& base = {});

class LanguageRegistry {
 public:
  // Profiles compiled into the library.
  static const LanguageRegistry& builtin();
  // Reads <root>/base/ and <root>/<code>/ for every code listed in
  // <root>/index.txt. Throws std::invalid_argument without an index.
  static LanguageRegistry from_directory(const std::filesystem::path& root);

  // Replaces an existing profile with the same code, logging a warning.
  // Returns true when a profile was replaced.
  bool add(LanguageProfile profile);
  // Throws SegmenterError(kUnknownLanguage).
  std::shared_ptr<const LanguageProfile> lookup(std::string_view code) const;
  bool contains(std::string_view code) const;
  // Sorted.
  std::vector<std::string> codes() const;

 private:
  std::unordered_map<std::string, std::shared_ptr<const LanguageProfile>> profiles_;
};

ProfileSource read_profile_directory(const std::filesystem::path& dir);

}  // namespace segtext

#endif  // SEGTEXT_LANGUAGE_H_
