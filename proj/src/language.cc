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

#include "segtext/language.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "embedded_languages.h"
#include "segtext/error.h"
#include "segtext/placeholder.h"
#include "segtext/rules_core.h"
#include "segtext/unicode.h"

namespace segtext {

LanguageCode::LanguageCode(std::string_view code) {
  std::string lowered;
  for (char c : unicode::trim(code)) {
    lowered.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c + 32) : c);
  }
  bool ok = lowered.size() == 2;
  for (char c : lowered) ok = ok && c >= 'a' && c <= 'z';
  if (!ok) {
    throw SegmenterError(ErrorKind::kUnknownLanguage,
                         "malformed language code '" + std::string(code) + "'");
  }
  code_ = std::move(lowered);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw std::invalid_argument("profile key '" + std::string(key) +
                              "' expects true or false");
}

char32_t single_char(std::string_view token) {
  std::u32string u = unicode::decode_utf8(token);
  if (u.size() != 1) {
    throw std::invalid_argument("expected a single character, got '" +
                                std::string(token) + "'");
  }
  return u[0];
}

PairSpec parse_pair(std::string_view value) {
  auto tokens = split_ws(value);
  if (tokens.size() < 2) {
    throw std::invalid_argument("pair needs open and close: " + std::string(value));
  }
  PairSpec spec{unicode::decode_utf8(tokens[0]), unicode::decode_utf8(tokens[1])};
  for (size_t k = 2; k < tokens.size(); ++k) {
    std::string_view flag = tokens[k];
    if (flag == "space_before") {
      spec.require_space_before_open = true;
    } else if (flag == "letter_continues") {
      spec.letter_continues = true;
    } else if (flag == "keep_apostrophe") {
      spec.mask_apostrophe = false;
    } else if (flag == "apostrophe_guard") {
      spec.leading_apostrophe_guard = true;
    } else if (flag == "no_escapes") {
      spec.backslash_escapes = false;
    } else if (flag.starts_with("exclude=")) {
      spec.exclude_inside = unicode::decode_utf8(flag.substr(8));
    } else if (flag.starts_with("min_interior=")) {
      auto num = flag.substr(13);
      auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(),
                                     spec.min_interior);
      if (ec != std::errc()) throw std::invalid_argument("bad min_interior");
    } else {
      throw std::invalid_argument("unknown pair flag '" + std::string(flag) + "'");
    }
  }
  return spec;
}

}  // namespace

LanguageProfile build_profile(const ProfileSource& source,
                              const ProfileSource& base) {
  LanguageProfile p;
  bool inherit_abbreviations = true;
  bool inherit_exclamations = true;
  bool default_pairs_on = true;
  std::vector<PairSpec> extra_pairs;
  std::vector<std::pair<char32_t, char32_t>> quotes;
  std::string policy = "contextual";

  std::istringstream in(source.profile);
  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = unicode::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("profile line " + std::to_string(line_no) +
                                  ": expected key = value");
    }
    std::string_view key = unicode::trim(line.substr(0, eq));
    std::string_view value = unicode::trim(line.substr(eq + 1));
    if (key == "code") {
      p.code = LanguageCode(value).str();
    } else if (key == "name") {
      p.name = std::string(value);
    } else if (key == "terminals") {
      for (auto t : split_ws(value)) p.terminals.push_back(single_char(t));
    } else if (key == "boundary_requires_space") {
      p.boundary_requires_space = parse_bool(key, value);
    } else if (key == "leading_enclosures") {
      p.leading_enclosures = parse_bool(key, value);
    } else if (key == "default_pairs") {
      default_pairs_on = parse_bool(key, value);
    } else if (key == "pair") {
      extra_pairs.push_back(parse_pair(value));
    } else if (key == "quote") {
      auto tokens = split_ws(value);
      if (tokens.size() != 2) throw std::invalid_argument("quote needs open and close");
      quotes.emplace_back(single_char(tokens[0]), single_char(tokens[1]));
    } else if (key == "roman_numeral_lists") {
      p.lists.roman_numerals = parse_bool(key, value);
    } else if (key == "inherit_abbreviations") {
      inherit_abbreviations = parse_bool(key, value);
    } else if (key == "inherit_exclamations") {
      inherit_exclamations = parse_bool(key, value);
    } else if (key == "abbreviation_policy") {
      policy = std::string(value);
    } else {
      throw std::invalid_argument("profile line " + std::to_string(line_no) +
                                  ": unknown key '" + std::string(key) + "'");
    }
  }
  if (p.code.empty()) throw std::invalid_argument("profile without code");
  if (p.terminals.empty()) {
    throw std::invalid_argument("profile " + p.code + " declares no terminals");
  }
  for (char32_t t : p.terminals) {
    if (!PlaceholderRegistry::instance().enclosed(t)) {
      throw std::invalid_argument("profile " + p.code + ": terminal U+" +
                                  std::to_string(static_cast<uint32_t>(t)) +
                                  " has no reserved placeholder");
    }
  }

  if (default_pairs_on) p.pairs = default_pairs();
  p.pairs.insert(p.pairs.end(), extra_pairs.begin(), extra_pairs.end());
  p.quote_styles = quotes.empty()
                       ? std::vector<std::pair<char32_t, char32_t>>{
                             {U'"', U'"'}, {U'\'', U'\''}, {U'“', U'”'}}
                       : quotes;

  p.abbreviations = parse_abbreviation_list(
      (inherit_abbreviations ? base.abbreviations + "\n[general]\n" : "") +
      source.abbreviations);
  if (policy == "always") {
    p.abbreviations.policy = AbbreviationPolicy::kAlways;
  } else if (policy != "contextual") {
    throw std::invalid_argument("unknown abbreviation_policy '" + policy + "'");
  }
  p.exclamation_words = parse_exclamation_list(
      (inherit_exclamations ? base.exclamations + "\n" : "") +
      source.exclamations);

  RuleGroup common("common", common_rules());
  RuleGroup standard("standard", standard_rules());
  std::vector<Rule> common_overrides, standard_overrides;
  for (auto& r : parse_rule_table(source.rules)) {
    auto has = [&](const RuleGroup& g) {
      for (const auto& x : g.rules()) {
        if (x.id == r.id) return true;
      }
      return false;
    };
    bool to_standard = has(standard) ||
                       (!has(common) && r.rank >= 500 && r.rank < 800);
    (to_standard ? standard_overrides : common_overrides).push_back(r);
  }
  p.common = common.merged(common_overrides);
  p.standard = standard.merged(standard_overrides);
  return p;
}

bool LanguageRegistry::add(LanguageProfile profile) {
  std::string code = profile.code;
  bool replaced = profiles_.count(code) > 0;
  if (replaced) {
    std::clog << "segtext: warning: language '" << code
              << "' registered twice, keeping the later profile\n";
  }
  profiles_[code] = std::make_shared<const LanguageProfile>(std::move(profile));
  return replaced;
}

std::shared_ptr<const LanguageProfile> LanguageRegistry::lookup(
    std::string_view code) const {
  LanguageCode parsed(code);
  auto it = profiles_.find(parsed.str());
  if (it == profiles_.end()) {
    throw SegmenterError(ErrorKind::kUnknownLanguage,
                         "no profile for '" + parsed.str() + "'");
  }
  return it->second;
}

bool LanguageRegistry::contains(std::string_view code) const {
  try {
    return profiles_.count(LanguageCode(code).str()) > 0;
  } catch (const SegmenterError&) {
    return false;
  }
}

std::vector<std::string> LanguageRegistry::codes() const {
  std::vector<std::string> out;
  for (const auto& [code, _] : profiles_) out.push_back(code);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<std::string> index_codes(std::string_view index) {
  std::vector<std::string> out;
  std::istringstream in{std::string(index)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view t = unicode::trim(line);
    if (!t.empty() && t[0] != '#') out.emplace_back(t);
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

ProfileSource read_profile_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::exists(dir / "profile.kv")) {
    throw std::invalid_argument("missing " + (dir / "profile.kv").string());
  }
  return ProfileSource{read_file(dir / "profile.kv"),
                       read_file(dir / "abbreviations.txt"),
                       read_file(dir / "exclamations.txt"),
                       read_file(dir / "rules.tsv")};
}

const LanguageRegistry& LanguageRegistry::builtin() {
  static const LanguageRegistry registry = [] {
    LanguageRegistry r;
    auto files = internal::embedded_language_files();
    auto find = [&](const std::string& path) -> std::string {
      for (const auto& f : files) {
        if (f.path == path) return std::string(f.contents);
      }
      return {};
    };
    ProfileSource base{{}, find("base/abbreviations.txt"),
                       find("base/exclamations.txt"), {}};
    for (const auto& code : index_codes(find("index.txt"))) {
      r.add(build_profile({find(code + "/profile.kv"),
                           find(code + "/abbreviations.txt"),
                           find(code + "/exclamations.txt"),
                           find(code + "/rules.tsv")},
                          base));
    }
    return r;
  }();
  return registry;
}

LanguageRegistry LanguageRegistry::from_directory(
    const std::filesystem::path& root) {
  if (!std::filesystem::is_regular_file(root / "index.txt")) {
    throw std::invalid_argument("no index.txt under " + root.string());
  }
  LanguageRegistry r;
  ProfileSource base{{}, read_file(root / "base" / "abbreviations.txt"),
                     read_file(root / "base" / "exclamations.txt"), {}};
  for (const auto& code : index_codes(read_file(root / "index.txt"))) {
    r.add(build_profile(read_profile_directory(root / code), base));
  }
  return r;
}

}  // namespace segtext
