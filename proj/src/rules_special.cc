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

#include "segtext/rules_special.h"

#include <algorithm>
#include <boost/regex/icu.hpp>
#include <stdexcept>

#include "segtext/placeholder.h"
#include "segtext/unicode.h"

namespace segtext {
namespace {

using unicode::is_space;

bool is_ascii_alpha(char32_t c) {
  return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z');
}

bool is_opener(char32_t c) {
  return c == U'(' || c == U'[' || c == U'{' || c == U'"' || c == U'\'' ||
         c == U'“' || c == U'‘' || c == U'«';
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    size_t nl = text.find('\n');
    out.push_back(unicode::trim(text.substr(0, nl)));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

char32_t placeholder(std::string_view name) {
  return *PlaceholderRegistry::instance().find(name);
}

}  // namespace

void AbbreviationSet::add(std::u32string_view entry, AbbreviationKind kind) {
  std::u32string key = unicode::to_lower(entry);
  auto [it, inserted] = entries_.emplace(key, kind);
  if (!inserted && kind != AbbreviationKind::kGeneral) it->second = kind;
}

std::optional<AbbreviationKind> AbbreviationSet::classify(
    std::u32string_view word) const {
  auto it = entries_.find(unicode::to_lower(word));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

AbbreviationSet parse_abbreviation_list(std::string_view text) {
  AbbreviationSet set;
  AbbreviationKind kind = AbbreviationKind::kGeneral;
  for (auto line : lines_of(text)) {
    if (line.empty() || line[0] == '#') continue;
    if (line == "[general]") {
      kind = AbbreviationKind::kGeneral;
    } else if (line == "[prepositive]") {
      kind = AbbreviationKind::kPrepositive;
    } else if (line == "[number]") {
      kind = AbbreviationKind::kNumber;
    } else {
      set.add(unicode::decode_utf8(line), kind);
    }
  }
  return set;
}

std::vector<std::u32string> parse_exclamation_list(std::string_view text) {
  std::vector<std::u32string> words;
  for (auto line : lines_of(text)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.find('!') == std::string_view::npos) {
      throw std::invalid_argument("exclamation word without '!': " +
                                  std::string(line));
    }
    words.push_back(unicode::decode_utf8(line));
  }
  return words;
}

void mask_abbreviations(std::u32string& text, const AbbreviationSet& set) {
  const char32_t mask = placeholder("abbreviation_period");
  const size_t n = text.size();
  for (size_t p = 0; p < n; ++p) {
    if (text[p] != U'.') continue;
    size_t s = p;
    while (s > 0 && !is_space(text[s - 1])) --s;
    while (s < p && is_opener(text[s])) ++s;
    if (s == p) continue;
    auto kind = set.classify(
        restore_placeholders(std::u32string_view(text).substr(s, p - s)));
    if (!kind) continue;
    if (set.policy == AbbreviationPolicy::kAlways) {
      text[p] = mask;
      continue;
    }
    auto at = [&](size_t i) -> char32_t { return i < n ? text[i] : 0; };
    char32_t next = at(p + 1);
    bool hit = false;
    switch (*kind) {
      case AbbreviationKind::kPrepositive:
        hit = is_space(next) || (next == U':' && unicode::is_digit(at(p + 2)));
        break;
      case AbbreviationKind::kNumber: {
        if (!is_space(next)) break;
        if (unicode::is_digit(at(p + 2))) {
          hit = true;
          break;
        }
        size_t k = p + 1;
        while (k < n && is_space(text[k])) ++k;
        hit = at(k) == U'(';
        break;
      }
      case AbbreviationKind::kGeneral: {
        if (next == U'.' || next == U':' || next == U'-' || next == U'?' ||
            next == U',') {
          hit = true;
          break;
        }
        if (!is_space(next)) break;
        char32_t c = at(p + 2);
        if (unicode::is_lower(c) || unicode::is_digit(c) || c == U'(') {
          hit = true;
        } else if (c == U'I') {
          std::u32string_view rest = std::u32string_view(text).substr(p + 2);
          hit = is_space(at(p + 3)) || rest.starts_with(U"I'm") ||
                rest.starts_with(U"I'll");
        }
        break;
      }
    }
    if (hit) text[p] = mask;
  }
}

void mask_exclamation_words(std::u32string& text,
                            std::span<const std::u32string> words) {
  const char32_t mask = placeholder("word_exclamation");
  for (const auto& w : words) {
    size_t pos = 0;
    while ((pos = text.find(w, pos)) != std::u32string::npos) {
      for (size_t k = pos; k < pos + w.size(); ++k) {
        if (text[k] == U'!') {
          text[k] = mask;
        } else if (auto e = PlaceholderRegistry::instance().enclosed(text[k]);
                   e && (text[k] == U'.' || text[k] == U'?')) {
          text[k] = *e;
        }
      }
      pos += w.size();
    }
  }
}

std::vector<PairSpec> default_pairs() {
  std::vector<PairSpec> pairs;
  PairSpec single{U"'", U"'"};
  single.require_space_before_open = true;
  single.letter_continues = true;
  single.mask_apostrophe = false;
  single.leading_apostrophe_guard = true;
  single.backslash_escapes = false;
  pairs.push_back(single);
  PairSpec slanted_single{U"‘", U"’"};
  slanted_single.require_space_before_open = true;
  slanted_single.letter_continues = true;
  slanted_single.backslash_escapes = false;
  pairs.push_back(slanted_single);
  pairs.push_back({U"\"", U"\""});
  pairs.push_back({U"[", U"]"});
  PairSpec parens{U"(", U")"};
  parens.exclude_inside = U"(";
  pairs.push_back(parens);
  pairs.push_back({U"«", U"»"});
  PairSpec dashes{U"--", U"--"};
  dashes.exclude_inside = U"-";
  dashes.backslash_escapes = false;
  pairs.push_back(dashes);
  pairs.push_back({U"“", U"”"});
  return pairs;
}

void mask_terminals(std::u32string& text, size_t begin, size_t end,
                    std::u32string_view terminals, bool mask_apostrophe) {
  static constexpr std::u32string_view kAlways = U".!?。．！？";
  const auto& registry = PlaceholderRegistry::instance();
  for (size_t i = begin; i < end; ++i) {
    char32_t c = text[i];
    bool wanted = c == U'\'' ? mask_apostrophe
                             : kAlways.find(c) != std::u32string_view::npos ||
                                   terminals.find(c) != std::u32string_view::npos;
    if (!wanted) continue;
    if (auto e = registry.enclosed(c)) text[i] = *e;
  }
}

namespace {

bool apostrophe_guard(const std::u32string& text) {
  const size_t n = text.size();
  for (size_t i = 0; i + 1 < n; ++i) {
    if (text[i] == U'\'' && is_space(text[i + 1])) return false;
  }
  for (size_t i = 1; i < n; ++i) {
    if (text[i] != U'\'' || !is_space(text[i - 1])) continue;
    size_t j = text.find(U'\'', i + 1);
    if (j != std::u32string::npos && j + 1 < n) return true;
  }
  return false;
}

}  // namespace

void mask_enclosures(std::u32string& text, std::span<const PairSpec> pairs,
                     std::u32string_view terminals) {
  const size_t n = text.size();
  for (const auto& spec : pairs) {
    if (text.find(spec.open) == std::u32string::npos) continue;
    if (spec.leading_apostrophe_guard && apostrophe_guard(text)) continue;
    size_t i = 0;
    for (;;) {
      size_t open = text.find(spec.open, i);
      if (open == std::u32string::npos) break;
      if (spec.require_space_before_open && (open == 0 || !is_space(text[open - 1]))) {
        i = open + 1;
        continue;
      }
      size_t j = open + spec.open.size();
      size_t close = std::u32string::npos;
      size_t letter_close = std::u32string::npos;
      bool reached_end = true;
      while (j < n) {
        if (spec.backslash_escapes && text[j] == U'\\') {
          j += 2;
          continue;
        }
        if (text.compare(j, spec.close.size(), spec.close) == 0) {
          size_t after = j + spec.close.size();
          if (spec.letter_continues && after < n && is_ascii_alpha(text[after])) {
            letter_close = j;
            j = after;
            continue;
          }
          close = j;
          reached_end = false;
          break;
        }
        if (spec.exclude_inside.find(text[j]) != std::u32string::npos) {
          reached_end = false;
          break;
        }
        ++j;
      }
      if (close == std::u32string::npos) close = letter_close;
      size_t interior = open + spec.open.size();
      if (close == std::u32string::npos || close - interior < spec.min_interior) {
        if (reached_end && letter_close == std::u32string::npos) break;
        i = open + 1;
        continue;
      }
      mask_terminals(text, open, close + spec.close.size(), terminals,
                     spec.mask_apostrophe);
      i = close + spec.close.size();
    }
  }
}

namespace {

// Temporary in-band markers used while lists are detected.
constexpr char32_t kNumberedMark = 0xE07D;
constexpr char32_t kParenMark = 0xE07C;

const std::vector<std::u32string>& latin_alphabet() {
  static const std::vector<std::u32string> v = [] {
    std::vector<std::u32string> out;
    for (char32_t c = U'a'; c <= U'z'; ++c) out.emplace_back(1, c);
    return out;
  }();
  return v;
}

const std::vector<std::u32string>& roman_alphabet() {
  static const std::vector<std::u32string> v = {
      U"i",   U"ii",   U"iii",   U"iv", U"v",   U"vi",   U"vii",
      U"viii", U"ix",  U"x",     U"xi", U"xii", U"xiii", U"xiv",
      U"x",   U"xi",   U"xii",   U"xiii", U"xv", U"xvi", U"xvii",
      U"xviii", U"xix", U"xx"};
  return v;
}

bool is_lower_ascii(char32_t c) { return c >= U'a' && c <= U'z'; }

bool boundary_before(const std::u32string& t, size_t i) {
  return i == 0 || is_space(t[i - 1]);
}

long index_of(const std::vector<std::u32string>& alphabet,
              const std::u32string& item) {
  auto it = std::find(alphabet.begin(), alphabet.end(), item);
  return it == alphabet.end() ? -1 : static_cast<long>(it - alphabet.begin());
}

// Tokens of lowercase ASCII letters starting at a word boundary and followed
// by `follow`. With `paren`, a '(' before the token also counts.
std::vector<std::u32string> find_letter_items(const std::u32string& t,
                                              char32_t follow, bool paren,
                                              bool single) {
  std::vector<std::u32string> out;
  const size_t n = t.size();
  size_t i = 0;
  while (i < n) {
    if (!is_lower_ascii(t[i]) ||
        !(boundary_before(t, i) || (paren && t[i - 1] == U'('))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < n && is_lower_ascii(t[j])) ++j;
    if (single) {
      if (j == i + 1 && j < n && t[j] == follow) out.push_back(t.substr(i, 1));
      i = j;
      continue;
    }
    if (j < n && t[j] == follow) out.push_back(t.substr(i, j - i));
    i = j;
  }
  return out;
}

void replace_letter_item(std::u32string& t, const std::u32string& a, bool parens) {
  const char32_t period_mask = placeholder("list_period");
  const char32_t paren_mask = placeholder("numeral_paren_open");
  std::u32string out;
  out.reserve(t.size() + 8);
  const size_t n = t.size();
  size_t i = 0;
  while (i < n) {
    bool at_word = is_ascii_alpha(t[i]) && boundary_before(t, i);
    if (!parens) {
      if (at_word && t.compare(i, a.size(), a) == 0 && i + a.size() < n &&
          t[i + a.size()] == U'.' && a.size() == 1) {
        out.push_back(kBreakMarker);
        out += a;
        out.push_back(period_mask);
        i += a.size() + 1;
        continue;
      }
    } else {
      if (t[i] == U'(' && t.compare(i + 1, a.size(), a) == 0) {
        size_t j = i + 1;
        while (j < n && is_ascii_alpha(t[j])) ++j;
        if (j == i + 1 + a.size() && j < n && t[j] == U')') {
          out.push_back(kBreakMarker);
          out.push_back(paren_mask);
          out += a;
          i = j;
          continue;
        }
      }
      if (at_word) {
        size_t j = i;
        while (j < n && is_ascii_alpha(t[j])) ++j;
        if (j < n && t[j] == U')' && t.compare(i, j - i, a) == 0 &&
            j - i == a.size()) {
          out.push_back(kBreakMarker);
          out += a;
          i = j;
          continue;
        }
      }
    }
    out.push_back(t[i]);
    ++i;
  }
  t = std::move(out);
}

void iterate_letter_items(std::u32string& t, bool parens, bool roman) {
  const auto& alphabet = roman ? roman_alphabet() : latin_alphabet();
  std::vector<std::u32string> items =
      find_letter_items(t, parens ? U')' : U'.', parens, !parens);
  std::erase_if(items, [&](const auto& s) { return index_of(alphabet, s) < 0; });
  const long count = static_cast<long>(items.size());
  for (long k = 0; k < count; ++k) {
    const auto& a = items[k];
    // k - 1 wraps to the last item, as a negative index would.
    const auto& prev = items[(k - 1 + count) % count];
    long ia = index_of(alphabet, a);
    long ip = index_of(alphabet, prev);
    bool hit;
    if (k == count - 1) {
      hit = std::labs(ip - ia) == 1;
    } else {
      long in = index_of(alphabet, items[k + 1]);
      hit = in - ia == 1 || std::labs(ip - ia) == 1;
    }
    if (hit) replace_letter_item(t, a, parens);
  }
}

bool list_prefix_ok(const std::u32string& t, size_t digit_start) {
  if (digit_start == 0) return true;
  char32_t p = t[digit_start - 1];
  if (is_space(p)) return true;
  if (p == U'-' || p == U'⁃') return digit_start == 1 || is_space(t[digit_start - 2]);
  return false;
}

// Numbers of 1-2 digits, preceded by start, whitespace or a dash bullet, and
// followed by ". " or ".)".
std::vector<int> find_numbered_period_items(const std::u32string& t) {
  std::vector<int> out;
  const size_t n = t.size();
  for (size_t i = 0; i < n; ++i) {
    if (!unicode::is_digit(t[i]) || t[i] > U'9') continue;
    if (!list_prefix_ok(t, i)) continue;
    size_t j = i;
    while (j < n && t[j] >= U'0' && t[j] <= U'9') ++j;
    if (j - i <= 2 && j + 1 < n && t[j] == U'.' &&
        (is_space(t[j + 1]) || t[j + 1] == U')')) {
      int v = 0;
      for (size_t k = i; k < j; ++k) v = v * 10 + static_cast<int>(t[k] - U'0');
      out.push_back(v);
    }
    i = j;
  }
  return out;
}

void substitute_numbered_period(std::u32string& t, int value) {
  const std::u32string digits = [&] {
    std::string s = std::to_string(value);
    return std::u32string(s.begin(), s.end());
  }();
  const size_t n = t.size();
  for (size_t i = 0; i < n; ++i) {
    if (t[i] < U'0' || t[i] > U'9') continue;
    size_t j = i;
    while (j < n && t[j] >= U'0' && t[j] <= U'9') ++j;
    if (list_prefix_ok(t, i) && j - i <= 2 && j < n && t[j] == U'.' &&
        (j + 1 == n ? false : (is_space(t[j + 1]) || t[j + 1] == U')')) &&
        t.compare(i, j - i, digits) == 0) {
      t[j] = kNumberedMark;
    }
    i = j;
  }
}

std::vector<int> find_numbered_paren_items(const std::u32string& t) {
  std::vector<int> out;
  const size_t n = t.size();
  size_t i = 0;
  while (i < n) {
    if (t[i] < U'0' || t[i] > U'9') {
      ++i;
      continue;
    }
    bool found = false;
    for (size_t len = 2; len >= 1; --len) {
      size_t j = i + len;
      bool digits = j <= n;
      for (size_t k = i; digits && k < j; ++k) {
        digits = t[k] >= U'0' && t[k] <= U'9';
      }
      if (digits && j + 1 < n && t[j] == U')' && is_space(t[j + 1])) {
        int v = 0;
        for (size_t k = i; k < j; ++k) v = v * 10 + static_cast<int>(t[k] - U'0');
        out.push_back(v);
        i = j;
        found = true;
        break;
      }
    }
    if (!found) ++i;
  }
  return out;
}

void substitute_numbered_paren(std::u32string& t, int value) {
  std::string s = std::to_string(value);
  const std::u32string digits(s.begin(), s.end());
  std::u32string out;
  out.reserve(t.size() + 4);
  const size_t n = t.size();
  size_t i = 0;
  while (i < n) {
    if (t[i] >= U'0' && t[i] <= U'9') {
      bool done = false;
      for (size_t len = 2; len >= 1 && !done; --len) {
        size_t j = i + len;
        bool ok = j <= n;
        for (size_t k = i; ok && k < j; ++k) ok = t[k] >= U'0' && t[k] <= U'9';
        if (ok && j + 1 < n && t[j] == U')' && is_space(t[j + 1])) {
          out.append(t, i, len);
          if (t.compare(i, len, digits) == 0) out.push_back(kParenMark);
          i = j;
          done = true;
        }
      }
      if (done) continue;
    }
    out.push_back(t[i]);
    ++i;
  }
  t = std::move(out);
}

template <typename Substitute>
void scan_lists(std::u32string& t, const std::vector<int>& items,
                Substitute substitute) {
  for (size_t k = 0; k < items.size(); ++k) {
    int item = items[k];
    if (k + 1 < items.size() && item + 1 == items[k + 1]) {
      substitute(t, item);
    } else if (k > 0) {
      int prev = items[k - 1];
      if (item - 1 == prev || (item == 0 && prev == 9) || (item == 9 && prev == 0)) {
        substitute(t, item);
      }
    }
  }
}

bool search(const std::u32string& t, const boost::u32regex& re) {
  const auto* b = reinterpret_cast<const UChar32*>(t.data());
  boost::match_results<const UChar32*> m;
  return boost::regex_search(b, b + t.size(), m, re,
                             boost::match_default | boost::match_not_dot_newline);
}

const RuleGroup& numbered_period_breaks() {
  static const RuleGroup g("list_items", {
      {"space_between_list_items_first", 100,
       R"re(\s(?<=\S\S\s)(?=\S\s*\d+\x{E07D}))re", "{break}$0"},
      {"space_between_list_items_second", 101,
       R"re(\s(?<=\S\S\s)(?=\d{1,2}\x{E07D}))re", "{break}$0"},
  });
  return g;
}

const RuleGroup& numbered_paren_breaks() {
  static const RuleGroup g("list_items", {
      {"space_between_list_items_third", 100,
       R"re(\s(?<=\S\S\s)(?=\d{1,2}\x{E07C}))re", "{break}$0"},
  });
  return g;
}

// Moves in-band break markers into the side list.
MaskedText extract_breaks(const std::u32string& t) {
  const char32_t list_period = placeholder("list_period");
  MaskedText out;
  out.text.reserve(t.size());
  for (char32_t c : t) {
    if (c == kBreakMarker) {
      out.breaks.push_back(out.text.size());
    } else if (c != kParenMark) {
      out.text.push_back(c == kNumberedMark ? list_period : c);
    }
  }
  return out;
}

}  // namespace

void mark_list_items(MaskedText& text, const ListOptions& options) {
  // Work in-band: markers may be inserted, which shifts offsets.
  std::u32string t;
  {
    std::vector<size_t> breaks = text.breaks;
    std::sort(breaks.begin(), breaks.end());
    size_t b = 0;
    for (size_t i = 0; i <= text.text.size(); ++i) {
      while (b < breaks.size() && breaks[b] == i) {
        t.push_back(kBreakMarker);
        ++b;
      }
      if (i < text.text.size()) t.push_back(text.text[i]);
    }
  }

  iterate_letter_items(t, false, false);
  iterate_letter_items(t, true, false);
  if (options.roman_numerals) {
    iterate_letter_items(t, false, true);
    iterate_letter_items(t, true, true);
  }

  scan_lists(t, find_numbered_period_items(t), substitute_numbered_period);
  if (t.find(kNumberedMark) != std::u32string::npos) {
    static const boost::u32regex across_lines =
        boost::make_u32regex(R"re(\x{E07D}[^\n\r]+[\n\r][^\n\r]+\x{E07D})re");
    static const boost::u32regex for_number =
        boost::make_u32regex(R"re(for\s\d{1,2}\x{E07D}\s[a-z])re");
    if (!search(t, across_lines) && !search(t, for_number)) {
      t = apply_group(t, numbered_period_breaks());
    }
  }

  for (int pass = 0; pass < 2; ++pass) {
    scan_lists(t, find_numbered_paren_items(t), substitute_numbered_paren);
  }
  if (t.find(kParenMark) != std::u32string::npos) {
    static const boost::u32regex across_lines =
        boost::make_u32regex(R"re(\x{E07C}[^\n\r]+[\n\r][^\n\r]+\x{E07C})re");
    if (!search(t, across_lines)) t = apply_group(t, numbered_paren_breaks());
  }

  text = extract_breaks(t);
}

}  // namespace segtext
