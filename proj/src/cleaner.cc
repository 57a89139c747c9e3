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

#include "segtext/cleaner.h"

#include <boost/regex/icu.hpp>

#include "segtext/error.h"
#include "segtext/placeholder.h"
#include "segtext/unicode.h"

namespace segtext {

size_t CleanReport::count(std::string_view rule) const {
  for (const auto& a : actions) {
    if (a.rule == rule) return a.count;
  }
  return 0;
}

namespace {

using unicode::is_line_break;
using unicode::is_space;

// Rebuilds `text`, passing every match through `fn`. Returns the match count.
template <typename Fn>
size_t replace_matches(std::u32string& text, const boost::u32regex& re, Fn fn) {
  const auto* base = reinterpret_cast<const UChar32*>(text.data());
  const auto* end = base + text.size();
  std::u32string out;
  size_t count = 0;
  const UChar32* last = base;
  boost::match_results<const UChar32*> m;
  const UChar32* first = base;
  auto flags = boost::match_default | boost::match_not_dot_newline;
  while (first < end && boost::regex_search(first, end, m, re, flags, base)) {
    out.append(reinterpret_cast<const char32_t*>(last),
               reinterpret_cast<const char32_t*>(m[0].first));
    out += fn(std::u32string_view(reinterpret_cast<const char32_t*>(m[0].first),
                                  static_cast<size_t>(m.length(0))));
    last = m[0].second;
    first = m.length(0) == 0 ? m[0].second + 1 : m[0].second;
    flags |= boost::match_prev_avail;
    ++count;
  }
  if (count == 0) return 0;
  out.append(reinterpret_cast<const char32_t*>(last),
             reinterpret_cast<const char32_t*>(end));
  text = std::move(out);
  return count;
}

size_t strip_html(std::u32string& text) {
  static const boost::u32regex tag = boost::make_u32regex(
      R"re(</?([A-Za-z][A-Za-z0-9]*)(?:\s[^<>]*)?/?>|&lt;/?([A-Za-z][A-Za-z0-9]*)[^&<>]*&gt;)re");
  static const boost::u32regex block = boost::make_u32regex(
      R"re((?i)^(?:&lt;|<)/?(?:p|br|div|li|ul|ol|h[1-6]|tr|td|th|table|section|article|blockquote|hr)\b)re");
  size_t total = 0;
  for (;;) {
    size_t n = replace_matches(text, tag, [](std::u32string_view m) {
      std::u32string s(m);
      const auto* b = reinterpret_cast<const UChar32*>(s.data());
      boost::match_results<const UChar32*> r;
      bool is_block = boost::regex_search(b, b + s.size(), r, block);
      return std::u32string(is_block ? U" " : U"");
    });
    if (n == 0) break;
    total += n;
  }
  return total;
}

size_t protect_urls(std::u32string& text) {
  static const boost::u32regex url = boost::make_u32regex(
      R"re((?i)\b(?:(?:https?|ftp)://|www\.)[^\s<>"]+|[\w.+-]+@[\w-]+(?:\.[\w-]+)+)re");
  const char32_t mask = *PlaceholderRegistry::instance().find("url_period");
  return replace_matches(text, url, [&](std::u32string_view m) {
    std::u32string s(m);
    for (auto& c : s) {
      if (c == U'.') c = mask;
    }
    return s;
  });
}

bool is_toc_line(std::u32string_view line) {
  size_t e = line.size();
  while (e > 0 && is_space(line[e - 1])) --e;
  size_t d = e;
  while (d > 0 && unicode::is_digit(line[d - 1])) --d;
  if (d == e) return false;
  size_t k = d;
  while (k > 0 && is_space(line[k - 1])) --k;
  size_t dots = k;
  while (dots > 0 && line[dots - 1] == U'.') --dots;
  if (k - dots < 5) return false;
  for (size_t i = 0; i < dots; ++i) {
    if (!is_space(line[i])) return true;
  }
  return false;
}

size_t remove_toc_lines(std::u32string& text) {
  std::u32string out;
  out.reserve(text.size());
  size_t count = 0;
  size_t i = 0;
  while (i < text.size()) {
    size_t j = i;
    while (j < text.size() && !is_line_break(text[j])) ++j;
    size_t next = j;
    if (next < text.size()) {
      next += (text[next] == U'\r' && next + 1 < text.size() &&
               text[next + 1] == U'\n')
                  ? 2
                  : 1;
    }
    if (is_toc_line(std::u32string_view(text).substr(i, j - i))) {
      ++count;
    } else {
      out.append(text, i, next - i);
    }
    i = next;
  }
  if (count) text = std::move(out);
  return count;
}

bool is_closer(char32_t c) {
  return c == U'"' || c == U'\'' || c == U')' || c == U']' || c == U'”' ||
         c == U'’' || c == U'»';
}

size_t repair_newlines(std::u32string& text, DocType doc_type,
                       const LanguageProfile& profile) {
  std::u32string out;
  out.reserve(text.size());
  size_t count = 0;
  const size_t n = text.size();
  for (size_t i = 0; i < n; ++i) {
    char32_t c = text[i];
    if (!is_line_break(c)) {
      out.push_back(c);
      continue;
    }
    size_t len = (c == U'\r' && i + 1 < n && text[i + 1] == U'\n') ? 2 : 1;
    char32_t prev = i > 0 ? text[i - 1] : 0;
    char32_t next = i + len < n ? text[i + len] : 0;
    bool join = false;
    if (doc_type == DocType::kPlain) {
      join = prev != 0 && !is_line_break(prev) && !profile.is_terminal(prev) &&
             unicode::is_lower(next);
    } else if (prev != 0 && !is_line_break(prev) && next != 0 &&
               !is_line_break(next)) {
      size_t k = i;
      while (k > 0 && is_space(text[k - 1]) && !is_line_break(text[k - 1])) --k;
      while (k > 0 && is_closer(text[k - 1])) --k;
      join = k > 0 && !is_line_break(text[k - 1]) &&
             !profile.is_terminal(text[k - 1]);
    }
    if (join) {
      out.push_back(U' ');
      ++count;
    } else {
      out.append(text, i, len);
    }
    i += len - 1;
  }
  if (count) text = std::move(out);
  return count;
}

size_t repair_missing_spaces(std::u32string& text,
                             const LanguageProfile& profile) {
  if (!profile.boundary_requires_space) return 0;
  std::u32string out;
  out.reserve(text.size() + 16);
  size_t count = 0;
  const size_t n = text.size();
  for (size_t i = 0; i < n; ++i) {
    out.push_back(text[i]);
    if (i > 0 && i + 1 < n && profile.is_terminal(text[i]) &&
        unicode::is_lower(text[i - 1]) && unicode::is_upper(text[i + 1])) {
      out.push_back(U' ');
      ++count;
    }
  }
  if (count) text = std::move(out);
  return count;
}

}  // namespace

CleanReport clean(std::string_view input, DocType doc_type,
                  const LanguageProfile& profile) {
  std::u32string text = unicode::decode_utf8(input);
  if (auto pos = scan_reserved(text)) {
    throw SegmenterError(ErrorKind::kReservedCodepointInInput,
                         "reserved code point at offset " + std::to_string(*pos));
  }
  CleanReport report;
  report.actions = {{"html_tags", 0},        {"url_protection", 0},
                    {"toc_lines", 0},        {"newline_repair", 0},
                    {"missing_space", 0}};
  // Each step can expose work for an earlier one, so run to a fixed point.
  for (int round = 0; round < 8; ++round) {
    size_t changed = 0;
    size_t tags = strip_html(text);
    report.actions[0].count += tags;
    changed += tags;
    size_t urls = protect_urls(text);
    if (round == 0) report.actions[1].count = urls;
    size_t steps[3] = {remove_toc_lines(text),
                       repair_newlines(text, doc_type, profile),
                       repair_missing_spaces(text, profile)};
    for (int k = 0; k < 3; ++k) {
      report.actions[2 + k].count += steps[k];
      changed += steps[k];
    }
    text = restore_placeholders(text);
    if (changed == 0) break;
  }
  report.output = unicode::encode_utf8(text);
  return report;
}

}  // namespace segtext
