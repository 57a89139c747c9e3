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

#include "segtext/processor.h"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "segtext/cleaner.h"
#include "segtext/error.h"
#include "segtext/placeholder.h"
#include "segtext/rules_special.h"
#include "segtext/unicode.h"

namespace segtext {
namespace {

using unicode::is_line_break;
using unicode::is_space;

constexpr Stage kWholeTextStages[] = {Stage::kPostAbbreviation, Stage::kNumbers,
                                      Stage::kPunctuation, Stage::kWholeText};

void apply_stage(const LanguageProfile& p, Stage stage, std::u32string& text,
                 std::vector<size_t>* breaks, size_t offset = 0) {
  p.common.apply_stage(stage, text, breaks, offset);
  p.standard.apply_stage(stage, text, breaks, offset);
}

bool has_terminal(const LanguageProfile& p, std::u32string_view seg) {
  return seg.find_first_of(p.terminals) != std::u32string_view::npos;
}

void mask_segment(const LanguageProfile& p, std::u32string& seg,
                  std::vector<size_t>& breaks, size_t offset) {
  apply_stage(p, Stage::kEllipsis, seg, &breaks, offset);
  if (!has_terminal(p, seg)) return;
  mask_exclamation_words(seg, p.exclamation_words);
  mask_enclosures(seg, p.pairs, p.terminals);
  apply_stage(p, Stage::kSegment, seg, &breaks, offset);
  apply_stage(p, Stage::kSegmentLate, seg, &breaks, offset);
}

bool is_closer(char32_t c) {
  switch (c) {
    case U'"': case U'\'': case U'”': case U'’': case U')': case U']':
    case U'}': case U'»': case U'」': case U'』': case U'）': case U'】':
    case U'》': case U'〉':
      return true;
    default:
      return false;
  }
}

bool is_ascii_upper(char32_t c) { return c >= U'A' && c <= U'Z'; }

// End of a quoted or bracketed span opening a sentence at `s`, if it closes
// before `limit` and a capitalized word follows.
std::optional<size_t> leading_enclosure_end(const std::u32string& t, size_t s,
                                            size_t limit) {
  const size_t n = t.size();
  char32_t open = t[s];
  char32_t close;
  size_t min_interior = 1;
  bool space_optional = false;
  bool reject_comma = false;
  switch (open) {
    case U'（': close = U'）'; min_interior = 0; space_optional = true; break;
    case U'「': close = U'」'; min_interior = 0; break;
    case U'(': close = U')'; min_interior = 2; break;
    case U'\'': close = U'\''; reject_comma = true; break;
    case U'"': close = U'"'; reject_comma = true; break;
    case U'“': close = U'”'; reject_comma = true; break;
    default: return std::nullopt;
  }
  size_t c = t.find(close, s + 1);
  if (c == std::u32string::npos || c >= limit) return std::nullopt;
  if (c - s - 1 < min_interior) return std::nullopt;
  if (reject_comma && t[c - 1] == U',') return std::nullopt;
  size_t e = c + 1;
  if (e + 1 < n && is_space(t[e]) && is_ascii_upper(t[e + 1])) return e;
  if (space_optional && e < n && is_ascii_upper(t[e])) return e;
  return std::nullopt;
}

}  // namespace

MaskedText mask_text(std::u32string_view text, const LanguageProfile& p) {
  MaskedText mt{std::u32string(text), {}};
  mark_list_items(mt, p.lists);
  apply_stage(p, Stage::kPreAbbreviation, mt.text, &mt.breaks);
  mask_abbreviations(mt.text, p.abbreviations);
  for (Stage stage : kWholeTextStages) {
    apply_stage(p, stage, mt.text, &mt.breaks);
  }

  std::vector<size_t> cuts = mt.breaks;
  for (size_t i = 0; i < mt.text.size(); ++i) {
    if (is_line_break(mt.text[i])) cuts.push_back(i);
  }
  cuts.push_back(mt.text.size());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<size_t> new_breaks;
  size_t a = 0;
  std::u32string seg;
  for (size_t b : cuts) {
    if (b > a) {
      seg.assign(mt.text, a, b - a);
      mask_segment(p, seg, new_breaks, a);
      std::copy(seg.begin(), seg.end(), mt.text.begin() + a);
    }
    a = b;
  }
  mt.breaks.insert(mt.breaks.end(), new_breaks.begin(), new_breaks.end());
  std::sort(mt.breaks.begin(), mt.breaks.end());
  mt.breaks.erase(std::unique(mt.breaks.begin(), mt.breaks.end()),
                  mt.breaks.end());
  return mt;
}

std::vector<std::pair<size_t, size_t>> boundary_ranges(
    const MaskedText& masked, const LanguageProfile& p) {
  const std::u32string& t = masked.text;
  const size_t n = t.size();
  const auto& registry = PlaceholderRegistry::instance();
  std::vector<size_t> hard = masked.breaks;
  for (size_t i = 0; i < n; ++i) {
    if (is_line_break(t[i])) hard.push_back(i);
  }
  std::sort(hard.begin(), hard.end());

  std::vector<std::pair<size_t, size_t>> ranges;
  size_t start = 0;
  auto cut = [&](size_t at) {
    if (at > start) {
      ranges.emplace_back(start, at);
      start = at;
    }
  };
  size_t hb = 0;
  auto next_hard = [&](size_t i) {
    auto it = std::upper_bound(hard.begin(), hard.end(), i);
    return it == hard.end() ? n : *it;
  };
  bool at_start = true;
  size_t i = 0;
  while (i < n) {
    bool hard_cut = false;
    while (hb < hard.size() && hard[hb] <= i) {
      if (hard[hb] > start) {
        cut(hard[hb]);
        hard_cut = true;
      }
      ++hb;
    }
    if (hard_cut) at_start = true;
    char32_t c = t[i];
    if (at_start) {
      if (is_space(c)) {
        ++i;
        continue;
      }
      at_start = false;
      if (p.leading_enclosures) {
        if (auto e = leading_enclosure_end(t, i, next_hard(i))) {
          cut(*e);
          i = *e;
          at_start = true;
          continue;
        }
      }
    }
    if (p.is_terminal(c)) {
      size_t j = i;
      while (j < n && p.is_terminal(t[j])) ++j;
      size_t k = j;
      while (k < n && is_closer(t[k])) ++k;
      if (!p.boundary_requires_space || k == n || is_space(t[k])) {
        cut(k);
        i = k;
        at_start = true;
        continue;
      }
    }
    if (i + 3 < n) {
      char32_t o = registry.original(c);
      char32_t q = t[i + 1];
      bool quote = false;
      for (const auto& [open, close] : p.quote_styles) {
        quote = quote || q == open || q == close;
      }
      if ((o == U'!' || o == U'?' || o == U'.' || o == U'-') && quote &&
          is_space(t[i + 2]) && !is_space(t[i + 3]) &&
          unicode::is_upper(t[i + 3])) {
        cut(i + 2);
        i += 2;
        at_start = true;
        continue;
      }
    }
    ++i;
  }
  if (n > start) ranges.emplace_back(start, n);
  return ranges;
}

std::vector<std::u32string> split_on_boundaries(const MaskedText& masked,
                                                const LanguageProfile& p) {
  std::vector<std::u32string> out;
  for (auto [a, b] : boundary_ranges(masked, p)) {
    auto piece = unicode::trim(std::u32string_view(masked.text).substr(a, b - a));
    if (!piece.empty()) out.emplace_back(piece);
  }
  return out;
}

std::vector<TextSpan> map_spans(std::string_view original,
                                std::span<const std::string> sentences) {
  std::u32string text = unicode::decode_utf8(original);
  std::vector<TextSpan> spans;
  spans.reserve(sentences.size());
  size_t pos = 0;
  for (const auto& s : sentences) {
    std::u32string needle = unicode::decode_utf8(s);
    size_t at = text.find(needle, pos);
    if (at == std::u32string::npos) {
      throw std::logic_error("sentence not found in original text: " + s);
    }
    spans.push_back({s, at, at + needle.size()});
    pos = at + needle.size();
  }
  return spans;
}

namespace {

std::u32string checked_decode(std::string_view text) {
  std::u32string u = unicode::decode_utf8(text);
  if (auto pos = scan_reserved(u)) {
    throw SegmenterError(ErrorKind::kReservedCodepointInInput,
                         "reserved code point at offset " + std::to_string(*pos));
  }
  return u;
}

}  // namespace

std::vector<std::string> segment(const SegmenterConfig& config,
                                 std::string_view text) {
  const LanguageProfile& p = *config.profile;
  std::u32string u = checked_decode(text);
  if (config.clean) {
    u = unicode::decode_utf8(clean(text, config.doc_type, p).output);
  }
  MaskedText masked = mask_text(u, p);
  std::vector<std::string> out;
  for (const auto& piece : split_on_boundaries(masked, p)) {
    out.push_back(unicode::encode_utf8(restore_placeholders(piece)));
  }
  return out;
}

std::vector<TextSpan> segment_spans(const SegmenterConfig& config,
                                    std::string_view text) {
  if (config.clean) {
    throw SegmenterError(ErrorKind::kIncompatibleOptions,
                         "spans are not available for cleaned text");
  }
  auto sentences = segment(config, text);
  return map_spans(text, sentences);
}

}  // namespace segtext
