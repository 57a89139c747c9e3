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

#include "segtext/placeholder.h"

#include <algorithm>

namespace segtext {
namespace {

constexpr PlaceholderEntry kSingles[] = {
    {"abbreviation_period", 0xE001, U'.'},
    {"decimal_period", 0xE002, U'.'},
    {"filename_period", 0xE003, U'.'},
    {"ellipsis_period", 0xE004, U'.'},
    {"inner_period", 0xE005, U'.'},
    {"list_period", 0xE006, U'.'},
    {"geo_period", 0xE007, U'.'},
    {"reference_period", 0xE008, U'.'},
    {"url_period", 0xE009, U'.'},
    {"word_exclamation", 0xE00A, U'!'},
    {"mid_exclamation", 0xE00B, U'!'},
    {"quote_question", 0xE00C, U'?'},
    {"burst_exclamation", 0xE00D, U'!'},
    {"burst_question", 0xE00E, U'?'},
    {"numeric_colon", 0xE00F, U':'},
    {"numeral_paren_open", 0xE010, U'('},
    {"numeral_paren_close", 0xE011, U')'},
};

constexpr PlaceholderEntry kEnclosed[] = {
    {"enclosed_period", 0xE020, U'.'},
    {"enclosed_exclamation", 0xE021, U'!'},
    {"enclosed_question", 0xE022, U'?'},
    {"enclosed_ideographic_full_stop", 0xE023, U'。'},
    {"enclosed_fullwidth_full_stop", 0xE024, U'．'},
    {"enclosed_fullwidth_exclamation", 0xE025, U'！'},
    {"enclosed_fullwidth_question", 0xE026, U'？'},
    {"enclosed_danda", 0xE027, U'।'},
    {"enclosed_double_danda", 0xE028, U'॥'},
    {"enclosed_arabic_question", 0xE029, U'؟'},
    {"enclosed_arabic_full_stop", 0xE02A, U'۔'},
    {"enclosed_apostrophe", 0xE02B, U'\''},
    {"enclosed_armenian_full_stop", 0xE02C, U'\u0589'},
    {"enclosed_ethiopic_full_stop", 0xE02D, U'\u1362'},
    {"enclosed_ethiopic_question", 0xE02E, U'\u1367'},
    {"enclosed_myanmar_section", 0xE02F, U'\u104B'},
    {"enclosed_greek_question", 0xE030, U'\u037E'},
    {"enclosed_khmer_khan", 0xE031, U'\u17D4'},
    {"enclosed_ideographic_half_stop", 0xE032, U'\uFF61'},
    {"enclosed_vertical_line", 0xE033, U'|'},
    {"enclosed_semicolon", 0xE034, U';'},
};

}  // namespace

PlaceholderRegistry::PlaceholderRegistry() {
  for (const auto& e : kSingles) entries_.push_back(e);
  for (const auto& e : kEnclosed) {
    entries_.push_back(e);
    enclosed_.emplace_back(e.original, e.codepoint);
  }
  entries_.push_back({"break", kBreakMarker, 0});
  for (const auto& e : entries_) {
    to_original_[e.codepoint - kReservedFirst] = e.original;
  }
}

const PlaceholderRegistry& PlaceholderRegistry::instance() {
  static const PlaceholderRegistry registry;
  return registry;
}

std::optional<char32_t> PlaceholderRegistry::find(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return e.codepoint;
  }
  return std::nullopt;
}

char32_t PlaceholderRegistry::original(char32_t c) const {
  if (!is_reserved(c)) return c;
  return to_original_[c - kReservedFirst];
}

std::optional<char32_t> PlaceholderRegistry::enclosed(char32_t terminal) const {
  for (const auto& [orig, cp] : enclosed_) {
    if (orig == terminal) return cp;
  }
  return std::nullopt;
}

std::optional<size_t> scan_reserved(std::u32string_view text) {
  auto it = std::find_if(text.begin(), text.end(), is_reserved);
  if (it == text.end()) return std::nullopt;
  return static_cast<size_t>(it - text.begin());
}

std::u32string restore_placeholders(std::u32string_view text,
                                    const PlaceholderRegistry& registry) {
  std::u32string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    char32_t o = registry.original(c);
    if (o != 0) out.push_back(o);
  }
  return out;
}

}  // namespace segtext
