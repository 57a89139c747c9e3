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

#ifndef SEGTEXT_PLACEHOLDER_H_
#define SEGTEXT_PLACEHOLDER_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace segtext {

// Every placeholder lives in this Private Use block. Input containing any of
// these code points is rejected.
inline constexpr char32_t kReservedFirst = 0xE000;
inline constexpr char32_t kReservedLast = 0xE07F;

// Zero-width sentence break marker. Restores to nothing.
inline constexpr char32_t kBreakMarker = 0xE07F;

struct PlaceholderEntry {
  std::string_view name;
  char32_t codepoint;
  char32_t original;  // 0 for the break marker
};

class PlaceholderRegistry {
 public:
  static const PlaceholderRegistry& instance();

  std::span<const PlaceholderEntry> entries() const { return entries_; }
  std::optional<char32_t> find(std::string_view name) const;
  // Original character for a placeholder, or the input unchanged.
  char32_t original(char32_t c) const;
  // The placeholder that hides `terminal` inside an enclosure, if any.
  std::optional<char32_t> enclosed(char32_t terminal) const;

 private:
  PlaceholderRegistry();

  std::vector<PlaceholderEntry> entries_;
  char32_t to_original_[kReservedLast - kReservedFirst + 1] = {};
  std::vector<std::pair<char32_t, char32_t>> enclosed_;
};

inline bool is_reserved(char32_t c) {
  return c >= kReservedFirst && c <= kReservedLast;
}

// Returns the first reserved code point position, if any.
std::optional<size_t> scan_reserved(std::u32string_view text);

std::u32string restore_placeholders(
    std::u32string_view text,
    const PlaceholderRegistry& registry = PlaceholderRegistry::instance());

}  // namespace segtext

#endif  // SEGTEXT_PLACEHOLDER_H_
