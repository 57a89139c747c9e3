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

#ifndef SEGTEXT_UNICODE_H_
#define SEGTEXT_UNICODE_H_

#include <string>
#include <string_view>

namespace segtext::unicode {

// Invalid byte sequences decode to U+FFFD.
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view text);

bool is_space(char32_t c);
bool is_upper(char32_t c);
bool is_lower(char32_t c);
bool is_digit(char32_t c);
bool is_alnum(char32_t c);
bool is_line_break(char32_t c);
char32_t to_lower(char32_t c);
std::u32string to_lower(std::u32string_view text);

std::u32string_view trim(std::u32string_view text);
std::string_view trim(std::string_view text);

}  // namespace segtext::unicode

#endif  // SEGTEXT_UNICODE_H_
