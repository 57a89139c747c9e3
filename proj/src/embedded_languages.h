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

#ifndef SEGTEXT_EMBEDDED_LANGUAGES_H_
#define SEGTEXT_EMBEDDED_LANGUAGES_H_

#include <span>
#include <string_view>

namespace segtext::internal {

struct EmbeddedFile {
  std::string_view path;  // relative to languages/
  std::string_view contents;
};

// Generated at build time from the languages/ tree.
std::span<const EmbeddedFile> embedded_language_files();

}  // namespace segtext::internal

#endif  // SEGTEXT_EMBEDDED_LANGUAGES_H_
