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

#ifndef SEGTEXT_CONFIG_H_
#define SEGTEXT_CONFIG_H_

#include <memory>
#include <string_view>

#include "segtext/language.h"

namespace segtext {

// Only consulted by the cleaner.
enum class DocType { kPlain, kPdf };

// Throws SegmenterError(kIncompatibleOptions) for anything but "plain"/"pdf".
DocType parse_doc_type(std::string_view name);
std::string_view to_string(DocType type);

struct SegmenterConfig {
  std::shared_ptr<const LanguageProfile> profile;
  bool clean = false;
  bool char_span = false;
  DocType doc_type = DocType::kPlain;
};

// Language errors are reported before option errors.
SegmenterConfig make_config(
    std::string_view language, bool clean = false, bool char_span = false,
    std::string_view doc_type = "plain",
    const LanguageRegistry& registry = LanguageRegistry::builtin());

}  // namespace segtext

#endif  // SEGTEXT_CONFIG_H_
