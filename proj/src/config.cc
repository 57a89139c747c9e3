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

#include "segtext/config.h"

#include <string>

#include "segtext/error.h"

namespace segtext {

DocType parse_doc_type(std::string_view name) {
  if (name == "plain") return DocType::kPlain;
  if (name == "pdf") return DocType::kPdf;
  throw SegmenterError(ErrorKind::kIncompatibleOptions,
                       "unknown doc_type '" + std::string(name) + "'");
}

std::string_view to_string(DocType type) {
  return type == DocType::kPdf ? "pdf" : "plain";
}

SegmenterConfig make_config(std::string_view language, bool clean,
                            bool char_span, std::string_view doc_type,
                            const LanguageRegistry& registry) {
  SegmenterConfig config;
  config.profile = registry.lookup(language);
  config.doc_type = parse_doc_type(doc_type);
  if (clean && char_span) {
    throw SegmenterError(ErrorKind::kIncompatibleOptions,
                         "clean and char_span cannot both be set");
  }
  config.clean = clean;
  config.char_span = char_span;
  return config;
}

}  // namespace segtext
