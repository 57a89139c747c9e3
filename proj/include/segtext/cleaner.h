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

#ifndef SEGTEXT_CLEANER_H_
#define SEGTEXT_CLEANER_H_

#include <string>
#include <string_view>
#include <vector>

#include "segtext/config.h"

namespace segtext {

struct CleanAction {
  std::string rule;
  size_t count = 0;
};

struct CleanReport {
  std::string output;
  std::vector<CleanAction> actions;  // one entry per step, in order

  size_t count(std::string_view rule) const;
};

// Destructive normalization ahead of segmentation. Idempotent. Throws
// SegmenterError(kReservedCodepointInInput).
CleanReport clean(std::string_view text, DocType doc_type,
                  const LanguageProfile& profile);

}  // namespace segtext

#endif  // SEGTEXT_CLEANER_H_
