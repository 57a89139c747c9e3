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

#include "segtext/error.h"

namespace segtext {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUnknownLanguage:
      return "UnknownLanguage";
    case ErrorKind::kIncompatibleOptions:
      return "IncompatibleOptions";
    case ErrorKind::kReservedCodepointInInput:
      return "ReservedCodepointInInput";
    case ErrorKind::kMalformedFixture:
      return "MalformedFixture";
  }
  return "Unknown";
}

SegmenterError::SegmenterError(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

}  // namespace segtext
