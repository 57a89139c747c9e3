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

#ifndef SEGTEXT_ERROR_H_
#define SEGTEXT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace segtext {

enum class ErrorKind {
  kUnknownLanguage,
  kIncompatibleOptions,
  kReservedCodepointInInput,
  kMalformedFixture,
};

std::string_view to_string(ErrorKind kind);

// The single exception type thrown for user-facing failures.
class SegmenterError : public std::runtime_error {
 public:
  SegmenterError(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace segtext

#endif  // SEGTEXT_ERROR_H_
