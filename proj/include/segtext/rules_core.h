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

#ifndef SEGTEXT_RULES_CORE_H_
#define SEGTEXT_RULES_CORE_H_

#include <vector>

#include "segtext/rule.h"

namespace segtext {

// Universal masking rules shared by every language profile.
const std::vector<Rule>& common_rules();
const std::vector<Rule>& standard_rules();

}  // namespace segtext

#endif  // SEGTEXT_RULES_CORE_H_
