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

// Writes a complete language tree with an extra Greek profile into a
// temporary directory, using only data files.

#ifndef SEGTEXT_TESTS_SUPPORT_NEW_LANGUAGE_H_
#define SEGTEXT_TESTS_SUPPORT_NEW_LANGUAGE_H_

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <string_view>

namespace segtext::testing {

inline constexpr std::string_view kGreekProfile =
    "code = el\n"
    "name = Greek\n"
    "terminals = . ! ; \xCD\xBE\n"  // U+037E GREEK QUESTION MARK
    "boundary_requires_space = true\n"
    "quote = « »\n";

inline constexpr std::string_view kGreekAbbreviations =
    "[prepositive]\n"
    "κ\n"
    "κα\n"
    "δρ\n"
    "[general]\n"
    "π.χ\n"
    "κ.λπ\n"
    "σελ\n";

inline constexpr std::string_view kGreekFixture =
    R"({"id": 1, "description": "full stop", "input": "Καλημέρα σας. Πώς είστε;", "expected": ["Καλημέρα σας.", "Πώς είστε;"]}
{"id": 2, "description": "greek question mark", "input": "Τι ώρα είναι; Είναι αργά.", "expected": ["Τι ώρα είναι;", "Είναι αργά."]}
{"id": 3, "description": "exclamation", "input": "Τι ωραία μέρα! Πάμε έξω.", "expected": ["Τι ωραία μέρα!", "Πάμε έξω."]}
{"id": 4, "description": "title abbreviation", "input": "Ο κ. Παπαδόπουλος ήρθε. Έφυγε νωρίς.", "expected": ["Ο κ. Παπαδόπουλος ήρθε.", "Έφυγε νωρίς."]}
{"id": 5, "description": "decimal number", "input": "Το κόστος ήταν 3.50 ευρώ. Ήταν φθηνό.", "expected": ["Το κόστος ήταν 3.50 ευρώ.", "Ήταν φθηνό."]}
{"id": 6, "description": "general abbreviation mid sentence", "input": "Φέρε φρούτα, π.χ. μήλα. Ευχαριστώ.", "expected": ["Φέρε φρούτα, π.χ. μήλα.", "Ευχαριστώ."]}
{"id": 7, "description": "guillemets", "input": "Είπε «Έλα. Τώρα.» και έφυγε. Μετά γύρισε.", "expected": ["Είπε «Έλα. Τώρα.» και έφυγε.", "Μετά γύρισε."]}
{"id": 8, "description": "parentheses", "input": "Δες το βιβλίο (σελ. 4.) αύριο. Καληνύχτα.", "expected": ["Δες το βιβλίο (σελ. 4.) αύριο.", "Καληνύχτα."]}
{"id": 9, "description": "ellipsis", "input": "Περίμενε... Τώρα μπορείς.", "expected": ["Περίμενε...", "Τώρα μπορείς."]}
{"id": 10, "description": "single sentence", "input": "Μια πρόταση χωρίς τέλος", "expected": ["Μια πρόταση χωρίς τέλος"]}
)";

// Copies <source>/languages into a fresh directory and adds the Greek
// profile. Returns the new root.
inline std::filesystem::path write_language_tree(const std::filesystem::path& source) {
  namespace fs = std::filesystem;
  std::random_device rd;
  fs::path root = fs::temp_directory_path() /
                  ("segtext-languages-" + std::to_string(rd()));
  fs::create_directories(root);
  fs::copy(source / "languages", root, fs::copy_options::recursive);
  fs::create_directories(root / "el");
  auto write = [](const fs::path& p, std::string_view body, bool append = false) {
    std::ofstream out(p, std::ios::binary | (append ? std::ios::app : std::ios::trunc));
    out << body;
  };
  write(root / "el" / "profile.kv", kGreekProfile);
  write(root / "el" / "abbreviations.txt", kGreekAbbreviations);
  write(root / "index.txt", "el\n", true);
  write(root / "el" / "grs.jsonl", kGreekFixture);
  return root;
}

}  // namespace segtext::testing

#endif  // SEGTEXT_TESTS_SUPPORT_NEW_LANGUAGE_H_
