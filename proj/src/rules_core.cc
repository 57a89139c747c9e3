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

#include "segtext/rules_core.h"

namespace segtext {

const std::vector<Rule>& common_rules() {
  static const std::vector<Rule> rules = {
      {"possessive_abbreviation", 110, R"re(\.(?='s\s)|\.(?='s\z))re",
       "{abbreviation_period}"},
      {"kommanditgesellschaft", 120, R"re(\.(?<=Co\.)(?=\sKG))re",
       "{abbreviation_period}"},
      {"single_upper_letter_at_start", 130, R"re(^([A-Z])\.(?=\s))re",
       "$1{abbreviation_period}"},
      {"single_upper_letter", 140, R"re(\.(?<=\s[A-Z]\.)(?=,?\s))re",
       "{abbreviation_period}"},

      {"multi_period_abbreviation", 210, R"re((?i)\b[a-z](?:\.[a-z])+\.)re",
       "{mask:abbreviation_period}"},
      {"upper_pm", 220, R"re(\x{E001}(?<= P\x{E001}M\x{E001})(?=\s[A-Z]))re",
       "."},
      {"upper_am", 230, R"re(\x{E001}(?<=A\x{E001}M\x{E001})(?=\s[A-Z]))re",
       "."},
      {"lower_pm", 240, R"re(\x{E001}(?<=p\x{E001}m\x{E001})(?=\s[A-Z]))re",
       "."},
      {"lower_am", 250, R"re(\x{E001}(?<=a\x{E001}m\x{E001})(?=\s[A-Z]))re",
       "."},

      {"period_before_number", 310, R"re(\.(?=\d))re", "{decimal_period}"},
      {"number_period_before_letter", 320, R"re(\.(?<=\d\.)(?=\S))re",
       "{decimal_period}"},
      {"newline_number_period", 330, R"re(\.(?<=[\r\n]\d\.)(?=\s\S|\)))re",
       "{list_period}"},
      {"start_number_period", 340, R"re(^(\d)\.(?=\s\S|\)))re",
       "$1{list_period}"},
      {"start_two_digit_number_period", 350, R"re(^(\d\d)\.(?=\s\S|\)))re",
       "$1{list_period}"},

      {"burst_punctuation", 410, R"re([!?](?<=\S[!?])[!?]{2,}(?=\s+\p{Ll}))re",
       "{mask:burst_exclamation,burst_question}"},
      {"numbered_reference", 420,
       R"re([.\x{E001}\x{E002}](?<=[^\d\s][.\x{E001}\x{E002}])((?:\[(?:\d{1,3},?\s?-?\s?)*\b\d{1,3}\])+|(?:\d{1,3}\s?)?\d{1,3})(?=\s[A-Z]))re",
       "{reference_period}$1{break}"},

      {"roman_numeral_parens", 810,
       R"re(\(((?=[mdclxvi])m*(?:c[md]|d?c*)(?:x[cl]|l?x*)(?:i[xv]|v?i*))\)(?=\s[A-Z]))re",
       "{numeral_paren_open}$1{numeral_paren_close}"},
  };
  return rules;
}

const std::vector<Rule>& standard_rules() {
  static const std::vector<Rule> rules = {
      {"url_periods", 510,
       R"re((?i)(?:\b(?:https?|ftp)://|\bwww\.)[^\s<>"]*[^\s<>".,;:!?)\]'’”])re",
       "{mask:url_period}"},
      {"filename_extension", 520,
       R"re(\.(?<=[\w\-]\.)(?=(?:txt|pdf|docx?|html?|csv|xml|json|md|jpe?g|png|gif|zip|exe|xlsx?|pptx?|rtf|odt|svg|mp[34]|cpp|py)\b))re",
       "{filename_period}"},
      {"inner_period", 530, R"re(\.(?<=[a-zA-Z0-9_]\.)(?=[a-zA-Z0-9_]))re",
       "{inner_period}"},
      {"geo_location", 540, R"re(\.(?<=[a-zA-Z]°\.)(?=\s*\d))re", "{geo_period}"},
      {"file_format_mention", 550,
       R"re(\.(?<=\s\.)(?=(?:jpe?g|png|gif|tiff?|pdf|ps|docx?|xlsx?|svg|bmp|tga|exif|odt|html?|txt|rtf|bat|sxw|xml|zip|exe|msi|blend|wmv|mp[34]|pptx?|flac|rb|cpp|cs|js)\s))re",
       "{filename_period}"},
      {"parens_between_quotes", 560, R"re((["”])(\s)(\(.*\))(\s)(["“]))re",
       "$1$2{break}$3{break}$4$5"},

      {"ellipsis_three_spaced", 610, R"re(\.(?<=\s\.)(\s)\.(\s)\.(?=\s))re",
       "{ellipsis_period}$1{ellipsis_period}$2{ellipsis_period}"},
      {"ellipsis_four_spaced_final", 620,
       R"re(\.(?<=[a-z]\.)(\s)\.(\s)\.(\s)\.\z)re",
       "{ellipsis_period}$1{ellipsis_period}$2{ellipsis_period}$3{ellipsis_period}"},
      {"ellipsis_four_consecutive", 630, R"re(\.(?<=\S\.)\.\.(?=\.\s\p{Lu}))re",
       "{mask:ellipsis_period}"},
      {"ellipsis_three_before_capital", 640, R"re(\.\.\.(?=\s+\p{Lu}))re",
       "{ellipsis_period}{ellipsis_period}."},
      {"ellipsis_other", 650, R"re(\.\.\.)re", "{mask:ellipsis_period}"},

      {"question_before_quote", 710, R"re(\?(?=['"]))re", "{quote_question}"},
      {"exclamation_before_quote", 720, R"re(!(?=['"]))re", "{mid_exclamation}"},
      {"exclamation_before_comma", 730, R"re(!(?=,\s[a-z]))re",
       "{mid_exclamation}"},
      {"exclamation_mid_sentence", 740, R"re(!(?=\s[a-z]))re",
       "{mid_exclamation}"},
  };
  return rules;
}

}  // namespace segtext
