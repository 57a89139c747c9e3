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

#include "segtext/harness.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

#include "segtext/error.h"
#include "segtext/processor.h"
#include "segtext/unicode.h"

namespace segtext {

std::vector<int64_t> GrsReport::failed_ids() const {
  std::vector<int64_t> out;
  for (const auto& o : outcomes) {
    if (!o.passed) out.push_back(o.id);
  }
  return out;
}

std::vector<GrsRule> parse_grs(std::string_view jsonl, std::string_view source) {
  std::vector<GrsRule> rules;
  std::set<int64_t> seen;
  size_t line_no = 0;
  while (!jsonl.empty()) {
    size_t nl = jsonl.find('\n');
    std::string_view line = jsonl.substr(0, nl);
    jsonl = nl == std::string_view::npos ? std::string_view() : jsonl.substr(nl + 1);
    ++line_no;
    if (unicode::trim(line).empty()) continue;
    auto fail = [&](const std::string& what) {
      throw SegmenterError(ErrorKind::kMalformedFixture,
                           std::string(source) + ":" + std::to_string(line_no) +
                               ": " + what);
    };
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      fail(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail("expected a JSON object");
    GrsRule rule;
    if (!j.contains("id") || !j["id"].is_number_integer()) {
      fail("missing integer field 'id'");
    }
    if (!j.contains("input") || !j["input"].is_string()) {
      fail("missing string field 'input'");
    }
    rule.id = j["id"].get<int64_t>();
    rule.input = j["input"].get<std::string>();
    if (j.contains("description")) {
      if (!j["description"].is_string()) fail("'description' must be a string");
      rule.description = j["description"].get<std::string>();
    }
    if (!j.contains("expected") || !j["expected"].is_array()) {
      fail("missing array field 'expected'");
    }
    for (const auto& s : j["expected"]) {
      if (!s.is_string()) fail("'expected' must hold strings");
      rule.expected.push_back(s.get<std::string>());
    }
    if (rule.expected.empty() && !unicode::trim(std::string_view(rule.input)).empty()) {
      fail("'expected' is empty for non-blank input");
    }
    if (!seen.insert(rule.id).second) {
      fail("duplicate id " + std::to_string(rule.id));
    }
    rules.push_back(std::move(rule));
  }
  return rules;
}

std::vector<GrsRule> load_grs(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw SegmenterError(ErrorKind::kMalformedFixture,
                         "cannot read " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_grs(ss.str(), path.string());
}

GrsReport run_grs(std::span<const GrsRule> rules, const SegmentFn& segment) {
  GrsReport report;
  for (const auto& rule : rules) {
    RuleOutcome o{rule.id, false, {}, rule.expected, {}};
    try {
      o.actual = segment(rule.input);
      o.passed = o.actual == rule.expected;
    } catch (const std::exception& e) {
      o.error = e.what();
    }
    report.passed += o.passed ? 1 : 0;
    ++report.total;
    report.outcomes.push_back(std::move(o));
  }
  return report;
}

GrsReport run_grs(std::span<const GrsRule> rules, const SegmenterConfig& config) {
  return run_grs(rules, [&](std::string_view text) { return segment(config, text); });
}

std::vector<std::string> naive_segment(std::string_view text) {
  std::vector<std::string> out;
  auto is_ws = [](char c) { return c == ' ' || (c >= '\t' && c <= '\r'); };
  size_t start = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool mark = c == '?' || c == '!' || c == ':' || c == ';' || c == '.';
    if (mark && (i + 1 == text.size() || is_ws(text[i + 1]))) {
      auto piece = unicode::trim(text.substr(start, i + 1 - start));
      if (!piece.empty()) out.emplace_back(piece);
      start = i + 1;
    }
  }
  auto rest = unicode::trim(text.substr(start));
  if (!rest.empty()) out.emplace_back(rest);
  return out;
}

std::vector<std::string> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw SegmenterError(ErrorKind::kMalformedFixture,
                         "cannot read " + path.string());
  }
  std::vector<std::string> gold;
  for (std::string line; std::getline(in, line);) {
    auto trimmed = unicode::trim(std::string_view(line));
    if (!trimmed.empty()) gold.emplace_back(trimmed);
  }
  return gold;
}

double eval_corpus(std::span<const std::string> gold, const SegmentFn& segment,
                   size_t group_size) {
  if (gold.empty()) return 0.0;
  if (group_size == 0) group_size = 1;
  size_t recovered = 0;
  for (size_t g = 0; g < gold.size(); g += group_size) {
    auto group = gold.subspan(g, std::min(group_size, gold.size() - g));
    std::string joined;
    std::map<std::string, size_t> wanted;
    for (const auto& s : group) {
      if (!joined.empty()) joined.push_back(' ');
      joined += s;
      ++wanted[s];
    }
    for (const auto& s : segment(joined)) {
      auto it = wanted.find(s);
      if (it != wanted.end() && it->second > 0) {
        --it->second;
        ++recovered;
      }
    }
  }
  return static_cast<double>(recovered) / static_cast<double>(gold.size());
}

BenchReport bench(std::string_view text, const SegmentFn& segment, size_t runs) {
  BenchReport report;
  report.runs = std::max<size_t>(runs, 1);
  report.chars = unicode::decode_utf8(text).size();
  std::vector<double> times;
  for (size_t r = 0; r < report.runs; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    auto sentences = segment(text);
    auto t1 = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    report.sentences = sentences.size();
  }
  std::sort(times.begin(), times.end());
  size_t m = times.size();
  report.median_ms = m % 2 ? times[m / 2] : (times[m / 2 - 1] + times[m / 2]) / 2;
  return report;
}

namespace {

constexpr const char* kNouns[] = {
    "house", "window", "letter", "street", "evening", "door", "paper",
    "carriage", "matter", "lady", "gentleman", "fire", "room", "case",
    "clue", "hat", "station", "river", "garden", "light", "key", "watch",
    "morning", "table", "road", "friend", "client", "servant", "coat"};
constexpr const char* kVerbs[] = {
    "looked at", "opened", "closed", "examined", "carried", "found",
    "watched", "described", "followed", "remembered", "noticed", "held",
    "left", "took", "read"};
constexpr const char* kAdjectives[] = {
    "old", "dark", "quiet", "small", "singular", "curious", "cold", "grey",
    "narrow", "heavy", "bright", "strange", "long", "little", "empty"};
constexpr const char* kNames[] = {
    "Mr. Holmes", "Dr. Watson", "Mrs. Hudson", "Inspector Lestrade",
    "Miss Hunter", "Mr. Windibank", "Col. Ross", "St. Simon", "Prof. Moriarty"};
constexpr const char* kPlaces[] = {
    "Baker Street", "the U.S. embassy", "Charing Cross", "the Strand",
    "Waterloo", "the river", "St. James's Hall"};

template <size_t N>
const char* pick(std::mt19937& rng, const char* const (&arr)[N]) {
  return arr[std::uniform_int_distribution<size_t>(0, N - 1)(rng)];
}

std::string clause(std::mt19937& rng) {
  std::string s = pick(rng, kNames);
  s += " ";
  s += pick(rng, kVerbs);
  s += " the ";
  s += pick(rng, kAdjectives);
  s += " ";
  s += pick(rng, kNouns);
  return s;
}

std::string sentence(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 19);
  std::uniform_int_distribution<int> num(2, 99);
  std::string s;
  switch (kind(rng)) {
    case 0:
      return "\"Is it the " + std::string(pick(rng, kNouns)) + "?\" asked " +
             pick(rng, kNames) + ".";
    case 1:
      return "\"" + clause(rng) + ", and then " + pick(rng, kVerbs) +
             " it,\" said he.";
    case 2:
      return "It was " + std::to_string(num(rng)) + "." +
             std::to_string(num(rng)) + " miles from " + pick(rng, kPlaces) + ".";
    case 3:
      return "See p. " + std::to_string(num(rng)) + " for the " +
             pick(rng, kAdjectives) + " " + pick(rng, kNouns) + ".";
    case 4:
      return "What a " + std::string(pick(rng, kAdjectives)) + " " +
             pick(rng, kNouns) + " it was!";
    case 5:
      return clause(rng) + " (which was " + pick(rng, kAdjectives) +
             " enough) near " + pick(rng, kPlaces) + ".";
    case 6:
      return clause(rng) + "... and nothing more.";
    case 7:
      return "At " + std::to_string(num(rng) % 12 + 1) + " p.m. " + clause(rng) + ".";
    default:
      break;
  }
  s = clause(rng);
  std::uniform_int_distribution<int> extra(0, 3);
  for (int k = extra(rng); k > 0; --k) {
    s += ", while the ";
    s += pick(rng, kAdjectives);
    s += " ";
    s += pick(rng, kNouns);
    s += " ";
    s += pick(rng, kVerbs);
    s += " the ";
    s += pick(rng, kNouns);
  }
  s += kind(rng) < 2 ? "?" : ".";
  return s;
}

size_t word_count(std::string_view s) {
  size_t n = 0;
  bool in = false;
  for (char c : s) {
    bool ws = c == ' ' || c == '\n';
    if (!ws && !in) ++n;
    in = !ws;
  }
  return n;
}

}  // namespace

std::string synthetic_novel(size_t words, uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> para_len(3, 9);
  std::string out;
  size_t total = 0;
  while (total < words) {
    std::string para;
    for (int k = para_len(rng); k > 0 && total < words; --k) {
      std::string s = sentence(rng);
      total += word_count(s);
      if (!para.empty()) para += " ";
      para += s;
    }
    // Wrap at 70 columns.
    size_t col = 0;
    size_t i = 0;
    while (i < para.size()) {
      size_t j = para.find(' ', i);
      if (j == std::string::npos) j = para.size();
      size_t len = j - i;
      if (col > 0 && col + 1 + len > 70) {
        out += "\n";
        col = 0;
      } else if (col > 0) {
        out += " ";
        ++col;
      }
      out.append(para, i, len);
      col += len;
      i = j + 1;
    }
    out += "\n\n";
  }
  return out;
}

}  // namespace segtext
