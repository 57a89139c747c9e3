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

#include "segtext/rule.h"

#include <unicode/uchar.h>

#include <algorithm>
#include <boost/regex/icu.hpp>
#include <charconv>
#include <stdexcept>
#include <utility>

#include "segtext/placeholder.h"
#include "segtext/unicode.h"

namespace segtext {

Stage stage_for_rank(int rank) {
  if (rank < 100 || rank > 899) {
    throw std::invalid_argument("rank " + std::to_string(rank) +
                                " outside 100-899");
  }
  return static_cast<Stage>(rank / 100);
}

namespace {

struct TemplatePart {
  enum class Kind { kLiteral, kGroup, kBreak, kMask } kind;
  std::u32string literal;
  int group = 0;
  // For kMask: pairs of (original, placeholder).
  std::vector<std::pair<char32_t, char32_t>> mask;
};

std::vector<TemplatePart> parse_template(const std::string& rule_id,
                                         std::string_view tmpl) {
  const auto& registry = PlaceholderRegistry::instance();
  std::vector<TemplatePart> parts;
  std::u32string pending;
  auto flush = [&] {
    if (!pending.empty()) {
      parts.push_back({TemplatePart::Kind::kLiteral, pending, 0, {}});
      pending.clear();
    }
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("rule " + rule_id + ": " + what);
  };
  std::u32string t = unicode::decode_utf8(tmpl);
  for (size_t i = 0; i < t.size(); ++i) {
    char32_t c = t[i];
    if (c == U'\\' && i + 1 < t.size()) {
      pending.push_back(t[++i]);
    } else if (c == U'$') {
      size_t j = i + 1;
      int n = 0;
      while (j < t.size() && t[j] >= U'0' && t[j] <= U'9') {
        n = n * 10 + static_cast<int>(t[j] - U'0');
        ++j;
      }
      if (j == i + 1) fail("dangling '$' in replacement");
      flush();
      parts.push_back({TemplatePart::Kind::kGroup, {}, n, {}});
      i = j - 1;
    } else if (c == U'{') {
      size_t close = t.find(U'}', i);
      if (close == std::u32string::npos) fail("unterminated '{' in replacement");
      std::string name = unicode::encode_utf8(t.substr(i + 1, close - i - 1));
      flush();
      if (name == "break") {
        parts.push_back({TemplatePart::Kind::kBreak, {}, 0, {}});
      } else if (name.rfind("mask:", 0) == 0) {
        TemplatePart part{TemplatePart::Kind::kMask, {}, 0, {}};
        std::string_view rest = std::string_view(name).substr(5);
        while (!rest.empty()) {
          size_t comma = rest.find(',');
          std::string_view one = rest.substr(0, comma);
          auto cp = registry.find(one);
          if (!cp) fail("unknown placeholder '" + std::string(one) + "'");
          part.mask.emplace_back(registry.original(*cp), *cp);
          rest = comma == std::string_view::npos ? std::string_view()
                                                 : rest.substr(comma + 1);
        }
        parts.push_back(std::move(part));
      } else {
        auto cp = registry.find(name);
        if (!cp || *cp == kBreakMarker) fail("unknown placeholder '" + name + "'");
        pending.push_back(*cp);
      }
      i = close;
    } else {
      pending.push_back(c);
    }
  }
  flush();
  return parts;
}

// Index of the ')' closing the group opened at p[open].
size_t find_close(std::u32string_view p, size_t open) {
  int depth = 0;
  bool in_class = false;
  for (size_t i = open; i < p.size(); ++i) {
    char32_t c = p[i];
    if (c == U'\\') {
      ++i;
    } else if (in_class) {
      if (c == U']') in_class = false;
    } else if (c == U'[') {
      in_class = true;
      if (i + 1 < p.size() && p[i + 1] == U'^') ++i;
      if (i + 1 < p.size() && p[i + 1] == U']') ++i;
    } else if (c == U'(') {
      ++depth;
    } else if (c == U')') {
      if (--depth == 0) return i;
    }
  }
  return std::u32string_view::npos;
}

std::vector<std::u32string_view> split_alternatives(std::u32string_view p) {
  std::vector<std::u32string_view> out;
  size_t start = 0;
  int depth = 0;
  bool in_class = false;
  for (size_t i = 0; i < p.size(); ++i) {
    char32_t c = p[i];
    if (c == U'\\') {
      ++i;
    } else if (in_class) {
      if (c == U']') in_class = false;
    } else if (c == U'[') {
      in_class = true;
      if (i + 1 < p.size() && p[i + 1] == U'^') ++i;
      if (i + 1 < p.size() && p[i + 1] == U']') ++i;
    } else if (c == U'(') {
      ++depth;
    } else if (c == U')') {
      --depth;
    } else if (c == U'|' && depth == 0) {
      out.push_back(p.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(p.substr(start));
  return out;
}

bool starts_with(std::u32string_view p, size_t i, std::u32string_view s) {
  return p.substr(i, s.size()) == s;
}

// Parses an escape at p[i] == '\\'. Returns the literal or 0 when the escape
// is a class such as \d.
char32_t escape_literal(std::u32string_view p, size_t& i) {
  if (i + 1 >= p.size()) return 0;
  char32_t c = p[i + 1];
  if (c == U'x' && i + 2 < p.size() && p[i + 2] == U'{') {
    size_t close = p.find(U'}', i);
    if (close == std::u32string_view::npos) return 0;
    char32_t v = 0;
    for (size_t k = i + 3; k < close; ++k) {
      char32_t h = p[k];
      int d = (h >= U'0' && h <= U'9')   ? h - U'0'
              : (h >= U'a' && h <= U'f') ? h - U'a' + 10
              : (h >= U'A' && h <= U'F') ? h - U'A' + 10
                                         : -1;
      if (d < 0) return 0;
      v = v * 16 + static_cast<char32_t>(d);
    }
    i = close + 1;
    return v;
  }
  if (c == U't') { i += 2; return U'\t'; }
  if (c == U'n') { i += 2; return U'\n'; }
  if (c == U'r') { i += 2; return U'\r'; }
  if (unicode::is_alnum(c)) return 0;
  i += 2;
  return c;
}

bool derive(std::u32string_view p, std::u32string& out);

// First consuming atom of a sequence.
bool derive_sequence(std::u32string_view p, std::u32string& out) {
  size_t i = 0;
  while (i < p.size()) {
    if (p[i] == U'^') {
      ++i;
    } else if (p[i] == U'\\' && i + 1 < p.size() &&
               (p[i + 1] == U'b' || p[i + 1] == U'B' || p[i + 1] == U'A' ||
                p[i + 1] == U'G')) {
      i += 2;
    } else if (starts_with(p, i, U"(?=") || starts_with(p, i, U"(?!") ||
               starts_with(p, i, U"(?<=") || starts_with(p, i, U"(?<!")) {
      size_t close = find_close(p, i);
      if (close == std::u32string_view::npos) return false;
      i = close + 1;
    } else {
      break;
    }
  }
  if (i >= p.size()) return false;
  std::u32string atom;
  char32_t c = p[i];
  size_t next = i + 1;
  if (c == U'\\') {
    char32_t lit = escape_literal(p, i);
    if (lit == 0) return false;
    atom.push_back(lit);
    next = i;
  } else if (c == U'[') {
    size_t j = i + 1;
    if (j < p.size() && p[j] == U'^') return false;
    bool first = true;
    while (j < p.size() && (p[j] != U']' || first)) {
      first = false;
      char32_t lo;
      if (p[j] == U'\\') {
        lo = escape_literal(p, j);
        if (lo == 0) return false;
      } else if (p[j] == U'[') {
        return false;
      } else {
        lo = p[j++];
      }
      if (j + 1 < p.size() && p[j] == U'-' && p[j + 1] != U']') {
        char32_t hi;
        ++j;
        if (p[j] == U'\\') {
          hi = escape_literal(p, j);
          if (hi == 0) return false;
        } else {
          hi = p[j++];
        }
        if (hi < lo || hi - lo > 256) return false;
        for (char32_t k = lo; k <= hi; ++k) atom.push_back(k);
      } else {
        atom.push_back(lo);
      }
    }
    if (j >= p.size()) return false;
    next = j + 1;
  } else if (c == U'(') {
    size_t close = find_close(p, i);
    if (close == std::u32string_view::npos) return false;
    size_t body = i + 1;
    if (starts_with(p, i, U"(?:") || starts_with(p, i, U"(?>")) {
      body = i + 3;
    } else if (starts_with(p, i, U"(?")) {
      return false;
    }
    if (!derive(p.substr(body, close - body), atom)) return false;
    next = close + 1;
  } else if (c == U'.' || c == U'|' || c == U')' || c == U'$' ||
             c == U'*' || c == U'+' || c == U'?' || c == U'{') {
    return false;
  } else {
    atom.push_back(c);
  }
  if (next < p.size()) {
    char32_t q = p[next];
    if (q == U'?' || q == U'*') return false;
    if (q == U'{' && next + 1 < p.size() && p[next + 1] == U'0') return false;
  }
  out += atom;
  return true;
}

bool derive(std::u32string_view p, std::u32string& out) {
  for (auto alt : split_alternatives(p)) {
    if (!derive_sequence(alt, out)) return false;
  }
  return true;
}

}  // namespace

std::u32string trigger_chars(std::string_view pattern) {
  std::u32string p = unicode::decode_utf8(pattern);
  bool icase = false;
  std::u32string_view view(p);
  if (view.substr(0, 4) == U"(?i)") {
    icase = true;
    view.remove_prefix(4);
  }
  std::u32string out;
  if (!derive(view, out)) return {};
  if (icase) {
    size_t n = out.size();
    for (size_t k = 0; k < n; ++k) {
      out.push_back(static_cast<char32_t>(u_toupper(static_cast<UChar32>(out[k]))));
      out.push_back(static_cast<char32_t>(u_tolower(static_cast<UChar32>(out[k]))));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void validate_pattern(std::string_view pattern) {
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("unsupported pattern construct (" + what +
                                "): " + std::string(pattern));
  };
  for (size_t i = 0; i < pattern.size(); ++i) {
    char c = pattern[i];
    if (c == '\\' && i + 1 < pattern.size()) {
      char n = pattern[i + 1];
      if (n >= '1' && n <= '9') fail("backreference");
      if (n == 'k' || n == 'g') fail("backreference");
      ++i;
    } else if (c == '(' && i + 2 < pattern.size() && pattern[i + 1] == '?') {
      char n = pattern[i + 2];
      if (n == 'P' && i + 3 < pattern.size() && pattern[i + 3] == '=') {
        fail("backreference");
      }
      if (n == 'R' || n == '&' || (n >= '0' && n <= '9') || n == '+') {
        fail("recursion");
      }
      if (n == '(') fail("conditional");
    }
  }
}

class CompiledRule {
 public:
  explicit CompiledRule(const Rule& rule)
      : id_(rule.id), stage_(stage_for_rank(rule.rank)) {
    validate_pattern(rule.pattern);
    try {
      re_ = boost::make_u32regex(rule.pattern);
    } catch (const boost::regex_error& e) {
      throw std::invalid_argument("rule " + rule.id + ": bad pattern: " +
                                  e.what());
    }
    parts_ = parse_template(rule.id, rule.replacement);
    trigger_ = trigger_chars(rule.pattern);
  }

  Stage stage() const { return stage_; }

  void apply(std::u32string& text, std::vector<size_t>* breaks,
             size_t offset) const {
    if (!trigger_.empty() &&
        text.find_first_of(trigger_) == std::u32string::npos) {
      return;
    }
    struct Edit {
      size_t pos;
      std::u32string out;
      std::vector<size_t> brk;
    };
    std::vector<Edit> edits;
    const auto* base = reinterpret_cast<const UChar32*>(text.data());
    const auto* end = base + text.size();
    const auto* first = base;
    boost::match_results<const UChar32*> m;
    auto flags = boost::match_default | boost::match_not_dot_newline;
    while (first <= end &&
           boost::regex_search(first, end, m, re_, flags, base)) {
      Edit edit{static_cast<size_t>(m[0].first - base), {}, {}};
      expand(m, edit.out, edit.brk);
      if (edit.out.size() != static_cast<size_t>(m.length(0))) {
        throw std::logic_error("rule " + id_ + " changes text length");
      }
      edits.push_back(std::move(edit));
      first = m[0].second;
      if (m.length(0) == 0) {
        if (first == end) break;
        ++first;
      }
      flags |= boost::match_prev_avail;
    }
    for (auto& e : edits) {
      std::copy(e.out.begin(), e.out.end(), text.begin() + e.pos);
      if (breaks) {
        for (size_t b : e.brk) breaks->push_back(offset + e.pos + b);
      }
    }
  }

 private:
  void expand(const boost::match_results<const UChar32*>& m,
              std::u32string& out, std::vector<size_t>& brk) const {
    for (const auto& part : parts_) {
      switch (part.kind) {
        case TemplatePart::Kind::kLiteral:
          out += part.literal;
          break;
        case TemplatePart::Kind::kGroup:
          if (part.group < static_cast<int>(m.size()) && m[part.group].matched) {
            for (auto p = m[part.group].first; p != m[part.group].second; ++p) {
              out.push_back(static_cast<char32_t>(*p));
            }
          }
          break;
        case TemplatePart::Kind::kBreak:
          brk.push_back(out.size());
          break;
        case TemplatePart::Kind::kMask:
          for (auto p = m[0].first; p != m[0].second; ++p) {
            char32_t c = static_cast<char32_t>(*p);
            for (const auto& [orig, cp] : part.mask) {
              if (c == orig) {
                c = cp;
                break;
              }
            }
            out.push_back(c);
          }
          break;
      }
    }
  }

  std::string id_;
  Stage stage_;
  boost::u32regex re_;
  std::vector<TemplatePart> parts_;
  std::u32string trigger_;
};

RuleGroup::RuleGroup() = default;
RuleGroup::RuleGroup(RuleGroup&&) noexcept = default;
RuleGroup& RuleGroup::operator=(RuleGroup&&) noexcept = default;
RuleGroup::RuleGroup(const RuleGroup&) = default;
RuleGroup& RuleGroup::operator=(const RuleGroup&) = default;
RuleGroup::~RuleGroup() = default;

RuleGroup::RuleGroup(std::string name, std::vector<Rule> rules)
    : name_(std::move(name)), rules_(std::move(rules)) {
  std::stable_sort(rules_.begin(), rules_.end(),
                   [](const Rule& a, const Rule& b) { return a.rank < b.rank; });
  compile();
}

void RuleGroup::compile() {
  compiled_.clear();
  compiled_.reserve(rules_.size());
  for (const auto& r : rules_) {
    compiled_.push_back(std::make_shared<const CompiledRule>(r));
  }
}

RuleGroup RuleGroup::merged(const std::vector<Rule>& overrides) const {
  std::vector<Rule> rules = rules_;
  for (const auto& o : overrides) {
    auto it = std::find_if(rules.begin(), rules.end(),
                           [&](const Rule& r) { return r.id == o.id; });
    if (o.pattern == "-") {
      if (it != rules.end()) rules.erase(it);
    } else if (it != rules.end()) {
      *it = o;
    } else {
      rules.push_back(o);
    }
  }
  return RuleGroup(name_, std::move(rules));
}

void RuleGroup::apply_stage(Stage stage, std::u32string& text,
                            std::vector<size_t>* breaks, size_t offset) const {
  for (const auto& rule : compiled_) {
    if (rule->stage() == stage) rule->apply(text, breaks, offset);
  }
}

void RuleGroup::apply_all(MaskedText& text) const {
  for (const auto& rule : compiled_) rule->apply(text.text, &text.breaks, 0);
}

std::u32string apply_group(std::u32string_view text, const RuleGroup& group) {
  MaskedText mt{std::u32string(text), {}};
  group.apply_all(mt);
  std::sort(mt.breaks.begin(), mt.breaks.end());
  std::u32string out;
  out.reserve(mt.text.size() + mt.breaks.size());
  size_t b = 0;
  for (size_t i = 0; i <= mt.text.size(); ++i) {
    while (b < mt.breaks.size() && mt.breaks[b] == i) {
      out.push_back(kBreakMarker);
      ++b;
    }
    if (i < mt.text.size()) out.push_back(mt.text[i]);
  }
  return out;
}

std::vector<Rule> parse_rule_table(std::string_view tsv) {
  std::vector<Rule> rules;
  size_t line_no = 0;
  while (!tsv.empty()) {
    size_t nl = tsv.find('\n');
    std::string_view line = tsv.substr(0, nl);
    tsv = nl == std::string_view::npos ? std::string_view() : tsv.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (unicode::trim(line).empty() || unicode::trim(line)[0] == '#') continue;
    std::vector<std::string_view> fields;
    size_t start = 0;
    for (;;) {
      size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    auto fail = [&](const std::string& what) {
      throw std::invalid_argument("rule table line " + std::to_string(line_no) +
                                  ": " + what);
    };
    if (fields.size() != 4) fail("expected 4 tab-separated fields");
    Rule r;
    r.id = std::string(fields[0]);
    if (r.id.empty()) fail("empty id");
    auto [p, ec] = std::from_chars(fields[1].data(),
                                   fields[1].data() + fields[1].size(), r.rank);
    if (ec != std::errc() || p != fields[1].data() + fields[1].size()) {
      fail("bad rank");
    }
    try {
      stage_for_rank(r.rank);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    r.pattern = std::string(fields[2]);
    r.replacement = std::string(fields[3]);
    rules.push_back(std::move(r));
  }
  return rules;
}

}  // namespace segtext
