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

#include "cli.h"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "segtext/cleaner.h"
#include "segtext/config.h"
#include "segtext/error.h"
#include "segtext/harness.h"
#include "segtext/processor.h"

namespace segtext::cli {
namespace {

using json = nlohmann::ordered_json;

// Raised for unreadable or unwritable files.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_all(in);
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot read " + path);
  return read_all(file);
}

std::string percent(double ratio) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(2) << ratio * 100.0;
  return ss.str();
}

// Non-ASCII stays as raw UTF-8; invalid bytes become U+FFFD.
std::string dump(const json& j) {
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

struct SegmentArgs {
  std::string lang;
  bool char_span = false;
  bool clean = false;
  std::string doc_type = "plain";
  std::string format = "lines";
  std::string file;
};

struct CleanArgs {
  std::string lang;
  std::string doc_type = "plain";
  std::string file;
  bool report = false;
};

struct GrsArgs {
  std::string lang;
  std::string fixture;
  double min_accuracy = 0.9;
  bool baseline = false;
  std::string format = "table";
};

struct BenchArgs {
  std::string lang;
  size_t reps = 5;
  std::string file;
  size_t words = 100000;
  std::string format = "table";
};

int do_segment(const SegmentArgs& a, std::istream& in, std::ostream& out) {
  auto config = make_config(a.lang, a.clean, a.char_span, a.doc_type);
  std::string text = read_input(a.file, in);
  bool jsonl = a.format == "jsonl";
  if (a.char_span) {
    for (const auto& span : segment_spans(config, text)) {
      if (jsonl) {
        out << dump({{"text", span.sentence}, {"start", span.start}, {"end", span.end}})
            << '\n';
      } else {
        out << span.start << '\t' << span.end << '\t' << span.sentence << '\n';
      }
    }
    return kOk;
  }
  for (const auto& s : segment(config, text)) {
    if (jsonl) {
      out << dump({{"text", s}}) << '\n';
    } else {
      out << s << '\n';
    }
  }
  return kOk;
}

int do_clean(const CleanArgs& a, std::istream& in, std::ostream& out,
             std::ostream& err) {
  auto config = make_config(a.lang, true, false, a.doc_type);
  auto report = clean(read_input(a.file, in), config.doc_type, *config.profile);
  out << report.output;
  if (a.report) {
    for (const auto& action : report.actions) {
      err << action.rule << '\t' << action.count << '\n';
    }
  }
  return kOk;
}

void print_report(std::ostream& out, std::string_view system, const GrsReport& r,
                  bool as_json) {
  if (as_json) {
    out << dump({{"system", system},
                 {"passed", r.passed},
                 {"total", r.total},
                 {"accuracy", percent(r.accuracy())}})
        << '\n';
  } else {
    out << std::left << std::setw(10) << system << r.passed << '/' << r.total
        << "  " << percent(r.accuracy()) << "%\n";
  }
}

int do_grs(const GrsArgs& a, std::ostream& out) {
  auto config = make_config(a.lang);
  std::string path = a.fixture.empty() ? "fixtures/grs/" + a.lang + ".jsonl"
                                       : a.fixture;
  if (!std::ifstream(path)) throw IoError("cannot read fixture " + path);
  auto rules = load_grs(path);
  bool as_json = a.format == "json";
  auto report = run_grs(rules, config);
  for (size_t i = 0; i < rules.size(); ++i) {
    const auto& o = report.outcomes[i];
    if (as_json) {
      json rec = {{"id", o.id}, {"passed", o.passed}};
      if (!o.passed) {
        rec["expected"] = o.expected;
        rec["actual"] = o.actual;
        if (!o.error.empty()) rec["error"] = o.error;
      }
      out << dump(rec) << '\n';
    } else {
      out << (o.passed ? "PASS " : "FAIL ") << std::setw(4) << std::right << o.id
          << "  " << rules[i].description << '\n';
      if (!o.passed) {
        out << "       expected " << dump(o.expected) << "\n       actual   "
            << (o.error.empty() ? dump(o.actual) : "error: " + o.error) << '\n';
      }
    }
  }
  print_report(out, "pipeline", report, as_json);
  if (a.baseline) {
    print_report(out, "baseline", run_grs(rules, SegmentFn(naive_segment)), as_json);
  }
  return report.accuracy() >= a.min_accuracy ? kOk : kRuntime;
}

int do_bench(const BenchArgs& a, std::istream& in, std::ostream& out) {
  auto config = make_config(a.lang);
  std::string text = a.file.empty() ? synthetic_novel(a.words) : read_input(a.file, in);
  auto r = bench(text, [&](std::string_view t) { return segment(config, t); }, a.reps);
  double throughput = r.median_ms > 0 ? r.chars / (r.median_ms / 1000.0) : 0.0;
  if (a.format == "json") {
    out << dump({{"median_ms", r.median_ms},
                 {"runs", r.runs},
                 {"sentences", r.sentences},
                 {"chars", r.chars},
                 {"chars_per_second", throughput}})
        << '\n';
  } else {
    out << std::fixed << std::setprecision(2) << "median_ms         " << r.median_ms
        << "\nruns              " << r.runs << "\nsentences         " << r.sentences
        << "\nchars             " << r.chars << "\nchars_per_second  "
        << std::setprecision(0) << throughput << '\n';
  }
  return kOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUnknownLanguage:
    case ErrorKind::kIncompatibleOptions:
    case ErrorKind::kMalformedFixture:
      return kUsage;
    case ErrorKind::kReservedCodepointInInput:
      return kRuntime;
  }
  return kRuntime;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Rule-based sentence segmentation", "segtext"};
  app.require_subcommand(1);
  const std::vector<std::string> doc_types{"plain", "pdf"};

  auto add_lang = [](CLI::App* sub, std::string& lang) {
    sub->add_option("-l,--lang", lang, "Two-letter language code")
        ->envname("SEGTEXT_LANG")
        ->required();
  };

  SegmentArgs seg;
  auto* seg_cmd = app.add_subcommand("segment", "Split text into sentences");
  add_lang(seg_cmd, seg.lang);
  seg_cmd->add_flag("--char-span", seg.char_span, "Report character offsets");
  seg_cmd->add_flag("--clean", seg.clean, "Clean the text first (destructive)");
  seg_cmd->add_option("--doc-type", seg.doc_type)
      ->check(CLI::IsMember(doc_types))
      ->capture_default_str();
  seg_cmd->add_option("--format", seg.format)
      ->check(CLI::IsMember({"lines", "jsonl"}))
      ->capture_default_str();
  seg_cmd->add_option("file", seg.file, "Input file; standard input when absent");

  CleanArgs cl;
  auto* clean_cmd = app.add_subcommand("clean", "Print the cleaned text");
  add_lang(clean_cmd, cl.lang);
  clean_cmd->add_option("--doc-type", cl.doc_type)
      ->check(CLI::IsMember(doc_types))
      ->capture_default_str();
  clean_cmd->add_flag("--report", cl.report, "Print per-step counts to stderr");
  clean_cmd->add_option("file", cl.file, "Input file; standard input when absent");

  GrsArgs grs;
  auto* grs_cmd = app.add_subcommand("grs", "Score a golden rule fixture");
  add_lang(grs_cmd, grs.lang);
  grs_cmd->add_option("--fixture", grs.fixture,
                      "Fixture path (default fixtures/grs/<lang>.jsonl)");
  grs_cmd->add_option("--min-accuracy", grs.min_accuracy)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  grs_cmd->add_flag("--baseline", grs.baseline, "Also score the naive splitter");
  grs_cmd->add_option("--format", grs.format)
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  BenchArgs bn;
  auto* bench_cmd = app.add_subcommand("bench", "Time segmentation of a document");
  add_lang(bench_cmd, bn.lang);
  bench_cmd->add_option("--reps", bn.reps)
      ->check(CLI::Range(size_t{1}, size_t{1000000}))
      ->capture_default_str();
  bench_cmd->add_option("--file", bn.file,
                        "Text to segment; generated prose when absent");
  bench_cmd->add_option("--words", bn.words, "Size of the generated prose")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--format", bn.format)
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "segtext: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*seg_cmd) return do_segment(seg, in, out);
    if (*clean_cmd) return do_clean(cl, in, out, err);
    if (*grs_cmd) return do_grs(grs, out);
    return do_bench(bn, in, out);
  } catch (const SegmenterError& e) {
    err << "segtext: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const IoError& e) {
    err << "segtext: " << e.what() << '\n';
    return kRuntime;
  } catch (const std::exception& e) {
    err << "segtext: " << e.what() << '\n';
    return kRuntime;
  }
}

}  // namespace segtext::cli
