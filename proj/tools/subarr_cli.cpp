// Copyright 2026 The subarr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// subarr: analyze subspace arrangements, run the free Lie oracle, self-test.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "subarr/subarr.h"

namespace {

int exit_code(subarr_status s) {
  switch (s) {
    case SUBARR_OK: return 0;
    case SUBARR_ERR_INVARIANT: return 1;
    case SUBARR_ERR_INPUT:
    case SUBARR_ERR_ARGUMENT: return 2;
    default: return 1;
  }
}

int report_failure(subarr_status s) {
  const char* kind = s == SUBARR_ERR_INVARIANT ? "invariant failure" : s == SUBARR_ERR_INTERNAL ? "internal error" : "error";
  std::cerr << "subarr: " << kind << ": " << subarr_last_error() << "\n";
  return exit_code(s);
}

std::vector<int> parse_degrees(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--degrees", "not an integer: '" + item + "'");
    }
    if (used != item.size()) throw CLI::ValidationError("--degrees", "not an integer: '" + item + "'");
    if (v < 1) throw CLI::ValidationError("--degrees", "degrees must be at least 1");
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError("--degrees", "no degrees given");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational homotopy of complex subspace arrangement complements"};
  app.set_version_flag("--version", std::string(subarr_version()));
  app.require_subcommand(1);

  subarr_options options;
  subarr_options_init(&options);

  std::string path;
  std::string format = "json";
  auto* analyze = app.add_subcommand("analyze", "Analyze an arrangement file and print the report");
  analyze->add_option("file", path, "Arrangement JSON file")->required();
  analyze->add_option("--max-degree", options.max_degree, "Degree bound N for homotopy ranks")
      ->check(CLI::Range(2, 64))
      ->capture_default_str();
  analyze->add_option("--max-generators", options.generator_cap, "Abort when the model needs more generators")
      ->capture_default_str();
  analyze->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "Reference computations");
  oracle->require_subcommand(1);
  auto* free_lie = oracle->add_subcommand("free-lie", "Ranks of a free graded Lie algebra");
  std::string degrees;
  int oracle_max = 10;
  std::string oracle_format = "text";
  free_lie->add_option("--degrees", degrees, "Comma-separated generator degrees")->required();
  free_lie->add_option("--max", oracle_max, "Highest degree")->check(CLI::Range(1, 4096))->capture_default_str();
  free_lie->add_option("--format", oracle_format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "Run the invariant suite over the corpus");
  int self_max = 12;
  std::string corpus = SUBARR_CORPUS_DIR;
  bool inject = false;
  selftest->add_option("--max-degree", self_max, "Degree bound N")->check(CLI::Range(2, 64))->capture_default_str();
  selftest->add_option("--corpus", corpus, "Directory of arrangement files")->capture_default_str();
  selftest->add_flag("--inject-sign-bug", inject, "Drop the sign of the differential (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*analyze) {
    subarr_report* rep = nullptr;
    const subarr_status s = subarr_analyze_file(path.c_str(), &options, &rep);
    if (s != SUBARR_OK) return report_failure(s);
    std::fputs(format == "json" ? subarr_report_json(rep) : subarr_report_text(rep), stdout);
    subarr_report_free(rep);
    return 0;
  }

  if (*free_lie) {
    std::vector<int> degs;
    try {
      degs = parse_degrees(degrees);
    } catch (const CLI::ParseError& e) {
      app.exit(e);
      return 2;
    }
    char* out = nullptr;
    const subarr_status s = subarr_free_lie_ranks(degs.data(), degs.size(), oracle_max,
                                                  oracle_format == "json" ? SUBARR_FORMAT_JSON : SUBARR_FORMAT_TEXT, &out);
    if (s != SUBARR_OK) return report_failure(s);
    std::fputs(out, stdout);
    subarr_string_free(out);
    return 0;
  }

  if (*selftest) {
    char* summary = nullptr;
    int passed = 0;
    const subarr_status s = subarr_selftest(corpus.c_str(), self_max, inject ? 1 : 0, &summary, &passed);
    if (s != SUBARR_OK) return report_failure(s);
    std::fputs(summary, stdout);
    subarr_string_free(summary);
    return passed ? 0 : 1;
  }
  return 2;
}
