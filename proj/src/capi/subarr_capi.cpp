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

#include "subarr/subarr.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "subarr/errors.hpp"
#include "subarr/io.hpp"
#include "subarr/pipeline.hpp"
#include "subarr/selftest.hpp"
#include "subarr/sullivan.hpp"

struct subarr_report {
  std::string json;
  std::string text;
  std::string verdict;
  std::string hyperbolic_case;
  int r = -1;
};

namespace {

thread_local std::string last_error;

subarr_status fail(subarr_status s, const std::string& message) {
  last_error = message;
  return s;
}

template <class F>
subarr_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return SUBARR_OK;
  } catch (const subarr::InvariantError& e) {
    return fail(SUBARR_ERR_INVARIANT, e.what());
  } catch (const subarr::InputError& e) {
    return fail(SUBARR_ERR_INPUT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SUBARR_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SUBARR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SUBARR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SUBARR_ERR_INTERNAL, "unknown error");
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

subarr::pipeline::Options to_options(const subarr_options* options) {
  subarr::pipeline::Options o;
  if (options) {
    o.max_degree = options->max_degree;
    o.generator_cap = options->generator_cap;
  }
  return o;
}

subarr_report* make_report(const subarr::lattice::Arrangement& arr, const subarr_options* options) {
  const auto a = subarr::pipeline::analyze(arr, to_options(options));
  auto* rep = new subarr_report;
  rep->json = subarr::pipeline::serialize(subarr::pipeline::report_json(a));
  rep->text = subarr::pipeline::report_text(a);
  rep->verdict = subarr::cohomology::to_string(a.classification.verdict);
  if (a.classification.hyperbolic_case) rep->hyperbolic_case = subarr::cohomology::to_string(*a.classification.hyperbolic_case);
  if (a.phi.r) rep->r = static_cast<int>(*a.phi.r);
  return rep;
}

}  // namespace

extern "C" {

void subarr_options_init(subarr_options* options) {
  if (!options) return;
  options->max_degree = subarr::pipeline::kDefaultMaxDegree;
  options->generator_cap = subarr::sullivan::kDefaultGeneratorCap;
}

subarr_status subarr_analyze_file(const char* path, const subarr_options* options, subarr_report** out) {
  if (!path || !out) return fail(SUBARR_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = make_report(subarr::io::load_arrangement(path), options); });
}

subarr_status subarr_analyze_json(const char* text, const char* source, const subarr_options* options,
                                  subarr_report** out) {
  if (!text || !out) return fail(SUBARR_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded(
      [&] { *out = make_report(subarr::io::parse_arrangement(text, source ? source : "<input>"), options); });
}

const char* subarr_report_json(const subarr_report* report) { return report ? report->json.c_str() : nullptr; }
const char* subarr_report_text(const subarr_report* report) { return report ? report->text.c_str() : nullptr; }
const char* subarr_report_verdict(const subarr_report* report) { return report ? report->verdict.c_str() : nullptr; }

const char* subarr_report_case(const subarr_report* report) {
  if (!report || report->hyperbolic_case.empty()) return nullptr;
  return report->hyperbolic_case.c_str();
}

int subarr_report_r(const subarr_report* report) { return report ? report->r : -1; }

void subarr_report_free(subarr_report* report) { delete report; }

subarr_status subarr_free_lie_ranks(const int* degrees, size_t count, int max_degree, int format, char** out) {
  if (!out || (count && !degrees)) return fail(SUBARR_ERR_ARGUMENT, "null argument");
  if (count == 0) return fail(SUBARR_ERR_ARGUMENT, "at least one generator degree is required");
  if (max_degree < 1) return fail(SUBARR_ERR_ARGUMENT, "degree bound must be at least 1");
  if (format != SUBARR_FORMAT_TEXT && format != SUBARR_FORMAT_JSON) return fail(SUBARR_ERR_ARGUMENT, "unknown format");
  *out = nullptr;
  return guarded([&] {
    const std::vector<int> degs(degrees, degrees + count);
    const auto ranks = subarr::sullivan::free_lie_ranks(degs, max_degree);
    if (format == SUBARR_FORMAT_JSON) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& [k, v] : ranks) rows.push_back({{"degree", k}, {"rank", v.get_str()}});
      *out = copy_out(subarr::pipeline::serialize({{"generator_degrees", degs}, {"max_degree", max_degree}, {"ranks", rows}}));
    } else {
      std::ostringstream s;
      s << "degree rank\n";
      for (const auto& [k, v] : ranks) s << k << " " << v.get_str() << "\n";
      *out = copy_out(s.str());
    }
  });
}

subarr_status subarr_selftest(const char* corpus_dir, int max_degree, int inject_sign_fault, char** summary,
                              int* passed) {
  if (!corpus_dir || !summary || !passed) return fail(SUBARR_ERR_ARGUMENT, "null argument");
  *summary = nullptr;
  *passed = 0;
  return guarded([&] {
    subarr::selftest::Options o;
    o.corpus_dir = corpus_dir;
    o.max_degree = max_degree;
    o.inject_sign_fault = inject_sign_fault != 0;
    const auto result = subarr::selftest::run(o);
    *summary = copy_out(result.summary());
    *passed = result.pass ? 1 : 0;
  });
}

void subarr_string_free(char* s) { std::free(s); }

const char* subarr_last_error(void) { return last_error.c_str(); }

const char* subarr_version(void) { return "0.1.0"; }

}  // extern "C"
