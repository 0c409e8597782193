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

#include <string>

#include "doctest.h"
#include "subarr/errors.hpp"
#include "subarr/io.hpp"
#include "subarr/pipeline.hpp"
#include "subarr/selftest.hpp"
#include "support/fixtures.hpp"

using namespace subarr;
using nlohmann::json;

namespace {

std::string report_of(const lattice::Arrangement& arr, int n = 8) {
  pipeline::Options o;
  o.max_degree = n;
  return pipeline::serialize(pipeline::report_json(pipeline::analyze(arr, o)));
}

}  // namespace

TEST_CASE("single codim-2 subspace is elliptic with one 3-sphere") {
  const auto a = pipeline::analyze(fixtures::one_subspace());
  CHECK(a.classification.verdict == cohomology::Verdict::Elliptic);
  CHECK(a.classification.sphere_dimensions == std::vector<int>{3});
  CHECK(a.homotopy_ranks == std::map<int, std::size_t>{{3, 1}});
  CHECK_FALSE(a.growth.has_value());
  const json j = pipeline::report_json(a);
  CHECK(j["classification"]["verdict"] == "elliptic");
  CHECK(j["phi"]["r"].is_null());
  CHECK(j["witness"].is_null());
  CHECK(j["certificates"][0]["kind"] == "exterior_isomorphism");
}

TEST_CASE("elliptic models have one generator per atom and no differential") {
  for (const auto& arr : {fixtures::one_subspace(), fixtures::generic_two(), fixtures::boolean_three()}) {
    const auto a = pipeline::analyze(arr);
    std::size_t total = 0;
    for (const auto& [k, v] : a.homotopy_ranks) total += v;
    CHECK(total == arr.atoms.size());
    for (const auto& g : a.model_generators) CHECK(g.differential.empty());
  }
}

TEST_CASE("two subspaces sharing a line give case A with a certificate table") {
  const auto a = pipeline::analyze(fixtures::two_share_line());
  CHECK(a.classification.verdict == cohomology::Verdict::Hyperbolic);
  CHECK(*a.classification.hyperbolic_case == cohomology::HyperbolicCase::A);
  CHECK(*a.classification.r == 2);
  REQUIRE(a.growth.has_value());
  CHECK(a.growth->passed);
  CHECK(a.growth->rows.size() == 11);
  const json j = pipeline::report_json(a);
  CHECK(j["witness"]["case"] == "A");
  CHECK(j["witness"]["free_lie_generator_loop_degrees"] == json::array({2, 4}));
  CHECK(j["certificates"][0]["kind"] == "free_lie_lower_bound");
  CHECK(j["certificates"][0]["rows"][9]["lower_bound"] == "2");
  CHECK(j["certificates"][0]["rows"][9]["actual"] == 13);
}

TEST_CASE("case B report") {
  const json j = json::parse(report_of(fixtures::case_b_three(), 10));
  CHECK(j["classification"]["case"] == "B");
  CHECK(j["witness"]["algebra"]["dims_by_word_length"] == json::array({1, 3, 2, 0}));
  CHECK(j["witness"]["free_lie_generator_loop_degrees"].is_null());
  CHECK(j["certificates"][0]["kind"] == "growth_window");
  CHECK(j["certificates"][0]["low_sum"] == 4);
  CHECK(j["certificates"][0]["high_sum"] == 6);
  CHECK(j["phi"]["kernel"][0]["word_length"] == 2);
}

TEST_CASE("non-geometric lattice is rejected naming the pair") {
  try {
    pipeline::analyze(fixtures::non_geometric());
    FAIL("expected rejection");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("(x1, x3)") != std::string::npos);
  }
}

TEST_CASE("normalization warnings appear verbatim") {
  auto arr = fixtures::two_share_line();
  arr.atoms.push_back(fixtures::make(3, {{"x3", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}}).atoms[0]);
  const auto a = pipeline::analyze(arr);
  REQUIRE(a.normalized.warnings.size() == 1);
  const json j = pipeline::report_json(a);
  CHECK(j["warnings"] == json::array({a.normalized.warnings[0]}));
  CHECK(pipeline::report_text(a).find(a.normalized.warnings[0]) != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
  for (const auto& [name, arr] : fixtures::geometric_corpus()) {
    CAPTURE(name);
    CHECK(report_of(arr) == report_of(arr));
  }
}

TEST_CASE("serialization sorts keys and ends with a newline") {
  const std::string s = pipeline::serialize(json{{"b", 1}, {"a", json{{"d", 2}, {"c", 3}}}});
  CHECK(s == "{\n  \"a\": {\n    \"c\": 3,\n    \"d\": 2\n  },\n  \"b\": 1\n}\n");
}

TEST_CASE("option validation and resource limits") {
  pipeline::Options o;
  o.max_degree = 1;
  CHECK_THROWS_AS(pipeline::analyze(fixtures::one_subspace(), o), InputError);
  o.max_degree = 12;
  o.generator_cap = 3;
  CHECK_THROWS_AS(pipeline::analyze(fixtures::two_share_line(), o), ResourceLimitError);
}

TEST_CASE("dga axiom check and its negative control") {
  for (const auto& [name, arr] : fixtures::geometric_corpus()) {
    const dga::RelativeAtomicAlgebra alg(lattice::IntersectionLattice::build(arr));
    CHECK(selftest::check_dga_axioms(alg).pass);
  }
  const dga::RelativeAtomicAlgebra faulty(lattice::IntersectionLattice::build(fixtures::case_b_four()),
                                          dga::DgaOptions{true});
  const auto r = selftest::check_dga_axioms(faulty);
  CHECK_FALSE(r.pass);
  CHECK(r.failure == "d^2 != 0 on {x1,x2,x3,x4}");
}

TEST_CASE("self-test over the corpus") {
  selftest::Options o;
  o.corpus_dir = SUBARR_CORPUS_DIR;
  o.max_degree = 4;
  const auto truncated = selftest::run(o);
  CHECK(truncated.pass);
  CHECK(truncated.cases.size() == 7);
  o.inject_sign_fault = true;
  const auto faulty = selftest::run(o);
  CHECK_FALSE(faulty.pass);
  CHECK(faulty.summary().find("d^2 != 0 on {x1,x2,x3,x4}") != std::string::npos);
  o.corpus_dir = "/nonexistent";
  CHECK_THROWS_AS(selftest::run(o), InputError);
}
