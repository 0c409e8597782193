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
#include "support/fixtures.hpp"

using namespace subarr;

namespace {

std::string message_of(const std::string& text) {
  try {
    io::parse_arrangement(text, "in.json");
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

bool same(const lattice::Arrangement& a, const lattice::Arrangement& b) {
  if (a.ambient_dim != b.ambient_dim || a.atoms.size() != b.atoms.size()) return false;
  for (std::size_t i = 0; i < a.atoms.size(); ++i)
    if (a.atoms[i].name != b.atoms[i].name || !(a.atoms[i].space == b.atoms[i].space)) return false;
  return true;
}

}  // namespace

TEST_CASE("corpus files match the in-code arrangements") {
  for (const auto& [name, arr] : fixtures::geometric_corpus()) {
    CAPTURE(name);
    CHECK(same(io::load_arrangement(std::string(SUBARR_CORPUS_DIR) + "/" + name + ".json"), arr));
  }
  CHECK(same(io::load_arrangement(std::string(SUBARR_CORPUS_DIR) + "/non_geometric.json"), fixtures::non_geometric()));
}

TEST_CASE("rational entries are canonicalized") {
  const auto arr = io::parse_arrangement(R"({"ambient_dim": 3, "subspaces": [
    {"name": "a", "equations": [["2/4", "0", "0"], ["0", "-3/6", "0"]]}]})");
  const auto ref = fixtures::make(3, {{"a", {{1, 0, 0}, {0, 1, 0}}}});
  CHECK(arr.atoms[0].space == ref.atoms[0].space);
}

TEST_CASE("syntax errors carry line and column") {
  const std::string msg = message_of("{\n  \"ambient_dim\": 2,\n  \"subspaces\": [ oops ]\n}");
  CHECK(msg.rfind("in.json:3:", 0) == 0);
  CHECK(msg.find("syntax error") != std::string::npos);
}

TEST_CASE("schema errors name the JSON path") {
  CHECK(message_of(R"([1, 2])").find("$: expected an object") != std::string::npos);
  CHECK(message_of(R"({"ambient_dim": 2, "subspaces": [], "extra": 1})").find("unknown key 'extra'") !=
        std::string::npos);
  CHECK(message_of(R"({"subspaces": []})").find("missing 'ambient_dim'") != std::string::npos);
  CHECK(message_of(R"({"ambient_dim": 0, "subspaces": []})").find("$.ambient_dim") != std::string::npos);
  CHECK(message_of(R"({"ambient_dim": 2, "subspaces": []})").find("$.subspaces: expected a nonempty array") !=
        std::string::npos);
  CHECK(message_of(R"({"ambient_dim": 2, "subspaces": [{"name": "", "equations": [["1", "0"]]}]})")
            .find("$.subspaces[0].name") != std::string::npos);
  CHECK(message_of(R"({"ambient_dim": 2, "subspaces": [{"name": "a", "equations": [["1", "0"], ["0", "1"]]},
                                                       {"name": "a", "equations": [["1", "1"], ["0", "1"]]}]})")
            .find("duplicate name 'a'") != std::string::npos);
  CHECK(message_of(R"({"ambient_dim": 2, "subspaces": [{"name": "a", "equations": [["1", "0", "0"]]}]})")
            .find("$.subspaces[0].equations[0]: row has 3 entries, expected 2") != std::string::npos);
  CHECK(message_of(R"({"ambient_dim": 2, "subspaces": [{"name": "a", "equations": [["1", 0]]}]})")
            .find("$.subspaces[0].equations[0][1]") != std::string::npos);
}

TEST_CASE("malformed rationals are rejected") {
  for (const char* bad : {"1.5", "1/0", "1/-2", "+1", "", "1/02", " 1", "a"}) {
    CAPTURE(bad);
    const std::string text =
        std::string(R"({"ambient_dim": 2, "subspaces": [{"name": "a", "equations": [[")") + bad + R"(", "1"]]}]})";
    CHECK(message_of(text).find("is not a rational") != std::string::npos);
  }
}

TEST_CASE("missing files are input errors") {
  CHECK_THROWS_AS(io::load_arrangement("/nonexistent/arrangement.json"), InputError);
}
