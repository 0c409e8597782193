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

#include <random>

#include "doctest.h"
#include "subarr/errors.hpp"
#include "subarr/witness.hpp"
#include "support/fixtures.hpp"

using namespace subarr;
using namespace subarr::witness;
using subarr::cohomology::CohomologyRing;

namespace {

struct Analysis {
  std::shared_ptr<const CohomologyRing> ring;
  cohomology::Classification classification;
};

Analysis analyze(const lattice::Arrangement& arr) {
  auto lat = lattice::IntersectionLattice::build(arr);
  auto ring = CohomologyRing::compute(std::make_shared<dga::RelativeAtomicAlgebra>(lat));
  auto c = cohomology::classify(*ring, cohomology::analyze_phi(*ring));
  return {ring, c};
}

// Two atoms sharing a line plus an unrelated third atom in C^5.
lattice::Arrangement share_line_plus_one() {
  return fixtures::make(5, {{"x1", {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}}},
                            {"x2", {{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}}},
                            {"x3", {{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}}});
}

std::vector<TruncatedExterior::Generator> odd_generators(std::size_t n) {
  std::vector<TruncatedExterior::Generator> g;
  for (std::size_t i = 0; i < n; ++i) g.push_back({"g" + std::to_string(i + 1), 3});
  return g;
}

}  // namespace

TEST_CASE("truncated exterior algebras") {
  SUBCASE("top monomial killed") {
    const auto a = TruncatedExterior::build(odd_generators(3), {cohomology::ExtElement::monomial(0b111)});
    CHECK(a.dim(0) == 1);
    CHECK(a.dim(1) == 3);
    CHECK(a.dim(2) == 3);
    CHECK(a.dim(3) == 0);
    CHECK(a.top_length() == 2);
    CHECK(a.total_dim() == 7);
    a.verify();
    // e1 * e2e3 vanishes, e1 * e2 does not
    const Element e1 = a.basis_element(1, 0);
    const Element e2 = a.basis_element(1, 1);
    CHECK(is_zero(a.multiply(e1, a.multiply(e2, a.basis_element(1, 2)))));
    CHECK_FALSE(is_zero(a.multiply(e1, e2)));
    CHECK(is_zero(a.multiply(e1, e1)));
  }
  SUBCASE("no relations is the full exterior algebra") {
    const auto a = TruncatedExterior::build(odd_generators(4), {});
    CHECK(a.total_dim() == 16);
    CHECK(a.top_length() == 4);
    a.verify();
  }
  SUBCASE("bracket relation chooses e1-words first") {
    const auto a = TruncatedExterior::build(odd_generators(3), {cohomology::ExtElement::bracket({0, 1, 2})});
    CHECK(a.dim(2) == 2);
    CHECK(a.basis(2) == std::vector<AtomMask>{0b011, 0b101});
    CHECK(a.reduce(cohomology::ExtElement::bracket({0, 1, 2})).is_zero());
    a.verify();
  }
}

TEST_CASE("case A on two atoms sharing a line") {
  const auto an = analyze(fixtures::two_share_line());
  const auto w = build_case_a(*an.ring, an.classification);
  CHECK(w.atoms == std::vector<std::size_t>{0, 1});
  CHECK(w.retraction_verified);
  CHECK(w.loop_degree_a == 2);
  CHECK(w.loop_degree_b == 4);
  CHECK(w.algebra.dim(1) == 2);
  CHECK(w.algebra.dim(2) == 0);
  CHECK(w.algebra.generators()[0].degree == 3);
  CHECK(w.algebra.generators()[1].degree == 3);
  CHECK(w.retraction_basis_checked == 3);
  CHECK_THROWS_AS(build_case_b(*an.ring, an.classification), std::invalid_argument);
}

TEST_CASE("case A psi vanishes off the witness atoms") {
  const auto an = analyze(share_line_plus_one());
  REQUIRE(an.classification.hyperbolic_case == cohomology::HyperbolicCase::A);
  const auto w = build_case_a(*an.ring, an.classification);
  CHECK(w.atoms == std::vector<std::size_t>{0, 1});
  const auto& a = an.ring->algebra();
  for (AtomMask m = 0; m < 8; ++m) {
    if (!(m & 0b100)) continue;
    CHECK(is_zero(psi_of_cochain(w.algebra, w.atoms, a.generator(dga::SubsetGen(m)))));
  }
  CHECK(w.chain_map_cochains_checked == 4 * 2);
  CHECK(w.loop_degree_a >= 2);
  CHECK(w.loop_degree_b >= 2 * 2 - 2);
}

TEST_CASE("case B on three planes through the origin") {
  const auto an = analyze(fixtures::case_b_three());
  const auto w = build_case_b(*an.ring, an.classification);
  const auto& lat = an.ring->algebra().lattice();
  CHECK(w.r == 2);
  CHECK(w.sigma == std::vector<std::size_t>{0, 1, 2});
  CHECK(w.join_element == lat.top());
  CHECK(w.below == std::vector<std::size_t>{0, 1, 2});
  CHECK(w.dims_by_length == std::vector<std::size_t>{1, 3, 2, 0});
  CHECK(w.algebra.basis(2) == std::vector<AtomMask>{0b011, 0b101});
  CHECK(w.kernel_dim_at_r == 1);
  CHECK(w.rho_injective);
  CHECK(w.retraction_verified);
  CHECK_THROWS_AS(build_case_a(*an.ring, an.classification), std::invalid_argument);

  // rho of the bracket is d{x1,x2,x3} at the cochain level, hence exact.
  const auto& a = an.ring->algebra();
  dga::Cochain rho(6);
  const auto bracket = cohomology::ExtElement::bracket({0, 1, 2});
  for (const auto& [word, c] : bracket.terms()) rho = rho + a.product(a.generator(dga::SubsetGen(word.bits() & -word.bits())), a.generator(dga::SubsetGen(word.bits() & (word.bits() - 1)))).scaled(c);
  CHECK(rho == a.differential(dga::SubsetGen(0b111)));
}

TEST_CASE("case B on four planes through the origin") {
  const auto an = analyze(fixtures::case_b_four());
  const auto w = build_case_b(*an.ring, an.classification);
  CHECK(w.below.size() == 4);
  CHECK(w.algebra.dim(2) == 3);
  CHECK(w.kernel_dim_at_r == 3);
  CHECK(w.brackets_checked == 1);
  CHECK(w.retraction_verified);
}

TEST_CASE("bracket identity") {
  CHECK(verify_bracket_identity({1, 2}));
  CHECK(verify_bracket_identity({1, 2, 3}));
  CHECK(verify_bracket_identity({2}));
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 1; i < 9; ++i)
      if (rng() % 2) idx.push_back(i);
    if (idx.empty()) continue;
    CAPTURE(idx.size());
    CHECK(verify_bracket_identity(idx));
  }
  CHECK_THROWS_AS(verify_bracket_identity({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(verify_bracket_identity({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(verify_bracket_identity({}), std::invalid_argument);

  // r = 1 reads e_{i2} - e_{i1} = (e_{i2} - e_1) - (e_{i1} - e_1)
  using cohomology::ExtElement;
  const auto lhs = ExtElement::bracket({0, 2}).scaled(Rat(1)) - ExtElement::bracket({0, 1});
  CHECK(lhs == ExtElement::bracket({1, 2}));
}

TEST_CASE("elliptic inputs are rejected") {
  const auto an = analyze(fixtures::generic_two());
  CHECK_THROWS_AS(build_case_a(*an.ring, an.classification), std::invalid_argument);
  CHECK_THROWS_AS(build_case_b(*an.ring, an.classification), std::invalid_argument);
}
