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

#include <bit>

#include "doctest.h"
#include "subarr/cohomology.hpp"
#include "subarr/errors.hpp"
#include "support/dense_oracle.hpp"
#include "support/fixtures.hpp"

using namespace subarr;
using namespace subarr::cohomology;
using subarr::dga::RelativeAtomicAlgebra;

namespace {

std::shared_ptr<const CohomologyRing> ring_of(const lattice::Arrangement& arr) {
  auto lat = lattice::IntersectionLattice::build(arr);
  return CohomologyRing::compute(std::make_shared<RelativeAtomicAlgebra>(lat));
}

// Dense matrix of d: C^k -> C^{k+1}, rows indexed by the target basis.
oracle::DenseMat dense_differential(const RelativeAtomicAlgebra& a, int k) {
  const auto& src = a.basis_in_degree(k);
  const auto& dst = a.basis_in_degree(k + 1);
  oracle::DenseMat m(dst.size(), std::vector<mpq_class>(src.size()));
  for (std::size_t c = 0; c < src.size(); ++c) {
    const auto d = a.differential(src[c]);
    for (std::size_t r = 0; r < dst.size(); ++r) m[r][c] = d.coefficient(dst[r]);
  }
  return m;
}

std::size_t oracle_betti(const RelativeAtomicAlgebra& a, int k) {
  const std::size_t out_rank = oracle::dense_rank(dense_differential(a, k));
  const std::size_t in_rank = oracle::dense_rank(dense_differential(a, k - 1));
  return a.dim(k) - out_rank - in_rank;
}

AtomMask w(std::initializer_list<std::size_t> one_based) {
  AtomMask m = 0;
  for (auto i : one_based) m |= AtomMask{1} << (i - 1);
  return m;
}

}  // namespace

TEST_CASE("betti numbers on the documented examples") {
  CHECK(ring_of(fixtures::one_subspace())->betti_table() == std::map<int, std::size_t>{{0, 1}, {3, 1}});
  CHECK(ring_of(fixtures::generic_two())->betti_table() ==
        std::map<int, std::size_t>{{0, 1}, {3, 2}, {6, 1}});
  CHECK(ring_of(fixtures::two_share_line())->betti_table() ==
        std::map<int, std::size_t>{{0, 1}, {3, 2}, {4, 1}});
  CHECK(ring_of(fixtures::case_b_three())->betti_table() ==
        std::map<int, std::size_t>{{0, 1}, {3, 3}, {6, 2}});
  CHECK(ring_of(fixtures::boolean_three())->betti_table() ==
        std::map<int, std::size_t>{{0, 1}, {3, 3}, {6, 3}, {9, 1}});
}

TEST_CASE("betti numbers agree with a dense rank oracle") {
  for (const auto& [name, arr] : fixtures::geometric_corpus()) {
    CAPTURE(name);
    const auto ring = ring_of(arr);
    const auto& a = ring->algebra();
    for (int k = a.min_degree(); k <= a.max_degree(); ++k) {
      CAPTURE(k);
      CHECK(ring->betti(k) == oracle_betti(a, k));
      CHECK(ring->betti(k) == ring->cycle_dim(k) - ring->boundary_dim(k));
      CHECK(ring->representatives(k).size() == ring->betti(k));
    }
    CHECK(ring->betti(0) == 1);
    CHECK(ring->betti(1) == 0);
    CHECK(ring->betti(2) == 0);
  }
}

TEST_CASE("phi on the documented examples") {
  SUBCASE("two atoms sharing a line: e1 e2 maps to zero") {
    const auto ring = ring_of(fixtures::two_share_line());
    CHECK(phi_monomial(*ring, w({1, 2})).is_zero());
    CHECK_FALSE(phi_monomial(*ring, w({1})).is_zero());
    CHECK(phi_monomial(*ring, w({1})).degree == 3);
    CHECK(phi_monomial(*ring, 0) == ring->unit());
  }
  SUBCASE("generic pair: e1 e2 maps to the top class") {
    const auto ring = ring_of(fixtures::generic_two());
    const auto top = phi_monomial(*ring, w({1, 2}));
    CHECK(top.degree == 6);
    CHECK_FALSE(top.is_zero());
  }
  SUBCASE("three planes: the bracket is killed, monomials are not") {
    const auto ring = ring_of(fixtures::case_b_three());
    for (auto word : words_of_length(3, 2)) CHECK_FALSE(phi_monomial(*ring, word).is_zero());
    const auto img = phi(*ring, ExtElement::bracket({0, 1, 2}));
    for (const auto& [deg, v] : img) CHECK(v.is_zero());
  }
}

TEST_CASE("analyze_phi and classify") {
  SUBCASE("elliptic inputs") {
    for (auto arr : {fixtures::one_subspace(), fixtures::generic_two(), fixtures::boolean_three()}) {
      const auto ring = ring_of(arr);
      const auto an = analyze_phi(*ring);
      CHECK(an.injective());
      CHECK(an.kernel_by_wordlength.empty());
      const auto c = classify(*ring, an);
      CHECK(c.verdict == Verdict::Elliptic);
      CHECK(c.sphere_dimensions == std::vector<int>(arr.atoms.size(), 3));
      CHECK(check_exterior_iso(*ring, c));
      CHECK(check_vanishing_differentials(*ring, an).vacuous);
    }
  }
  SUBCASE("two atoms sharing a line is case A with r = 2") {
    const auto ring = ring_of(fixtures::two_share_line());
    const auto an = analyze_phi(*ring);
    REQUIRE(an.r.has_value());
    CHECK(*an.r == 2);
    REQUIRE(an.monomial_witness.has_value());
    CHECK(*an.monomial_witness == w({1, 2}));
    const auto c = classify(*ring, an);
    CHECK(c.verdict == Verdict::Hyperbolic);
    CHECK(c.hyperbolic_case == HyperbolicCase::A);
    REQUIRE(c.kernel_at_r.size() == 1);
    CHECK(c.kernel_at_r[0].to_string() == "e1e2");
    CHECK_THROWS_AS(check_exterior_iso(*ring, c), std::invalid_argument);
  }
  SUBCASE("three planes is case B with r = 2") {
    const auto ring = ring_of(fixtures::case_b_three());
    const auto an = analyze_phi(*ring);
    REQUIRE(an.r.has_value());
    CHECK(*an.r == 2);
    CHECK_FALSE(an.monomial_witness.has_value());
    const auto c = classify(*ring, an);
    CHECK(c.hyperbolic_case == HyperbolicCase::B);
    REQUIRE(c.kernel_at_r.size() == 1);
    const auto& k = c.kernel_at_r[0];
    CHECK((k == ExtElement::bracket({0, 1, 2}) || k == ExtElement::bracket({0, 1, 2}).scaled(Rat(-1))));
  }
  SUBCASE("four planes is case B with a two-dimensional kernel at r = 2") {
    const auto ring = ring_of(fixtures::case_b_four());
    const auto an = analyze_phi(*ring);
    REQUIRE(an.r.has_value());
    CHECK(*an.r == 2);
    CHECK(an.kernel_by_wordlength.at(2).size() == 3);
    CHECK(classify(*ring, an).hyperbolic_case == HyperbolicCase::B);
    CHECK(ring->betti(6) == 3);
  }
}

TEST_CASE("kernel vectors really are killed by phi") {
  for (const auto& [name, arr] : fixtures::geometric_corpus()) {
    CAPTURE(name);
    const auto ring = ring_of(arr);
    const auto an = analyze_phi(*ring);
    for (const auto& [s, basis] : an.kernel_by_wordlength) {
      for (const auto& k : basis) {
        CHECK(k.word_length() == s);
        for (const auto& [deg, v] : phi(*ring, k)) CHECK(v.is_zero());
      }
    }
    if (an.r) {
      for (std::size_t s = 1; s < *an.r; ++s) CHECK(an.kernel_by_wordlength.count(s) == 0);
    }
  }
}

TEST_CASE("vanishing differentials below r") {
  for (auto arr : {fixtures::two_share_line(), fixtures::case_b_three(), fixtures::case_b_four()}) {
    const auto ring = ring_of(arr);
    const auto an = analyze_phi(*ring);
    const auto rep = check_vanishing_differentials(*ring, an);
    CHECK_FALSE(rep.vacuous);
    CHECK(rep.pass);
    CHECK(rep.checked > 0);
  }
}

TEST_CASE("phi is multiplicative") {
  for (const auto& [name, arr] : fixtures::geometric_corpus()) {
    CAPTURE(name);
    const auto ring = ring_of(arr);
    const std::size_t masks = std::size_t{1} << arr.atoms.size();
    for (std::size_t a = 0; a < masks; ++a) {
      for (std::size_t b = 0; b < masks; ++b) {
        if (a & b) continue;
        const auto wa = static_cast<AtomMask>(a);
        const auto wb = static_cast<AtomMask>(b);
        ClassElement lhs = phi_monomial(*ring, wa | wb);
        lhs.coords = lhs.coords.scaled(Rat(dga::shuffle_sign(wa, wb)));
        CHECK(lhs == ring->product(phi_monomial(*ring, wa), phi_monomial(*ring, wb)));
      }
    }
  }
}

TEST_CASE("product on classes is graded commutative with unit") {
  for (const auto& [name, arr] : fixtures::geometric_corpus()) {
    CAPTURE(name);
    const auto ring = ring_of(arr);
    const auto one = ring->unit();
    for (int da = ring->min_degree(); da <= ring->max_degree(); ++da) {
      for (std::size_t i = 0; i < ring->betti(da); ++i) {
        const ClassElement x{da, exactla::Vec::unit(ring->betti(da), i)};
        CHECK(ring->product(one, x) == x);
        for (int db = ring->min_degree(); db <= ring->max_degree(); ++db) {
          for (std::size_t j = 0; j < ring->betti(db); ++j) {
            const ClassElement y{db, exactla::Vec::unit(ring->betti(db), j)};
            auto yx = ring->product(y, x);
            if ((da * db) % 2 != 0) yx.coords = yx.coords.scaled(Rat(-1));
            CHECK(ring->product(x, y) == yx);
          }
        }
      }
    }
  }
}

TEST_CASE("classes of independent subsets span cohomology") {
  for (const auto& [name, arr] : fixtures::geometric_corpus()) {
    CAPTURE(name);
    CHECK_FALSE(independent_generation_failure(*ring_of(arr)).has_value());
  }
}

TEST_CASE("class_of rejects non-cycles") {
  const auto ring = ring_of(fixtures::case_b_three());
  CHECK_THROWS_AS(ring->class_of(ring->algebra().generator(dga::SubsetGen(w({1, 2, 3})))), std::invalid_argument);
}
