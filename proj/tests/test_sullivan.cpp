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

#include <functional>
#include <numeric>

#include "doctest.h"
#include "subarr/errors.hpp"
#include "subarr/sullivan.hpp"
#include "support/fixtures.hpp"

using namespace subarr;
using namespace subarr::sullivan;

namespace {

std::map<int, std::size_t> ranks_of(const GradedAlgebra& h, int n) {
  const auto model = minimal_model(h, n);
  model.verify();
  return model.ranks();
}

std::shared_ptr<const cohomology::CohomologyRing> ring_of(const lattice::Arrangement& arr) {
  auto lat = lattice::IntersectionLattice::build(arr);
  return cohomology::CohomologyRing::compute(std::make_shared<dga::RelativeAtomicAlgebra>(lat));
}

// Witt's necklace formula for the free Lie algebra on q generators of degree 1.
long witt(long q, long k) {
  auto mobius = [](long n) {
    int sign = 1;
    for (long p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
    return n > 1 ? -sign : sign;
  };
  long total = 0;
  for (long d = 1; d <= k; ++d) {
    if (k % d) continue;
    long power = 1;
    for (long i = 0; i < k / d; ++i) power *= q;
    total += mobius(d) * power;
  }
  return total / k;
}

// Lyndon words over letters with the given weights, counted by total weight.
// For even weights this is the free graded Lie algebra dimension.
std::map<int, long> lyndon_counts(const std::vector<int>& weights, int max_weight) {
  std::map<int, long> out;
  std::vector<int> word;
  std::function<void(int)> grow = [&](int weight) {
    if (!word.empty()) {
      bool lyndon = true;
      const std::size_t n = word.size();
      for (std::size_t r = 1; r < n && lyndon; ++r) {
        // rotation starting at r must be strictly greater
        for (std::size_t i = 0; i < n; ++i) {
          const int a = word[(r + i) % n], b = word[i];
          if (a != b) {
            lyndon = a > b;
            break;
          }
          if (i + 1 == n) lyndon = false;
        }
      }
      if (lyndon) ++out[weight];
    }
    for (int letter = 0; letter < static_cast<int>(weights.size()); ++letter) {
      if (weight + weights[letter] > max_weight) continue;
      word.push_back(letter);
      grow(weight + weights[letter]);
      word.pop_back();
    }
  };
  grow(0);
  return out;
}

std::map<int, long> as_long(const std::map<int, mpz_class>& m) {
  std::map<int, long> out;
  for (const auto& [k, v] : m) out.emplace(k, v.get_si());
  return out;
}

}  // namespace

TEST_CASE("free Lie ranks on the documented examples") {
  CHECK(as_long(free_lie_ranks({2, 2}, 10)) == std::map<int, long>{{2, 2}, {4, 1}, {6, 2}, {8, 3}, {10, 6}});
  CHECK(as_long(free_lie_ranks({2, 4}, 10)) == std::map<int, long>{{2, 1}, {4, 1}, {6, 1}, {8, 1}, {10, 2}});
  CHECK(as_long(free_lie_ranks({3}, 6)) == std::map<int, long>{{3, 1}, {6, 1}});
  CHECK_THROWS_AS(free_lie_ranks({0}, 4), std::invalid_argument);
}

TEST_CASE("free Lie ranks agree with the Witt formula") {
  for (long q = 1; q <= 4; ++q) {
    const auto ranks = free_lie_ranks(std::vector<int>(static_cast<std::size_t>(q), 2), 24);
    for (long k = 1; k <= 12; ++k) {
      CAPTURE(q);
      CAPTURE(k);
      auto it = ranks.find(static_cast<int>(2 * k));
      CHECK((it == ranks.end() ? 0 : it->second.get_si()) == witt(q, k));
      CHECK(ranks.count(static_cast<int>(2 * k - 1)) == 0);
    }
  }
}

TEST_CASE("free Lie ranks agree with Lyndon word counts for even degrees") {
  for (const auto& weights : std::vector<std::vector<int>>{{2, 4}, {2, 2, 4}, {4, 6}, {2, 6, 6}}) {
    CHECK(as_long(free_lie_ranks(weights, 18)) == lyndon_counts(weights, 18));
  }
}

TEST_CASE("PBW expansion reproduces the tensor series") {
  for (const auto& degs : std::vector<std::vector<int>>{{2, 2}, {2, 4}, {3}, {2, 2, 3}, {3, 3}, {1, 2}, {5, 3, 3}}) {
    const auto ranks = free_lie_ranks(degs, 16);
    CHECK(pbw_series(ranks, 16) == tensor_series(degs, 16));
  }
}

TEST_CASE("minimal models of spheres and wedges") {
  CHECK(ranks_of(GradedAlgebra::sphere(3), 12) == std::map<int, std::size_t>{{3, 1}});
  CHECK(ranks_of(GradedAlgebra::sphere(4), 8) == std::map<int, std::size_t>{{4, 1}, {7, 1}});
  CHECK(ranks_of(GradedAlgebra::wedge_of_spheres({3, 3}), 11) ==
        std::map<int, std::size_t>{{3, 2}, {5, 1}, {7, 2}, {9, 3}, {11, 6}});
}

TEST_CASE("wedge of two 3-spheres matches the Witt oracle shifted by one") {
  const auto ranks = ranks_of(GradedAlgebra::wedge_of_spheres({3, 3}), 13);
  for (int k = 2; k <= 13; ++k) {
    CAPTURE(k);
    auto it = ranks.find(k);
    const long actual = it == ranks.end() ? 0 : static_cast<long>(it->second);
    const long expected = (k - 1) % 2 == 0 ? witt(2, (k - 1) / 2) : 0;
    CHECK(actual == expected);
  }
}

TEST_CASE("model structure") {
  const auto model = minimal_model(GradedAlgebra::sphere(4), 8);
  REQUIRE(model.generators().size() == 2);
  CHECK(model.generators()[0].differential.empty());
  const auto& dv = model.generators()[1].differential;
  REQUIRE(dv.size() == 1);
  CHECK(dv.begin()->first == Monomial{0, 0});
  const auto table = model.verify();
  CHECK(table.size() == 10);
  for (const auto& row : table) {
    if (row.degree <= 8) CHECK(row.model_cohomology == row.target_dim);
  }
}

TEST_CASE("Koszul signs in the model") {
  const auto model = minimal_model(GradedAlgebra::wedge_of_spheres({3, 3}), 5);
  const auto [s1, m1] = model.multiply_monomials({1}, {0});
  CHECK(s1 == -1);
  CHECK(m1 == Monomial{0, 1});
  CHECK(model.multiply_monomials({0}, {0}).first == 0);
  CHECK(model.multiply_monomials({2}, {0}).first == -1);
  const auto s4 = minimal_model(GradedAlgebra::sphere(4), 8);
  CHECK(s4.multiply_monomials({1}, {0}).first == 1);
  CHECK(s4.multiply_monomials({0}, {0}) == std::make_pair(1, Monomial{0, 0}));
}

TEST_CASE("arrangement homotopy ranks") {
  CHECK(homotopy_ranks_of_arrangement(*ring_of(fixtures::one_subspace()), 12) == std::map<int, std::size_t>{{3, 1}});
  CHECK(homotopy_ranks_of_arrangement(*ring_of(fixtures::generic_two()), 12) == std::map<int, std::size_t>{{3, 2}});
  CHECK(homotopy_ranks_of_arrangement(*ring_of(fixtures::boolean_three()), 12) == std::map<int, std::size_t>{{3, 3}});
  CHECK(homotopy_ranks_of_arrangement(*ring_of(fixtures::two_share_line()), 7) ==
        std::map<int, std::size_t>{{3, 2}, {4, 1}, {5, 1}, {6, 2}, {7, 3}});
}

TEST_CASE("two atoms sharing a line: ranks follow the free Lie algebra on loop degrees 2, 2, 3") {
  const auto ranks = homotopy_ranks_of_arrangement(*ring_of(fixtures::two_share_line()), 10);
  const auto lie = free_lie_ranks({2, 2, 3}, 9);
  for (int k = 1; k <= 9; ++k) {
    auto a = ranks.find(k + 1);
    auto b = lie.find(k);
    CHECK((a == ranks.end() ? 0 : a->second) == (b == lie.end() ? 0 : b->second.get_ui()));
  }
}

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(minimal_model(GradedAlgebra::sphere(1), 4), InputError);
  CHECK_THROWS_AS(minimal_model(GradedAlgebra::sphere(3), 1), InputError);
  GradedAlgebra bad({1, 0, 0, 1, 0, 0, 1});
  bad.set_product(3, 0, 3, 0, Vec::unit(1, 0));
  CHECK_THROWS_AS(bad.validate(), InputError);
  GradedAlgebra disconnected({2, 0, 1});
  CHECK_THROWS_AS(disconnected.validate(), InputError);
}

TEST_CASE("generator cap") {
  CHECK_THROWS_AS(minimal_model(GradedAlgebra::wedge_of_spheres({3, 3}), 11, 5), ResourceLimitError);
}

TEST_CASE("growth certificates") {
  SUBCASE("case A lower bound on two atoms sharing a line") {
    const auto ranks = homotopy_ranks_of_arrangement(*ring_of(fixtures::two_share_line()), 7);
    GrowthRequest req{cohomology::Verdict::Hyperbolic, cohomology::HyperbolicCase::A, std::make_pair(2, 4)};
    const auto cert = certify_hyperbolic_growth(req, ranks, 7);
    CHECK(cert.passed);
    REQUIRE(cert.rows.size() == 6);
    std::map<int, long> lower, actual;
    for (const auto& row : cert.rows) {
      if (row.lower_bound != 0) lower[row.degree] = row.lower_bound.get_si();
      if (row.actual != 0) actual[row.degree] = static_cast<long>(row.actual);
    }
    CHECK(lower == std::map<int, long>{{2, 1}, {4, 1}, {6, 1}});
    CHECK(actual == std::map<int, long>{{2, 2}, {3, 1}, {4, 1}, {5, 2}, {6, 3}});
  }
  SUBCASE("case B growth window on three planes") {
    const auto ranks = homotopy_ranks_of_arrangement(*ring_of(fixtures::case_b_three()), 10);
    GrowthRequest req{cohomology::Verdict::Hyperbolic, cohomology::HyperbolicCase::B, std::nullopt};
    const auto cert = certify_hyperbolic_growth(req, ranks, 10);
    CHECK(cert.passed);
    CHECK(cert.window_split == 5);
    CHECK(cert.high_sum > cert.low_sum);
  }
  SUBCASE("a violated bound is an invariant breach") {
    GrowthRequest req{cohomology::Verdict::Hyperbolic, cohomology::HyperbolicCase::A, std::make_pair(2, 4)};
    CHECK_THROWS_AS(certify_hyperbolic_growth(req, {{3, 1}}, 7), InvariantError);
  }
  SUBCASE("a missed growth window is reported, not thrown") {
    GrowthRequest b{cohomology::Verdict::Hyperbolic, cohomology::HyperbolicCase::B, std::nullopt};
    CHECK_FALSE(certify_hyperbolic_growth(b, {{3, 5}}, 10).passed);
    const auto ranks = homotopy_ranks_of_arrangement(*ring_of(fixtures::case_b_three()), 8);
    const auto cert = certify_hyperbolic_growth(b, ranks, 8);
    CHECK_FALSE(cert.passed);
    CHECK(cert.low_sum == 3);
    CHECK(cert.high_sum == 3);
  }
  SUBCASE("elliptic requests are rejected") {
    CHECK_THROWS_AS(certify_hyperbolic_growth(GrowthRequest{}, {{3, 1}}, 7), std::invalid_argument);
  }
}
