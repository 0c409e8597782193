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

#pragma once

// Degree-bounded Sullivan minimal models of formal spaces, built from a
// finite graded commutative algebra with zero differential, and the
// free graded Lie algebra rank oracle.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "subarr/cohomology.hpp"
#include "subarr/exactla.hpp"

namespace subarr::sullivan {

using exactla::Rat;
using exactla::Vec;

// Homogeneous element of a graded algebra presentation.
struct GradedElement {
  int degree = 0;
  Vec coords;

  bool is_zero() const { return coords.is_zero(); }
  bool operator==(const GradedElement&) const = default;
};

// Finite-dimensional graded algebra given by structure constants. Degree 0 is
// spanned by the unit, which is basis vector 0 there.
class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  // dims[k] = dimension in degree k.
  explicit GradedAlgebra(std::vector<std::size_t> dims);

  static GradedAlgebra from_cohomology(const cohomology::CohomologyRing& ring);
  // H*(S^k).
  static GradedAlgebra sphere(int k);
  // Reduced cohomology of a wedge of spheres: all positive products vanish.
  static GradedAlgebra wedge_of_spheres(const std::vector<int>& dims);

  int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
  std::size_t dim(int k) const;
  std::size_t total_dim() const;

  // Sets e_i * e_j in degrees (da, db); the reversed product is filled in
  // with the graded sign. Products with the unit are implicit.
  void set_product(int da, std::size_t i, int db, std::size_t j, const Vec& value);
  Vec basis_product(int da, std::size_t i, int db, std::size_t j) const;
  GradedElement multiply(const GradedElement& a, const GradedElement& b) const;
  GradedElement unit() const;
  GradedElement zero(int degree) const;
  GradedElement basis(int degree, std::size_t i) const;

  // Connected, simply connected, graded commutative, associative. Throws
  // InputError naming the failure.
  void validate() const;

 private:
  std::vector<std::size_t> dims_;
  std::map<std::tuple<int, std::size_t, int, std::size_t>, Vec> table_;
};

// A monomial in the model: sorted generator indices, odd ones at most once.
using Monomial = std::vector<std::uint16_t>;
using Polynomial = std::map<Monomial, Rat>;

struct ModelGenerator {
  std::string name;  // v<degree>_<index within degree>
  int degree = 0;
  Polynomial differential;  // in earlier generators
  GradedElement image;      // under the comparison map to the input algebra
};

struct DegreeCheck {
  int degree = 0;
  std::size_t model_cohomology = 0;  // dim H^k of the model
  std::size_t target_dim = 0;        // dim H^k of the input
  std::size_t induced_rank = 0;      // rank of the induced map
};

class MinimalModel {
 public:
  int max_degree() const { return max_degree_; }
  const std::vector<ModelGenerator>& generators() const { return generators_; }
  // Nonzero dim V^k for k <= max_degree.
  std::map<int, std::size_t> ranks() const;

  // Product in the model, with Koszul signs; zero when an odd generator repeats.
  std::pair<int, Monomial> multiply_monomials(const Monomial& a, const Monomial& b) const;
  Polynomial multiply(const Polynomial& a, const Polynomial& b) const;
  Polynomial differential(const Monomial& m) const;
  Polynomial differential(const Polynomial& p) const;
  GradedElement evaluate(const Monomial& m) const;
  int degree(const Monomial& m) const;
  // All monomials of degree k, ordered.
  std::vector<Monomial> monomials_of_degree(int k) const;

  // Quasi-isomorphism through max_degree, injectivity in max_degree + 1,
  // minimality, d^2 = 0 and compatibility with the comparison map.
  // Throws InvariantError on failure; returns the per-degree table.
  std::vector<DegreeCheck> verify() const;

  const GradedAlgebra& target() const { return target_; }

 private:
  friend MinimalModel minimal_model(const GradedAlgebra& h, int max_degree, std::size_t generator_cap);
  void collect(int k, std::size_t first, Monomial& prefix, std::vector<Monomial>& out) const;

  GradedAlgebra target_;
  int max_degree_ = 0;
  std::vector<ModelGenerator> generators_;
};

inline constexpr std::size_t kDefaultGeneratorCap = 5000;

// Throws InputError for inputs that are not connected or simply connected,
// ResourceLimitError when more than generator_cap generators are needed.
MinimalModel minimal_model(const GradedAlgebra& h, int max_degree, std::size_t generator_cap = kDefaultGeneratorCap);

// rank pi_k(M(A)) (x) Q for k <= max_degree, nonzero entries only.
std::map<int, std::size_t> homotopy_ranks_of_arrangement(const cohomology::CohomologyRing& ring, int max_degree,
                                                         std::size_t generator_cap = kDefaultGeneratorCap);

// Ranks of the free graded Lie algebra on generators of the given degrees,
// for degrees 1..max_degree, nonzero entries only.
std::map<int, mpz_class> free_lie_ranks(const std::vector<int>& generator_degrees, int max_degree);

// Coefficients 0..max_degree of 1 / (1 - sum_g t^deg(g)).
std::vector<mpz_class> tensor_series(const std::vector<int>& generator_degrees, int max_degree);
// Coefficients 0..max_degree of prod_{k even} (1 - t^k)^(-c_k) prod_{k odd} (1 + t^k)^(c_k).
std::vector<mpz_class> pbw_series(const std::map<int, mpz_class>& ranks, int max_degree);

struct CertificateRow {
  int degree = 0;         // loop degree k
  mpz_class lower_bound;  // free Lie rank in degree k
  std::size_t actual = 0; // rank pi_{k+1}
};

struct GrowthCertificate {
  enum class Kind { FreeLieLowerBound, GrowthWindow };
  Kind kind = Kind::FreeLieLowerBound;
  int max_degree = 0;
  bool passed = false;
  // Lower-bound comparison.
  std::vector<int> loop_degrees;
  std::vector<CertificateRow> rows;
  // Window comparison over [2, N/2] and [N/2, N].
  int window_split = 0;
  std::size_t low_sum = 0;
  std::size_t high_sum = 0;
};

struct GrowthRequest {
  cohomology::Verdict verdict = cohomology::Verdict::Elliptic;
  std::optional<cohomology::HyperbolicCase> hyperbolic_case;
  std::optional<std::pair<int, int>> loop_degrees;  // case A
};

// Throws std::invalid_argument for elliptic requests or missing loop degrees,
// InvariantError when the free Lie bound fails. A window comparison that does
// not show growth at this N comes back with passed = false.
GrowthCertificate certify_hyperbolic_growth(const GrowthRequest& request, const std::map<int, std::size_t>& ranks,
                                            int max_degree);

std::string to_string(GrowthCertificate::Kind k);

}  // namespace subarr::sullivan
