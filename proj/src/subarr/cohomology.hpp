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

// H*(D_A, d), the algebra map phi: Lambda(e_1..e_n) -> H*, e_i -> [{x_i}],
// its kernel and the invariant r, and the elliptic/hyperbolic verdict.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "subarr/dga.hpp"
#include "subarr/exactla.hpp"
#include "subarr/exterior.hpp"

namespace subarr::cohomology {

struct ClassElement {
  int degree = 0;
  exactla::Vec coords;  // in the quotient basis of that degree

  bool is_zero() const { return coords.is_zero(); }
  bool operator==(const ClassElement& other) const = default;
};

class CohomologyRing {
 public:
  static std::shared_ptr<const CohomologyRing> compute(std::shared_ptr<const dga::RelativeAtomicAlgebra> algebra);

  const dga::RelativeAtomicAlgebra& algebra() const { return *algebra_; }
  std::shared_ptr<const dga::RelativeAtomicAlgebra> algebra_ptr() const { return algebra_; }
  int min_degree() const { return algebra_->min_degree(); }
  int max_degree() const { return algebra_->max_degree(); }

  std::size_t betti(int k) const;
  // Nonzero Betti numbers only.
  std::map<int, std::size_t> betti_table() const;
  std::size_t cycle_dim(int k) const;
  std::size_t boundary_dim(int k) const;

  const std::vector<dga::Cochain>& representatives(int k) const;

  bool is_cycle(const dga::Cochain& c) const { return algebra_->differential(c).is_zero(); }
  // Throws std::invalid_argument when c is not a cycle.
  ClassElement class_of(const dga::Cochain& c) const;
  dga::Cochain representative(const ClassElement& x) const;
  ClassElement zero(int degree) const;
  ClassElement unit() const;
  ClassElement atom_class(std::size_t i) const;

  // Structure constants from the product of representatives.
  const exactla::Vec& basis_product(int da, std::size_t i, int db, std::size_t j) const;
  ClassElement product(const ClassElement& a, const ClassElement& b) const;

 private:
  struct Degree {
    std::vector<exactla::Vec> cycles;
    std::size_t boundary_rank = 0;
    exactla::Quotient quotient;
    std::vector<dga::Cochain> reps;
  };
  CohomologyRing() = default;
  const Degree* degree_data(int k) const;

  std::shared_ptr<const dga::RelativeAtomicAlgebra> algebra_;
  std::vector<Degree> degrees_;  // indexed by k - min_degree
  std::map<std::tuple<int, std::size_t, int, std::size_t>, exactla::Vec> table_;
};

// Class degree of e_w: sum over letters of 2 codim(x_i) - 1.
int word_degree(const dga::RelativeAtomicAlgebra& algebra, AtomMask word);

// phi on a monomial, through the iterated product of atom cochains.
ClassElement phi_monomial(const CohomologyRing& ring, AtomMask word);
// phi on a general element, split by class degree.
std::map<int, exactla::Vec> phi(const CohomologyRing& ring, const ExtElement& e);

struct PhiAnalysis {
  std::size_t n = 0;
  // Word length s -> basis of ker(phi) restricted to Lambda^s (nonempty only).
  std::map<std::size_t, std::vector<ExtElement>> kernel_by_wordlength;
  std::optional<std::size_t> r;
  std::optional<AtomMask> monomial_witness;

  bool injective() const { return !r.has_value(); }
};

PhiAnalysis analyze_phi(const CohomologyRing& ring);

struct VanishingReport {
  bool vacuous = false;
  bool pass = false;
  std::size_t checked = 0;
  std::optional<SubsetGen> violator;
  std::string message;
};

// For every sigma with |sigma| <= r: d(sigma) = 0 and rank(join sigma) = |sigma|.
VanishingReport check_vanishing_differentials(const CohomologyRing& ring, const PhiAnalysis& analysis);

enum class Verdict { Elliptic, Hyperbolic };
enum class HyperbolicCase { A, B };

struct Classification {
  Verdict verdict = Verdict::Elliptic;
  std::vector<int> sphere_dimensions;  // elliptic: 2 codim(x_i) - 1, ascending
  std::optional<HyperbolicCase> hyperbolic_case;
  std::optional<std::size_t> r;
  std::optional<AtomMask> monomial_witness;  // case A
  std::vector<ExtElement> kernel_at_r;       // hyperbolic
};

Classification classify(const CohomologyRing& ring, const PhiAnalysis& analysis);

// Betti numbers against prod_i (1 + t^(2 codim(x_i) - 1)) and nonvanishing of
// every independent product. Throws InvariantError on mismatch and
// std::invalid_argument unless the verdict is elliptic.
bool check_exterior_iso(const CohomologyRing& ring, const Classification& c);

// Degree in which the classes of independent subsets fail to span H^k, if any.
std::optional<int> independent_generation_failure(const CohomologyRing& ring);

std::string to_string(Verdict v);
std::string to_string(HyperbolicCase c);

}  // namespace subarr::cohomology
