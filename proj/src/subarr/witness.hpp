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

// Witness algebras for the two hyperbolic cases: a truncated exterior algebra
// on the atoms involved, the chain map psi out of D_A, the algebra map rho
// into H*(D_A), and the retraction identities between them.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "subarr/cohomology.hpp"
#include "subarr/exactla.hpp"
#include "subarr/exterior.hpp"

namespace subarr::witness {

using cohomology::ExtElement;
using exactla::Rat;
using exactla::Vec;
using lattice::AtomMask;

// Element of a truncated exterior algebra, split by word length. Zero parts
// are never stored.
using Element = std::map<std::size_t, Vec>;

// Lambda(e_1..e_n) / (relations), relations homogeneous in word length.
class TruncatedExterior {
 public:
  struct Generator {
    std::string name;
    int degree = 0;  // odd
  };

  TruncatedExterior() = default;
  static TruncatedExterior build(std::vector<Generator> generators, std::vector<ExtElement> relations);

  std::size_t generator_count() const { return generators_.size(); }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<ExtElement>& relations() const { return relations_; }

  // Highest word length with a nonzero component (0 for the ground field).
  std::size_t top_length() const;
  std::size_t dim(std::size_t length) const;
  std::size_t total_dim() const;
  // Monomials whose classes form the basis in the given word length.
  const std::vector<AtomMask>& basis(std::size_t length) const;
  int degree(AtomMask word) const;

  // Coordinates of the class of x in its word length.
  Vec reduce(const ExtElement& x) const;
  Element element(const ExtElement& x) const;
  Element basis_element(std::size_t length, std::size_t i) const;
  const Vec& basis_product(std::size_t s, std::size_t i, std::size_t t, std::size_t j) const;
  Element multiply(const Element& a, const Element& b) const;

  // Relations vanish, products are graded commutative and associative.
  // Throws InvariantError.
  void verify() const;

 private:
  struct Length {
    std::vector<AtomMask> words;  // all words of this length, lexicographic
    std::map<AtomMask, std::size_t> word_index;
    std::vector<AtomMask> basis;
    exactla::CosetProjection projection;
  };

  std::vector<Generator> generators_;
  std::vector<ExtElement> relations_;
  std::vector<Length> lengths_;  // indexed by word length
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, Vec> table_;
};

void add_into(Element& target, std::size_t length, const Vec& v);
bool is_zero(const Element& e);

struct CaseAWitness {
  std::vector<std::size_t> atoms;  // i_1 < ... < i_r, 0-based
  TruncatedExterior algebra;
  std::size_t multiplicative_pairs_checked = 0;
  std::size_t chain_map_cochains_checked = 0;
  std::size_t retraction_basis_checked = 0;
  bool retraction_verified = false;
  int loop_degree_a = 0;
  int loop_degree_b = 0;
};

struct CaseBWitness {
  std::vector<std::size_t> sigma;  // first (r+1)-subset with nonzero differential
  std::size_t join_element = 0;    // X
  std::size_t r = 0;
  std::vector<std::size_t> below;  // B, atoms strictly below X in input order
  TruncatedExterior algebra;
  std::vector<std::size_t> dims_by_length;
  std::size_t kernel_dim_at_r = 0;
  std::size_t brackets_checked = 0;
  std::size_t multiplicative_pairs_checked = 0;
  std::size_t chain_map_cochains_checked = 0;
  bool rho_injective = false;
  bool retraction_verified = false;
};

// psi on a cochain: subsets of the chosen atoms map to the class of their
// monomial (generators relabeled 1..|atoms|), everything else to zero.
Element psi_of_cochain(const TruncatedExterior& algebra, const std::vector<std::size_t>& atoms,
                       const dga::Cochain& c);

// Throws InvariantError when an identity fails and std::invalid_argument
// when the classification is not the matching hyperbolic case.
CaseAWitness build_case_a(const cohomology::CohomologyRing& ring, const cohomology::Classification& c);
CaseBWitness build_case_b(const cohomology::CohomologyRing& ring, const cohomology::Classification& c);

// sum_j (-1)^(j+1) [e_1, e_{i_1}, .., ^e_{i_j}, .., e_{i_k}] == [e_{i_1}, .., e_{i_k}]
// for 0-based indices 0 < i_1 < ... < i_k.
bool verify_bracket_identity(const std::vector<std::size_t>& indices);

}  // namespace subarr::witness
