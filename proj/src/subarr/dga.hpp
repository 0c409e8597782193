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

// The relative atomic differential graded algebra (D_A, d) of an arrangement:
// basis all subsets of atoms, deg(s) = 2 codim(join s) - |s|.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "subarr/exactla.hpp"
#include "subarr/lattice.hpp"

namespace subarr::dga {

using exactla::Rat;
using lattice::AtomMask;

// A set of atom indices; positions in the linear order are the bit indices.
class SubsetGen {
 public:
  constexpr SubsetGen() = default;
  constexpr explicit SubsetGen(AtomMask bits) : bits_(bits) {}
  static SubsetGen of(const std::vector<std::size_t>& indices);

  constexpr AtomMask bits() const { return bits_; }
  std::size_t size() const;
  bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  // Sorted 0-based atom indices.
  std::vector<std::size_t> indices() const;

  constexpr bool operator==(const SubsetGen&) const = default;

 private:
  AtomMask bits_ = 0;
};

// Lexicographic order on the sorted index sequences; a proper prefix sorts first.
bool lex_less(AtomMask a, AtomMask b);

struct LexLess {
  bool operator()(const SubsetGen& a, const SubsetGen& b) const { return lex_less(a.bits(), b.bits()); }
};

// Sign of the permutation sorting the concatenation (a then b), for disjoint a, b.
int shuffle_sign(AtomMask a, AtomMask b);

// "{x1,x3}" with 1-based positions.
std::string format_subset(SubsetGen s);

class RelativeAtomicAlgebra;

// Homogeneous element of D_A. Terms are never zero.
class Cochain {
 public:
  using Terms = std::map<SubsetGen, Rat, LexLess>;

  explicit Cochain(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coefficient(SubsetGen g) const;

  Cochain operator+(const Cochain& other) const;
  Cochain operator-(const Cochain& other) const;
  Cochain scaled(const Rat& c) const;
  bool operator==(const Cochain& other) const;

 private:
  friend class RelativeAtomicAlgebra;
  void accumulate(SubsetGen g, const Rat& c);

  int degree_;
  Terms terms_;
};

// Test hook for the self-test negative control: the differential drops its
// alternating sign.
struct DgaOptions {
  bool inject_sign_fault = false;
};

class RelativeAtomicAlgebra {
 public:
  explicit RelativeAtomicAlgebra(std::shared_ptr<const lattice::IntersectionLattice> lattice,
                                 DgaOptions options = {});

  const lattice::IntersectionLattice& lattice() const { return *lattice_; }
  std::shared_ptr<const lattice::IntersectionLattice> lattice_ptr() const { return lattice_; }
  std::size_t atom_count() const { return lattice_->atom_count(); }

  int degree(SubsetGen s) const;
  std::size_t codim(SubsetGen s) const { return lattice_->codim_of(lattice_->join_of(s.bits())); }

  int min_degree() const { return min_degree_; }
  int max_degree() const { return max_degree_; }

  // Subsets of the given degree in lexicographic order.
  const std::vector<SubsetGen>& basis_in_degree(int k) const;
  // Position of s inside basis_in_degree(degree(s)).
  std::size_t index_in_degree(SubsetGen s) const { return position_.at(s.bits()); }

  Cochain generator(SubsetGen s, const Rat& c = Rat(1)) const;
  // Throws std::invalid_argument when deg(s) differs from c.degree().
  void add_term(Cochain& c, SubsetGen s, const Rat& coef) const;

  Cochain differential(const Cochain& c) const;
  Cochain differential(SubsetGen s) const;
  Cochain product(const Cochain& a, const Cochain& b) const;
  // sigma * tau on generators: coefficient and union, or zero.
  Cochain product(SubsetGen a, SubsetGen b) const;

  exactla::Vec to_vec(const Cochain& c) const;
  Cochain from_vec(int degree, const exactla::Vec& v) const;
  std::size_t dim(int k) const { return basis_in_degree(k).size(); }

 private:
  std::shared_ptr<const lattice::IntersectionLattice> lattice_;
  DgaOptions options_;
  int min_degree_ = 0;
  int max_degree_ = 0;
  std::vector<std::vector<SubsetGen>> basis_;  // indexed by degree - min_degree_
  std::vector<std::uint32_t> position_;        // indexed by mask
};

}  // namespace subarr::dga
