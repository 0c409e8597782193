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

// Central subspace arrangements and their intersection lattices.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "subarr/exactla.hpp"

namespace subarr::lattice {

using exactla::QMat;
using exactla::Rat;

// Bit i set means atom i (0-based, in arrangement order) is present.
using AtomMask = std::uint32_t;

inline constexpr std::size_t kMaxAtoms = 24;

// A linear subspace of C^l cut out by rational linear forms. Stored by the
// reduced row-echelon form of its equations, which identifies it uniquely.
class Subspace {
 public:
  Subspace() = default;

  static Subspace from_equations(std::size_t ambient_dim, const std::vector<std::vector<Rat>>& rows);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t codim() const { return canonical_.rows(); }
  const QMat& canonical() const { return canonical_; }
  const std::string& key() const { return key_; }

  // True when `other` is a subspace of *this.
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& other) const { return key_ == other.key_; }

 private:
  Subspace(std::size_t ambient_dim, QMat canonical);

  std::size_t ambient_dim_ = 0;
  QMat canonical_;
  std::string key_;
};

// Throws std::invalid_argument on ambient-dimension mismatch.
Subspace intersect(const Subspace& a, const Subspace& b);

struct Atom {
  std::string name;
  Subspace space;
};

struct Arrangement {
  std::size_t ambient_dim = 0;
  std::vector<Atom> atoms;
};

struct Normalized {
  Arrangement arrangement;
  std::vector<std::string> warnings;
};

// Drops atoms contained in (or duplicating) another atom, keeping input order
// of the survivors. Throws InputError for atoms of codimension 0 or 1.
Normalized normalize(const Arrangement& raw);

// L(A) ordered by reverse inclusion. Element 0 is the bottom C^l, elements
// 1..n are the atoms in arrangement order, and the remaining elements follow
// sorted by (codimension, canonical key).
class IntersectionLattice {
 public:
  // Throws InputError when the arrangement has more than kMaxAtoms atoms.
  static std::shared_ptr<const IntersectionLattice> build(const Arrangement& arrangement);

  const Arrangement& arrangement() const { return arrangement_; }
  std::size_t atom_count() const { return arrangement_.atoms.size(); }
  std::size_t size() const { return elements_.size(); }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return join_of(full_mask()); }
  std::size_t atom(std::size_t i) const { return 1 + i; }
  AtomMask full_mask() const;

  const Subspace& element(std::size_t e) const { return elements_.at(e); }
  std::size_t rank_of(std::size_t e) const { return rank_.at(e); }
  std::size_t codim_of(std::size_t e) const { return elements_.at(e).codim(); }
  AtomMask atoms_below(std::size_t e) const { return below_.at(e); }

  std::size_t join_of(AtomMask sigma) const { return join_of_mask_.at(sigma); }
  std::size_t join(std::size_t a, std::size_t b) const;
  std::size_t meet(std::size_t a, std::size_t b) const;
  bool leq(std::size_t a, std::size_t b) const;

  // Atom name for atoms, "bottom" for C^l, otherwise join(x1,x3,...) over
  // the atoms below the element.
  std::string label(std::size_t e) const;

  // min{|sigma| : join(sigma) = e} for every element.
  std::vector<std::size_t> min_generating_sizes() const;

 private:
  IntersectionLattice() = default;

  Arrangement arrangement_;
  std::vector<Subspace> elements_;
  std::vector<std::size_t> rank_;
  std::vector<AtomMask> below_;
  std::vector<std::uint32_t> join_of_mask_;
};

struct GeometricCheck {
  bool geometric = false;
  // Set when semimodularity fails.
  std::optional<std::pair<std::size_t, std::size_t>> violating_pair;
  // Set when an element is not the join of the atoms below it.
  std::optional<std::size_t> non_atomistic_element;
  std::string message;
};

GeometricCheck is_geometric(const IntersectionLattice& lat);

}  // namespace subarr::lattice
