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

#include "subarr/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "subarr/errors.hpp"

namespace subarr::lattice {

namespace {

std::string canonical_key(std::size_t ambient_dim, const QMat& m) {
  std::ostringstream out;
  out << ambient_dim << ':';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << '[';
    for (const auto& e : m.row(r).entries()) out << e.index << '=' << exactla::to_string(e.value) << ';';
    out << ']';
  }
  return out.str();
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim, QMat canonical)
    : ambient_dim_(ambient_dim), canonical_(std::move(canonical)) {
  key_ = canonical_key(ambient_dim_, canonical_);
}

Subspace Subspace::from_equations(std::size_t ambient_dim, const std::vector<std::vector<Rat>>& rows) {
  for (const auto& row : rows) {
    if (row.size() != ambient_dim) throw std::invalid_argument("equation length differs from ambient dimension");
  }
  return Subspace(ambient_dim, exactla::rref(QMat::from_dense(rows, ambient_dim)).reduced);
}

Subspace Subspace::whole(std::size_t ambient_dim) { return Subspace(ambient_dim, QMat(0, ambient_dim)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw std::invalid_argument("ambient dimension mismatch");
  // other is inside *this iff every equation of *this vanishes on other,
  // i.e. lies in the row space of other's equations.
  exactla::RowEchelon span(ambient_dim_);
  for (const auto& row : other.canonical_.row_vectors()) span.insert(row);
  for (const auto& row : canonical_.row_vectors()) {
    if (!span.contains(row)) return false;
  }
  return true;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  std::vector<exactla::Vec> rows = a.canonical().row_vectors();
  const std::vector<exactla::Vec> more = b.canonical().row_vectors();
  rows.insert(rows.end(), more.begin(), more.end());
  const QMat stacked = QMat::from_rows(std::move(rows), a.ambient_dim());
  std::vector<std::vector<Rat>> dense;
  const QMat reduced = exactla::rref(stacked).reduced;
  for (const auto& row : reduced.row_vectors()) dense.push_back(row.to_dense());
  return Subspace::from_equations(a.ambient_dim(), dense);
}

Normalized normalize(const Arrangement& raw) {
  Normalized out;
  out.arrangement.ambient_dim = raw.ambient_dim;
  for (const auto& atom : raw.atoms) {
    if (atom.space.ambient_dim() != raw.ambient_dim) {
      throw InputError("subspace '" + atom.name + "' has ambient dimension " +
                       std::to_string(atom.space.ambient_dim()) + ", expected " +
                       std::to_string(raw.ambient_dim));
    }
    if (atom.space.codim() < 2) {
      throw InputError("subspace '" + atom.name + "' has codimension " + std::to_string(atom.space.codim()) +
                       "; every subspace must have codimension at least 2");
    }
  }
  const std::size_t n = raw.atoms.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Atom& candidate = raw.atoms[i];
    std::optional<std::string> warning;
    for (std::size_t j = 0; j < n && !warning; ++j) {
      if (j == i) continue;
      const Atom& other = raw.atoms[j];
      if (!other.space.contains(candidate.space)) continue;
      if (other.space == candidate.space) {
        if (j < i) warning = "subspace '" + candidate.name + "' duplicates '" + other.name + "'; dropped";
      } else {
        warning = "subspace '" + candidate.name + "' is contained in '" + other.name + "'; dropped";
      }
    }
    if (warning) {
      out.warnings.push_back(*warning);
    } else {
      out.arrangement.atoms.push_back(candidate);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

AtomMask IntersectionLattice::full_mask() const {
  const std::size_t n = atom_count();
  return n == 0 ? 0u : static_cast<AtomMask>((std::uint64_t{1} << n) - 1);
}

std::shared_ptr<const IntersectionLattice> IntersectionLattice::build(const Arrangement& arrangement) {
  const std::size_t n = arrangement.atoms.size();
  if (n > kMaxAtoms) {
    throw InputError("arrangement has " + std::to_string(n) + " subspaces; at most " +
                     std::to_string(kMaxAtoms) + " are supported");
  }
  const std::size_t l = arrangement.ambient_dim;

  // Discovery pass with provisional element ids.
  std::vector<Subspace> found;
  std::unordered_map<std::string, std::uint32_t> id_of;
  auto intern = [&](Subspace s) -> std::uint32_t {
    auto it = id_of.find(s.key());
    if (it != id_of.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(found.size());
    id_of.emplace(s.key(), id);
    found.push_back(std::move(s));
    return id;
  };
  intern(Subspace::whole(l));
  for (std::size_t i = 0; i < n; ++i) {
    const auto id = intern(arrangement.atoms[i].space);
    if (id != 1 + i) throw std::invalid_argument("arrangement atoms must be distinct; normalize first");
  }

  const std::size_t masks = std::size_t{1} << n;
  std::vector<std::uint32_t> join_of_mask(masks, 0);
  std::unordered_map<std::uint64_t, std::uint32_t> join_cache;
  for (std::size_t m = 1; m < masks; ++m) {
    const auto low = static_cast<std::size_t>(std::countr_zero(static_cast<std::uint32_t>(m)));
    const std::uint32_t rest = join_of_mask[m & (m - 1)];
    const std::uint64_t cache_key = (std::uint64_t{rest} << 5) | low;
    auto it = join_cache.find(cache_key);
    if (it != join_cache.end()) {
      join_of_mask[m] = it->second;
      continue;
    }
    const std::uint32_t id = intern(intersect(found[rest], arrangement.atoms[low].space));
    join_cache.emplace(cache_key, id);
    join_of_mask[m] = id;
  }

  // Final order: bottom, atoms, then the rest by (codim, key).
  std::vector<std::uint32_t> order(found.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin() + static_cast<long>(1 + n), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (found[a].codim() != found[b].codim()) return found[a].codim() < found[b].codim();
    return found[a].key() < found[b].key();
  });
  std::vector<std::uint32_t> renumber(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) renumber[order[i]] = static_cast<std::uint32_t>(i);

  auto lat = std::shared_ptr<IntersectionLattice>(new IntersectionLattice());
  lat->arrangement_ = arrangement;
  lat->elements_.reserve(found.size());
  for (auto id : order) lat->elements_.push_back(found[id]);
  lat->join_of_mask_.resize(masks);
  lat->below_.assign(found.size(), 0);
  for (std::size_t m = 0; m < masks; ++m) {
    const std::uint32_t e = renumber[join_of_mask[m]];
    lat->join_of_mask_[m] = e;
    lat->below_[e] |= static_cast<AtomMask>(m);
  }

  // Longest chain from the bottom; x < y iff below(x) is a proper subset.
  const std::size_t size = lat->elements_.size();
  std::vector<std::size_t> by_count(size);
  std::iota(by_count.begin(), by_count.end(), 0);
  std::stable_sort(by_count.begin(), by_count.end(), [&](std::size_t a, std::size_t b) {
    return std::popcount(lat->below_[a]) < std::popcount(lat->below_[b]);
  });
  lat->rank_.assign(size, 0);
  for (std::size_t yi = 0; yi < size; ++yi) {
    const std::size_t y = by_count[yi];
    std::size_t best = 0;
    bool any = false;
    for (std::size_t xi = 0; xi < yi; ++xi) {
      const std::size_t x = by_count[xi];
      const AtomMask bx = lat->below_[x];
      const AtomMask by = lat->below_[y];
      if ((bx & by) == bx && bx != by) {
        best = std::max(best, lat->rank_[x] + 1);
        any = true;
      }
    }
    lat->rank_[y] = any ? best : 0;
  }
  return lat;
}

std::size_t IntersectionLattice::join(std::size_t a, std::size_t b) const {
  return join_of(below_.at(a) | below_.at(b));
}

std::size_t IntersectionLattice::meet(std::size_t a, std::size_t b) const {
  return join_of(below_.at(a) & below_.at(b));
}

bool IntersectionLattice::leq(std::size_t a, std::size_t b) const {
  return (below_.at(a) & below_.at(b)) == below_.at(a);
}

std::string IntersectionLattice::label(std::size_t e) const {
  if (e == bottom()) return "bottom";
  if (e >= 1 && e <= atom_count()) return arrangement_.atoms[e - 1].name;
  std::string out = "join(";
  bool first = true;
  for (std::size_t i = 0; i < atom_count(); ++i) {
    if (!(below_.at(e) >> i & 1u)) continue;
    if (!first) out += ',';
    out += arrangement_.atoms[i].name;
    first = false;
  }
  return out + ")";
}

std::vector<std::size_t> IntersectionLattice::min_generating_sizes() const {
  std::vector<std::size_t> sizes(size(), atom_count() + 1);
  for (std::size_t m = 0; m < join_of_mask_.size(); ++m) {
    const auto e = join_of_mask_[m];
    sizes[e] = std::min<std::size_t>(sizes[e], static_cast<std::size_t>(std::popcount(static_cast<AtomMask>(m))));
  }
  return sizes;
}

GeometricCheck is_geometric(const IntersectionLattice& lat) {
  GeometricCheck out;
  for (std::size_t e = 0; e < lat.size(); ++e) {
    if (lat.join_of(lat.atoms_below(e)) != e) {
      out.non_atomistic_element = e;
      out.message = "element " + lat.label(e) + " is not the join of the atoms below it";
      return out;
    }
  }
  for (std::size_t a = 0; a < lat.size(); ++a) {
    for (std::size_t b = a + 1; b < lat.size(); ++b) {
      const std::size_t lhs = lat.rank_of(lat.join(a, b)) + lat.rank_of(lat.meet(a, b));
      const std::size_t rhs = lat.rank_of(a) + lat.rank_of(b);
      if (lhs > rhs) {
        out.violating_pair = std::make_pair(a, b);
        std::ostringstream msg;
        msg << "lattice is not semimodular at (" << lat.label(a) << ", " << lat.label(b) << "): rank(join) + rank(meet) = "
            << lat.rank_of(lat.join(a, b)) << " + " << lat.rank_of(lat.meet(a, b)) << " > rank(" << lat.label(a)
            << ") + rank(" << lat.label(b) << ") = " << lat.rank_of(a) << " + " << lat.rank_of(b);
        out.message = msg.str();
        return out;
      }
    }
  }
  out.geometric = true;
  return out;
}

}  // namespace subarr::lattice
