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

#include "subarr/dga.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace subarr::dga {

SubsetGen SubsetGen::of(const std::vector<std::size_t>& indices) {
  AtomMask bits = 0;
  for (auto i : indices) {
    if (i >= lattice::kMaxAtoms) throw std::out_of_range("atom index out of range");
    bits |= AtomMask{1} << i;
  }
  return SubsetGen(bits);
}

std::size_t SubsetGen::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<std::size_t> SubsetGen::indices() const {
  std::vector<std::size_t> out;
  for (AtomMask b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

bool lex_less(AtomMask a, AtomMask b) {
  while (true) {
    if (a == 0) return b != 0;
    if (b == 0) return false;
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
}

int shuffle_sign(AtomMask a, AtomMask b) {
  int inversions = 0;
  for (AtomMask t = b; t != 0; t &= t - 1) {
    const int idx = std::countr_zero(t);
    inversions += std::popcount(static_cast<AtomMask>(static_cast<std::uint64_t>(a) >> (idx + 1)));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

std::string format_subset(SubsetGen s) {
  std::string out = "{";
  bool first = true;
  for (auto i : s.indices()) {
    if (!first) out += ',';
    out += 'x' + std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------

Rat Cochain::coefficient(SubsetGen g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Cochain::accumulate(SubsetGen g, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Cochain Cochain::operator+(const Cochain& other) const {
  if (other.degree_ != degree_) throw std::invalid_argument("cannot add cochains of different degrees");
  Cochain out = *this;
  for (const auto& [g, c] : other.terms_) out.accumulate(g, c);
  return out;
}

Cochain Cochain::operator-(const Cochain& other) const { return *this + other.scaled(Rat(-1)); }

Cochain Cochain::scaled(const Rat& c) const {
  Cochain out(degree_);
  if (c == 0) return out;
  for (const auto& [g, v] : terms_) out.terms_.emplace(g, v * c);
  return out;
}

bool Cochain::operator==(const Cochain& other) const {
  return degree_ == other.degree_ && terms_ == other.terms_;
}

// ---------------------------------------------------------------------------

RelativeAtomicAlgebra::RelativeAtomicAlgebra(std::shared_ptr<const lattice::IntersectionLattice> lattice,
                                             DgaOptions options)
    : lattice_(std::move(lattice)), options_(options) {
  const std::size_t masks = std::size_t{1} << atom_count();
  std::vector<int> deg(masks);
  min_degree_ = 0;
  max_degree_ = 0;
  for (std::size_t m = 0; m < masks; ++m) {
    deg[m] = degree(SubsetGen(static_cast<AtomMask>(m)));
    min_degree_ = std::min(min_degree_, deg[m]);
    max_degree_ = std::max(max_degree_, deg[m]);
  }
  basis_.assign(static_cast<std::size_t>(max_degree_ - min_degree_ + 1), {});
  for (std::size_t m = 0; m < masks; ++m)
    basis_[static_cast<std::size_t>(deg[m] - min_degree_)].push_back(SubsetGen(static_cast<AtomMask>(m)));
  position_.assign(masks, 0);
  for (auto& bucket : basis_) {
    std::sort(bucket.begin(), bucket.end(), LexLess{});
    for (std::size_t i = 0; i < bucket.size(); ++i) position_[bucket[i].bits()] = static_cast<std::uint32_t>(i);
  }
}

int RelativeAtomicAlgebra::degree(SubsetGen s) const {
  return 2 * static_cast<int>(codim(s)) - static_cast<int>(s.size());
}

const std::vector<SubsetGen>& RelativeAtomicAlgebra::basis_in_degree(int k) const {
  static const std::vector<SubsetGen> kEmpty;
  if (k < min_degree_ || k > max_degree_) return kEmpty;
  return basis_[static_cast<std::size_t>(k - min_degree_)];
}

Cochain RelativeAtomicAlgebra::generator(SubsetGen s, const Rat& c) const {
  Cochain out(degree(s));
  out.accumulate(s, c);
  return out;
}

void RelativeAtomicAlgebra::add_term(Cochain& c, SubsetGen s, const Rat& coef) const {
  if (degree(s) != c.degree()) throw std::invalid_argument("term degree differs from cochain degree");
  c.accumulate(s, coef);
}

Cochain RelativeAtomicAlgebra::differential(SubsetGen s) const {
  Cochain out(degree(s) + 1);
  const std::size_t whole = lattice_->join_of(s.bits());
  std::size_t position = 1;
  for (auto i : s.indices()) {
    const SubsetGen face(s.bits() & ~(AtomMask{1} << i));
    if (lattice_->join_of(face.bits()) == whole) {
      const bool negative = !options_.inject_sign_fault && (position % 2 == 1);
      out.accumulate(face, Rat(negative ? -1 : 1));
    }
    ++position;
  }
  return out;
}

Cochain RelativeAtomicAlgebra::differential(const Cochain& c) const {
  Cochain out(c.degree() + 1);
  for (const auto& [g, coef] : c.terms()) {
    const Cochain dg = differential(g);
    for (const auto& [face, sign] : dg.terms()) out.accumulate(face, coef * sign);
  }
  return out;
}

Cochain RelativeAtomicAlgebra::product(SubsetGen a, SubsetGen b) const {
  Cochain out(degree(a) + degree(b));
  if ((a.bits() & b.bits()) != 0) return out;
  const SubsetGen u(a.bits() | b.bits());
  if (codim(a) + codim(b) != codim(u)) return out;
  out.accumulate(u, Rat(shuffle_sign(a.bits(), b.bits())));
  return out;
}

Cochain RelativeAtomicAlgebra::product(const Cochain& a, const Cochain& b) const {
  Cochain out(a.degree() + b.degree());
  for (const auto& [ga, ca] : a.terms()) {
    for (const auto& [gb, cb] : b.terms()) {
      if ((ga.bits() & gb.bits()) != 0) continue;
      const SubsetGen u(ga.bits() | gb.bits());
      if (codim(ga) + codim(gb) != codim(u)) continue;
      out.accumulate(u, ca * cb * shuffle_sign(ga.bits(), gb.bits()));
    }
  }
  return out;
}

exactla::Vec RelativeAtomicAlgebra::to_vec(const Cochain& c) const {
  exactla::Vec v(dim(c.degree()));
  for (const auto& [g, coef] : c.terms()) v.add_at(index_in_degree(g), coef);
  return v;
}

Cochain RelativeAtomicAlgebra::from_vec(int degree, const exactla::Vec& v) const {
  const auto& basis = basis_in_degree(degree);
  if (v.dim() != basis.size()) throw std::invalid_argument("vector dimension differs from degree dimension");
  Cochain out(degree);
  for (const auto& e : v.entries()) out.accumulate(basis[e.index], e.value);
  return out;
}

}  // namespace subarr::dga
