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

#include "subarr/witness.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "subarr/errors.hpp"

namespace subarr::witness {

using cohomology::ClassElement;
using cohomology::CohomologyRing;
using dga::SubsetGen;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

AtomMask full(std::size_t n) { return n == 0 ? 0u : static_cast<AtomMask>((std::uint64_t{1} << n) - 1); }

// Local word over the chosen atoms -> atom mask.
AtomMask to_atom_mask(AtomMask local, const std::vector<std::size_t>& atoms) {
  AtomMask out = 0;
  for (auto j : SubsetGen(local).indices()) out |= AtomMask{1} << atoms[j];
  return out;
}

ExtElement to_atoms(const ExtElement& local, const std::vector<std::size_t>& atoms) {
  ExtElement out(local.word_length());
  for (const auto& [w, c] : local.terms()) out.add(to_atom_mask(w.bits(), atoms), c);
  return out;
}

Element scaled(const Element& e, const Rat& c) {
  Element out;
  for (const auto& [s, v] : e) add_into(out, s, v.scaled(c));
  return out;
}

Element sum(const Element& a, const Element& b) {
  Element out = a;
  for (const auto& [s, v] : b) add_into(out, s, v);
  return out;
}

bool equal(const Element& a, const Element& b) { return is_zero(sum(a, scaled(b, Rat(-1)))); }

std::string words_text(const std::vector<std::size_t>& idx) {
  std::string out = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? "," : "") + std::to_string(idx[i] + 1);
  return out + "}";
}

// psi on every class of the cohomology basis, through its representative.
std::map<std::pair<int, std::size_t>, Element> psi_on_classes(const CohomologyRing& ring,
                                                                const TruncatedExterior& algebra,
                                                                const std::vector<std::size_t>& atoms) {
  std::map<std::pair<int, std::size_t>, Element> out;
  for (int k = ring.min_degree(); k <= ring.max_degree(); ++k) {
    const auto& reps = ring.representatives(k);
    for (std::size_t i = 0; i < reps.size(); ++i) out.emplace(std::make_pair(k, i), psi_of_cochain(algebra, atoms, reps[i]));
  }
  return out;
}

Element psi_of_class(const std::map<std::pair<int, std::size_t>, Element>& table, const ClassElement& x) {
  Element out;
  for (const auto& e : x.coords.entries()) {
    const Element part = scaled(table.at({x.degree, e.index}), e.value);
    out = sum(out, part);
  }
  return out;
}

// psi kills d(tau) for every tau with at most one atom outside `atoms`;
// any other tau has no face inside `atoms`.
std::size_t check_chain_map(const CohomologyRing& ring, const TruncatedExterior& algebra,
                            const std::vector<std::size_t>& atoms) {
  const auto& a = ring.algebra();
  const AtomMask inside = to_atom_mask(full(atoms.size()), atoms);
  std::vector<AtomMask> extra{0};
  for (std::size_t y = 0; y < a.atom_count(); ++y)
    if (!(inside >> y & 1u)) extra.push_back(AtomMask{1} << y);
  std::size_t checked = 0;
  for (AtomMask local = 0; local <= full(atoms.size()); ++local) {
    for (auto y : extra) {
      const SubsetGen tau(to_atom_mask(local, atoms) | y);
      const Element img = psi_of_cochain(algebra, atoms, a.differential(tau));
      if (!is_zero(img)) throw InvariantError("psi does not vanish on d" + dga::format_subset(tau));
      ++checked;
    }
    if (local == full(atoms.size())) break;
  }
  return checked;
}

}  // namespace

void add_into(Element& target, std::size_t length, const Vec& v) {
  if (v.is_zero()) return;
  auto it = target.find(length);
  if (it == target.end()) {
    target.emplace(length, v);
    return;
  }
  it->second.add_scaled(v, Rat(1));
  if (it->second.is_zero()) target.erase(it);
}

bool is_zero(const Element& e) {
  for (const auto& [s, v] : e)
    if (!v.is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------

TruncatedExterior TruncatedExterior::build(std::vector<Generator> generators, std::vector<ExtElement> relations) {
  TruncatedExterior out;
  out.generators_ = std::move(generators);
  out.relations_ = std::move(relations);
  const std::size_t n = out.generators_.size();
  bool vanished = false;
  for (std::size_t s = 0; s <= n; ++s) {
    Length len;
    len.words = cohomology::words_of_length(n, s);
    for (std::size_t i = 0; i < len.words.size(); ++i) len.word_index.emplace(len.words[i], i);
    const std::size_t dim = len.words.size();
    std::vector<Vec> units;
    units.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) units.push_back(Vec::unit(dim, i));
    std::vector<Vec> ideal;
    if (vanished) {
      ideal = units;
    } else {
      for (const auto& rel : out.relations_) {
        if (rel.word_length() > s) continue;
        for (auto m : cohomology::words_of_length(n, s - rel.word_length())) {
          const ExtElement p = cohomology::wedge(ExtElement::monomial(m), rel);
          if (p.is_zero()) continue;
          Vec v(dim);
          for (const auto& [w, c] : p.terms()) v.add_at(len.word_index.at(w.bits()), c);
          ideal.push_back(std::move(v));
        }
      }
    }
    auto q = exactla::coset_representatives(dim, ideal, units);
    for (auto idx : q.selected) len.basis.push_back(len.words[idx]);
    len.projection = std::move(q.projection);
    vanished = len.basis.empty();
    out.lengths_.push_back(std::move(len));
  }

  for (std::size_t s = 0; s <= n; ++s) {
    for (std::size_t t = 0; s + t <= n; ++t) {
      for (std::size_t i = 0; i < out.dim(s); ++i) {
        for (std::size_t j = 0; j < out.dim(t); ++j) {
          const ExtElement p =
              cohomology::wedge(ExtElement::monomial(out.lengths_[s].basis[i]), ExtElement::monomial(out.lengths_[t].basis[j]));
          Vec v = p.is_zero() ? Vec(out.dim(s + t)) : out.reduce(p);
          out.table_.emplace(std::make_tuple(s, i, t, j), std::move(v));
        }
      }
    }
  }
  return out;
}

std::size_t TruncatedExterior::top_length() const {
  std::size_t top = 0;
  for (std::size_t s = 0; s < lengths_.size(); ++s)
    if (!lengths_[s].basis.empty()) top = s;
  return top;
}

std::size_t TruncatedExterior::dim(std::size_t length) const {
  return length < lengths_.size() ? lengths_[length].basis.size() : 0;
}

std::size_t TruncatedExterior::total_dim() const {
  std::size_t total = 0;
  for (const auto& len : lengths_) total += len.basis.size();
  return total;
}

const std::vector<AtomMask>& TruncatedExterior::basis(std::size_t length) const {
  static const std::vector<AtomMask> kEmpty;
  return length < lengths_.size() ? lengths_[length].basis : kEmpty;
}

int TruncatedExterior::degree(AtomMask word) const {
  int total = 0;
  for (auto i : SubsetGen(word).indices()) total += generators_.at(i).degree;
  return total;
}

Vec TruncatedExterior::reduce(const ExtElement& x) const {
  const std::size_t s = x.word_length();
  if (s >= lengths_.size()) return Vec(0);
  const Length& len = lengths_[s];
  Vec v(len.words.size());
  for (const auto& [w, c] : x.terms()) v.add_at(len.word_index.at(w.bits()), c);
  return len.projection(v);
}

Element TruncatedExterior::element(const ExtElement& x) const {
  Element out;
  add_into(out, x.word_length(), reduce(x));
  return out;
}

Element TruncatedExterior::basis_element(std::size_t length, std::size_t i) const {
  Element out;
  add_into(out, length, Vec::unit(dim(length), i));
  return out;
}

const Vec& TruncatedExterior::basis_product(std::size_t s, std::size_t i, std::size_t t, std::size_t j) const {
  static const Vec kEmpty;
  auto it = table_.find(std::make_tuple(s, i, t, j));
  return it == table_.end() ? kEmpty : it->second;
}

Element TruncatedExterior::multiply(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [s, va] : a) {
    for (const auto& [t, vb] : b) {
      if (s + t >= lengths_.size()) continue;
      Vec acc(dim(s + t));
      for (const auto& ea : va.entries())
        for (const auto& eb : vb.entries()) acc.add_scaled(basis_product(s, ea.index, t, eb.index), ea.value * eb.value);
      add_into(out, s + t, acc);
    }
  }
  return out;
}

void TruncatedExterior::verify() const {
  for (const auto& rel : relations_)
    if (!reduce(rel).is_zero()) throw InvariantError("relation " + rel.to_string() + " survives in the quotient");
  const std::size_t top = top_length();
  for (std::size_t s = 0; s <= top; ++s) {
    for (std::size_t i = 0; i < dim(s); ++i) {
      const Element x = basis_element(s, i);
      const int dx = degree(basis(s)[i]);
      for (std::size_t t = 0; t <= top; ++t) {
        for (std::size_t j = 0; j < dim(t); ++j) {
          const Element y = basis_element(t, j);
          const int dy = degree(basis(t)[j]);
          const Rat sign((dx * dy) % 2 == 0 ? 1 : -1);
          if (!equal(multiply(x, y), scaled(multiply(y, x), sign)))
            throw InvariantError("quotient product is not graded commutative");
          for (std::size_t u = 0; s + t + u <= top; ++u) {
            for (std::size_t k = 0; k < dim(u); ++k) {
              const Element z = basis_element(u, k);
              if (!equal(multiply(multiply(x, y), z), multiply(x, multiply(y, z))))
                throw InvariantError("quotient product is not associative");
            }
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------

Element psi_of_cochain(const TruncatedExterior& algebra, const std::vector<std::size_t>& atoms,
                       const dga::Cochain& c) {
  std::vector<int> local(32, -1);
  for (std::size_t j = 0; j < atoms.size(); ++j) local[atoms[j]] = static_cast<int>(j);
  const AtomMask inside = to_atom_mask(full(atoms.size()), atoms);
  Element out;
  for (const auto& [g, coef] : c.terms()) {
    if ((g.bits() & ~inside) != 0) continue;
    AtomMask w = 0;
    for (auto i : g.indices()) w |= AtomMask{1} << local[i];
    add_into(out, g.size(), algebra.reduce(ExtElement::monomial(w, coef)));
  }
  return out;
}

CaseAWitness build_case_a(const CohomologyRing& ring, const cohomology::Classification& c) {
  if (c.verdict != cohomology::Verdict::Hyperbolic || c.hyperbolic_case != cohomology::HyperbolicCase::A ||
      !c.monomial_witness)
    throw std::invalid_argument("case A witness requires a hyperbolic case A classification");
  const auto& a = ring.algebra();
  const auto& lat = a.lattice();
  CaseAWitness out;
  out.atoms = SubsetGen(*c.monomial_witness).indices();
  const std::size_t r = out.atoms.size();
  if (r < 2) throw InvariantError("monomial witness has fewer than two letters");

  std::vector<TruncatedExterior::Generator> gens;
  for (auto i : out.atoms) gens.push_back({lat.label(lat.atom(i)), a.degree(SubsetGen(AtomMask{1} << i))});
  out.algebra = TruncatedExterior::build(gens, {ExtElement::monomial(full(r))});
  out.algebra.verify();

  if (!cohomology::phi_monomial(ring, *c.monomial_witness).is_zero())
    throw InvariantError("witness monomial is not in the kernel of phi");

  // Multiplicativity; products involving an atom outside the witness vanish on both sides.
  for (AtomMask x = 0; x <= full(r); ++x) {
    for (AtomMask y = 0; y <= full(r); ++y) {
      const SubsetGen sx(to_atom_mask(x, out.atoms));
      const SubsetGen sy(to_atom_mask(y, out.atoms));
      const Element lhs = psi_of_cochain(out.algebra, out.atoms, a.product(sx, sy));
      const Element rhs = out.algebra.multiply(psi_of_cochain(out.algebra, out.atoms, a.generator(sx)),
                                               psi_of_cochain(out.algebra, out.atoms, a.generator(sy)));
      if (!equal(lhs, rhs))
        throw InvariantError("psi is not multiplicative on " + dga::format_subset(sx) + " * " + dga::format_subset(sy));
      ++out.multiplicative_pairs_checked;
      if (y == full(r)) break;
    }
    if (x == full(r)) break;
  }

  out.chain_map_cochains_checked = check_chain_map(ring, out.algebra, out.atoms);

  for (std::size_t s = 0; s <= out.algebra.top_length(); ++s) {
    for (std::size_t i = 0; i < out.algebra.dim(s); ++i) {
      const AtomMask w = to_atom_mask(out.algebra.basis(s)[i], out.atoms);
      const ClassElement rho = cohomology::phi_monomial(ring, w);
      const Element back = psi_of_cochain(out.algebra, out.atoms, ring.representative(rho));
      if (!equal(back, out.algebra.basis_element(s, i)))
        throw InvariantError("H*psi o rho differs from the identity on " + cohomology::format_word(out.algebra.basis(s)[i]));
      ++out.retraction_basis_checked;
    }
  }
  out.retraction_verified = true;

  int total = 0;
  for (const auto& g : gens) total += g.degree;
  out.loop_degree_a = gens[1].degree - 1;
  out.loop_degree_b = total - 2;
  return out;
}

CaseBWitness build_case_b(const CohomologyRing& ring, const cohomology::Classification& c) {
  if (c.verdict != cohomology::Verdict::Hyperbolic || c.hyperbolic_case != cohomology::HyperbolicCase::B || !c.r)
    throw std::invalid_argument("case B witness requires a hyperbolic case B classification");
  const auto& a = ring.algebra();
  const auto& lat = a.lattice();
  const std::size_t n = a.atom_count();
  CaseBWitness out;
  out.r = *c.r;
  const std::size_t r = out.r;

  std::optional<AtomMask> found;
  for (auto w : cohomology::words_of_length(n, r + 1)) {
    if (!a.differential(SubsetGen(w)).is_zero()) {
      found = w;
      break;
    }
  }
  if (!found) throw InvariantError("no subset of size " + std::to_string(r + 1) + " has a nonzero differential");
  out.sigma = SubsetGen(*found).indices();
  out.join_element = lat.join_of(*found);
  if (lat.rank_of(out.join_element) != r)
    throw InvariantError("join of " + dga::format_subset(SubsetGen(*found)) + " has rank " +
                         std::to_string(lat.rank_of(out.join_element)) + ", expected " + std::to_string(r));
  for (std::size_t i = 0; i < n; ++i)
    if (lat.leq(lat.atom(i), out.join_element) && lat.atom(i) != out.join_element) out.below.push_back(i);
  const std::size_t m = out.below.size();
  if (r + 1 > m) throw InvariantError("fewer atoms below X than the witness subset");

  std::vector<TruncatedExterior::Generator> gens;
  for (auto i : out.below) gens.push_back({lat.label(lat.atom(i)), a.degree(SubsetGen(AtomMask{1} << i))});
  std::vector<ExtElement> relations;
  for (auto w : cohomology::words_of_length(m, r + 1)) relations.push_back(ExtElement::monomial(w));
  for (auto w : cohomology::words_of_length(m, r + 1)) relations.push_back(ExtElement::bracket(SubsetGen(w).indices()));
  out.algebra = TruncatedExterior::build(gens, relations);
  out.algebra.verify();

  for (std::size_t s = 0; s <= m; ++s) out.dims_by_length.push_back(out.algebra.dim(s));
  for (std::size_t s = 0; s < r; ++s) {
    if (out.algebra.dim(s) != binomial(m, s))
      throw InvariantError("dim A^" + std::to_string(s) + " = " + std::to_string(out.algebra.dim(s)) + ", expected " +
                           std::to_string(binomial(m, s)));
  }
  if (out.algebra.dim(r) != binomial(m - 1, r - 1))
    throw InvariantError("dim A^" + std::to_string(r) + " = " + std::to_string(out.algebra.dim(r)) + ", expected " +
                         std::to_string(binomial(m - 1, r - 1)));
  for (auto w : out.algebra.basis(r))
    if (!(w & 1u)) throw InvariantError("top basis word " + cohomology::format_word(w) + " does not start with e1");
  if (out.algebra.top_length() > r) throw InvariantError("quotient is nonzero above word length r");

  for (auto w : cohomology::words_of_length(m - 1, r + 1)) {
    std::vector<std::size_t> idx;
    for (auto i : SubsetGen(w).indices()) idx.push_back(i + 1);
    if (!verify_bracket_identity(idx)) throw InvariantError("bracket identity fails on " + words_text(idx));
    ++out.brackets_checked;
  }

  // rho-bar is well defined: every relation maps to zero.
  for (const auto& rel : relations) {
    for (const auto& [deg, v] : cohomology::phi(ring, to_atoms(rel, out.below)))
      if (!v.is_zero()) throw InvariantError("relation " + rel.to_string() + " does not vanish in cohomology");
  }

  // Injectivity of rho-bar on the whole quotient, degree by degree.
  {
    std::map<int, std::vector<Vec>> by_degree;
    for (std::size_t s = 0; s <= out.algebra.top_length(); ++s) {
      for (auto w : out.algebra.basis(s)) {
        const ClassElement img = cohomology::phi_monomial(ring, to_atom_mask(w, out.below));
        by_degree[img.degree].push_back(img.coords);
      }
    }
    for (const auto& [deg, images] : by_degree) {
      exactla::RowEchelon span(ring.betti(deg));
      for (const auto& v : images) span.insert(v);
      if (span.rank() != images.size())
        throw InvariantError("rho-bar is not injective in degree " + std::to_string(deg));
    }
    out.rho_injective = true;
  }

  // ker rho on Lambda^r is exactly the span of the brackets.
  {
    const auto words = cohomology::words_of_length(m, r);
    std::map<int, std::size_t> offsets;
    std::vector<ClassElement> images;
    for (auto w : words) {
      images.push_back(cohomology::phi_monomial(ring, to_atom_mask(w, out.below)));
      offsets.emplace(images.back().degree, 0);
    }
    std::size_t total = 0;
    for (auto& [deg, off] : offsets) {
      off = total;
      total += ring.betti(deg);
    }
    std::vector<Vec> columns;
    for (const auto& img : images) {
      Vec col(total);
      for (const auto& e : img.coords.entries()) col.push_back(offsets.at(img.degree) + e.index, e.value);
      columns.push_back(std::move(col));
    }
    out.kernel_dim_at_r = exactla::kernel_basis(exactla::QMat::from_columns(columns, total)).size();
    std::map<AtomMask, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
    exactla::RowEchelon bracket_span(words.size());
    for (auto w : cohomology::words_of_length(m, r + 1)) {
      const ExtElement b = ExtElement::bracket(SubsetGen(w).indices());
      Vec v(words.size());
      for (const auto& [u, coef] : b.terms()) v.add_at(index.at(u.bits()), coef);
      bracket_span.insert(v);
    }
    if (out.kernel_dim_at_r != binomial(m - 1, r) || bracket_span.rank() != out.kernel_dim_at_r)
      throw InvariantError("kernel of rho in word length r has dimension " + std::to_string(out.kernel_dim_at_r) +
                           ", brackets span " + std::to_string(bracket_span.rank()) + ", expected " +
                           std::to_string(binomial(m - 1, r)));
  }

  out.chain_map_cochains_checked = check_chain_map(ring, out.algebra, out.below);

  const auto table = psi_on_classes(ring, out.algebra, out.below);
  for (int da = ring.min_degree(); da <= ring.max_degree(); ++da) {
    for (std::size_t i = 0; i < ring.betti(da); ++i) {
      const ClassElement x{da, Vec::unit(ring.betti(da), i)};
      for (int db = ring.min_degree(); db <= ring.max_degree(); ++db) {
        if (da + db < ring.min_degree() || da + db > ring.max_degree()) continue;
        for (std::size_t j = 0; j < ring.betti(db); ++j) {
          const ClassElement y{db, Vec::unit(ring.betti(db), j)};
          const Element lhs = psi_of_class(table, ring.product(x, y));
          const Element rhs = out.algebra.multiply(table.at({da, i}), table.at({db, j}));
          if (!equal(lhs, rhs)) throw InvariantError("psi is not multiplicative on cohomology");
          ++out.multiplicative_pairs_checked;
        }
      }
    }
  }

  for (std::size_t s = 0; s <= out.algebra.top_length(); ++s) {
    for (std::size_t i = 0; i < out.algebra.dim(s); ++i) {
      const ClassElement rho = cohomology::phi_monomial(ring, to_atom_mask(out.algebra.basis(s)[i], out.below));
      if (!equal(psi_of_class(table, rho), out.algebra.basis_element(s, i)))
        throw InvariantError("psi o rho-bar differs from the identity on " +
                             cohomology::format_word(out.algebra.basis(s)[i]));
    }
  }
  out.retraction_verified = true;
  return out;
}

bool verify_bracket_identity(const std::vector<std::size_t>& indices) {
  if (indices.empty()) throw std::invalid_argument("bracket identity needs at least one index");
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] == 0 || (j > 0 && indices[j] <= indices[j - 1]))
      throw std::invalid_argument("bracket indices must be increasing and exclude the first generator");
  }
  const std::size_t k = indices.size();
  ExtElement lhs(k - 1);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::size_t> with_first{0};
    for (std::size_t t = 0; t < k; ++t)
      if (t != j) with_first.push_back(indices[t]);
    const Rat sign(j % 2 == 0 ? 1 : -1);  // (-1)^(j+1) with j 1-based
    lhs = lhs + ExtElement::bracket(with_first).scaled(sign);
  }
  return lhs == ExtElement::bracket(indices);
}

}  // namespace subarr::witness
