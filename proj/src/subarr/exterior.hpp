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

// Elements of the exterior algebra on odd generators e_1..e_n, indexed by
// strictly increasing words stored as bit masks.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "subarr/dga.hpp"
#include "subarr/exactla.hpp"

namespace subarr::cohomology {

using dga::SubsetGen;
using exactla::Rat;
using lattice::AtomMask;

class ExtElement {
 public:
  using Terms = std::map<SubsetGen, Rat, dga::LexLess>;

  explicit ExtElement(std::size_t word_length) : word_length_(word_length) {}

  static ExtElement one() { return ExtElement(0).plus_term(0, Rat(1)); }
  static ExtElement generator(std::size_t i);
  static ExtElement monomial(AtomMask word, const Rat& c = Rat(1));
  // sum_j (-1)^j e_{i_1} ... ^e_{i_j} ... e_{i_k} over the sorted indices.
  static ExtElement bracket(const std::vector<std::size_t>& indices);

  std::size_t word_length() const { return word_length_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coefficient(AtomMask word) const;

  // Throws std::invalid_argument if the word has the wrong length.
  void add(AtomMask word, const Rat& c);
  ExtElement plus_term(AtomMask word, const Rat& c) const;

  ExtElement operator+(const ExtElement& other) const;
  ExtElement operator-(const ExtElement& other) const;
  ExtElement scaled(const Rat& c) const;
  bool operator==(const ExtElement& other) const;

  // "e1e2 - e1e3 + e2e3", 1-based, terms in lexicographic word order.
  std::string to_string() const;

 private:
  std::size_t word_length_;
  Terms terms_;
};

// Exterior product; the sign is the shuffle sign of the two words.
ExtElement wedge(const ExtElement& a, const ExtElement& b);

// All words of the given length over n letters, lexicographic.
std::vector<AtomMask> words_of_length(std::size_t n, std::size_t length);

std::string format_word(AtomMask word);

}  // namespace subarr::cohomology
