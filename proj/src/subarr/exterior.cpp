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

#include "subarr/exterior.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace subarr::cohomology {

ExtElement ExtElement::generator(std::size_t i) { return monomial(AtomMask{1} << i); }

ExtElement ExtElement::monomial(AtomMask word, const Rat& c) {
  ExtElement out(static_cast<std::size_t>(std::popcount(word)));
  out.add(word, c);
  return out;
}

ExtElement ExtElement::bracket(const std::vector<std::size_t>& indices) {
  std::vector<std::size_t> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.empty())
    throw std::invalid_argument("bracket needs distinct indices");
  AtomMask all = 0;
  for (auto i : sorted) all |= AtomMask{1} << i;
  ExtElement out(sorted.size() - 1);
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    // j is 0-based, the sign uses the 1-based position.
    out.add(all & ~(AtomMask{1} << sorted[j]), Rat(j % 2 == 0 ? -1 : 1));
  }
  return out;
}

Rat ExtElement::coefficient(AtomMask word) const {
  auto it = terms_.find(SubsetGen(word));
  return it == terms_.end() ? Rat(0) : it->second;
}

void ExtElement::add(AtomMask word, const Rat& c) {
  if (static_cast<std::size_t>(std::popcount(word)) != word_length_)
    throw std::invalid_argument("word length differs from element word length");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(SubsetGen(word), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExtElement ExtElement::plus_term(AtomMask word, const Rat& c) const {
  ExtElement out = *this;
  out.add(word, c);
  return out;
}

ExtElement ExtElement::operator+(const ExtElement& other) const {
  if (other.word_length_ != word_length_) throw std::invalid_argument("word length mismatch");
  ExtElement out = *this;
  for (const auto& [w, c] : other.terms_) out.add(w.bits(), c);
  return out;
}

ExtElement ExtElement::operator-(const ExtElement& other) const { return *this + other.scaled(Rat(-1)); }

ExtElement ExtElement::scaled(const Rat& c) const {
  ExtElement out(word_length_);
  if (c == 0) return out;
  for (const auto& [w, v] : terms_) out.terms_.emplace(w, v * c);
  return out;
}

bool ExtElement::operator==(const ExtElement& other) const {
  return word_length_ == other.word_length_ && terms_ == other.terms_;
}

std::string format_word(AtomMask word) {
  if (word == 0) return "1";
  std::string out;
  for (auto i : SubsetGen(word).indices()) out += "e" + std::to_string(i + 1);
  return out;
}

std::string ExtElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const bool negative = c < 0;
    const Rat mag = negative ? Rat(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1) out += exactla::to_string(mag) + "*";
    out += format_word(w.bits());
    first = false;
  }
  return out;
}

ExtElement wedge(const ExtElement& a, const ExtElement& b) {
  ExtElement out(a.word_length() + b.word_length());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      if ((wa.bits() & wb.bits()) != 0) continue;
      out.add(wa.bits() | wb.bits(), ca * cb * dga::shuffle_sign(wa.bits(), wb.bits()));
    }
  }
  return out;
}

std::vector<AtomMask> words_of_length(std::size_t n, std::size_t length) {
  std::vector<AtomMask> out;
  if (length > n) return out;
  const std::size_t total = std::size_t{1} << n;
  for (std::size_t m = 0; m < total; ++m) {
    if (static_cast<std::size_t>(std::popcount(static_cast<AtomMask>(m))) == length)
      out.push_back(static_cast<AtomMask>(m));
  }
  std::sort(out.begin(), out.end(), dga::lex_less);
  return out;
}

}  // namespace subarr::cohomology
