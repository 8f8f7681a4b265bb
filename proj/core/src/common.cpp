// Copyright 2026 The multihol authors
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

#include "multihol/common.hpp"

#include <bit>

namespace multihol {

Idx IndexSet::count() const {
  Idx c = 0;
  for (auto w : words_) c += static_cast<Idx>(std::popcount(w));
  return c;
}

std::vector<Idx> IndexSet::elements() const {
  std::vector<Idx> out;
  out.reserve(count());
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(static_cast<Idx>(wi * 64 + b));
      w &= w - 1;
    }
  }
  return out;
}

Idx IndexSet::least() const {
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    if (words_[wi]) return static_cast<Idx>(wi * 64 + std::countr_zero(words_[wi]));
  }
  return kInvalidIdx;
}

IndexSet IndexSet::operator&(const IndexSet& o) const {
  IndexSet r(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
  return r;
}

IndexSet IndexSet::operator|(const IndexSet& o) const {
  IndexSet r(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
  return r;
}

bool IndexSet::is_subset_of(const IndexSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~o.words_[i]) return false;
  }
  return true;
}

bool IndexSet::intersects(const IndexSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & o.words_[i]) return true;
  }
  return false;
}

bool IndexSet::lex_less(const IndexSet& o) const {
  // compares as sorted element lists; least differing index wins
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != o.words_[i]) {
      std::uint64_t diff = words_[i] ^ o.words_[i];
      std::uint64_t low = diff & (~diff + 1);
      return words_[i] & low;  // we own the smaller differing element
    }
  }
  return false;
}

}  // namespace multihol
