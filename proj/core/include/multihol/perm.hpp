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
//
// Permutations of the element set, stored as dense image arrays. Maps
// compose left-to-right throughout: compose(a, b) applies a first, and
// conjugation s^t means t^-1 then s then t. A dedicated convention test
// pins this down, since silently flipping it negates the inversion
// identities.

#ifndef MULTIHOL_PERM_HPP_
#define MULTIHOL_PERM_HPP_

#include <vector>

#include "multihol/common.hpp"

namespace multihol {

using Perm = std::vector<Idx>;

Perm identity_perm(Idx n);
bool is_permutation(const Perm& p);

// apply a, then b
inline Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (Idx x = 0; x < a.size(); ++x) r[x] = b[a[x]];
  return r;
}

Perm inverse_perm(const Perm& p);

// s^t = t^-1 s t (left-to-right)
Perm conjugate_perm(const Perm& s, const Perm& t);

}  // namespace multihol

#endif  // MULTIHOL_PERM_HPP_
