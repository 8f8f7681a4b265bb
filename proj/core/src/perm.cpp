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

#include "multihol/perm.hpp"

namespace multihol {

Perm identity_perm(Idx n) {
  Perm p(n);
  for (Idx i = 0; i < n; ++i) p[i] = i;
  return p;
}

bool is_permutation(const Perm& p) {
  std::vector<bool> hit(p.size(), false);
  for (Idx y : p) {
    if (y >= p.size() || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

Perm inverse_perm(const Perm& p) {
  Perm r(p.size());
  for (Idx x = 0; x < p.size(); ++x) r[p[x]] = x;
  return r;
}

Perm conjugate_perm(const Perm& s, const Perm& t) {
  Perm ti = inverse_perm(t);
  Perm r(s.size());
  for (Idx x = 0; x < s.size(); ++x) r[x] = t[s[ti[x]]];
  return r;
}

}  // namespace multihol
