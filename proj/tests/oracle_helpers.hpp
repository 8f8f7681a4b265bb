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
// Test-side oracles, kept independent of the library implementation: a
// self-contained brute-force model of SL(2,5) built by filtering all 2x2
// matrices over F5, with its own multiplication, conjugacy orbits and a
// naive normal-subgroup lattice. Expected values in the tests are frozen
// from these oracles, not from the code under test.

#ifndef MULTIHOL_TESTS_ORACLE_HELPERS_HPP_
#define MULTIHOL_TESTS_ORACLE_HELPERS_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using M2 = std::array<int, 4>;  // row-major 2x2 over F5

inline int f5(int x) { return ((x % 5) + 5) % 5; }

inline M2 mul(const M2& a, const M2& b) {
  return {f5(a[0] * b[0] + a[1] * b[2]), f5(a[0] * b[1] + a[1] * b[3]),
          f5(a[2] * b[0] + a[3] * b[2]), f5(a[2] * b[1] + a[3] * b[3])};
}

inline int det(const M2& a) { return f5(a[0] * a[3] - a[1] * a[2]); }

inline M2 inv(const M2& a) {
  // det is 1 for everything we enumerate
  return {a[3], f5(-a[1]), f5(-a[2]), a[0]};
}

inline const M2 kId{1, 0, 0, 1};

// all determinant-one matrices, by exhaustive filtering
inline std::vector<M2> sl25_elements() {
  std::vector<M2> out;
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      for (int c = 0; c < 5; ++c) {
        for (int d = 0; d < 5; ++d) {
          M2 m{a, b, c, d};
          if (det(m) == 1) out.push_back(m);
        }
      }
    }
  }
  return out;
}

inline std::set<M2> closure_of(std::vector<M2> gens) {
  std::set<M2> seen{kId};
  std::vector<M2> work{kId};
  for (const M2& g : gens) {
    if (seen.insert(g).second) work.push_back(g);
  }
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (const M2& g : gens) {
      M2 y = mul(work[i], g);
      if (seen.insert(y).second) work.push_back(y);
    }
  }
  return seen;
}

inline std::set<M2> center_of(const std::vector<M2>& all) {
  std::set<M2> z;
  for (const M2& x : all) {
    bool commutes = true;
    for (const M2& y : all) {
      if (mul(x, y) != mul(y, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) z.insert(x);
  }
  return z;
}

inline std::size_t conjugacy_class_count(const std::vector<M2>& all) {
  std::set<M2> assigned;
  std::size_t classes = 0;
  for (const M2& x : all) {
    if (assigned.count(x)) continue;
    ++classes;
    for (const M2& g : all) assigned.insert(mul(mul(inv(g), x), g));
  }
  return classes;
}

// join-closure of normal closures of single elements; fine at order 120
inline std::vector<std::set<M2>> normal_subgroups(const std::vector<M2>& all) {
  std::vector<std::set<M2>> found;
  auto push_unique = [&](std::set<M2> s) {
    if (std::find(found.begin(), found.end(), s) == found.end()) found.push_back(std::move(s));
  };
  push_unique(std::set<M2>{kId});
  for (const M2& x : all) {
    std::vector<M2> cls;
    for (const M2& g : all) cls.push_back(mul(mul(inv(g), x), g));
    push_unique(closure_of(cls));
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<M2> joint(found[i].begin(), found[i].end());
      joint.insert(joint.end(), found[j].begin(), found[j].end());
      push_unique(closure_of(joint));
    }
  }
  return found;
}

}  // namespace oracle

#endif  // MULTIHOL_TESTS_ORACLE_HELPERS_HPP_
