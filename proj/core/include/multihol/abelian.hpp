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

#ifndef MULTIHOL_ABELIAN_HPP_
#define MULTIHOL_ABELIAN_HPP_

#include <map>
#include <string>
#include <vector>

#include "multihol/finite_group.hpp"

namespace multihol {

// Isomorphism type of a finite abelian group, stored as its primary
// decomposition: per prime, the descending exponent partition.
class AbelianInvariants {
 public:
  AbelianInvariants() = default;

  // from a multiset of cyclic orders, e.g. {2,2,3} or {6,2}
  static AbelianInvariants from_cyclic_orders(const std::vector<unsigned>& orders);

  // invariants of an abelian subgroup, recovered from element orders
  static AbelianInvariants of_subgroup(const FiniteGroup& g, const Subgroup& s);

  // Whether some subgroup of this group is isomorphic to other. For each
  // prime this is descending-partition domination, the classical
  // containment criterion for abelian p-groups.
  bool contains_subgroup_isomorphic_to(const AbelianInvariants& other) const;

  unsigned long long order() const;
  bool trivial() const { return primary_.empty(); }

  // canonical flat form: primary cyclic orders, ascending
  std::vector<unsigned> primary_cyclic_orders() const;
  std::string to_string() const;  // e.g. "Z2 x Z2 x Z3"

  bool operator==(const AbelianInvariants&) const = default;

 private:
  std::map<unsigned, std::vector<unsigned>> primary_;  // prime -> descending exponents
};

}  // namespace multihol

#endif  // MULTIHOL_ABELIAN_HPP_
