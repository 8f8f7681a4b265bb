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
// The quotient of the extended normalizer: conjugation by the family
// conjugators permutes the regular-subgroup family, the induced
// permutations generate a faithful copy of the quotient group, and the
// report pins down its structure (elementary abelian 2-group acting
// regularly).

#ifndef MULTIHOL_TGROUP_HPP_
#define MULTIHOL_TGROUP_HPP_

#include <string>
#include <vector>

#include "multihol/family.hpp"

namespace multihol {

class ActionLeavesFamilyError : public CheckError {
 public:
  using CheckError::CheckError;
};

struct FamilyAction {
  std::string label;
  std::vector<std::uint32_t> maps_to;  // position in the family list -> position
};

struct TGroupReport {
  std::vector<std::uint32_t> family;  // subsets, ascending
  std::vector<FamilyAction> conjugator_actions;
  std::uint64_t order = 1;
  int rank = 0;                            // order == 2^rank
  std::vector<unsigned> abelian_invariants;  // rank twos
  bool action_regular = false;
  bool elementary_abelian = false;
  bool squares_fix_family = false;
};

// Computes the permutation induced on the family by each conjugator
// (membership test on conjugated generators), closes the induced
// permutations into a group, and verifies regularity and elementary
// abelian structure. Throws ActionLeavesFamilyError when a conjugate of
// a member is no member.
TGroupReport t_group(const RegularFamily& fam,
                     const std::vector<std::pair<std::string, Perm>>& conjugators,
                     const std::vector<std::uint32_t>& family_subsets);

}  // namespace multihol

#endif  // MULTIHOL_TGROUP_HPP_
