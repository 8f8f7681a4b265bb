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

#include "multihol/tgroup.hpp"

#include <algorithm>
#include <bit>

namespace multihol {

TGroupReport t_group(const RegularFamily& fam,
                     const std::vector<std::pair<std::string, Perm>>& conjugators,
                     const std::vector<std::uint32_t>& family_subsets) {
  TGroupReport report;
  report.family = family_subsets;
  std::sort(report.family.begin(), report.family.end());
  const std::size_t fsize = report.family.size();
  if (fsize == 0) throw Error("empty family");

  // generators of each member, conjugated and re-identified by membership
  std::vector<std::vector<Perm>> member_gens;
  for (std::uint32_t subset : report.family) {
    member_gens.push_back(fam.member_generators(subset));
  }

  for (const auto& [label, c] : conjugators) {
    FamilyAction action;
    action.label = label;
    action.maps_to.assign(fsize, static_cast<std::uint32_t>(fsize));
    for (std::size_t k = 0; k < fsize; ++k) {
      std::vector<Perm> conjugated;
      for (const Perm& s : member_gens[k]) conjugated.push_back(conjugate_perm(s, c));
      std::uint32_t target = static_cast<std::uint32_t>(fsize);
      for (std::size_t m = 0; m < fsize; ++m) {
        bool all_in = true;
        for (const Perm& cs : conjugated) {
          if (!fam.member_contains(report.family[m], cs)) {
            all_in = false;
            break;
          }
        }
        if (all_in) {
          if (target != fsize) {
            throw CheckError("conjugated member lands in two distinct family members");
          }
          target = static_cast<std::uint32_t>(m);
        }
      }
      if (target == fsize) {
        throw ActionLeavesFamilyError("conjugator '" + label +
                                      "' maps a family member outside the family");
      }
      action.maps_to[k] = target;
    }
    if (!is_permutation(Perm(action.maps_to.begin(), action.maps_to.end()))) {
      throw CheckError("family action of '" + label + "' is not a permutation");
    }
    report.conjugator_actions.push_back(std::move(action));
  }

  // close the induced permutations into a group on the family positions
  std::vector<Perm> action_gens;
  for (const FamilyAction& a : report.conjugator_actions) {
    action_gens.emplace_back(a.maps_to.begin(), a.maps_to.end());
  }
  std::vector<Perm> elements{identity_perm(static_cast<Idx>(fsize))};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const Perm& g : action_gens) {
      Perm y = compose(elements[i], g);
      if (std::find(elements.begin(), elements.end(), y) == elements.end()) {
        elements.push_back(std::move(y));
      }
    }
  }
  report.order = elements.size();
  report.elementary_abelian = true;
  for (const Perm& a : elements) {
    if (compose(a, a) != identity_perm(static_cast<Idx>(fsize))) {
      report.elementary_abelian = false;
      break;
    }
  }
  if (report.elementary_abelian) {
    for (const Perm& a : action_gens) {
      for (const Perm& b : action_gens) {
        if (compose(a, b) != compose(b, a)) {
          report.elementary_abelian = false;
          break;
        }
      }
      if (!report.elementary_abelian) break;
    }
  }

  // regular: transitive with trivial stabilizer, equivalently the orbit
  // of any position is everything and the order matches the family size
  std::vector<bool> orbit(fsize, false);
  orbit[0] = true;
  std::vector<std::size_t> work{0};
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (const Perm& a : action_gens) {
      std::size_t y = a[work[i]];
      if (!orbit[y]) {
        orbit[y] = true;
        work.push_back(y);
      }
    }
  }
  bool transitive = std::all_of(orbit.begin(), orbit.end(), [](bool b) { return b; });
  report.action_regular = transitive && report.order == fsize;

  report.squares_fix_family = true;
  for (const FamilyAction& a : report.conjugator_actions) {
    Perm p(a.maps_to.begin(), a.maps_to.end());
    if (compose(p, p) != identity_perm(static_cast<Idx>(fsize))) {
      report.squares_fix_family = false;
    }
  }

  if (std::has_single_bit(report.order)) {
    report.rank = std::countr_zero(report.order);
  } else {
    report.rank = -1;
  }
  report.abelian_invariants.assign(std::max(report.rank, 0), 2u);
  return report;
}

}  // namespace multihol
