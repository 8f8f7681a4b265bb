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
// The regular representations, the inversion map, the holomorph as a
// generated permutation group, the membership decision sigma = alpha *
// rho(g), and the brute-force oracle enumerating regular normal subgroups
// of the holomorph.

#ifndef MULTIHOL_HOLOMORPH_HPP_
#define MULTIHOL_HOLOMORPH_HPP_

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "multihol/homomorphism.hpp"
#include "multihol/perm.hpp"

namespace multihol {

// x -> x*a. A homomorphism into the symmetric group.
Perm right_translation(const FiniteGroup& g, Idx a);
// x -> a*x. An antihomomorphism under left-to-right composition.
Perm left_translation(const FiniteGroup& g, Idx a);
// x -> x^-1.
Perm inversion_map(const FiniteGroup& g);

// Generators of the holomorph: both regular images of the group
// generators plus the supplied verified automorphisms. Construction
// verifies that every rho generator commutes with every lambda generator
// and that every automorphism fixes the identity point.
struct HolomorphGroup {
  GroupPtr base;
  std::vector<Perm> rho_gens;
  std::vector<Perm> lambda_gens;
  std::vector<Perm> aut_gens;
  std::vector<std::string> aut_labels;
  std::optional<std::uint64_t> aut_order;  // when known

  std::optional<std::uint64_t> order() const;  // |G| * |Aut| when known
  std::vector<const Perm*> generators() const;
};

HolomorphGroup holomorph_group(const GroupPtr& g, const std::vector<Homomorphism>& aut_generators,
                               const std::vector<std::string>& labels = {},
                               std::optional<std::uint64_t> aut_order = std::nullopt);

// Decides sigma = alpha * rho(g) with alpha an automorphism: g is the
// image of the identity point, and alpha = sigma * rho(g)^-1 passes the
// Cayley-edge automorphism check or sigma is not a member. Total.
struct HolomorphPart {
  Homomorphism aut_part;
  Idx translation;
};
std::optional<HolomorphPart> holomorph_membership(const Perm& sigma, const GroupPtr& g);

// Permutation group generated by closure, elements indexed in discovery
// order. Throws GuardError when the closure exceeds the guard.
class PermGroupOps final : public GroupOps {
 public:
  PermGroupOps(Idx degree, const std::vector<Perm>& generators, std::size_t guard,
               std::string label);

  Idx size() const override { return static_cast<Idx>(flat_.size() / degree_); }
  Idx mul(Idx a, Idx b) const override;
  Idx inverse_hint(Idx a) const override;
  std::string describe() const override { return label_; }

  Perm perm_of(Idx i) const;
  std::optional<Idx> index_of(const Perm& p) const;
  const std::vector<Idx>& generator_indices() const { return gen_indices_; }

 private:
  Idx insert(const Perm& p);
  std::optional<Idx> lookup(const Perm& p) const;

  Idx degree_;
  std::vector<Idx> flat_;
  std::unordered_map<std::uint64_t, std::vector<Idx>> buckets_;
  std::vector<Idx> gen_indices_;
  std::string label_;
};

struct PermutationGroup {
  GroupPtr group;
  std::shared_ptr<const PermGroupOps> ops;
};
PermutationGroup permutation_group_closure(Idx degree, const std::vector<Perm>& generators,
                                           std::size_t guard, std::string name);

// Brute-force oracle: enumerates the holomorph (guarded), lists all its
// normal subgroups of order |G|, and keeps those acting regularly on the
// element set. The returned subgroups live inside oracle.holomorph.group.
struct RegularNormalOracle {
  PermutationGroup holomorph;
  std::vector<Subgroup> regular_normals;
};
RegularNormalOracle brute_force_regular_normal_subgroups(
    const HolomorphGroup& hol, std::size_t holomorph_guard = 20000,
    std::size_t lattice_guard = kDefaultLatticeGuard);

}  // namespace multihol

#endif  // MULTIHOL_HOLOMORPH_HPP_
