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
// The family of regular subgroups indexed by subsets of the central
// factors: for a subset J, the member is generated by right translations
// of the factors in J and left translations of the complementary factors.
// Every element factors as a J-part times a complementary part, uniquely
// up to the central intersection; the tables here fix the canonical
// factorization (least J-part) and drive membership tests, the
// conjugating bijections, and the twisted multiplications.

#ifndef MULTIHOL_FAMILY_HPP_
#define MULTIHOL_FAMILY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "multihol/central_product.hpp"
#include "multihol/holomorph.hpp"

namespace multihol {

// The conjugating bijection is only well defined when the supplied
// automorphism inverts the central ambiguity; a violation surfaces here.
class IllDefinedMapError : public Error {
 public:
  using Error::Error;
};

class RegularFamily {
 public:
  explicit RegularFamily(const CentralDecomposition& decomposition);

  const GroupPtr& base() const { return g_; }
  int factor_count() const { return static_cast<int>(factor_subgroups_.size()); }
  std::uint32_t subset_count() const { return 1u << factor_count(); }

  struct Blocks {
    std::uint32_t subset = 0;
    Subgroup part;               // product of the factors in the subset
    Subgroup copart;             // product of the complementary factors
    std::vector<Idx> part_of;    // canonical factorization, element -> part
    std::vector<Idx> copart_of;  // element -> complementary part
    std::vector<Idx> ambiguity;  // elements of part ∩ copart (central)
  };
  const Blocks& blocks(std::uint32_t subset) const { return blocks_.at(subset); }

  // rho over the part generators, lambda over the copart generators
  std::vector<Perm> member_generators(std::uint32_t subset) const;

  // whether sigma equals rho(u) * lambda(v) for some admissible
  // factorization of its identity image; decided by array comparison
  // over the central ambiguity
  bool member_contains(std::uint32_t subset, const Perm& sigma) const;

  // regularity: the canonical factorization reaches every element and
  // the stabilizer of the identity point is trivial
  void verify_member_regular(std::uint32_t subset) const;  // throws CheckError

  // The bijection g = u*v -> u * inverter(v)^-1. Conjugates the rho-image
  // of the group onto the member at `subset`. The inverter must be an
  // automorphism of the copart inverting its center; well-definedness
  // across the central ambiguity is re-verified elementwise.
  Perm conjugator(std::uint32_t subset, const PartialAutomorphism& copart_inverter) const;

  // (G, o_J): same element set, product u_J v_J v_Jc u_Jc
  GroupPtr twisted_group(std::uint32_t subset) const;

 private:
  GroupPtr g_;
  std::vector<Subgroup> factor_subgroups_;
  std::vector<Blocks> blocks_;
};

// Descriptor-level instances: factor metadata only, for families whose
// groups are too large to realize.
struct DescriptorFactor {
  std::vector<QuasisimpleDescriptor> component_descriptors;
};
struct DescriptorInstance {
  std::vector<DescriptorFactor> factors;
  // invariants of the pairwise factor intersections; [r][s] for r != s
  std::vector<std::vector<AbelianInvariants>> intersections;

  // instance with all factor centers amalgamated to the given shape
  static DescriptorInstance amalgamated(std::vector<DescriptorFactor> factors,
                                        const AbelianInvariants& shared_center);
};

struct HSetResult {
  std::vector<std::uint32_t> subsets;  // ascending bitmasks
  int rank = 0;                        // |subsets| == 2^rank
  int exceptional_count = 0;           // factors with exceptional components
  HBounds bounds;
};

// The subset family from the critical-shape test: a subset whose
// exceptional factors are separated from exceptional complementary
// factors only by intersections free of critical shapes stays in the
// family; subsets touching the exceptional indices on one side only are
// always members.
HSetResult h_set_from_descriptors(const DescriptorInstance& inst,
                                  const CoverCatalog& catalog = CoverCatalog::compiled());

}  // namespace multihol

#endif  // MULTIHOL_FAMILY_HPP_
