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
// Central products with prescribed amalgamation, component detection, the
// unique decomposition into Aut-indecomposable central factors, and the
// componentwise assembly of center-inverting automorphisms.

#ifndef MULTIHOL_CENTRAL_PRODUCT_HPP_
#define MULTIHOL_CENTRAL_PRODUCT_HPP_

#include <functional>
#include <optional>
#include <span>

#include "multihol/catalog.hpp"
#include "multihol/homomorphism.hpp"
#include "multihol/search.hpp"

namespace multihol {

// Identify the central element elem_a of factor_a with elem_b of
// factor_b. The identifications generate the amalgamated subgroup N of
// the direct-product center; N must meet every factor trivially.
struct CentralIdentification {
  std::size_t factor_a = 0;
  std::size_t factor_b = 0;
  Idx elem_a = 0;
  Idx elem_b = 0;
};

struct AmalgamationSpec {
  std::vector<CentralIdentification> identifications;
};

struct FactorEmbedding {
  Subgroup image;
  std::vector<Idx> element_map;  // factor index -> product index
};

struct CentralProduct {
  GroupPtr group;
  std::vector<GroupPtr> factor_groups;
  std::vector<FactorEmbedding> embeddings;
  // product generator slot -> (factor, generator slot within the factor)
  std::vector<std::pair<std::size_t, std::size_t>> generator_origin;
  Idx amalgamated_order = 1;  // |N|
};

// Quotient of the direct product by the amalgamation subgroup, with lazy
// canonical-representative multiplication. Throws InvalidAmalgamationError
// for non-central identifications or when N meets a factor.
CentralProduct central_product(std::vector<GroupPtr> factors, const AmalgamationSpec& amalg,
                               std::string name = {});

// The quasisimple normal subgroups: for each minimal normal subgroup of
// G/Z(G), the derived subgroup of its preimage. Canonically ordered.
// Throws NotSemisimpleError with a witness description.
std::vector<Subgroup> components(const GroupPtr& g,
                                 std::size_t guard = kDefaultLatticeGuard);

struct DecompositionFactor {
  Subgroup subgroup;
  std::vector<std::size_t> component_indices;
  bool descriptor_known = false;
  bool exceptional = false;  // some component lies in the exceptional catalog
};

struct CentralDecomposition {
  GroupPtr group;
  std::vector<Subgroup> component_subgroups;
  std::vector<std::optional<QuasisimpleDescriptor>> component_descriptors;
  std::vector<DecompositionFactor> factors;  // canonical order
  // abelian invariants of the pairwise center intersections, indexed
  // [r][s] over factors
  std::vector<std::vector<AbelianInvariants>> intersection_invariants;

  int factor_count() const { return static_cast<int>(factors.size()); }
  int exceptional_factor_count() const;
  Subgroup factor_intersection(std::size_t r, std::size_t s) const;
};

// Groups the components into orbits under the permutation action of the
// supplied automorphism generators; the central factors are the orbit
// products. The generator list must contain inner generators, the
// per-factor certificates, and the component swaps found by
// find_component_swaps, or the orbits come out too fine.
CentralDecomposition aut_indecomposable_decomposition(
    const GroupPtr& g, std::span<const Homomorphism> aut_generators,
    const std::function<std::optional<QuasisimpleDescriptor>(const Subgroup&)>& descriptor_of,
    std::size_t guard = kDefaultLatticeGuard);

// Automorphisms of g swapping pairs of isomorphic components, discovered
// by constrained isomorphism search between the extracted components. The
// isomorphisms are required to fix the shared central elements, which
// keeps the assembled swap well defined across the amalgamation; for
// components with center-inverting automorphisms this loses no swaps,
// since a center-twisting swap composes with an inverter to a fixing one.
std::vector<Homomorphism> find_component_swaps(const GroupPtr& g,
                                               std::span<const Subgroup> comps,
                                               const SearchLimits& limits = {});

// Factor automorphism lifted along its embedding, identity on the other
// factors; nullopt when the lift is not well defined on the amalgamation.
std::optional<Homomorphism> lift_factor_automorphism(const CentralProduct& product,
                                                     std::size_t factor_idx,
                                                     const Homomorphism& factor_aut);

// Writes every element of the spanned subgroup as a product of one part
// per block, blocks pairwise elementwise-commuting. The part tuple is
// canonical: least first-block part, then least second, and so on.
class CommutingFactorization {
 public:
  CommutingFactorization(const GroupPtr& g, std::vector<Subgroup> blocks);

  std::size_t block_count() const { return blocks_.size(); }
  const Subgroup& block(std::size_t i) const { return blocks_[i]; }
  const Subgroup& span() const { return spans_.front(); }
  bool covers(Idx x) const { return span().contains(x); }
  // the block parts of x; their product (in block order) is x
  std::vector<Idx> parts(Idx x) const;

 private:
  GroupPtr g_;
  std::vector<Subgroup> blocks_;
  std::vector<Subgroup> spans_;  // spans_[k] = product of blocks k..t-1
  // head_[k][x]: block-k part of x within spans_[k]; rest via tail_
  std::vector<std::vector<Idx>> head_;
  std::vector<std::vector<Idx>> tail_;
};

// An automorphism of a subgroup of g, stored on ambient indices.
struct PartialAutomorphism {
  Subgroup domain;
  std::vector<Idx> image;  // kInvalidIdx outside the domain

  Idx operator()(Idx x) const { return image[x]; }
};

// Componentwise assembly: apply one map per component and multiply the
// pieces. The per-component maps are given on ambient indices. The result
// is verified multiplicative and bijective on the spanned subgroup.
PartialAutomorphism assemble_componentwise(const GroupPtr& g, std::span<const Subgroup> comps,
                                           std::span<const std::vector<Idx>> maps);

// The center-inverting automorphism of g assembled from per-component
// inverting certificates (identity where the center has exponent <= 2).
// Verified to invert every element of Z(g). Throws CheckError when a
// certificate fails to invert its component's center.
Homomorphism assemble_center_inverting(const GroupPtr& g, std::span<const Subgroup> comps,
                                       std::span<const std::vector<Idx>> inverting_maps);

// A component without any center-inverting automorphism blocks the
// assembly; the descriptors are checked against the exceptional catalog
// before any certificates are requested.
class ExceptionalComponentError : public Error {
 public:
  using Error::Error;
};
void require_invertible_components(std::span<const QuasisimpleDescriptor> descriptors,
                                   const CoverCatalog& catalog = CoverCatalog::compiled());

}  // namespace multihol

#endif  // MULTIHOL_CENTRAL_PRODUCT_HPP_
