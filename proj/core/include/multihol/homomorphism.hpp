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

#ifndef MULTIHOL_HOMOMORPHISM_HPP_
#define MULTIHOL_HOMOMORPHISM_HPP_

#include <optional>
#include <span>
#include <vector>

#include "multihol/finite_group.hpp"

namespace multihol {

// Generator-image map with its full extension table. Verified means the
// Cayley-edge check passed: image(g*s) == image(g)*image(s) for every
// element g and source generator s. Because every element has a Cayley
// word rooted at the identity, the edge check implies multiplicativity on
// all pairs (induction along words).
struct Homomorphism {
  GroupPtr source;
  GroupPtr target;
  std::vector<Idx> image_table;
  std::vector<Idx> generator_images;
  bool bijective = false;

  Idx operator()(Idx x) const { return image_table[x]; }
  bool is_identity() const;
};

// Builds the table by walking the source's Cayley words, then runs the
// edge check. Throws NotAHomomorphismError with an edge witness.
Homomorphism extend_hom(const GroupPtr& source, const GroupPtr& target,
                        std::span<const Idx> generator_images);

// Same, but a failed edge check returns nullopt (used by searches).
std::optional<Homomorphism> try_extend_hom(const GroupPtr& source, const GroupPtr& target,
                                           std::span<const Idx> generator_images);

// Wraps an already-complete image table, re-running the edge check.
Homomorphism hom_from_table(const GroupPtr& source, const GroupPtr& target,
                            std::vector<Idx> table);

Homomorphism identity_automorphism(const GroupPtr& g);
Homomorphism compose(const Homomorphism& first, const Homomorphism& then);
Homomorphism inverse_of(const Homomorphism& h);  // requires bijective

// Automorphism from conjugation by g: x -> g^-1 x g.
Homomorphism inner_automorphism(const GroupPtr& g, Idx by);

bool is_automorphism(const Homomorphism& h);

}  // namespace multihol

#endif  // MULTIHOL_HOMOMORPHISM_HPP_
