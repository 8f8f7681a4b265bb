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
// Exhaustive generator-image searches. Candidate images are filtered by
// element order and conjugacy class size and tried in increasing
// (class size, element index) order, so a NotFound answer is a
// certificate and the first hit is deterministic.

#ifndef MULTIHOL_SEARCH_HPP_
#define MULTIHOL_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "multihol/homomorphism.hpp"

namespace multihol {

class SearchBudgetError : public GuardError {
 public:
  SearchBudgetError(std::uint64_t tried, const std::string& what)
      : GuardError(what), candidates_tried(tried) {}
  std::uint64_t candidates_tried;
};

struct SearchLimits {
  std::uint64_t max_extensions = 10'000'000;
};

// Required images of specific source elements (typically central ones),
// checked on the fully extended table.
struct PrescribedImages {
  std::vector<std::pair<Idx, Idx>> pairs;
};

// A verified isomorphism satisfying the constraint, or nullopt once the
// candidate space is exhausted. Different orders short-circuit to nullopt.
std::optional<Homomorphism> search_isomorphism(const GroupPtr& source, const GroupPtr& target,
                                               const PrescribedImages& constraint = {},
                                               const SearchLimits& limits = {});

// An automorphism inverting every central element, or nullopt. The group
// must be quasisimple. When the center has exponent <= 2 the identity
// qualifies and is returned without searching.
std::optional<Homomorphism> search_inverting_automorphism(const GroupPtr& k,
                                                          const SearchLimits& limits = {});

// All automorphisms, by exhausting generator images. Intended for small
// groups only (used to pin |Aut| at holomorph scale).
std::vector<Homomorphism> enumerate_automorphisms(const GroupPtr& g,
                                                  const SearchLimits& limits = {});

}  // namespace multihol

#endif  // MULTIHOL_SEARCH_HPP_
