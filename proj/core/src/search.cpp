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

#include "multihol/search.hpp"

#include <algorithm>
#include <string>

namespace multihol {

namespace {

// candidate images for one source generator, ordered by (class size, index)
std::vector<Idx> candidates_for(const FiniteGroup& source, Idx gen, const FiniteGroup& target) {
  const Idx order = source.element_order(gen);
  const Idx class_size = source.conjugacy_classes().class_size_of(gen);
  std::vector<Idx> out;
  for (Idx y = 0; y < target.size(); ++y) {
    if (target.element_order(y) == order &&
        target.conjugacy_classes().class_size_of(y) == class_size) {
      out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end(), [&](Idx a, Idx b) {
    Idx sa = target.conjugacy_classes().class_size_of(a);
    Idx sb = target.conjugacy_classes().class_size_of(b);
    return sa != sb ? sa < sb : a < b;
  });
  return out;
}

bool satisfies(const Homomorphism& h, const PrescribedImages& constraint) {
  for (auto [x, y] : constraint.pairs) {
    if (h(x) != y) return false;
  }
  return true;
}

// Exhausts candidate generator-image tuples in lexicographic order. Calls
// visit on each verified bijective hit; stops when visit returns false.
template <typename Visit>
void for_each_isomorphism(const GroupPtr& source, const GroupPtr& target,
                          const PrescribedImages& constraint, const SearchLimits& limits,
                          Visit&& visit) {
  if (source->size() != target->size()) return;
  const auto& gens = source->generators();
  std::vector<std::vector<Idx>> cands;
  cands.reserve(gens.size());
  for (Idx s : gens) {
    cands.push_back(candidates_for(*source, s, *target));
    if (cands.back().empty()) return;
  }
  std::vector<std::size_t> pick(gens.size(), 0);
  std::vector<Idx> images(gens.size());
  std::uint64_t tried = 0;
  while (true) {
    if (++tried > limits.max_extensions) {
      throw SearchBudgetError(tried, "isomorphism search exceeded " +
                                         std::to_string(limits.max_extensions) + " extensions");
    }
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = cands[i][pick[i]];
    if (auto h = try_extend_hom(source, target, images)) {
      if (h->bijective && satisfies(*h, constraint)) {
        if (!visit(*std::move(h))) return;
      }
    }
    // odometer over candidate tuples, least significant slot last
    std::size_t k = gens.size();
    bool exhausted = true;
    while (k > 0) {
      --k;
      if (++pick[k] < cands[k].size()) {
        exhausted = false;
        break;
      }
      pick[k] = 0;
    }
    if (exhausted) return;
  }
}

}  // namespace

std::optional<Homomorphism> search_isomorphism(const GroupPtr& source, const GroupPtr& target,
                                               const PrescribedImages& constraint,
                                               const SearchLimits& limits) {
  std::optional<Homomorphism> found;
  for_each_isomorphism(source, target, constraint, limits, [&](Homomorphism h) {
    found = std::move(h);
    return false;
  });
  return found;
}

std::optional<Homomorphism> search_inverting_automorphism(const GroupPtr& k,
                                                          const SearchLimits& limits) {
  if (!is_quasisimple(k)) throw Error(k->name() + " is not quasisimple");
  const Subgroup& z = k->center();
  bool exponent_two = true;
  PrescribedImages constraint;
  for (Idx c : z.elements()) {
    constraint.pairs.emplace_back(c, k->inverse(c));
    if (k->mul(c, c) != 0) exponent_two = false;
  }
  if (exponent_two) return identity_automorphism(k);
  return search_isomorphism(k, k, constraint, limits);
}

std::vector<Homomorphism> enumerate_automorphisms(const GroupPtr& g, const SearchLimits& limits) {
  std::vector<Homomorphism> all;
  for_each_isomorphism(g, g, PrescribedImages{}, limits, [&](Homomorphism h) {
    all.push_back(std::move(h));
    return true;
  });
  return all;
}

}  // namespace multihol
