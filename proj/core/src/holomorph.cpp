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

#include "multihol/holomorph.hpp"

#include <algorithm>
#include <deque>

namespace multihol {

Perm right_translation(const FiniteGroup& g, Idx a) {
  Perm p(g.size());
  for (Idx x = 0; x < g.size(); ++x) p[x] = g.mul(x, a);
  return p;
}

Perm left_translation(const FiniteGroup& g, Idx a) {
  Perm p(g.size());
  for (Idx x = 0; x < g.size(); ++x) p[x] = g.mul(a, x);
  return p;
}

Perm inversion_map(const FiniteGroup& g) {
  Perm p(g.size());
  for (Idx x = 0; x < g.size(); ++x) p[x] = g.inverse(x);
  return p;
}

std::optional<std::uint64_t> HolomorphGroup::order() const {
  if (!aut_order) return std::nullopt;
  return *aut_order * base->size();
}

std::vector<const Perm*> HolomorphGroup::generators() const {
  std::vector<const Perm*> out;
  for (const Perm& p : rho_gens) out.push_back(&p);
  for (const Perm& p : lambda_gens) out.push_back(&p);
  for (const Perm& p : aut_gens) out.push_back(&p);
  return out;
}

HolomorphGroup holomorph_group(const GroupPtr& g, const std::vector<Homomorphism>& aut_generators,
                               const std::vector<std::string>& labels,
                               std::optional<std::uint64_t> aut_order) {
  HolomorphGroup h;
  h.base = g;
  for (Idx s : g->generators()) {
    h.rho_gens.push_back(right_translation(*g, s));
    h.lambda_gens.push_back(left_translation(*g, s));
  }
  for (std::size_t i = 0; i < aut_generators.size(); ++i) {
    const Homomorphism& a = aut_generators[i];
    if (!is_automorphism(a) || a.source != g) {
      throw CheckError("holomorph generator is not a verified automorphism of " + g->name());
    }
    if (a.image_table[0] != 0) throw CheckError("automorphism moves the identity point");
    h.aut_gens.push_back(a.image_table);
    h.aut_labels.push_back(i < labels.size() ? labels[i] : "aut" + std::to_string(i));
  }
  h.aut_order = aut_order;
  for (const Perm& r : h.rho_gens) {
    for (const Perm& l : h.lambda_gens) {
      if (compose(r, l) != compose(l, r)) {
        throw CheckError(g->name() + ": regular representations fail to commute");
      }
    }
  }
  return h;
}

std::optional<HolomorphPart> holomorph_membership(const Perm& sigma, const GroupPtr& g) {
  if (sigma.size() != g->size() || !is_permutation(sigma)) return std::nullopt;
  const Idx g0 = sigma[0];
  const Idx g0_inv = g->inverse(g0);
  std::vector<Idx> alpha(g->size());
  for (Idx x = 0; x < g->size(); ++x) alpha[x] = g->mul(sigma[x], g0_inv);
  const auto& gens = g->generators();
  for (Idx x = 0; x < g->size(); ++x) {
    for (Idx s : gens) {
      if (alpha[g->mul(x, s)] != g->mul(alpha[x], alpha[s])) return std::nullopt;
    }
  }
  HolomorphPart part;
  part.aut_part = hom_from_table(g, g, std::move(alpha));
  if (!part.aut_part.bijective) return std::nullopt;
  part.translation = g0;
  return part;
}

namespace {

std::uint64_t hash_perm(const Perm& p) {
  std::uint64_t h = 1469598103934665603ull;
  for (Idx v : p) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

PermGroupOps::PermGroupOps(Idx degree, const std::vector<Perm>& generators, std::size_t guard,
                           std::string label)
    : degree_(degree), label_(std::move(label)) {
  for (const Perm& p : generators) {
    if (p.size() != degree || !is_permutation(p)) throw Error(label_ + ": bad generator");
  }
  insert(identity_perm(degree_));
  std::deque<Idx> queue{0};
  // generator indices fixed up as they are discovered
  while (!queue.empty()) {
    Idx x = queue.front();
    queue.pop_front();
    Perm px = perm_of(x);
    for (const Perm& gp : generators) {
      Perm y = compose(px, gp);
      if (!lookup(y)) {
        if (size() >= guard) {
          throw GuardError(label_ + ": closure exceeded guard of " + std::to_string(guard) +
                           " permutations");
        }
        queue.push_back(insert(y));
      }
    }
  }
  for (const Perm& gp : generators) gen_indices_.push_back(*lookup(gp));
}

Idx PermGroupOps::mul(Idx a, Idx b) const {
  Perm r(degree_);
  const Idx* pa = &flat_[static_cast<std::size_t>(a) * degree_];
  const Idx* pb = &flat_[static_cast<std::size_t>(b) * degree_];
  for (Idx x = 0; x < degree_; ++x) r[x] = pb[pa[x]];
  auto idx = lookup(r);
  if (!idx) throw Error(label_ + ": product escaped the closure");
  return *idx;
}

Idx PermGroupOps::inverse_hint(Idx a) const {
  auto idx = lookup(inverse_perm(perm_of(a)));
  if (!idx) throw Error(label_ + ": inverse escaped the closure");
  return *idx;
}

Perm PermGroupOps::perm_of(Idx i) const {
  return Perm(flat_.begin() + static_cast<std::size_t>(i) * degree_,
              flat_.begin() + static_cast<std::size_t>(i + 1) * degree_);
}

std::optional<Idx> PermGroupOps::index_of(const Perm& p) const { return lookup(p); }

Idx PermGroupOps::insert(const Perm& p) {
  Idx id = size();
  flat_.insert(flat_.end(), p.begin(), p.end());
  buckets_[hash_perm(p)].push_back(id);
  return id;
}

std::optional<Idx> PermGroupOps::lookup(const Perm& p) const {
  auto it = buckets_.find(hash_perm(p));
  if (it == buckets_.end()) return std::nullopt;
  for (Idx cand : it->second) {
    if (std::equal(p.begin(), p.end(), flat_.begin() + static_cast<std::size_t>(cand) * degree_)) {
      return cand;
    }
  }
  return std::nullopt;
}

PermutationGroup permutation_group_closure(Idx degree, const std::vector<Perm>& generators,
                                           std::size_t guard, std::string name) {
  auto ops = std::make_shared<const PermGroupOps>(degree, generators, guard, name);
  PermutationGroup out;
  out.ops = ops;
  out.group = make_group(ops, ops->generator_indices(), std::move(name));
  return out;
}

RegularNormalOracle brute_force_regular_normal_subgroups(const HolomorphGroup& hol,
                                                         std::size_t holomorph_guard,
                                                         std::size_t lattice_guard) {
  std::vector<Perm> gens;
  for (const Perm* p : hol.generators()) gens.push_back(*p);
  // inner automorphisms arise as lambda(g^-1) * rho(g), so rho and lambda
  // generators alone generate G's inner part; the supplied automorphism
  // generators fill in the rest of Aut(G)
  RegularNormalOracle out;
  out.holomorph = permutation_group_closure(hol.base->size(), gens, holomorph_guard,
                                            "Hol(" + hol.base->name() + ")");
  const GroupPtr& hg = out.holomorph.group;
  const Idx base_order = hol.base->size();

  for (Subgroup& n : normal_subgroups(*hg, lattice_guard)) {
    if (n.order() != base_order) continue;
    IndexSet images(base_order);
    bool regular = true;
    for (Idx m : n.elements()) {
      Idx img = out.holomorph.ops->perm_of(m)[0];
      if (images.test(img)) {
        regular = false;
        break;
      }
      images.set(img);
    }
    if (regular && images.count() == base_order) out.regular_normals.push_back(std::move(n));
  }
  return out;
}

}  // namespace multihol
