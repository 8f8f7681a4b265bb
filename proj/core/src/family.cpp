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

#include "multihol/family.hpp"

#include <algorithm>
#include <bit>

namespace multihol {

RegularFamily::RegularFamily(const CentralDecomposition& decomposition)
    : g_(decomposition.group) {
  for (const DecompositionFactor& f : decomposition.factors) {
    factor_subgroups_.push_back(f.subgroup);
  }
  if (factor_subgroups_.empty()) throw Error("family over zero factors");
  if (factor_subgroups_.size() > 20) throw Error("too many factors for subset enumeration");

  const std::uint32_t count = subset_count();
  blocks_.resize(count);
  for (std::uint32_t subset = 0; subset < count; ++subset) {
    Blocks& b = blocks_[subset];
    b.subset = subset;
    auto span_of = [&](std::uint32_t mask) {
      std::vector<Idx> gens;
      for (std::size_t i = 0; i < factor_subgroups_.size(); ++i) {
        if (mask & (1u << i)) {
          const auto& fg = factor_subgroups_[i].generators();
          gens.insert(gens.end(), fg.begin(), fg.end());
        }
      }
      if (gens.empty()) return trivial_subgroup(*g_);
      return closure(*g_, gens);
    };
    b.part = span_of(subset);
    b.copart = span_of(~subset & (count - 1));
    CommutingFactorization fact(g_, {b.part, b.copart});
    if (fact.span().order() != g_->size()) {
      throw CheckError(g_->name() + ": factor blocks do not span the group");
    }
    b.part_of.resize(g_->size());
    b.copart_of.resize(g_->size());
    for (Idx x = 0; x < g_->size(); ++x) {
      std::vector<Idx> parts = fact.parts(x);
      b.part_of[x] = parts[0];
      b.copart_of[x] = parts[1];
    }
    b.ambiguity = (b.part.members() & b.copart.members()).elements();
  }
}

std::vector<Perm> RegularFamily::member_generators(std::uint32_t subset) const {
  const Blocks& b = blocks(subset);
  std::vector<Perm> gens;
  for (Idx s : b.part.generators()) {
    if (s != 0) gens.push_back(right_translation(*g_, s));
  }
  for (Idx s : b.copart.generators()) {
    if (s != 0) gens.push_back(left_translation(*g_, s));
  }
  if (gens.empty()) gens.push_back(identity_perm(g_->size()));
  return gens;
}

bool RegularFamily::member_contains(std::uint32_t subset, const Perm& sigma) const {
  if (sigma.size() != g_->size()) return false;
  const Blocks& b = blocks(subset);
  const Idx g0 = sigma[0];
  // sigma = rho(u) lambda(v) maps x to v*x*u and the identity to v*u, so
  // try every admissible splitting of the identity image
  for (Idx d : b.ambiguity) {
    const Idx u = g_->mul(b.part_of[g0], d);
    const Idx v = g_->mul(g_->inverse(d), b.copart_of[g0]);
    bool match = true;
    for (Idx x = 0; x < g_->size(); ++x) {
      if (sigma[x] != g_->mul(v, g_->mul(x, u))) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

void RegularFamily::verify_member_regular(std::uint32_t subset) const {
  const Blocks& b = blocks(subset);
  for (Idx x = 0; x < g_->size(); ++x) {
    if (g_->mul(b.part_of[x], b.copart_of[x]) != x) {
      throw CheckError("canonical factorization misses element " + std::to_string(x));
    }
  }
  // point stabilizer: rho(u) lambda(u^-1) for u in the central ambiguity
  // must all be the identity permutation
  for (Idx u : b.ambiguity) {
    const Idx ui = g_->inverse(u);
    for (Idx x = 0; x < g_->size(); ++x) {
      if (g_->mul(ui, g_->mul(x, u)) != x) {
        throw CheckError("member stabilizer contains a nontrivial element at subset " +
                         std::to_string(subset));
      }
    }
  }
}

Perm RegularFamily::conjugator(std::uint32_t subset,
                               const PartialAutomorphism& copart_inverter) const {
  const Blocks& b = blocks(subset);
  if (!(copart_inverter.domain.members() == b.copart.members())) {
    throw Error("inverter domain does not match the complementary block");
  }
  Perm phi(g_->size());
  for (Idx x = 0; x < g_->size(); ++x) {
    phi[x] = g_->mul(b.part_of[x], g_->inverse(copart_inverter(b.copart_of[x])));
  }
  // well-definedness across the central ambiguity, checked elementwise:
  // every alternative splitting must produce the same image
  for (Idx d : b.ambiguity) {
    if (d == 0) continue;
    const Idx di = g_->inverse(d);
    for (Idx x = 0; x < g_->size(); ++x) {
      const Idx alt_part = g_->mul(b.part_of[x], d);
      const Idx alt_copart = g_->mul(di, b.copart_of[x]);
      if (g_->mul(alt_part, g_->inverse(copart_inverter(alt_copart))) != phi[x]) {
        throw IllDefinedMapError(
            "conjugator ill defined at element " + std::to_string(x) +
            ": the supplied automorphism does not invert the central ambiguity");
      }
    }
  }
  if (!is_permutation(phi)) throw CheckError("conjugator is not a bijection");
  return phi;
}

namespace {

class TwistedOps final : public GroupOps {
 public:
  TwistedOps(GroupPtr base, std::vector<Idx> part_of, std::vector<Idx> copart_of,
             std::string label)
      : base_(std::move(base)),
        part_of_(std::move(part_of)),
        copart_of_(std::move(copart_of)),
        label_(std::move(label)) {}

  Idx size() const override { return base_->size(); }
  Idx mul(Idx a, Idx b) const override {
    // a_J b_J b_Jc a_Jc
    return base_->mul(base_->mul(part_of_[a], part_of_[b]),
                      base_->mul(copart_of_[b], copart_of_[a]));
  }
  Idx inverse_hint(Idx a) const override { return base_->inverse(a); }
  std::string describe() const override { return label_; }

 private:
  GroupPtr base_;
  std::vector<Idx> part_of_;
  std::vector<Idx> copart_of_;
  std::string label_;
};

}  // namespace

GroupPtr RegularFamily::twisted_group(std::uint32_t subset) const {
  const Blocks& b = blocks(subset);
  std::string name = g_->name() + " twisted " + std::to_string(subset);
  auto ops = std::make_shared<const TwistedOps>(g_, b.part_of, b.copart_of, name);
  std::vector<Idx> gens;
  for (Idx s : b.part.generators()) {
    if (s != 0) gens.push_back(s);
  }
  for (Idx s : b.copart.generators()) {
    if (s != 0) gens.push_back(s);
  }
  if (gens.empty()) gens.push_back(0);
  return make_group(ops, std::move(gens), std::move(name));
}

DescriptorInstance DescriptorInstance::amalgamated(std::vector<DescriptorFactor> factors,
                                                   const AbelianInvariants& shared_center) {
  DescriptorInstance inst;
  const std::size_t n = factors.size();
  inst.factors = std::move(factors);
  inst.intersections.assign(n, std::vector<AbelianInvariants>(n, shared_center));
  return inst;
}

HSetResult h_set_from_descriptors(const DescriptorInstance& inst, const CoverCatalog& catalog) {
  const int n = static_cast<int>(inst.factors.size());
  if (n < 1 || n > 20) throw InputError("descriptor instance with unsupported factor count");

  std::uint32_t exceptional_mask = 0;
  for (int i = 0; i < n; ++i) {
    for (const QuasisimpleDescriptor& d : inst.factors[i].component_descriptors) {
      if (catalog.lacks_center_inverting_automorphism(d)) exceptional_mask |= 1u << i;
    }
  }

  // a critical shape of an exceptional component of either side inside
  // the pairwise intersection removes the subset from the family
  auto blocked = [&](int r, int s) {
    const AbelianInvariants& w = inst.intersections.at(r).at(s);
    for (int k : {r, s}) {
      for (const QuasisimpleDescriptor& d : inst.factors[k].component_descriptors) {
        if (catalog.critical_subgroup_present(w, d)) return true;
      }
    }
    return false;
  };

  HSetResult out;
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t j = 0; j <= full; ++j) {
    const std::uint32_t in_l = j & exceptional_mask;
    const std::uint32_t out_l = ~j & exceptional_mask;
    bool member = true;
    if (in_l != 0 && out_l != 0) {
      for (int r = 0; r < n && member; ++r) {
        if (!(in_l & (1u << r))) continue;
        for (int s = 0; s < n && member; ++s) {
          if (!(out_l & (1u << s))) continue;
          if (blocked(r, s)) member = false;
        }
      }
    }
    if (member) out.subsets.push_back(j);
  }

  out.exceptional_count = std::popcount(exceptional_mask);
  out.bounds = h_bounds(n, out.exceptional_count);
  const std::size_t count = out.subsets.size();
  if (!std::has_single_bit(count)) {
    throw CheckError("descriptor family size " + std::to_string(count) + " is not a power of two");
  }
  out.rank = std::countr_zero(count);
  if (out.bounds.count_lower > count || count > out.bounds.count_upper) {
    throw CheckError("descriptor family size escapes the counting bounds");
  }
  return out;
}

}  // namespace multihol
