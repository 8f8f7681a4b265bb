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

#include "multihol/central_product.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace multihol {

namespace {

using Tuple = std::vector<Idx>;

// Tuples pack into 64-bit codes with slot 0 as the most significant
// digit, so numeric order on codes is lexicographic order on tuples and
// the canonical (least) coset representative is the minimal code.
class CentralProductOps final : public GroupOps {
 public:
  CentralProductOps(std::vector<GroupPtr> factors, std::vector<Tuple> amalgam,
                    std::string label)
      : factors_(std::move(factors)), amalgam_(std::move(amalgam)), label_(std::move(label)) {
    const std::size_t t = factors_.size();
    radix_.assign(t, 1);
    for (std::size_t i = t; i-- > 1;) radix_[i - 1] = radix_[i] * factors_[i]->size();
    std::uint64_t total = radix_[0] * factors_[0]->size();
    if (t > 1 && total / factors_[0]->size() != radix_[0]) {
      throw Error("direct product too large to encode");
    }

    // breadth-first enumeration of canonical coset representatives
    std::vector<Tuple> gen_tuples;
    for (std::size_t i = 0; i < t; ++i) {
      for (Idx s : factors_[i]->generators()) {
        Tuple g(t, 0);
        g[i] = s;
        gen_tuples.push_back(std::move(g));
      }
    }
    Tuple id(t, 0);
    push_element(canonicalize(id));
    std::deque<Idx> queue{0};
    while (!queue.empty()) {
      Idx x = queue.front();
      queue.pop_front();
      Tuple tx = tuple_of(x);
      for (const Tuple& gt : gen_tuples) {
        Tuple y = canonicalize(mul_tuples(tx, gt));
        auto [it, fresh] = index_.emplace(pack(y), static_cast<Idx>(size()));
        if (fresh) {
          append_tuple(y);
          queue.push_back(it->second);
        }
      }
    }
  }

  Idx size() const override { return static_cast<Idx>(flat_.size() / factors_.size()); }

  Idx mul(Idx a, Idx b) const override {
    const std::size_t t = factors_.size();
    Tuple r(t);
    const Idx* pa = &flat_[static_cast<std::size_t>(a) * t];
    const Idx* pb = &flat_[static_cast<std::size_t>(b) * t];
    for (std::size_t i = 0; i < t; ++i) r[i] = factors_[i]->mul(pa[i], pb[i]);
    return index_.at(pack(canonicalize(r)));
  }

  Idx inverse_hint(Idx a) const override {
    const std::size_t t = factors_.size();
    Tuple r(t);
    const Idx* pa = &flat_[static_cast<std::size_t>(a) * t];
    for (std::size_t i = 0; i < t; ++i) r[i] = factors_[i]->inverse(pa[i]);
    return index_.at(pack(canonicalize(r)));
  }

  std::string describe() const override { return label_; }

  Tuple tuple_of(Idx x) const {
    const std::size_t t = factors_.size();
    return Tuple(flat_.begin() + static_cast<std::size_t>(x) * t,
                 flat_.begin() + static_cast<std::size_t>(x + 1) * t);
  }

  Idx index_of_tuple(const Tuple& tu) const { return index_.at(pack(canonicalize(tu))); }

 private:
  std::uint64_t pack(const Tuple& tu) const {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < tu.size(); ++i) c += radix_[i] * tu[i];
    return c;
  }

  Tuple mul_tuples(const Tuple& a, const Tuple& b) const {
    Tuple r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = factors_[i]->mul(a[i], b[i]);
    return r;
  }

  Tuple canonicalize(const Tuple& tu) const {
    Tuple best = tu;
    std::uint64_t best_code = pack(tu);
    for (const Tuple& n : amalgam_) {
      Tuple cand = mul_tuples(tu, n);
      std::uint64_t code = pack(cand);
      if (code < best_code) {
        best_code = code;
        best = std::move(cand);
      }
    }
    return best;
  }

  void push_element(const Tuple& tu) {
    index_.emplace(pack(tu), static_cast<Idx>(size()));
    append_tuple(tu);
  }
  void append_tuple(const Tuple& tu) { flat_.insert(flat_.end(), tu.begin(), tu.end()); }

  std::vector<GroupPtr> factors_;
  std::vector<Tuple> amalgam_;  // the subgroup N, as tuples, identity first
  std::vector<std::uint64_t> radix_;
  std::vector<Idx> flat_;  // canonical tuples, t entries per element
  std::unordered_map<std::uint64_t, Idx> index_;
  std::string label_;
};

}  // namespace

CentralProduct central_product(std::vector<GroupPtr> factors, const AmalgamationSpec& amalg,
                               std::string name) {
  if (factors.empty()) throw InputError("central product of zero factors");
  const std::size_t t = factors.size();
  if (name.empty()) {
    for (std::size_t i = 0; i < t; ++i) {
      if (i) name += amalg.identifications.empty() ? " x " : " o ";
      name += factors[i]->name();
    }
  }

  // the amalgamated subgroup N, generated by the identification tuples
  std::vector<Tuple> n_gens;
  for (const CentralIdentification& id : amalg.identifications) {
    if (id.factor_a >= t || id.factor_b >= t) throw InvalidAmalgamationError("factor index out of range");
    if (id.factor_a == id.factor_b) {
      throw InvalidAmalgamationError("identification within a single factor");
    }
    if (!factors[id.factor_a]->center().contains(id.elem_a) ||
        !factors[id.factor_b]->center().contains(id.elem_b)) {
      throw InvalidAmalgamationError("identified element is not central in its factor");
    }
    Tuple g(t, 0);
    g[id.factor_a] = id.elem_a;
    g[id.factor_b] = factors[id.factor_b]->inverse(id.elem_b);
    n_gens.push_back(std::move(g));
  }
  std::vector<Tuple> amalgam{Tuple(t, 0)};
  {
    auto mul_tuples = [&](const Tuple& a, const Tuple& b) {
      Tuple r(t);
      for (std::size_t i = 0; i < t; ++i) r[i] = factors[i]->mul(a[i], b[i]);
      return r;
    };
    for (std::size_t i = 0; i < amalgam.size(); ++i) {
      for (const Tuple& g : n_gens) {
        Tuple y = mul_tuples(amalgam[i], g);
        if (std::find(amalgam.begin(), amalgam.end(), y) == amalgam.end()) {
          amalgam.push_back(std::move(y));
        }
      }
    }
  }
  for (const Tuple& n : amalgam) {
    int nontrivial = 0;
    for (Idx v : n) nontrivial += v != 0;
    if (nontrivial == 1) {
      throw InvalidAmalgamationError("amalgamation subgroup meets a factor nontrivially");
    }
  }

  auto ops = std::make_shared<const CentralProductOps>(factors, amalgam, name);
  std::vector<Idx> gens;
  std::vector<std::pair<std::size_t, std::size_t>> origin;
  for (std::size_t i = 0; i < t; ++i) {
    const auto& fgens = factors[i]->generators();
    for (std::size_t gi = 0; gi < fgens.size(); ++gi) {
      Tuple tu(t, 0);
      tu[i] = fgens[gi];
      gens.push_back(ops->index_of_tuple(tu));
      origin.emplace_back(i, gi);
    }
  }

  CentralProduct out;
  out.group = make_group(ops, gens, name);
  out.factor_groups = std::move(factors);
  out.generator_origin = std::move(origin);
  out.amalgamated_order = static_cast<Idx>(amalgam.size());
  for (std::size_t i = 0; i < t; ++i) {
    FactorEmbedding emb;
    emb.element_map.resize(out.factor_groups[i]->size());
    IndexSet members(out.group->size());
    for (Idx x = 0; x < out.factor_groups[i]->size(); ++x) {
      Tuple tu(t, 0);
      tu[i] = x;
      Idx px = ops->index_of_tuple(tu);
      emb.element_map[x] = px;
      members.set(px);
    }
    std::vector<Idx> emb_gens;
    for (Idx s : out.factor_groups[i]->generators()) emb_gens.push_back(emb.element_map[s]);
    emb.image = Subgroup(std::move(members), std::move(emb_gens));
    out.embeddings.push_back(std::move(emb));
  }
  return out;
}

namespace {

bool canonical_subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.members().lex_less(b.members());
}

}  // namespace

std::vector<Subgroup> components(const GroupPtr& g, std::size_t guard) {
  if (!g->is_perfect()) {
    throw NotSemisimpleError(g->name() + " is not perfect (derived subgroup has order " +
                             std::to_string(g->derived_subgroup().order()) + ")");
  }
  CentralQuotient q = quotient_by_central(g, g->center());
  std::vector<Subgroup> normals = normal_subgroups(*q.group, guard);

  std::vector<Subgroup> minimal;
  for (const Subgroup& n : normals) {
    if (n.order() == 1) continue;
    bool is_minimal = true;
    for (const Subgroup& m : normals) {
      if (m.order() == 1 || m == n) continue;
      if (m.members().is_subset_of(n.members())) {
        is_minimal = false;
        break;
      }
    }
    if (is_minimal) minimal.push_back(n);
  }

  std::vector<Subgroup> comps;
  for (const Subgroup& m : minimal) {
    bool abelian = true;
    for (Idx a : m.generators()) {
      for (Idx b : m.generators()) {
        if (q.group->mul(a, b) != q.group->mul(b, a)) {
          abelian = false;
          break;
        }
      }
      if (!abelian) break;
    }
    if (abelian) {
      throw NotSemisimpleError(g->name() + ": minimal normal subgroup of order " +
                               std::to_string(m.order()) + " of the central quotient is abelian");
    }
    // preimage, then its derived subgroup
    IndexSet pre(g->size());
    for (Idx x = 0; x < g->size(); ++x) {
      if (m.contains(q.projection[x])) pre.set(x);
    }
    std::vector<Idx> pre_gens;
    for (Idx mg : m.generators()) pre_gens.push_back(q.section[mg]);
    for (Idx z : g->center().generators()) pre_gens.push_back(z);
    comps.push_back(subgroup_derived(*g, Subgroup(std::move(pre), std::move(pre_gens))));
  }
  std::sort(comps.begin(), comps.end(), canonical_subgroup_less);

  std::vector<Idx> all_gens;
  for (const Subgroup& c : comps) {
    all_gens.insert(all_gens.end(), c.generators().begin(), c.generators().end());
    ExtractedSubgroup ex = extract_subgroup(g, c);
    if (!is_quasisimple(ex.group)) {
      throw NotSemisimpleError(g->name() + ": component of order " + std::to_string(c.order()) +
                               " is not quasisimple");
    }
  }
  if (closure(*g, all_gens).order() != g->size()) {
    throw NotSemisimpleError(g->name() + ": components do not generate the group");
  }
  return comps;
}

int CentralDecomposition::exceptional_factor_count() const {
  int l = 0;
  for (const DecompositionFactor& f : factors) l += f.exceptional ? 1 : 0;
  return l;
}

Subgroup CentralDecomposition::factor_intersection(std::size_t r, std::size_t s) const {
  IndexSet m = factors[r].subgroup.members() & factors[s].subgroup.members();
  std::vector<Idx> gens = m.elements();
  if (gens.empty() || gens[0] != 0) throw Error("intersection without identity");
  return Subgroup(std::move(m), std::move(gens));
}

CentralDecomposition aut_indecomposable_decomposition(
    const GroupPtr& g, std::span<const Homomorphism> aut_generators,
    const std::function<std::optional<QuasisimpleDescriptor>(const Subgroup&)>& descriptor_of,
    std::size_t guard) {
  CentralDecomposition out;
  out.group = g;
  out.component_subgroups = components(g, guard);
  const std::size_t t = out.component_subgroups.size();

  for (const Subgroup& c : out.component_subgroups) {
    out.component_descriptors.push_back(descriptor_of ? descriptor_of(c) : std::nullopt);
  }

  // the permutation action of each automorphism on the component list
  std::vector<std::size_t> parent(t);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Homomorphism& a : aut_generators) {
    if (!is_automorphism(a) || a.source != g) throw Error("invalid automorphism generator");
    for (std::size_t k = 0; k < t; ++k) {
      IndexSet image(g->size());
      for (Idx x : out.component_subgroups[k].elements()) image.set(a(x));
      std::size_t match = t;
      for (std::size_t m = 0; m < t; ++m) {
        if (image == out.component_subgroups[m].members()) {
          match = m;
          break;
        }
      }
      if (match == t) {
        throw CheckError(g->name() + ": automorphism does not permute the components");
      }
      parent[find(k)] = find(match);
    }
  }

  std::vector<std::vector<std::size_t>> orbits;
  {
    std::vector<std::size_t> root_to_orbit(t, t);
    for (std::size_t k = 0; k < t; ++k) {
      std::size_t r = find(k);
      if (root_to_orbit[r] == t) {
        root_to_orbit[r] = orbits.size();
        orbits.emplace_back();
      }
      orbits[root_to_orbit[r]].push_back(k);
    }
  }

  const CoverCatalog& catalog = CoverCatalog::compiled();
  for (const auto& orbit : orbits) {
    DecompositionFactor f;
    f.component_indices = orbit;
    std::vector<Idx> gens;
    for (std::size_t k : orbit) {
      const auto& c = out.component_subgroups[k];
      gens.insert(gens.end(), c.generators().begin(), c.generators().end());
    }
    f.subgroup = closure(*g, gens);
    f.descriptor_known = true;
    for (std::size_t k : orbit) {
      const auto& d = out.component_descriptors[k];
      if (!d) {
        f.descriptor_known = false;
      } else if (catalog.lacks_center_inverting_automorphism(*d)) {
        f.exceptional = true;
      }
    }
    out.factors.push_back(std::move(f));
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const DecompositionFactor& a, const DecompositionFactor& b) {
              return canonical_subgroup_less(a.subgroup, b.subgroup);
            });

  // every factor must be invariant under every supplied automorphism
  for (const DecompositionFactor& f : out.factors) {
    for (const Homomorphism& a : aut_generators) {
      for (Idx s : f.subgroup.generators()) {
        if (!f.subgroup.contains(a(s))) {
          throw CheckError(g->name() + ": central factor not automorphism-invariant");
        }
      }
    }
  }

  const std::size_t n = out.factors.size();
  out.intersection_invariants.assign(n, std::vector<AbelianInvariants>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      Subgroup inter = r == s ? subgroup_center(*g, out.factors[r].subgroup)
                              : out.factor_intersection(r, s);
      std::vector<Idx> elems = inter.elements();
      out.intersection_invariants[r][s] =
          AbelianInvariants::of_subgroup(*g, Subgroup(inter.members(), std::move(elems)));
    }
  }
  return out;
}

std::vector<Homomorphism> find_component_swaps(const GroupPtr& g,
                                               std::span<const Subgroup> comps,
                                               const SearchLimits& limits) {
  std::vector<Homomorphism> swaps;
  std::vector<ExtractedSubgroup> extracted;
  for (const Subgroup& c : comps) extracted.push_back(extract_subgroup(g, c));

  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      if (comps[i].order() != comps[j].order()) continue;
      // the isomorphism must fix every central element the two components
      // share, or the assembled swap is not well defined on the product
      PrescribedImages constraint;
      bool feasible = true;
      IndexSet shared = comps[i].members() & comps[j].members();
      for (Idx z : shared.elements()) {
        if (extracted[j].to_local[z] == kInvalidIdx) {
          feasible = false;
          break;
        }
        constraint.pairs.emplace_back(extracted[i].to_local[z], extracted[j].to_local[z]);
      }
      if (!feasible) continue;
      auto iso = search_isomorphism(extracted[i].group, extracted[j].group, constraint, limits);
      if (!iso) continue;

      std::vector<std::vector<Idx>> maps(comps.size());
      for (std::size_t k = 0; k < comps.size(); ++k) {
        maps[k].assign(g->size(), kInvalidIdx);
        if (k == i) {
          for (Idx x : comps[i].elements()) {
            maps[k][x] = extracted[j].to_parent[(*iso)(extracted[i].to_local[x])];
          }
        } else if (k == j) {
          Homomorphism back = inverse_of(*iso);
          for (Idx x : comps[j].elements()) {
            maps[k][x] = extracted[i].to_parent[back(extracted[j].to_local[x])];
          }
        } else {
          for (Idx x : comps[k].elements()) maps[k][x] = x;
        }
      }
      PartialAutomorphism pa = assemble_componentwise(g, comps, maps);
      if (pa.domain.order() != g->size()) {
        throw CheckError("component swap assembly does not span the group");
      }
      swaps.push_back(hom_from_table(g, g, pa.image));
    }
  }
  return swaps;
}

std::optional<Homomorphism> lift_factor_automorphism(const CentralProduct& product,
                                                     std::size_t factor_idx,
                                                     const Homomorphism& factor_aut) {
  const GroupPtr& g = product.group;
  std::vector<Idx> images;
  for (std::size_t slot = 0; slot < g->generators().size(); ++slot) {
    auto [f, gi] = product.generator_origin[slot];
    if (f == factor_idx) {
      Idx factor_gen = product.factor_groups[f]->generators()[gi];
      images.push_back(product.embeddings[f].element_map[factor_aut(factor_gen)]);
    } else {
      images.push_back(g->generators()[slot]);
    }
  }
  return try_extend_hom(g, g, images);
}

CommutingFactorization::CommutingFactorization(const GroupPtr& g, std::vector<Subgroup> blocks)
    : g_(g), blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw Error("factorization over zero blocks");
  const std::size_t t = blocks_.size();
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      for (Idx a : blocks_[i].generators()) {
        for (Idx b : blocks_[j].generators()) {
          if (g_->mul(a, b) != g_->mul(b, a)) {
            throw Error("factorization blocks do not commute elementwise");
          }
        }
      }
    }
  }
  spans_.resize(t);
  spans_[t - 1] = blocks_[t - 1];
  for (std::size_t k = t - 1; k-- > 0;) {
    std::vector<Idx> gens = blocks_[k].generators();
    gens.insert(gens.end(), spans_[k + 1].generators().begin(), spans_[k + 1].generators().end());
    spans_[k] = closure(*g_, gens);
  }
  head_.assign(t > 1 ? t - 1 : 0, {});
  tail_.assign(t > 1 ? t - 1 : 0, {});
  for (std::size_t k = 0; k + 1 < t; ++k) {
    head_[k].assign(g_->size(), kInvalidIdx);
    tail_[k].assign(g_->size(), kInvalidIdx);
    // ascending scan makes the recorded part the least possible one
    for (Idx u : blocks_[k].elements()) {
      for (Idx v : spans_[k + 1].elements()) {
        Idx x = g_->mul(u, v);
        if (head_[k][x] == kInvalidIdx) {
          head_[k][x] = u;
          tail_[k][x] = v;
        }
      }
    }
    for (Idx x : spans_[k].elements()) {
      if (head_[k][x] == kInvalidIdx) {
        throw CheckError("factorization incomplete: blocks do not cover their span");
      }
    }
  }
}

std::vector<Idx> CommutingFactorization::parts(Idx x) const {
  if (!covers(x)) throw Error("element outside the factorization span");
  std::vector<Idx> out;
  out.reserve(blocks_.size());
  for (std::size_t k = 0; k + 1 < blocks_.size(); ++k) {
    out.push_back(head_[k][x]);
    x = tail_[k][x];
  }
  out.push_back(x);
  return out;
}

PartialAutomorphism assemble_componentwise(const GroupPtr& g, std::span<const Subgroup> comps,
                                           std::span<const std::vector<Idx>> maps) {
  if (comps.size() != maps.size()) throw Error("one map per component required");
  CommutingFactorization fact(g, std::vector<Subgroup>(comps.begin(), comps.end()));
  const Subgroup& span = fact.span();

  PartialAutomorphism out;
  out.domain = span;
  out.image.assign(g->size(), kInvalidIdx);
  for (Idx x : span.elements()) {
    std::vector<Idx> parts = fact.parts(x);
    Idx y = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      Idx mapped = maps[k][parts[k]];
      if (mapped == kInvalidIdx) throw Error("component map undefined on a part");
      y = g->mul(y, mapped);
    }
    out.image[x] = y;
  }

  // multiplicative on the span and bijective onto it
  IndexSet hit(g->size());
  for (Idx x : span.elements()) {
    Idx y = out.image[x];
    if (!span.contains(y) || hit.test(y)) {
      throw CheckError("componentwise assembly is not a bijection of its span");
    }
    hit.set(y);
  }
  for (Idx x : span.elements()) {
    for (Idx s : span.generators()) {
      if (out.image[g->mul(x, s)] != g->mul(out.image[x], out.image[s])) {
        throw CheckError("componentwise assembly is not multiplicative");
      }
    }
  }
  return out;
}

void require_invertible_components(std::span<const QuasisimpleDescriptor> descriptors,
                                   const CoverCatalog& catalog) {
  for (const QuasisimpleDescriptor& d : descriptors) {
    if (catalog.lacks_center_inverting_automorphism(d)) {
      throw ExceptionalComponentError("component " + to_string(d.simple_quotient) +
                                      " with center " + d.center.to_string() +
                                      " admits no center-inverting automorphism");
    }
  }
}

Homomorphism assemble_center_inverting(const GroupPtr& g, std::span<const Subgroup> comps,
                                       std::span<const std::vector<Idx>> inverting_maps) {
  PartialAutomorphism pa = assemble_componentwise(g, comps, inverting_maps);
  if (pa.domain.order() != g->size()) {
    throw CheckError(g->name() + ": components do not span the group");
  }
  Homomorphism h = hom_from_table(g, g, pa.image);
  for (Idx z : g->center().elements()) {
    if (g->mul(h(z), z) != 0) {
      throw CheckError(g->name() + ": assembled automorphism fails to invert central element " +
                       std::to_string(z));
    }
  }
  return h;
}

}  // namespace multihol
