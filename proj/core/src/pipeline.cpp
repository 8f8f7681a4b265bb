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

#include "multihol/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include <json.hpp>

namespace multihol {

namespace {

Idx resolve_selector(const BuiltinFactor& f, const std::string& sel) {
  const GroupPtr& g = f.group;
  if (sel == "z") return f.canonical_central_generator;
  if (sel.rfind("z^", 0) == 0) {
    unsigned long k = std::stoul(sel.substr(2));
    return g->power(f.canonical_central_generator, k);
  }
  if (sel.rfind("@", 0) == 0) {
    unsigned long idx = std::stoul(sel.substr(1));
    if (idx >= g->size()) throw InputError("selector index out of range: " + sel);
    return static_cast<Idx>(idx);
  }
  throw InputError("bad central-element selector: " + sel);
}

struct CheckRecorder {
  std::vector<CheckOutcome>* sink;

  template <typename F>
  bool run(const std::string& name, F&& fn) {
    try {
      fn();
      sink->push_back({name, true, ""});
      return true;
    } catch (const GuardError&) {
      throw;
    } catch (const InputError&) {
      throw;
    } catch (const std::exception& e) {
      sink->push_back({name, false, e.what()});
      return false;
    }
  }
};

void require(bool cond, const std::string& witness) {
  if (!cond) throw CheckError(witness);
}

}  // namespace

const CheckOutcome* PipelineResult::find_check(const std::string& name) const {
  for (const CheckOutcome& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string subset_to_string(std::uint32_t subset, int n) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (subset & (1u << i)) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  }
  return s + "}";
}

PipelineResult run_pipeline(const GroupSpecFile& spec, PipelineStage stage,
                            const PipelineOptions& opts) {
  const auto t_start = std::chrono::steady_clock::now();
  PipelineResult R;
  CheckRecorder rec{&R.checks};
  auto finalize = [&] {
    R.all_passed = !R.aborted && std::all_of(R.checks.begin(), R.checks.end(),
                                             [](const CheckOutcome& c) { return c.pass; });
    R.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return R;
  };

  // ---- build the factors and the central product
  std::vector<BuiltinFactor> factors;
  for (const FactorEntry& e : spec.factors) {
    factors.push_back(e.is_builtin() ? factor_from_name(e.builtin_name)
                                     : special_linear_factor(e.sl_dim, e.sl_q));
  }
  AmalgamationSpec amalg;
  for (const AmalgamateEntry& a : spec.amalgamations) {
    const BuiltinFactor& fa = factors[a.factor_a];
    const BuiltinFactor& fb = factors[a.factor_b];
    if (a.full) {
      const Idx za = fa.canonical_central_generator;
      const Idx zb = fb.canonical_central_generator;
      const Idx order_a = fa.group->element_order(za);
      if (order_a != fb.group->element_order(zb) ||
          order_a != fa.group->center().order() || order_a != fb.group->center().order()) {
        throw InvalidAmalgamationError("full amalgamation needs cyclic centers of equal order");
      }
      amalg.identifications.push_back({a.factor_a, a.factor_b, za, zb});
    } else {
      amalg.identifications.push_back({a.factor_a, a.factor_b,
                                       resolve_selector(fa, a.left_selector),
                                       resolve_selector(fb, a.right_selector)});
    }
  }
  std::vector<GroupPtr> factor_groups;
  for (const BuiltinFactor& f : factors) factor_groups.push_back(f.group);
  CentralProduct product = central_product(factor_groups, amalg);
  const GroupPtr g = product.group;
  R.group = g;
  R.group_name = g->name();
  R.group_order = g->size();
  R.center_invariants =
      AbelianInvariants::of_subgroup(*g, g->center()).primary_cyclic_orders();
  for (const GroupPtr& fg : factor_groups) R.realized_factor_orders.push_back(fg->size());

  rec.run("group_axioms", [&] {
    for (Idx x = 0; x < g->size(); ++x) {
      require(g->mul(0, x) == x && g->mul(x, 0) == x, "identity law fails at " + std::to_string(x));
      require(g->mul(x, g->inverse(x)) == 0, "inverse law fails at " + std::to_string(x));
    }
    std::mt19937_64 rng(opts.rng_seed);
    std::uniform_int_distribution<Idx> pick(0, g->size() - 1);
    for (int i = 0; i < 10000; ++i) {
      Idx a = pick(rng), b = pick(rng), c = pick(rng);
      require(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)),
              "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                  std::to_string(c) + ")");
    }
  });
  if (stage == PipelineStage::Build) return finalize();

  // ---- components, automorphism generators, decomposition
  std::vector<Subgroup> comps;
  if (!rec.run("components_quasisimple", [&] { comps = components(g, opts.guard); })) {
    R.aborted = true;
    return finalize();
  }
  R.component_count = comps.size();

  auto descriptor_of = [&](const Subgroup& c) -> std::optional<QuasisimpleDescriptor> {
    for (std::size_t i = 0; i < product.embeddings.size(); ++i) {
      if (product.embeddings[i].image.members() == c.members()) return factors[i].descriptor;
    }
    return std::nullopt;
  };

  // per-component center-inverting maps (identity for exponent <= 2,
  // shipped certificate, or exhaustive search)
  std::vector<std::vector<Idx>> comp_inverting_maps(comps.size());
  bool inverters_ok = rec.run("component_inverters_found", [&] {
    std::vector<QuasisimpleDescriptor> known;
    for (const Subgroup& c : comps) {
      if (auto d = descriptor_of(c)) known.push_back(*d);
    }
    require_invertible_components(known);
    for (std::size_t k = 0; k < comps.size(); ++k) {
      const Subgroup& c = comps[k];
      Subgroup zc = subgroup_center(*g, c);
      bool exponent_two = true;
      for (Idx z : zc.elements()) {
        if (g->mul(z, z) != 0) exponent_two = false;
      }
      std::vector<Idx>& map = comp_inverting_maps[k];
      map.assign(g->size(), kInvalidIdx);
      if (exponent_two) {
        for (Idx x : c.elements()) map[x] = x;
        continue;
      }
      std::size_t matched = factors.size();
      for (std::size_t i = 0; i < product.embeddings.size(); ++i) {
        if (product.embeddings[i].image.members() == c.members()) matched = i;
      }
      if (matched < factors.size() && factors[matched].inverting_certificate) {
        Homomorphism cert = factors[matched].inverting_certificate->build();
        const auto& emap = product.embeddings[matched].element_map;
        for (Idx x = 0; x < cert.image_table.size(); ++x) map[emap[x]] = emap[cert(x)];
        continue;
      }
      ExtractedSubgroup ex = extract_subgroup(g, c);
      auto found = search_inverting_automorphism(ex.group);
      require(found.has_value(), "no center-inverting automorphism found for component of order " +
                                     std::to_string(c.order()));
      for (Idx x = 0; x < ex.group->size(); ++x) {
        map[ex.to_parent[x]] = ex.to_parent[(*found)(x)];
      }
    }
  });

  std::vector<Homomorphism> auts;
  std::vector<std::string> aut_labels;
  for (std::size_t i = 0; i < g->generators().size(); ++i) {
    auts.push_back(inner_automorphism(g, g->generators()[i]));
    aut_labels.push_back("inner:" + std::to_string(i));
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const AutCertificateRecipe& cert : factors[i].outer_certificates) {
      Homomorphism fa = cert.build();
      if (auto lifted = lift_factor_automorphism(product, i, fa)) {
        auts.push_back(*std::move(lifted));
        aut_labels.push_back(factors[i].label + "." + cert.label + "@" + std::to_string(i + 1));
      }
    }
  }
  for (Homomorphism& swap : find_component_swaps(g, comps)) {
    aut_labels.push_back("component-swap:" + std::to_string(aut_labels.size()));
    auts.push_back(std::move(swap));
  }
  if (inverters_ok) {
    rec.run("center_inversion_automorphism", [&] {
      Homomorphism inverter = assemble_center_inverting(g, comps, comp_inverting_maps);
      if (!inverter.is_identity()) {
        auts.push_back(std::move(inverter));
        aut_labels.push_back("center-inversion");
      }
    });
  }
  R.aut_generator_labels = aut_labels;

  CentralDecomposition decomp;
  if (!rec.run("decomposition", [&] {
        decomp = aut_indecomposable_decomposition(g, auts, descriptor_of, opts.guard);
      })) {
    R.aborted = true;
    return finalize();
  }
  R.n = decomp.factor_count();
  R.l = decomp.exceptional_factor_count();
  for (const DecompositionFactor& f : decomp.factors) R.factor_orders.push_back(f.subgroup.order());

  rec.run("factors_perfect", [&] {
    for (const DecompositionFactor& f : decomp.factors) {
      require(subgroup_derived(*g, f.subgroup).order() == f.subgroup.order(),
              "central factor of order " + std::to_string(f.subgroup.order()) + " is not perfect");
    }
  });
  rec.run("factors_commute_pairwise", [&] {
    for (std::size_t r = 0; r < decomp.factors.size(); ++r) {
      for (std::size_t s = r + 1; s < decomp.factors.size(); ++s) {
        for (Idx a : decomp.factors[r].subgroup.generators()) {
          for (Idx b : decomp.factors[s].subgroup.generators()) {
            require(g->mul(a, b) == g->mul(b, a), "factors " + std::to_string(r + 1) + "," +
                                                      std::to_string(s + 1) + " fail to commute");
          }
        }
      }
    }
  });
  rec.run("factors_generate_group", [&] {
    std::vector<Idx> gens;
    for (const DecompositionFactor& f : decomp.factors) {
      gens.insert(gens.end(), f.subgroup.generators().begin(), f.subgroup.generators().end());
    }
    require(closure(*g, gens).order() == g->size(), "central factors do not generate the group");
  });
  rec.run("factor_intersections_central", [&] {
    for (std::size_t r = 0; r < decomp.factors.size(); ++r) {
      for (std::size_t s = r + 1; s < decomp.factors.size(); ++s) {
        Subgroup inter = decomp.factor_intersection(r, s);
        require(inter.members().is_subset_of(g->center().members()),
                "pairwise factor intersection escapes the center");
      }
    }
  });
  if (stage == PipelineStage::Decompose) return finalize();

  // ---- holomorph generators and the basic identities
  if (g->size() <= 200) {
    R.aut_order = enumerate_automorphisms(g).size();
    R.holomorph_order = *R.aut_order * g->size();
  }
  HolomorphGroup hol;
  if (!rec.run("regular_representations_commute", [&] {
        hol = holomorph_group(g, auts, aut_labels, R.aut_order);
      })) {
    R.aborted = true;
    return finalize();
  }
  const Perm inv = inversion_map(*g);
  rec.run("inversion_involution", [&] {
    require(compose(inv, inv) == identity_perm(g->size()), "inversion squared is not identity");
    require(inv[0] == 0, "inversion moves the identity point");
  });
  rec.run("inversion_conjugation_identity", [&] {
    for (Idx s : g->generators()) {
      require(conjugate_perm(right_translation(*g, s), inv) ==
                  left_translation(*g, g->inverse(s)),
              "rho(g)^inv != lambda(g^-1) at generator " + std::to_string(s));
      require(conjugate_perm(left_translation(*g, s), inv) ==
                  right_translation(*g, g->inverse(s)),
              "lambda(g)^inv != rho(g^-1) at generator " + std::to_string(s));
    }
  });
  rec.run("inversion_not_in_holomorph_for_nonabelian", [&] {
    bool member = holomorph_membership(inv, g).has_value();
    require(member == g->is_abelian(), "inversion membership disagrees with abelianness");
  });
  if (stage == PipelineStage::Holomorph) return finalize();

  // ---- the regular family and its conjugators
  RegularFamily fam(decomp);
  const std::uint32_t subset_count = fam.subset_count();
  const int n_factors = fam.factor_count();

  rec.run("family_members_regular", [&] {
    for (std::uint32_t j = 0; j < subset_count; ++j) fam.verify_member_regular(j);
  });
  rec.run("family_members_in_holomorph", [&] {
    for (std::uint32_t j = 0; j < subset_count; ++j) {
      for (const Perm& s : fam.member_generators(j)) {
        require(holomorph_membership(s, g).has_value(),
                "member generator outside the holomorph at subset " + subset_to_string(j, n_factors));
      }
    }
  });
  rec.run("family_normalized_by_holomorph", [&] {
    for (std::uint32_t j = 0; j < subset_count; ++j) {
      auto member_gens = fam.member_generators(j);
      for (const Perm* hgen : hol.generators()) {
        for (const Perm& s : member_gens) {
          require(fam.member_contains(j, conjugate_perm(s, *hgen)),
                  "holomorph generator fails to normalize member " + subset_to_string(j, n_factors));
        }
      }
    }
  });
  rec.run("family_members_distinct", [&] {
    for (std::uint32_t j = 0; j < subset_count; ++j) {
      auto gens_j = fam.member_generators(j);
      for (std::uint32_t k = 0; k < subset_count; ++k) {
        if (j == k) continue;
        bool some_outside = false;
        for (const Perm& s : gens_j) {
          if (!fam.member_contains(k, s)) {
            some_outside = true;
            break;
          }
        }
        require(some_outside, "members " + subset_to_string(j, n_factors) + " and " +
                                  subset_to_string(k, n_factors) + " coincide");
      }
    }
  });
  rec.run("inversion_swaps_complements", [&] {
    for (std::uint32_t j = 0; j < subset_count; ++j) {
      std::uint32_t jc = ~j & (subset_count - 1);
      for (const Perm& s : fam.member_generators(j)) {
        require(fam.member_contains(jc, conjugate_perm(s, inv)),
                "inversion fails to carry member " + subset_to_string(j, n_factors) +
                    " onto its complement");
      }
    }
  });

  // conjugators, one per subset, each built from an automorphism
  // inverting the center of the complementary block
  std::vector<Perm> conjugators(subset_count);
  std::vector<PartialAutomorphism> copart_inverters(subset_count);
  bool conjugators_ok = true;
  for (std::uint32_t j = 0; j < subset_count && inverters_ok; ++j) {
    const auto& blocks = fam.blocks(j);
    bool ok = rec.run("conjugator_wellformed:" + subset_to_string(j, n_factors), [&] {
      PartialAutomorphism inverter;
      if (blocks.copart.order() == 1) {
        inverter.domain = blocks.copart;
        inverter.image.assign(g->size(), kInvalidIdx);
        inverter.image[0] = 0;
      } else {
        std::vector<Subgroup> copart_comps;
        std::vector<std::vector<Idx>> copart_maps;
        for (std::size_t k = 0; k < comps.size(); ++k) {
          if (comps[k].members().is_subset_of(blocks.copart.members())) {
            copart_comps.push_back(comps[k]);
            copart_maps.push_back(comp_inverting_maps[k]);
          }
        }
        inverter = assemble_componentwise(g, copart_comps, copart_maps);
        require(inverter.domain.members() == blocks.copart.members(),
                "complementary components span the wrong subgroup");
        for (Idx z : subgroup_center(*g, blocks.copart).elements()) {
          require(g->mul(inverter(z), z) == 0, "assembled inverter misses a central element");
        }
      }
      conjugators[j] = fam.conjugator(j, inverter);
      copart_inverters[j] = std::move(inverter);
    });
    conjugators_ok = conjugators_ok && ok;
  }
  if (conjugators_ok && inverters_ok) {
    rec.run("conjugator_identity_at_full_subset", [&] {
      require(conjugators[subset_count - 1] == identity_perm(g->size()),
              "the full-subset conjugator is not the identity map");
    });
    rec.run("conjugator_conjugation_identity", [&] {
      // rho of a part element is fixed; rho of a copart element v goes to
      // lambda of v^(-alpha), with alpha the complementary inverter
      for (std::uint32_t j = 0; j < subset_count; ++j) {
        const auto& blocks = fam.blocks(j);
        for (Idx s : g->generators()) {
          Perm lhs = conjugate_perm(right_translation(*g, s), conjugators[j]);
          Perm rhs;
          if (blocks.part.contains(s)) {
            rhs = right_translation(*g, s);
          } else {
            require(blocks.copart.contains(s), "generator in neither block");
            rhs = left_translation(*g, g->inverse(copart_inverters[j](s)));
          }
          require(lhs == rhs, "conjugation identity fails at subset " +
                                  subset_to_string(j, n_factors) + ", generator " +
                                  std::to_string(s));
        }
      }
    });
    rec.run("conjugator_maps_base_to_member", [&] {
      for (std::uint32_t j = 0; j < subset_count; ++j) {
        for (Idx s : g->generators()) {
          require(fam.member_contains(j, conjugate_perm(right_translation(*g, s), conjugators[j])),
                  "conjugated rho generator escapes member " + subset_to_string(j, n_factors));
        }
      }
    });
    rec.run("conjugator_normalizes_holomorph", [&] {
      for (std::uint32_t j = 0; j < subset_count; ++j) {
        for (const Perm* hgen : hol.generators()) {
          require(holomorph_membership(conjugate_perm(*hgen, conjugators[j]), g).has_value(),
                  "conjugator at " + subset_to_string(j, n_factors) +
                      " fails to normalize the holomorph");
        }
      }
    });
    rec.run("conjugator_outside_holomorph", [&] {
      for (std::uint32_t j = 0; j + 1 < subset_count; ++j) {
        require(!holomorph_membership(conjugators[j], g).has_value(),
                "proper-subset conjugator lies in the holomorph at " +
                    subset_to_string(j, n_factors));
      }
    });
    rec.run("conjugator_square_in_holomorph", [&] {
      for (std::uint32_t j = 0; j < subset_count; ++j) {
        require(holomorph_membership(compose(conjugators[j], conjugators[j]), g).has_value(),
                "conjugator square outside the holomorph at " + subset_to_string(j, n_factors));
      }
    });
  }

  for (std::uint32_t j = 0; j < subset_count; ++j) R.family_subsets.push_back(j);
  R.h = n_factors;
  R.m = h_bounds(n_factors, *R.l).m;
  rec.run("family_count_matches_formula", [&] {
    HBounds b = h_bounds(n_factors, *R.l);
    std::uint64_t count = R.family_subsets.size();
    require(count == (std::uint64_t{1} << *R.h), "family size is not 2^h");
    require(b.count_lower <= count && count <= b.count_upper,
            "family size escapes the formula bounds");
  });
  if (stage == PipelineStage::HSet) return finalize();

  // ---- twisted multiplications
  std::vector<GroupPtr> twisted(subset_count);
  rec.run("twisted_groups_build", [&] {
    for (std::uint32_t j = 0; j < subset_count; ++j) twisted[j] = fam.twisted_group(j);
  });
  rec.run("twisted_full_subset_is_multiplication", [&] {
    const GroupPtr& t = twisted[subset_count - 1];
    for (Idx x = 0; x < g->size(); ++x) {
      for (Idx s : g->generators()) {
        require(t->mul(x, s) == g->mul(x, s), "twisted full-subset product deviates");
      }
    }
  });
  rec.run("twisted_empty_subset_is_opposite", [&] {
    const GroupPtr& t = twisted[0];
    for (Idx x = 0; x < g->size(); ++x) {
      for (Idx s : g->generators()) {
        require(t->mul(x, s) == g->mul(s, x), "twisted empty-subset product is not opposite");
      }
    }
  });
  if (conjugators_ok && inverters_ok) {
    rec.run("conjugator_twisted_isomorphism", [&] {
      for (std::uint32_t j = 0; j < subset_count; ++j) {
        const Perm& phi = conjugators[j];
        for (Idx x = 0; x < g->size(); ++x) {
          for (Idx s : g->generators()) {
            require(phi[g->mul(x, s)] == twisted[j]->mul(phi[x], phi[s]),
                    "conjugator is not an isomorphism onto the twisted group " +
                        subset_to_string(j, n_factors));
          }
        }
      }
    });
  }
  rec.run("automorphisms_preserve_twisted_groups", [&] {
    for (std::uint32_t j = 0; j < subset_count; ++j) {
      for (const Homomorphism& a : auts) {
        for (Idx x = 0; x < g->size(); ++x) {
          for (Idx s : twisted[j]->generators()) {
            require(a(twisted[j]->mul(x, s)) == twisted[j]->mul(a(x), a(s)),
                    "supplied automorphism fails on the twisted group " +
                        subset_to_string(j, n_factors));
          }
        }
      }
    }
  });

  // ---- the quotient acting on the family
  if (conjugators_ok && inverters_ok) {
    std::vector<std::pair<std::string, Perm>> conj_list;
    conj_list.emplace_back("inversion", inv);
    for (std::uint32_t j = 0; j < subset_count; ++j) {
      conj_list.emplace_back("conjugator:" + subset_to_string(j, n_factors), conjugators[j]);
    }
    rec.run("tgroup_structure", [&] {
      R.tgroup = t_group(fam, conj_list, R.family_subsets);
      require(R.tgroup->action_regular, "family action is not regular");
      require(R.tgroup->elementary_abelian, "quotient is not elementary abelian");
      require(R.tgroup->order == (std::uint64_t{1} << *R.h), "quotient order is not 2^h");
      require(R.tgroup->squares_fix_family, "a conjugator square moves the family");
    });
  }
  if (stage == PipelineStage::TGroup) return finalize();

  // ---- brute-force oracle
  if (stage == PipelineStage::OracleJ || opts.run_oracle) {
    RegularNormalOracle oracle = brute_force_regular_normal_subgroups(hol, opts.holomorph_guard,
                                                                      opts.guard);
    OracleSummary summary;
    summary.holomorph_order = oracle.holomorph.group->size();
    summary.regular_normal_count = oracle.regular_normals.size();
    R.holomorph_order = summary.holomorph_order;
    if (!R.aut_order) R.aut_order = summary.holomorph_order / g->size();

    rec.run("oracle_count_is_two_to_n", [&] {
      require(summary.regular_normal_count == (std::size_t{1} << n_factors),
              "oracle found " + std::to_string(summary.regular_normal_count) +
                  " regular normal subgroups, expected 2^" + std::to_string(n_factors));
    });
    rec.run("oracle_members_match_family", [&] {
      std::vector<IndexSet> family_sets;
      for (std::uint32_t j = 0; j < subset_count; ++j) {
        std::vector<Idx> member_gen_ids;
        for (const Perm& s : fam.member_generators(j)) {
          auto id = oracle.holomorph.ops->index_of(s);
          require(id.has_value(), "family generator missing from the enumerated holomorph");
          member_gen_ids.push_back(*id);
        }
        family_sets.push_back(closure(*oracle.holomorph.group, member_gen_ids).members());
      }
      for (const Subgroup& nrm : oracle.regular_normals) {
        bool matched = false;
        for (const IndexSet& fs : family_sets) {
          if (fs == nrm.members()) {
            matched = true;
            break;
          }
        }
        require(matched, "oracle subgroup of order " + std::to_string(nrm.order()) +
                             " is no family member");
      }
      require(oracle.regular_normals.size() == family_sets.size(),
              "family and oracle sizes disagree");
    });
    summary.matches_family = R.checks.back().pass;
    R.oracle = summary;
  }
  return finalize();
}

// ---------------------------------------------------------------------------
// serialization

namespace {

nlohmann::ordered_json subsets_json(const std::vector<std::uint32_t>& subsets, int n) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::uint32_t s : subsets) {
    nlohmann::ordered_json one = nlohmann::ordered_json::array();
    for (int i = 0; i < n; ++i) {
      if (s & (1u << i)) one.push_back(i + 1);
    }
    arr.push_back(one);
  }
  return arr;
}

}  // namespace

std::string report_json(const PipelineResult& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["group"] = {{"name", r.group_name},
                {"order", r.group_order},
                {"center", r.center_invariants},
                {"realized_factor_orders", r.realized_factor_orders},
                {"component_count", r.component_count}};
  nlohmann::ordered_json counts;
  counts["n"] = r.n ? nlohmann::ordered_json(*r.n) : nlohmann::ordered_json(nullptr);
  counts["l"] = r.l ? nlohmann::ordered_json(*r.l) : nlohmann::ordered_json(nullptr);
  counts["h"] = r.h ? nlohmann::ordered_json(*r.h) : nlohmann::ordered_json(nullptr);
  counts["m"] = r.m ? nlohmann::ordered_json(*r.m) : nlohmann::ordered_json(nullptr);
  j["counts"] = counts;
  j["factor_orders"] = r.factor_orders;
  j["family"] = {{"count", r.family_subsets.size()},
                 {"subsets", subsets_json(r.family_subsets, r.n.value_or(0))}};
  if (r.tgroup) {
    j["tgroup"] = {{"order", r.tgroup->order},
                   {"rank", r.tgroup->rank},
                   {"abelian_invariants", r.tgroup->abelian_invariants},
                   {"action_regular", r.tgroup->action_regular},
                   {"elementary_abelian", r.tgroup->elementary_abelian}};
  } else {
    j["tgroup"] = nullptr;
  }
  nlohmann::ordered_json holo;
  holo["aut_order"] =
      r.aut_order ? nlohmann::ordered_json(*r.aut_order) : nlohmann::ordered_json(nullptr);
  holo["order"] = r.holomorph_order ? nlohmann::ordered_json(*r.holomorph_order)
                                    : nlohmann::ordered_json(nullptr);
  holo["aut_generators"] = r.aut_generator_labels;
  j["holomorph"] = holo;
  if (r.oracle) {
    j["oracle"] = {{"holomorph_order", r.oracle->holomorph_order},
                   {"regular_normal_count", r.oracle->regular_normal_count},
                   {"matches_family", r.oracle->matches_family}};
  } else {
    j["oracle"] = nullptr;
  }
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckOutcome& c : r.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  }
  j["checks"] = checks;
  j["aborted"] = r.aborted;
  j["all_passed"] = r.all_passed;
  return j.dump(2) + "\n";
}

std::string report_summary(const PipelineResult& r) {
  std::ostringstream os;
  os << "group: " << r.group_name << "\n";
  os << "order: " << r.group_order << "\n";
  os << "center: ";
  if (r.center_invariants.empty()) {
    os << "trivial";
  } else {
    for (std::size_t i = 0; i < r.center_invariants.size(); ++i) {
      os << (i ? " x " : "") << "Z" << r.center_invariants[i];
    }
  }
  os << "\n";
  if (r.n) {
    os << "indecomposable central factors (n): " << *r.n << "\n";
    os << "exceptional factors (l): " << *r.l << "\n";
    os << "factor orders:";
    for (Idx o : r.factor_orders) os << " " << o;
    os << "\n";
    os << "components: " << r.component_count << "\n";
  }
  if (r.h) {
    os << "family size: " << r.family_subsets.size() << " = 2^" << *r.h << " (lower bound 2^"
       << *r.m << ")\n";
    os << "family subsets:";
    for (std::uint32_t s : r.family_subsets) os << " " << subset_to_string(s, r.n.value_or(0));
    os << "\n";
  }
  if (r.tgroup) {
    os << "quotient group: order " << r.tgroup->order << ", elementary abelian rank "
       << r.tgroup->rank << ", regular action: " << (r.tgroup->action_regular ? "yes" : "no")
       << "\n";
  }
  if (r.aut_order) os << "automorphism group order: " << *r.aut_order << "\n";
  if (r.holomorph_order) os << "holomorph order: " << *r.holomorph_order << "\n";
  if (r.oracle) {
    os << "oracle: holomorph order " << r.oracle->holomorph_order << ", regular normal subgroups "
       << r.oracle->regular_normal_count << ", matches family: "
       << (r.oracle->matches_family ? "yes" : "no") << "\n";
  }
  os << "checks:\n";
  for (const CheckOutcome& c : r.checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.pass) os << "  -- " << c.witness;
    os << "\n";
  }
  os << (r.all_passed ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << "\n";
  os << "elapsed: " << r.elapsed_seconds << " s\n";
  return os.str();
}

}  // namespace multihol
