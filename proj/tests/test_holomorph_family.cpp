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

#include <doctest.h>

#include <random>

#include "multihol/builtins.hpp"
#include "multihol/pipeline.hpp"
#include "multihol/tgroup.hpp"

using namespace multihol;

namespace {

const GroupPtr& sl25() {
  static GroupPtr g = builtin(FactorKind::SL2_5).group;
  return g;
}

PipelineResult sl25_pipeline(PipelineStage stage, bool oracle = false) {
  GroupSpecFile spec;
  spec.factors.push_back({"SL2_5", 0, 0});
  PipelineOptions opts;
  opts.run_oracle = oracle;
  return run_pipeline(spec, stage, opts);
}

}  // namespace

TEST_CASE("maps compose left-to-right") {
  // the convention the whole module rests on: compose(a, b) applies a
  // first; flipping it would silently negate the conjugation identities
  Perm a{1, 2, 0};
  Perm b{0, 2, 1};
  Perm ab = compose(a, b);
  CHECK(ab == Perm{2, 1, 0});  // x -> b[a[x]]
  CHECK(compose(b, a) == Perm{1, 0, 2});
  CHECK(inverse_perm(a) == Perm{2, 0, 1});
  // s^t = t^-1 s t
  CHECK(conjugate_perm(a, b) == compose(compose(inverse_perm(b), a), b));
}

TEST_CASE("regular representations: homomorphism and antihomomorphism") {
  const GroupPtr& g = sl25();
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<Idx> pick(0, g->size() - 1);
  for (int i = 0; i < 10000; ++i) {
    Idx x = pick(rng), y = pick(rng);
    CHECK(compose(right_translation(*g, x), right_translation(*g, y)) ==
          right_translation(*g, g->mul(x, y)));
    CHECK(compose(left_translation(*g, x), left_translation(*g, y)) ==
          left_translation(*g, g->mul(y, x)));
  }
}

TEST_CASE("inversion conjugation identities") {
  const GroupPtr& g = sl25();
  const Perm inv = inversion_map(*g);
  CHECK(compose(inv, inv) == identity_perm(g->size()));
  CHECK(inv[0] == 0);
  for (Idx s : g->generators()) {
    CHECK(conjugate_perm(right_translation(*g, s), inv) == left_translation(*g, g->inverse(s)));
    CHECK(conjugate_perm(left_translation(*g, s), inv) == right_translation(*g, g->inverse(s)));
  }
}

TEST_CASE("holomorph membership decisions") {
  const GroupPtr& g = sl25();
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<Idx> pick(0, g->size() - 1);

  for (int i = 0; i < 32; ++i) {
    Idx x = pick(rng);
    auto r = holomorph_membership(right_translation(*g, x), g);
    REQUIRE(r.has_value());
    CHECK(r->translation == x);
    CHECK(r->aut_part.is_identity());

    auto l = holomorph_membership(left_translation(*g, x), g);
    REQUIRE(l.has_value());  // lambda(x) = inner(x^-1) * rho(x)
    CHECK(l->translation == x);
  }

  // inversion is an antiautomorphism, hence no member for nonabelian G
  CHECK(!holomorph_membership(inversion_map(*g), g).has_value());

  // a transposition of two non-identity points is no member either
  Perm garbled = identity_perm(g->size());
  std::swap(garbled[3], garbled[4]);
  CHECK(!holomorph_membership(garbled, g).has_value());
}

TEST_CASE("permutation closure guard") {
  const GroupPtr& g = sl25();
  std::vector<Perm> gens{right_translation(*g, g->generators()[0]),
                         right_translation(*g, g->generators()[1])};
  CHECK_THROWS_AS(permutation_group_closure(g->size(), gens, 10, "guarded"), GuardError);
  auto pg = permutation_group_closure(g->size(), gens, 1000, "rho image");
  CHECK(pg.group->size() == 120);
}

TEST_CASE("regular family on a single factor") {
  CentralProduct p = central_product({sl25()}, AmalgamationSpec{});
  std::vector<Homomorphism> auts;
  for (Idx s : p.group->generators()) auts.push_back(inner_automorphism(p.group, s));
  CentralDecomposition d = aut_indecomposable_decomposition(
      p.group, auts, [](const Subgroup&) { return std::nullopt; });
  RegularFamily fam(d);
  REQUIRE(fam.factor_count() == 1);

  const GroupPtr& g = p.group;
  SUBCASE("the full subset is the right regular image, the empty one the left") {
    for (Idx s : g->generators()) {
      CHECK(fam.member_contains(0b1, right_translation(*g, s)));
      CHECK(!fam.member_contains(0b0, right_translation(*g, s)));
      CHECK(fam.member_contains(0b0, left_translation(*g, s)));
      CHECK(!fam.member_contains(0b1, left_translation(*g, s)));
    }
    // the identity permutation lies in every member
    CHECK(fam.member_contains(0b0, identity_perm(g->size())));
    CHECK(fam.member_contains(0b1, identity_perm(g->size())));
    // central translations lie in both members as well
    Idx z = g->center().generators()[0];
    CHECK(fam.member_contains(0b0, right_translation(*g, z)));
    CHECK(fam.member_contains(0b1, right_translation(*g, z)));
  }

  SUBCASE("members are regular") {
    fam.verify_member_regular(0b0);
    fam.verify_member_regular(0b1);
  }

  SUBCASE("twisted multiplications at the extremes") {
    GroupPtr t_full = fam.twisted_group(0b1);
    GroupPtr t_empty = fam.twisted_group(0b0);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<Idx> pick(0, g->size() - 1);
    for (int i = 0; i < 2000; ++i) {
      Idx x = pick(rng), y = pick(rng);
      CHECK(t_full->mul(x, y) == g->mul(x, y));
      CHECK(t_empty->mul(x, y) == g->mul(y, x));
    }
  }

  SUBCASE("conjugator for the empty subset is inversion composed with the inverter") {
    // with an exponent-two center the inverter is the identity and the
    // conjugator becomes the plain inversion map
    PartialAutomorphism identity_inverter;
    identity_inverter.domain = fam.blocks(0b0).copart;
    identity_inverter.image.assign(g->size(), kInvalidIdx);
    for (Idx x = 0; x < g->size(); ++x) identity_inverter.image[x] = x;
    Perm phi = fam.conjugator(0b0, identity_inverter);
    CHECK(phi == inversion_map(*g));
    // its composite with inversion is the identity, which lies in Hol
    CHECK(holomorph_membership(compose(phi, inversion_map(*g)), g).has_value());
  }
}

TEST_CASE("single-factor pipeline: family of two, quotient of order two") {
  PipelineResult r = sl25_pipeline(PipelineStage::TGroup);
  CHECK(r.all_passed);
  CHECK(r.group_order == 120);
  CHECK(r.n == 1);
  CHECK(r.l == 0);
  CHECK(r.h == 1);
  CHECK(r.family_subsets == std::vector<std::uint32_t>{0b0, 0b1});
  REQUIRE(r.tgroup.has_value());
  CHECK(r.tgroup->order == 2);
  CHECK(r.tgroup->rank == 1);
  CHECK(r.tgroup->action_regular);
  CHECK(r.tgroup->elementary_abelian);

  // the inversion action swaps the two members
  REQUIRE(!r.tgroup->conjugator_actions.empty());
  const FamilyAction& inv_action = r.tgroup->conjugator_actions.front();
  CHECK(inv_action.label == "inversion");
  CHECK(inv_action.maps_to == std::vector<std::uint32_t>{1, 0});
}

TEST_CASE("brute-force oracle returns exactly the two regular images") {
  PipelineResult r = sl25_pipeline(PipelineStage::Report, /*oracle=*/true);
  CHECK(r.all_passed);
  REQUIRE(r.oracle.has_value());
  CHECK(r.oracle->holomorph_order == 14400);
  CHECK(r.oracle->regular_normal_count == 2);
  CHECK(r.oracle->matches_family);
  CHECK(r.aut_order == 120);
}

TEST_CASE("oracle guard trips on a too-small holomorph bound") {
  GroupSpecFile spec;
  spec.factors.push_back({"SL2_5", 0, 0});
  PipelineOptions opts;
  opts.run_oracle = true;
  opts.holomorph_guard = 100;
  CHECK_THROWS_AS(run_pipeline(spec, PipelineStage::Report, opts), GuardError);
}

TEST_CASE("order-three amalgamation of two triple covers") {
  // the one desk-scale construction whose central ambiguity has exponent
  // three, where well-definedness of the conjugator actually bites
  BuiltinFactor a6 = builtin(FactorKind::THREE_A6);
  AmalgamationSpec amalg;
  amalg.identifications.push_back(
      {0, 1, a6.canonical_central_generator, a6.canonical_central_generator});
  CentralProduct p = central_product({a6.group, a6.group}, amalg);
  CHECK(p.group->size() == 388800);  // 1080 * 1080 / 3
  CHECK(p.group->center().order() == 3);

  auto comps = components(p.group);
  REQUIRE(comps.size() == 2);
  CHECK((comps[0].members() & comps[1].members()).count() == 3);

  std::vector<Homomorphism> auts;
  for (Idx s : p.group->generators()) auts.push_back(inner_automorphism(p.group, s));

  // kept artificially fine (no swaps), so the subset {1} splits the two
  // covers and carries the full order-three ambiguity
  CentralDecomposition fine = aut_indecomposable_decomposition(
      p.group, auts, [](const Subgroup&) { return std::nullopt; });
  REQUIRE(fine.factor_count() == 2);

  RegularFamily fam(fine);
  const auto& blocks = fam.blocks(0b01);
  REQUIRE(blocks.ambiguity.size() == 3);

  PartialAutomorphism fixing;  // identity fails to invert the order-3 ambiguity
  fixing.domain = blocks.copart;
  fixing.image.assign(p.group->size(), kInvalidIdx);
  for (Idx x : blocks.copart.elements()) fixing.image[x] = x;
  CHECK_THROWS_AS(fam.conjugator(0b01, fixing), IllDefinedMapError);

  // with the swap included the two covers merge into one factor
  for (Homomorphism& s : find_component_swaps(p.group, comps)) auts.push_back(std::move(s));
  CentralDecomposition merged = aut_indecomposable_decomposition(
      p.group, auts, [](const Subgroup&) { return std::nullopt; });
  CHECK(merged.factor_count() == 1);
}
