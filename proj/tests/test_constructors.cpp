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

#include "multihol/builtins.hpp"
#include "multihol/search.hpp"

using namespace multihol;

TEST_CASE("builtin SL(2,5)") {
  BuiltinFactor f = builtin(FactorKind::SL2_5);
  CHECK(f.group->size() == 120);
  CHECK(f.group->center().order() == 2);
  CHECK(f.group->is_perfect());
  CHECK(is_quasisimple(f.group));
  CHECK(f.descriptor.simple_quotient == SimpleName::A5);
  CHECK(f.group->element_order(f.canonical_central_generator) == 2);
  CHECK(f.group->center().contains(f.canonical_central_generator));

  // center has exponent two, so the inverting search returns the identity
  auto inv = search_inverting_automorphism(f.group);
  REQUIRE(inv.has_value());
  CHECK(inv->is_identity());
}

TEST_CASE("builtin SL(2,7) is not exceptional") {
  BuiltinFactor f = builtin(FactorKind::SL2_7);
  CHECK(f.group->size() == 336);
  CHECK(f.group->center().order() == 2);
  CHECK(!CoverCatalog::compiled().lacks_center_inverting_automorphism(f.descriptor));
  auto inv = search_inverting_automorphism(f.group);
  REQUIRE(inv.has_value());
  CHECK(inv->is_identity());  // exponent-two center again
}

TEST_CASE("diagonal certificates are outer automorphisms") {
  BuiltinFactor f = builtin(FactorKind::SL2_5);
  Homomorphism diag = diagonal_automorphism_certificate(f);
  CHECK(is_automorphism(diag));
  CHECK(diag(f.canonical_central_generator) == f.canonical_central_generator);

  // outer: different from conjugation by every group element
  bool matches_some_inner = false;
  for (Idx x = 0; x < f.group->size() && !matches_some_inner; ++x) {
    Homomorphism inner = inner_automorphism(f.group, x);
    matches_some_inner = inner.image_table == diag.image_table;
  }
  CHECK(!matches_some_inner);

  CHECK_THROWS_AS(diagonal_automorphism_certificate(builtin(FactorKind::THREE_A6)), InputError);
}

TEST_CASE("the automorphism count of SL(2,5) pins the holomorph order") {
  BuiltinFactor f = builtin(FactorKind::SL2_5);
  auto auts = enumerate_automorphisms(f.group);
  CHECK(auts.size() == 120);  // exhaustive generator-image enumeration
}

TEST_CASE("builtin triple cover of A6 passes its data gates") {
  BuiltinFactor f = builtin(FactorKind::THREE_A6);
  CHECK(f.group->size() == 1080);  // closure gate re-established this
  CHECK(f.group->center().order() == 3);
  CHECK(f.group->is_perfect());
  CHECK(is_quasisimple(f.group));
  CHECK(AbelianInvariants::of_subgroup(*f.group, f.group->center()) ==
        AbelianInvariants::from_cyclic_orders({3}));

  CentralQuotient q = quotient_by_central(f.group, f.group->center());
  CHECK(q.group->size() == 360);
  CHECK(normal_subgroups(*q.group).size() == 2);  // the quotient is simple
}

TEST_CASE("triple cover admits a center-inverting automorphism by search") {
  BuiltinFactor f = builtin(FactorKind::THREE_A6);
  auto found = search_inverting_automorphism(f.group);
  REQUIRE(found.has_value());
  CHECK(is_automorphism(*found));
  CHECK(!found->is_identity());
  for (Idx z : f.group->center().elements()) {
    CHECK((*found)(z) == f.group->inverse(z));
  }
}

TEST_CASE("the shipped field certificate of the triple cover inverts its center") {
  BuiltinFactor f = builtin(FactorKind::THREE_A6);
  REQUIRE(f.outer_certificates.size() == 1);
  Homomorphism field = f.outer_certificates[0].build();
  CHECK(is_automorphism(field));
  for (Idx z : f.group->center().elements()) {
    CHECK(field(z) == f.group->inverse(z));
  }
}

TEST_CASE("special linear factor for dimension three") {
  BuiltinFactor f = special_linear_factor(3, 4);
  CHECK(f.group->size() == 60480);
  CHECK(f.group->center().order() == 3);
  CHECK(f.descriptor.simple_quotient == SimpleName::PSL3_4);
  CHECK(!CoverCatalog::compiled().lacks_center_inverting_automorphism(f.descriptor));

  REQUIRE(f.inverting_certificate.has_value());
  Homomorphism graph = f.inverting_certificate->build();
  CHECK(is_automorphism(graph));
  for (Idx z : f.group->center().elements()) {
    CHECK(graph(z) == f.group->inverse(z));
  }
}

TEST_CASE("factor name lookup") {
  CHECK(factor_from_name("SL2_5").group->size() == 120);
  CHECK(factor_from_name("THREE_A6").group->size() == 1080);
  CHECK_THROWS_AS(factor_from_name("M24"), InputError);
  CHECK_THROWS_AS(builtin(FactorKind::SL3_4), InputError);
  CHECK_THROWS_AS(special_linear_factor(2, 9), InputError);
}
