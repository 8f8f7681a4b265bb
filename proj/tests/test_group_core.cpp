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

#include "multihol/matrix_groups.hpp"
#include "multihol/search.hpp"
#include "oracle_helpers.hpp"

using namespace multihol;

namespace {

GroupPtr cyclic(Idx n) {
  std::vector<Idx> table(static_cast<std::size_t>(n) * n);
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  return make_table_group(n, std::move(table), {1}, "Z" + std::to_string(n));
}

// S3 as permutations of three letters, multiplied left-to-right
GroupPtr symmetric3() {
  const std::array<std::array<int, 3>, 6> elems{{{0, 1, 2},
                                                 {1, 0, 2},
                                                 {0, 2, 1},
                                                 {2, 1, 0},
                                                 {1, 2, 0},
                                                 {2, 0, 1}}};
  auto index_of = [&](const std::array<int, 3>& p) -> Idx {
    for (Idx i = 0; i < 6; ++i) {
      if (elems[i] == p) return i;
    }
    return kInvalidIdx;
  };
  std::vector<Idx> table(36);
  for (Idx a = 0; a < 6; ++a) {
    for (Idx b = 0; b < 6; ++b) {
      std::array<int, 3> p{};
      for (int x = 0; x < 3; ++x) p[x] = elems[b][elems[a][x]];
      table[a * 6 + b] = index_of(p);
    }
  }
  return make_table_group(6, std::move(table), {1, 4}, "S3");
}

const GroupPtr& sl25() {
  static GroupPtr g = special_linear(2, 5);
  return g;
}

}  // namespace

TEST_CASE("cyclic group basics") {
  GroupPtr z4 = cyclic(4);
  CHECK(z4->size() == 4);
  CHECK(z4->is_abelian());
  CHECK(z4->center().order() == 4);                    // whole group
  CHECK(z4->derived_subgroup().order() == 1);          // trivial
  CHECK(z4->conjugacy_classes().classes.size() == 4);  // four singletons
  for (const auto& cls : z4->conjugacy_classes().classes) CHECK(cls.size() == 1);
  CHECK(z4->element_order(1) == 4);
  CHECK(z4->inverse(1) == 3);
}

TEST_CASE("conjugacy classes partition the group") {
  for (const GroupPtr& g : {symmetric3(), sl25()}) {
    const auto& cc = g->conjugacy_classes();
    std::size_t total = 0;
    for (const auto& cls : cc.classes) total += cls.size();
    CHECK(total == g->size());
    CHECK(cc.classes[cc.class_of[0]].size() == 1);  // identity is alone
  }
}

TEST_CASE("SL(2,5) against the independent matrix oracle") {
  auto all = oracle::sl25_elements();
  REQUIRE(all.size() == 120);  // enumeration oracle, |SL(2,5)| = q(q^2-1)
  CHECK(oracle::center_of(all).size() == 2);
  CHECK(oracle::conjugacy_class_count(all) == 9);
  auto oracle_normals = oracle::normal_subgroups(all);
  REQUIRE(oracle_normals.size() == 3);

  const GroupPtr& g = sl25();
  CHECK(g->size() == 120);
  CHECK(g->center().order() == 2);
  CHECK(g->conjugacy_classes().classes.size() == 9);
  CHECK(g->is_perfect());

  auto lattice = normal_subgroups(*g);
  REQUIRE(lattice.size() == 3);
  CHECK(lattice[0].order() == 1);
  CHECK(lattice[1].order() == 2);  // the center
  CHECK(lattice[2].order() == 120);
  for (const Subgroup& n : lattice) CHECK(subgroup_is_normal(*g, n));

  // closure of the central involution
  Idx minus_id = g->center().generators()[0];
  CHECK(closure(*g, {minus_id}).order() == 2);
  CHECK(closure(*g, {0}).order() == 1);
}

TEST_CASE("group laws hold on constructed groups") {
  const GroupPtr& g = sl25();
  for (Idx x = 0; x < g->size(); ++x) {
    CHECK(g->mul(0, x) == x);
    CHECK(g->mul(x, 0) == x);
    CHECK(g->mul(x, g->inverse(x)) == 0);
  }
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<Idx> pick(0, g->size() - 1);
  for (int i = 0; i < 10000; ++i) {
    Idx a = pick(rng), b = pick(rng), c = pick(rng);
    CHECK(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
  }
}

TEST_CASE("every element is reachable through its Cayley word") {
  const GroupPtr& g = sl25();
  for (Idx x = 1; x < g->size(); ++x) {
    const CayleyWord& w = g->cayley_words()[x];
    CHECK(g->mul(w.pred, g->generators()[w.gen_slot]) == x);
  }
}

TEST_CASE("closure is idempotent") {
  const GroupPtr& g = sl25();
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<Idx> pick(0, g->size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Idx> gens{pick(rng), pick(rng)};
    Subgroup once = closure(*g, gens);
    Subgroup twice = closure(*g, once.elements());
    CHECK(once.members() == twice.members());
  }
}

TEST_CASE("normal subgroup guard") {
  CHECK_THROWS_AS(normal_subgroups(*sl25(), 2), GuardError);
}

TEST_CASE("extend_hom verifies the Cayley edges") {
  const GroupPtr& g = sl25();

  std::vector<Idx> trivial(g->generators().size(), 0);
  Homomorphism t = extend_hom(g, g, trivial);
  for (Idx x = 0; x < g->size(); ++x) CHECK(t(x) == 0);

  Homomorphism inner = inner_automorphism(g, 17);
  CHECK(is_automorphism(inner));
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<Idx> pick(0, g->size() - 1);
  for (int i = 0; i < 10000; ++i) {
    Idx a = pick(rng), b = pick(rng);
    CHECK(inner(g->mul(a, b)) == g->mul(inner(a), inner(b)));
  }

  // an order obstruction: send an order-5 generator to an involution
  Idx involution = g->center().generators()[0];
  REQUIRE(g->element_order(g->generators()[0]) == 5);
  std::vector<Idx> bad{involution, g->generators()[1]};
  CHECK_THROWS_AS(extend_hom(g, g, bad), NotAHomomorphismError);
}

TEST_CASE("isomorphism search basics") {
  const GroupPtr& g = sl25();
  auto self = search_isomorphism(g, g);
  REQUIRE(self.has_value());
  CHECK(self->is_identity());  // the identity comes first in candidate order

  GroupPtr h = special_linear(2, 7);
  CHECK(!search_isomorphism(g, h).has_value());  // different orders

  SearchLimits tight;
  tight.max_extensions = 3;
  PrescribedImages impossible;
  impossible.pairs.emplace_back(g->center().generators()[0], 5);
  CHECK_THROWS_AS(search_isomorphism(g, g, impossible, tight), SearchBudgetError);
}

TEST_CASE("central quotient uses least coset representatives") {
  const GroupPtr& g = sl25();
  CentralQuotient q = quotient_by_central(g, g->center());
  CHECK(q.group->size() == 60);
  CHECK(normal_subgroups(*q.group).size() == 2);  // simple quotient
  for (Idx x = 0; x < g->size(); ++x) {
    Idx rep = q.section[q.projection[x]];
    CHECK(q.projection[rep] == q.projection[x]);
    CHECK(rep <= x);  // canonical representative is the least coset member
  }
  CHECK(is_quasisimple(g));
  CHECK(!is_quasisimple(cyclic(4)));
  CHECK(!is_quasisimple(symmetric3()));
}

TEST_CASE("subgroup extraction round-trips") {
  const GroupPtr& g = sl25();
  Subgroup s = closure(*g, {g->generators()[0]});
  ExtractedSubgroup ex = extract_subgroup(g, s);
  CHECK(ex.group->size() == s.order());
  for (Idx a = 0; a < ex.group->size(); ++a) {
    for (Idx b = 0; b < ex.group->size(); ++b) {
      CHECK(ex.to_parent[ex.group->mul(a, b)] == g->mul(ex.to_parent[a], ex.to_parent[b]));
    }
  }
}
