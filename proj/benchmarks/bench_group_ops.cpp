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
// Microbenchmarks for the operations the pipeline leans on: dense and
// lazy multiplication, permutation composition, closure enumeration,
// holomorph membership and family membership.

#include <benchmark/benchmark.h>

#include <random>

#include "multihol/builtins.hpp"
#include "multihol/central_product.hpp"
#include "multihol/matrix_groups.hpp"
#include "multihol/family.hpp"
#include "multihol/holomorph.hpp"

using namespace multihol;

namespace {

const GroupPtr& dense_group() {  // order 120, table-backed
  static GroupPtr g = builtin(FactorKind::SL2_5).group;
  return g;
}

const GroupPtr& lazy_matrix_group() {  // order 60480, code-backed
  static GroupPtr g = special_linear(3, 4);
  return g;
}

const CentralProduct& amalgamated_product() {  // order 20160, tuple-backed
  static CentralProduct p = [] {
    BuiltinFactor a = builtin(FactorKind::SL2_5);
    BuiltinFactor b = builtin(FactorKind::SL2_7);
    AmalgamationSpec amalg;
    amalg.identifications.push_back(
        {0, 1, a.canonical_central_generator, b.canonical_central_generator});
    return central_product({a.group, b.group}, amalg);
  }();
  return p;
}

std::vector<Idx> random_elements(const FiniteGroup& g, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Idx> pick(0, g.size() - 1);
  std::vector<Idx> out(count);
  for (Idx& x : out) x = pick(rng);
  return out;
}

void BM_DenseMul(benchmark::State& state) {
  const GroupPtr& g = dense_group();
  auto xs = random_elements(*g, 1024, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g->mul(xs[i & 1023], xs[(i + 7) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_DenseMul);

void BM_LazyMatrixMul(benchmark::State& state) {
  const GroupPtr& g = lazy_matrix_group();
  auto xs = random_elements(*g, 1024, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g->mul(xs[i & 1023], xs[(i + 7) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_LazyMatrixMul);

void BM_CentralProductMul(benchmark::State& state) {
  const GroupPtr& g = amalgamated_product().group;
  auto xs = random_elements(*g, 1024, 3);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g->mul(xs[i & 1023], xs[(i + 7) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_CentralProductMul);

void BM_PermCompose(benchmark::State& state) {
  GroupPtr g = state.range(0) == 120 ? dense_group() : amalgamated_product().group;
  Perm a = right_translation(*g, g->generators()[0]);
  Perm b = left_translation(*g, g->generators()[1]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(a, b));
  }
  state.SetItemsProcessed(state.iterations() * g->size());
}
BENCHMARK(BM_PermCompose)->Arg(120)->Arg(20160);

void BM_ClosureEnumeration(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(special_linear(2, 5));
  }
}
BENCHMARK(BM_ClosureEnumeration);

void BM_HolomorphMembership(benchmark::State& state) {
  const GroupPtr& g = dense_group();
  Perm sigma = compose(right_translation(*g, 17), left_translation(*g, 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(holomorph_membership(sigma, g));
  }
}
BENCHMARK(BM_HolomorphMembership);

void BM_FamilyMembership(benchmark::State& state) {
  CentralProduct p = central_product({dense_group()}, AmalgamationSpec{});
  std::vector<Homomorphism> auts;
  for (Idx s : p.group->generators()) auts.push_back(inner_automorphism(p.group, s));
  CentralDecomposition d = aut_indecomposable_decomposition(
      p.group, auts, [](const Subgroup&) { return std::nullopt; });
  RegularFamily fam(d);
  Perm probe = right_translation(*p.group, 23);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fam.member_contains(0b1, probe));
  }
}
BENCHMARK(BM_FamilyMembership);

}  // namespace

BENCHMARK_MAIN();
