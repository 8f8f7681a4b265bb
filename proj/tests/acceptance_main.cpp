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
// Acceptance suite. Each criterion prints exactly one PASS/FAIL line;
// the exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "multihol/pipeline.hpp"

using namespace multihol;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& what, bool ok) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", num, what.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

GroupSpecFile spec_of(std::vector<std::string> names, bool amalgamate) {
  GroupSpecFile spec;
  for (const std::string& n : names) spec.factors.push_back({n, 0, 0});
  if (amalgamate) {
    AmalgamateEntry a;
    a.factor_a = 0;
    a.factor_b = 1;
    spec.amalgamations.push_back(a);
  }
  return spec;
}

bool checks_pass(const PipelineResult& r, const std::vector<std::string>& names) {
  for (const std::string& n : names) {
    const CheckOutcome* c = r.find_check(n);
    if (!c || !c->pass) {
      std::printf("       missing/failed check: %s%s%s\n", n.c_str(), c ? " -- " : "",
                  c ? c->witness.c_str() : "");
      return false;
    }
  }
  return true;
}

// the identity-suite checks required on every built group (criterion 6)
const std::vector<std::string> kIdentitySuite = {
    "regular_representations_commute",
    "inversion_involution",
    "inversion_conjugation_identity",
    "family_members_regular",
    "family_members_in_holomorph",
    "family_normalized_by_holomorph",
    "family_members_distinct",
    "inversion_swaps_complements",
    "conjugator_conjugation_identity",
    "conjugator_maps_base_to_member",
    "conjugator_normalizes_holomorph",
    "conjugator_outside_holomorph",
    "conjugator_square_in_holomorph",
    "twisted_full_subset_is_multiplication",
    "twisted_empty_subset_is_opposite",
    "conjugator_twisted_isomorphism",
    "automorphisms_preserve_twisted_groups",
};

double run_timed(const GroupSpecFile& spec, PipelineStage stage, bool oracle,
                 PipelineResult& out) {
  PipelineOptions opts;
  opts.run_oracle = oracle;
  auto t0 = std::chrono::steady_clock::now();
  out = run_pipeline(spec, stage, opts);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  std::vector<PipelineResult> built;  // for criterion 6

  // 1. single factor of order 120, end to end with the oracle
  {
    PipelineResult r;
    double secs = run_timed(spec_of({"SL2_5"}, false), PipelineStage::Report, true, r);
    bool ok = r.all_passed && r.group_order == 120 && r.n == 1 &&
              r.family_subsets == std::vector<std::uint32_t>{0b0, 0b1} && r.h == 1 &&
              r.tgroup && r.tgroup->order == 2 && r.tgroup->rank == 1 &&
              r.tgroup->elementary_abelian && r.tgroup->action_regular && r.oracle &&
              r.oracle->holomorph_order == 14400 && r.oracle->regular_normal_count == 2 &&
              r.oracle->matches_family && r.aut_order == 120 && secs < 60.0;
    criterion(1, "SL(2,5) end to end: order 120, n=1, family of 2, quotient Z2, oracle exact (" +
                     std::to_string(secs) + " s)",
              ok);
    built.push_back(std::move(r));
  }

  // 2. amalgamated product of order 20160
  {
    PipelineResult r;
    double secs = run_timed(spec_of({"SL2_5", "SL2_7"}, true), PipelineStage::TGroup, false, r);
    bool ok = r.all_passed && r.group_order == 20160 && r.n == 2 && r.l == 0 &&
              r.family_subsets.size() == 4 && r.h == 2 && r.tgroup && r.tgroup->order == 4 &&
              r.tgroup->elementary_abelian && r.tgroup->rank == 2 && r.tgroup->action_regular &&
              checks_pass(r, {"family_members_distinct", "family_members_regular",
                              "family_normalized_by_holomorph", "conjugator_wellformed:{}",
                              "conjugator_wellformed:{1}", "conjugator_wellformed:{2}",
                              "conjugator_wellformed:{1,2}"}) &&
              secs < 600.0;
    criterion(2, "amalgamated SL(2,5) o SL(2,7): order 20160, n=2, family of 4, quotient 2^2, "
                 "conjugators certified (" + std::to_string(secs) + " s)",
              ok);
    built.push_back(std::move(r));
  }

  // 3. direct product of order 40320, non-amalgamated centers
  {
    PipelineResult r;
    double secs = run_timed(spec_of({"SL2_5", "SL2_7"}, false), PipelineStage::TGroup, false, r);
    bool ok = r.all_passed && r.group_order == 40320 && r.n == 2 && r.l == 0 &&
              r.family_subsets.size() == 4 && r.tgroup && r.tgroup->order == 4 &&
              r.tgroup->elementary_abelian && r.tgroup->action_regular && secs < 900.0;
    criterion(3, "direct SL(2,5) x SL(2,7): order 40320, same counts with separate centers (" +
                     std::to_string(secs) + " s)",
              ok);
    built.push_back(std::move(r));
  }

  // 4. the square: the coordinate swap must merge the two components
  {
    PipelineResult r;
    run_timed(spec_of({"SL2_5", "SL2_5"}, false), PipelineStage::TGroup, false, r);
    bool ok = r.all_passed && r.group_order == 14400 && r.component_count == 2 && r.n == 1 &&
              r.family_subsets.size() == 2 && r.h == 1;
    criterion(4, "SL(2,5) x SL(2,5): two components but n=1, family of 2", ok);
    built.push_back(std::move(r));
  }

  // 5. the triple cover of A6
  {
    PipelineResult r;
    run_timed(spec_of({"THREE_A6"}, false), PipelineStage::TGroup, false, r);
    bool ok = r.all_passed && r.group_order == 1080 &&
              r.center_invariants == std::vector<unsigned>{3} && r.n == 1 &&
              r.family_subsets.size() == 2 && r.tgroup && r.tgroup->order == 2 &&
              r.tgroup->elementary_abelian &&
              checks_pass(r, {"component_inverters_found", "center_inversion_automorphism"});
    criterion(5, "3.A6: order 1080, center Z3, inverting automorphism found and assembled, "
                 "family of 2, quotient Z2",
              ok);
    built.push_back(std::move(r));
  }

  // 6. the identity suites on every built group
  {
    bool ok = true;
    for (const PipelineResult& r : built) {
      if (!checks_pass(r, kIdentitySuite)) {
        std::printf("       identity suite failed for %s\n", r.group_name.c_str());
        ok = false;
      }
    }
    criterion(6, "translation/inversion/conjugator/twisted identity suites on all built groups",
              ok);
  }

  // 7. formula suite on the descriptor level
  {
    bool ok = true;
    const CoverCatalog& cat = CoverCatalog::compiled();
    auto d = [](SimpleName n, std::vector<unsigned> c) {
      return QuasisimpleDescriptor{n, AbelianInvariants::from_cyclic_orders(c), std::nullopt};
    };
    // four positive patterns
    ok = ok && cat.lacks_center_inverting_automorphism(d(SimpleName::PSL3_4, {2, 2, 3}));
    ok = ok && cat.lacks_center_inverting_automorphism(d(SimpleName::U4_3, {3, 3, 4}));
    ok = ok && cat.lacks_center_inverting_automorphism(d(SimpleName::U6_2, {2, 2, 3}));
    ok = ok && cat.lacks_center_inverting_automorphism(d(SimpleName::TWO_E6_2, {2, 2, 3}));
    // six negatives
    ok = ok && !cat.lacks_center_inverting_automorphism(d(SimpleName::A5, {2}));
    ok = ok && !cat.lacks_center_inverting_automorphism(d(SimpleName::A6, {3}));
    ok = ok && !cat.lacks_center_inverting_automorphism(d(SimpleName::PSL2_7, {2}));
    ok = ok && !cat.lacks_center_inverting_automorphism(d(SimpleName::PSL3_4, {4, 3}));
    ok = ok && !cat.lacks_center_inverting_automorphism(d(SimpleName::U4_3, {3}));
    ok = ok && !cat.lacks_center_inverting_automorphism(d(SimpleName::U6_2, {2, 2}));
    ok = ok && cat.exceptional_count_up_to_iso() == 9;
    // hand-computed min(n-l+1, n) over the required pairs
    struct Case {
      int n, l, m;
    };
    for (Case c : {Case{1, 0, 1}, Case{1, 1, 1}, Case{2, 1, 2}, Case{3, 2, 2}, Case{5, 5, 1}}) {
      HBounds b = h_bounds(c.n, c.l);
      ok = ok && b.m == c.m && b.count_lower == (1ull << c.m) &&
           b.count_upper == (1ull << c.n) &&
           amalgamated_count(c.n, c.l) == (1ull << c.m);
    }
    criterion(7, "exceptional-cover truth table, nine covers up to isomorphism, count formulas",
              ok);
  }

  // 8. byte-identical reports on consecutive runs
  {
    GroupSpecFile spec = spec_of({"SL2_5", "SL2_7"}, true);
    PipelineResult a, b;
    run_timed(spec, PipelineStage::Report, false, a);
    run_timed(spec, PipelineStage::Report, false, b);
    std::string ja = report_json(a);
    bool ok = !ja.empty() && ja == report_json(b);
    criterion(8, "two consecutive report runs on the amalgamated product are byte-identical", ok);
  }

  std::printf("%d criteria failed\n", g_failures);
  return g_failures;
}
