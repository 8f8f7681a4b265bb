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

#include <json.hpp>

#include "multihol/pipeline.hpp"

using namespace multihol;

TEST_CASE("spec parsing") {
  GroupSpecFile spec = parse_group_spec(R"(
# comment
[factor]
name = SL2_5

[factor]
special_linear = 2 7

[amalgamate]
factors = 1 2
left = z
right = z^1

[analysis]
oracle = true
guard = 50000
)");
  REQUIRE(spec.factors.size() == 2);
  CHECK(spec.factors[0].builtin_name == "SL2_5");
  CHECK(spec.factors[1].sl_dim == 2);
  CHECK(spec.factors[1].sl_q == 7);
  REQUIRE(spec.amalgamations.size() == 1);
  CHECK(spec.amalgamations[0].factor_a == 0);
  CHECK(spec.amalgamations[0].factor_b == 1);
  CHECK(spec.amalgamations[0].right_selector == "z^1");
  CHECK(spec.analysis.oracle);
  CHECK(spec.analysis.guard == 50000);
}

TEST_CASE("spec parse errors") {
  CHECK_THROWS_AS(parse_group_spec(""), InputError);
  CHECK_THROWS_AS(parse_group_spec("[factor]\n"), InputError);  // no name
  CHECK_THROWS_AS(parse_group_spec("name = SL2_5\n"), InputError);  // key outside section
  CHECK_THROWS_AS(parse_group_spec("[factor]\nname = SL2_5\nspecial_linear = 2 5\n"),
                  InputError);
  CHECK_THROWS_AS(parse_group_spec("[factor]\nname = SL2_5\n[amalgamate]\nfactors = 1 3\n"),
                  InputError);
  CHECK_THROWS_AS(parse_group_spec("[weird]\n"), InputError);
  CHECK_THROWS_AS(parse_group_spec("[factor]\nname = SL2_5\n[analysis]\noracle = maybe\n"),
                  InputError);
}

TEST_CASE("shipped example specs parse") {
  const std::string base = std::string(MULTIHOL_REPO_DIR) + "/specs/";
  GroupSpecFile one = load_group_spec(base + "sl2_5.spec");
  CHECK(one.factors.size() == 1);
  CHECK(one.analysis.oracle);

  GroupSpecFile circ = load_group_spec(base + "sl2_5_circ_sl2_7.spec");
  CHECK(circ.factors.size() == 2);
  CHECK(circ.amalgamations.size() == 1);

  GroupSpecFile square = load_group_spec(base + "sl2_5_times_sl2_5.spec");
  CHECK(square.factors.size() == 2);
  CHECK(square.amalgamations.empty());

  CHECK_THROWS_AS(load_group_spec(base + "missing.spec"), InputError);
}

TEST_CASE("selector resolution and bad amalgamations at build stage") {
  SUBCASE("raw-index selector pointing at a non-central element") {
    GroupSpecFile spec = parse_group_spec(R"(
[factor]
name = SL2_5
[factor]
name = SL2_7
[amalgamate]
factors = 1 2
left = @1
right = z
)");
    CHECK_THROWS_AS(run_pipeline(spec, PipelineStage::Build), InvalidAmalgamationError);
  }

  SUBCASE("squared involution degenerates to the identity") {
    GroupSpecFile spec = parse_group_spec(R"(
[factor]
name = SL2_5
[factor]
name = SL2_7
[amalgamate]
factors = 1 2
left = z^2
right = z
)");
    CHECK_THROWS_AS(run_pipeline(spec, PipelineStage::Build), InvalidAmalgamationError);
  }

  SUBCASE("full amalgamation of equal cyclic centers") {
    GroupSpecFile spec = parse_group_spec(R"(
[factor]
name = SL2_5
[factor]
name = SL2_7
[amalgamate]
full = 1 2
)");
    PipelineResult r = run_pipeline(spec, PipelineStage::Build);
    CHECK(r.group_order == 20160);
    CHECK(r.all_passed);
  }

  SUBCASE("full amalgamation across different center orders is refused") {
    GroupSpecFile spec = parse_group_spec(R"(
[factor]
name = SL2_5
[factor]
name = THREE_A6
[amalgamate]
full = 1 2
)");
    CHECK_THROWS_AS(run_pipeline(spec, PipelineStage::Build), InvalidAmalgamationError);
  }

  SUBCASE("bad selector grammar") {
    GroupSpecFile spec = parse_group_spec(R"(
[factor]
name = SL2_5
[factor]
name = SL2_7
[amalgamate]
factors = 1 2
left = w
right = z
)");
    CHECK_THROWS_AS(run_pipeline(spec, PipelineStage::Build), InputError);
  }
}

TEST_CASE("reports are byte-identical across runs") {
  GroupSpecFile spec;
  spec.factors.push_back({"SL2_5", 0, 0});
  PipelineOptions opts;
  opts.run_oracle = true;
  std::string first = report_json(run_pipeline(spec, PipelineStage::Report, opts));
  std::string second = report_json(run_pipeline(spec, PipelineStage::Report, opts));
  CHECK(first == second);
  CHECK(!first.empty());
}

TEST_CASE("report json carries the contract fields in stable order") {
  GroupSpecFile spec;
  spec.factors.push_back({"SL2_5", 0, 0});
  PipelineResult r = run_pipeline(spec, PipelineStage::TGroup);
  std::string text = report_json(r);
  auto j = nlohmann::json::parse(text);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("group").at("order") == 120);
  CHECK(j.at("counts").at("n") == 1);
  CHECK(j.at("counts").at("l") == 0);
  CHECK(j.at("counts").at("h") == 1);
  CHECK(j.at("counts").at("m") == 1);
  CHECK(j.at("family").at("count") == 2);
  CHECK(j.at("tgroup").at("order") == 2);
  CHECK(j.at("all_passed") == true);
  // n/l/h/m fixed order in the serialized text
  std::size_t pn = text.find("\"n\":");
  std::size_t pl = text.find("\"l\":");
  std::size_t ph = text.find("\"h\":");
  std::size_t pm = text.find("\"m\":");
  CHECK(pn < pl);
  CHECK(pl < ph);
  CHECK(ph < pm);

  std::string summary = report_summary(r);
  CHECK(summary.find("ALL CHECKS PASSED") != std::string::npos);
}

TEST_CASE("pipeline surfaces witnesses instead of silently failing") {
  GroupSpecFile spec;
  spec.factors.push_back({"SL2_5", 0, 0});
  PipelineResult r = run_pipeline(spec, PipelineStage::TGroup);
  for (const CheckOutcome& c : r.checks) {
    CHECK(c.pass);
    CHECK(c.witness.empty());
  }
  CHECK(r.find_check("group_axioms") != nullptr);
  CHECK(r.find_check("tgroup_structure") != nullptr);
  CHECK(r.find_check("nonexistent") == nullptr);
}
