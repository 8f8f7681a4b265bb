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

#include "multihol/catalog.hpp"

#include <fstream>

#include <json.hpp>

namespace multihol {

namespace {

const std::vector<std::pair<SimpleName, const char*>>& name_table() {
  static const std::vector<std::pair<SimpleName, const char*>> t{
      {SimpleName::A5, "A5"},           {SimpleName::A6, "A6"},
      {SimpleName::A7, "A7"},           {SimpleName::PSL2_7, "PSL2_7"},
      {SimpleName::PSL2_11, "PSL2_11"}, {SimpleName::M11, "M11"},
      {SimpleName::PSL3_4, "PSL3_4"},   {SimpleName::U4_3, "U4_3"},
      {SimpleName::U6_2, "U6_2"},       {SimpleName::TWO_E6_2, "2E6_2"},
  };
  return t;
}

AbelianInvariants inv(std::initializer_list<unsigned> orders) {
  return AbelianInvariants::from_cyclic_orders(std::vector<unsigned>(orders));
}

}  // namespace

std::string to_string(SimpleName n) {
  for (auto [k, s] : name_table()) {
    if (k == n) return s;
  }
  throw Error("unnamed simple group");
}

SimpleName simple_name_from_string(const std::string& s) {
  for (auto [k, t] : name_table()) {
    if (s == t) return k;
  }
  throw InputError("unknown simple group name: " + s);
}

const CoverCatalog& CoverCatalog::compiled() {
  static const CoverCatalog c = [] {
    CoverCatalog cat;
    cat.schema_ = 1;
    cat.multipliers_ = {
        {SimpleName::A5, inv({2})},
        {SimpleName::A6, inv({6})},
        {SimpleName::A7, inv({6})},
        {SimpleName::PSL2_7, inv({2})},
        {SimpleName::PSL2_11, inv({2})},
        {SimpleName::M11, AbelianInvariants{}},
        {SimpleName::PSL3_4, inv({4, 4, 3})},
        {SimpleName::U4_3, inv({3, 3, 4})},
        {SimpleName::U6_2, inv({2, 2, 3})},
        {SimpleName::TWO_E6_2, inv({2, 2, 3})},
    };
    cat.rules_ = {
        // covers of PSL3(4) whose center contains Z2 x Z2 x Z3
        Rule{SimpleName::PSL3_4, false, inv({2, 2, 3}),
             {Member{inv({2, 2, 3}), 1}, Member{inv({2, 4, 3}), 2}, Member{inv({4, 4, 3}), 1}}},
        // covers of U4(3) whose center contains Z3 x Z4
        Rule{SimpleName::U4_3, false, inv({3, 4}),
             {Member{inv({3, 4}), 2}, Member{inv({3, 3, 4}), 1}}},
        // universal covers only; the critical shape is the whole center
        Rule{SimpleName::U6_2, true, inv({2, 2, 3}), {Member{inv({2, 2, 3}), 1}}},
        Rule{SimpleName::TWO_E6_2, true, inv({2, 2, 3}), {Member{inv({2, 2, 3}), 1}}},
    };
    return cat;
  }();
  return c;
}

CoverCatalog CoverCatalog::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open catalog file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("catalog parse error: " + std::string(e.what()));
  }
  CoverCatalog c;
  try {
    c.schema_ = j.at("schema").get<int>();
    for (auto& [name, orders] : j.at("multipliers").items()) {
      c.multipliers_[simple_name_from_string(name)] =
          AbelianInvariants::from_cyclic_orders(orders.get<std::vector<unsigned>>());
    }
    for (const auto& rj : j.at("rules")) {
      Rule r;
      r.simple_quotient = simple_name_from_string(rj.at("simple_quotient").get<std::string>());
      r.universal_only = rj.at("universal_only").get<bool>();
      r.critical_shape =
          AbelianInvariants::from_cyclic_orders(rj.at("critical_shape").get<std::vector<unsigned>>());
      for (const auto& mj : rj.at("members")) {
        Member m;
        m.center = AbelianInvariants::from_cyclic_orders(mj.at("center").get<std::vector<unsigned>>());
        m.cover_count = mj.at("covers").get<int>();
        r.members.push_back(std::move(m));
      }
      c.rules_.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError("catalog schema error: " + std::string(e.what()));
  }
  return c;
}

const AbelianInvariants& CoverCatalog::schur_multiplier(SimpleName n) const {
  auto it = multipliers_.find(n);
  if (it == multipliers_.end()) throw InputError("unknown simple group name in descriptor");
  return it->second;
}

bool CoverCatalog::descriptor_is_valid(const QuasisimpleDescriptor& d) const {
  return schur_multiplier(d.simple_quotient).contains_subgroup_isomorphic_to(d.center);
}

bool CoverCatalog::lacks_center_inverting_automorphism(const QuasisimpleDescriptor& d) const {
  schur_multiplier(d.simple_quotient);  // validates the name
  for (const Rule& r : rules_) {
    if (r.simple_quotient != d.simple_quotient) continue;
    if (r.universal_only) return d.center == schur_multiplier(d.simple_quotient);
    return d.center.contains_subgroup_isomorphic_to(r.critical_shape);
  }
  return false;
}

int CoverCatalog::exceptional_count_up_to_iso() const {
  int n = 0;
  for (const Rule& r : rules_) {
    for (const Member& m : r.members) n += m.cover_count;
  }
  return n;
}

bool CoverCatalog::critical_subgroup_present(const AbelianInvariants& subgroup_shape,
                                             const QuasisimpleDescriptor& component) const {
  if (!lacks_center_inverting_automorphism(component)) return false;
  for (const Rule& r : rules_) {
    if (r.simple_quotient != component.simple_quotient) continue;
    const AbelianInvariants& shape =
        r.universal_only ? schur_multiplier(component.simple_quotient) : r.critical_shape;
    return subgroup_shape.contains_subgroup_isomorphic_to(shape);
  }
  return false;
}

HBounds h_bounds(int n, int l) {
  if (n < 1 || l < 0 || l > n || n > 62) throw InputError("invalid factor counts");
  HBounds b;
  b.m = std::min(n - l + 1, n);
  b.count_lower = std::uint64_t{1} << b.m;
  b.count_upper = std::uint64_t{1} << n;
  return b;
}

std::uint64_t amalgamated_count(int n, int l) { return h_bounds(n, l).count_lower; }

}  // namespace multihol
