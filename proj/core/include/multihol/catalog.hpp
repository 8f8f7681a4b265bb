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
// Catalog of the exceptional quasisimple covers: the groups admitting no
// automorphism that inverts their center, described by simple-quotient
// name and center invariants, together with the critical central shapes
// that obstruct inversion and the counting formulas built on them.

#ifndef MULTIHOL_CATALOG_HPP_
#define MULTIHOL_CATALOG_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multihol/abelian.hpp"

namespace multihol {

enum class SimpleName {
  A5,
  A6,
  A7,
  PSL2_7,
  PSL2_11,
  M11,
  PSL3_4,
  U4_3,
  U6_2,
  TWO_E6_2,
};

std::string to_string(SimpleName n);
SimpleName simple_name_from_string(const std::string& s);  // throws InputError

struct QuasisimpleDescriptor {
  SimpleName simple_quotient;
  AbelianInvariants center;
  // Distinguishes non-isomorphic covers sharing center invariants; never
  // consulted by the catalog predicates, which depend on invariants only.
  std::optional<int> variant_tag;
};

class CoverCatalog {
 public:
  struct Member {
    AbelianInvariants center;
    int cover_count = 0;  // non-isomorphic covers with this center
    bool operator==(const Member&) const = default;
  };
  struct Rule {
    SimpleName simple_quotient;
    bool universal_only = false;       // exceptional iff center equals the multiplier
    AbelianInvariants critical_shape;  // minimal obstruction inside the center
    std::vector<Member> members;
    bool operator==(const Rule&) const = default;
  };

  // the compiled-in table; the repository ships the same table as a
  // versioned JSON data file
  static const CoverCatalog& compiled();
  static CoverCatalog from_json_file(const std::string& path);

  int schema_version() const { return schema_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const AbelianInvariants& schur_multiplier(SimpleName n) const;

  // center invariants must embed into the multiplier bound for the name
  bool descriptor_is_valid(const QuasisimpleDescriptor& d) const;

  // true iff no automorphism of the described cover inverts its center
  bool lacks_center_inverting_automorphism(const QuasisimpleDescriptor& d) const;

  // 9: the exceptional covers counted up to isomorphism
  int exceptional_count_up_to_iso() const;

  // whether the given central-subgroup shape contains a critical shape
  // for the described component; false for components with inverting
  // automorphisms
  bool critical_subgroup_present(const AbelianInvariants& subgroup_shape,
                                 const QuasisimpleDescriptor& component) const;

  bool operator==(const CoverCatalog&) const = default;

 private:
  int schema_ = 1;
  std::vector<Rule> rules_;
  std::map<SimpleName, AbelianInvariants> multipliers_;
};

struct HBounds {
  int m = 0;  // min(n - l + 1, n)
  std::uint64_t count_lower = 0;  // 2^m
  std::uint64_t count_upper = 0;  // 2^n
};

// Bounds for the size of the holomorph-sharing family of a group with n
// indecomposable factors, l of them carrying exceptional components.
HBounds h_bounds(int n, int l);

// Exact family size when the factor centers are all amalgamated: 2^m.
std::uint64_t amalgamated_count(int n, int l);

}  // namespace multihol

#endif  // MULTIHOL_CATALOG_HPP_
