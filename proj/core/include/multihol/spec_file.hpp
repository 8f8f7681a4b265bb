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
// Group spec files: line-oriented key-value with [factor], [amalgamate]
// and [analysis] sections. See docs/spec-format.md for the grammar.

#ifndef MULTIHOL_SPEC_FILE_HPP_
#define MULTIHOL_SPEC_FILE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "multihol/common.hpp"

namespace multihol {

struct FactorEntry {
  std::string builtin_name;  // exclusive with the special_linear fields
  unsigned sl_dim = 0;
  unsigned sl_q = 0;
  bool is_builtin() const { return !builtin_name.empty(); }
};

// Central-element selectors: "z" is the canonical central generator,
// "z^K" its K-th power, "@IDX" a raw element index.
struct AmalgamateEntry {
  std::size_t factor_a = 0;  // zero-based (one-based in the file)
  std::size_t factor_b = 0;
  std::string left_selector = "z";
  std::string right_selector = "z";
  bool full = false;  // identify the whole centers via canonical generators
};

struct AnalysisFlags {
  bool oracle = false;
  std::size_t guard = kDefaultLatticeGuard;
};

struct GroupSpecFile {
  std::vector<FactorEntry> factors;
  std::vector<AmalgamateEntry> amalgamations;
  AnalysisFlags analysis;
};

GroupSpecFile parse_group_spec(const std::string& text);  // throws InputError
GroupSpecFile load_group_spec(const std::string& path);

}  // namespace multihol

#endif  // MULTIHOL_SPEC_FILE_HPP_
