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
// Element-indexed finite group engine. A group is a multiplication oracle
// on dense indices 0..N-1 (identity at 0) plus derived tables computed at
// construction: a breadth-first Cayley word for every element and the
// inverse table. Everything is immutable after construction; the remaining
// cached data (center, classes, ...) is computed once under a lock, so
// concurrent readers are safe.

#ifndef MULTIHOL_FINITE_GROUP_HPP_
#define MULTIHOL_FINITE_GROUP_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "multihol/common.hpp"

namespace multihol {

// Multiplication oracle. Implementations: dense tables, matrix groups,
// central products, central quotients, permutation groups, twisted
// multiplications. Groups above kDenseTableLimit never store an N x N
// table; their oracle computes products from canonical representatives.
class GroupOps {
 public:
  virtual ~GroupOps() = default;
  virtual Idx size() const = 0;
  virtual Idx mul(Idx a, Idx b) const = 0;
  // Native inverse when the representation has one cheaper than word
  // recursion; kInvalidIdx means "not provided".
  virtual Idx inverse_hint(Idx /*a*/) const { return kInvalidIdx; }
  virtual std::string describe() const = 0;
};

class DenseTableOps final : public GroupOps {
 public:
  DenseTableOps(Idx n, std::vector<Idx> table, std::string label);
  Idx size() const override { return n_; }
  Idx mul(Idx a, Idx b) const override { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  std::string describe() const override { return label_; }

 private:
  Idx n_;
  std::vector<Idx> table_;
  std::string label_;
};

// Predecessor-plus-generator word from the breadth-first search rooted at
// the identity; g == mul(pred, generators[gen_slot]).
struct CayleyWord {
  Idx pred = kInvalidIdx;
  std::uint32_t gen_slot = 0;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(IndexSet members, std::vector<Idx> generators)
      : members_(std::move(members)), generators_(std::move(generators)) {}

  Idx order() const { return members_.count(); }
  bool contains(Idx x) const { return members_.test(x); }
  std::vector<Idx> elements() const { return members_.elements(); }
  const IndexSet& members() const { return members_; }
  const std::vector<Idx>& generators() const { return generators_; }

  bool operator==(const Subgroup& o) const { return members_ == o.members_; }

 private:
  IndexSet members_;
  std::vector<Idx> generators_;
};

struct ConjugacyClasses {
  std::vector<Idx> class_of;              // element -> class id
  std::vector<std::vector<Idx>> classes;  // sorted members per class
  Idx class_size_of(Idx x) const { return static_cast<Idx>(classes[class_of[x]].size()); }
};

class FiniteGroup {
 public:
  // Runs the breadth-first enumeration from the identity and fails with
  // CheckError if the generators do not reach every index.
  FiniteGroup(std::shared_ptr<const GroupOps> ops, std::vector<Idx> generators,
              std::string name);

  Idx size() const { return n_; }
  const std::string& name() const { return name_; }
  const GroupOps& ops() const { return *ops_; }

  Idx mul(Idx a, Idx b) const { return ops_->mul(a, b); }
  Idx inverse(Idx a) const { return inv_[a]; }
  Idx conjugate(Idx x, Idx g) const { return mul(mul(inv_[g], x), g); }
  Idx commutator(Idx a, Idx b) const { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }
  Idx power(Idx a, std::uint64_t e) const;
  Idx element_order(Idx a) const;

  const std::vector<Idx>& generators() const { return gens_; }
  const std::vector<Idx>& bfs_order() const { return bfs_order_; }
  const std::vector<CayleyWord>& cayley_words() const { return words_; }

  const Subgroup& center() const;
  const Subgroup& derived_subgroup() const;
  const ConjugacyClasses& conjugacy_classes() const;
  bool is_perfect() const;
  bool is_abelian() const;

 private:
  std::shared_ptr<const GroupOps> ops_;
  std::vector<Idx> gens_;
  std::string name_;
  Idx n_;
  std::vector<Idx> bfs_order_;
  std::vector<CayleyWord> words_;
  std::vector<Idx> inv_;
  Lazy<std::vector<Idx>> orders_;
  Lazy<Subgroup> center_;
  Lazy<Subgroup> derived_;
  Lazy<ConjugacyClasses> classes_;
};

GroupPtr make_group(std::shared_ptr<const GroupOps> ops, std::vector<Idx> generators,
                    std::string name);
GroupPtr make_table_group(Idx n, std::vector<Idx> table, std::vector<Idx> generators,
                          std::string name);

// Smallest mul-closed (hence inverse-closed) subset containing the
// generators and the identity.
Subgroup closure(const FiniteGroup& g, std::vector<Idx> gens);

// Smallest normal subgroup containing the seed elements.
Subgroup normal_closure(const FiniteGroup& g, std::vector<Idx> seed);

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_subgroup(const FiniteGroup& g);

// Center and derived subgroup of a subgroup (not of the whole group).
Subgroup subgroup_center(const FiniteGroup& g, const Subgroup& s);
Subgroup subgroup_derived(const FiniteGroup& g, const Subgroup& s);
bool subgroup_is_normal(const FiniteGroup& g, const Subgroup& s);

// Every normal subgroup, as the join-closure of normal closures of
// conjugacy classes. Throws GuardError when the lattice exceeds the guard.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g,
                                       std::size_t max_count_guard = kDefaultLatticeGuard);

// Subgroup reindexed as a standalone group. Local index 0 is the identity.
struct ExtractedSubgroup {
  GroupPtr group;
  std::vector<Idx> to_parent;  // local -> parent
  std::vector<Idx> to_local;   // parent -> local, kInvalidIdx outside
};
ExtractedSubgroup extract_subgroup(const GroupPtr& parent, const Subgroup& s,
                                   std::string name = {});

// Quotient by a central subgroup. Elements are cosets, represented by
// their least member; the representative dictionary is built during the
// closure walk.
struct CentralQuotient {
  GroupPtr group;
  std::vector<Idx> projection;  // parent -> quotient
  std::vector<Idx> section;     // quotient -> canonical representative
};
CentralQuotient quotient_by_central(const GroupPtr& g, const Subgroup& s,
                                    std::string name = {});

// Perfect and the central quotient is simple.
bool is_quasisimple(const GroupPtr& g);

}  // namespace multihol

#endif  // MULTIHOL_FINITE_GROUP_HPP_
