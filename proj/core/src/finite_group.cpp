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

#include "multihol/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace multihol {

namespace {

// Builders materialize a dense table below this order; larger groups keep
// their construction-specific oracle.
constexpr Idx kDenseMaterializeLimit = 2048;

std::vector<Idx> sorted_unique(std::vector<Idx> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

DenseTableOps::DenseTableOps(Idx n, std::vector<Idx> table, std::string label)
    : n_(n), table_(std::move(table)), label_(std::move(label)) {
  if (n_ > kDenseTableLimit) throw Error("dense table refused for order " + std::to_string(n_));
  if (table_.size() != static_cast<std::size_t>(n_) * n_) throw Error("bad table size");
}

FiniteGroup::FiniteGroup(std::shared_ptr<const GroupOps> ops, std::vector<Idx> generators,
                         std::string name)
    : ops_(std::move(ops)), gens_(std::move(generators)), name_(std::move(name)) {
  n_ = ops_->size();
  if (n_ == 0) throw Error("empty group");
  if (gens_.empty()) throw Error("empty generator list");
  for (Idx s : gens_) {
    if (s >= n_) throw Error("generator index out of range");
  }
  if (ops_->mul(0, gens_[0]) != gens_[0] || ops_->mul(gens_[0], 0) != gens_[0]) {
    throw CheckError("index 0 is not an identity in " + name_);
  }

  // breadth-first enumeration from the identity; right multiplication by
  // generators, so every element gets a predecessor-plus-generator word
  words_.assign(n_, CayleyWord{});
  bfs_order_.clear();
  bfs_order_.reserve(n_);
  std::vector<bool> seen(n_, false);
  std::deque<Idx> queue;
  seen[0] = true;
  queue.push_back(0);
  bfs_order_.push_back(0);
  while (!queue.empty()) {
    Idx x = queue.front();
    queue.pop_front();
    for (std::uint32_t gi = 0; gi < gens_.size(); ++gi) {
      Idx y = ops_->mul(x, gens_[gi]);
      if (y >= n_) throw CheckError("multiplication escaped the index range in " + name_);
      if (!seen[y]) {
        seen[y] = true;
        words_[y] = CayleyWord{x, gi};
        bfs_order_.push_back(y);
        queue.push_back(y);
      }
    }
  }
  if (bfs_order_.size() != n_) {
    throw CheckError(name_ + ": generators reach only " + std::to_string(bfs_order_.size()) +
                     " of " + std::to_string(n_) + " elements");
  }

  // inverse table: generator inverses by native hint or by powering, the
  // rest along the Cayley words ((pred*s)^-1 = s^-1 * pred^-1)
  inv_.assign(n_, kInvalidIdx);
  inv_[0] = 0;
  std::vector<Idx> gen_inv(gens_.size());
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    Idx s = gens_[i];
    Idx native = ops_->inverse_hint(s);
    if (native != kInvalidIdx) {
      gen_inv[i] = native;
    } else if (s == 0) {
      gen_inv[i] = 0;
    } else {
      Idx prev = s, p = ops_->mul(s, s);
      while (p != 0) {
        prev = p;
        p = ops_->mul(p, s);
      }
      gen_inv[i] = prev;  // s^(order-1)
    }
    if (ops_->mul(s, gen_inv[i]) != 0 || ops_->mul(gen_inv[i], s) != 0) {
      throw CheckError(name_ + ": generator has no two-sided inverse");
    }
  }
  for (Idx x : bfs_order_) {
    if (x == 0) continue;
    const CayleyWord& w = words_[x];
    inv_[x] = ops_->mul(gen_inv[w.gen_slot], inv_[w.pred]);
  }
  for (Idx x = 0; x < n_; ++x) {
    if (ops_->mul(x, inv_[x]) != 0) throw CheckError(name_ + ": inverse law failed");
  }
}

Idx FiniteGroup::power(Idx a, std::uint64_t e) const {
  Idx r = 0;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Idx FiniteGroup::element_order(Idx a) const {
  const auto& ord = orders_.get([this] {
    std::vector<Idx> t(n_, 0);
    for (Idx x = 0; x < n_; ++x) {
      Idx p = x, o = 1;
      while (p != 0) {
        p = mul(p, x);
        ++o;
      }
      t[x] = x == 0 ? 1 : o;
    }
    return t;
  });
  return ord[a];
}

const Subgroup& FiniteGroup::center() const {
  return center_.get([this] {
    IndexSet members(n_);
    std::vector<Idx> zs;
    for (Idx x = 0; x < n_; ++x) {
      bool commutes = true;
      for (Idx s : gens_) {
        if (mul(x, s) != mul(s, x)) {
          commutes = false;
          break;
        }
      }
      if (commutes) {
        members.set(x);
        if (x != 0) zs.push_back(x);
      }
    }
    if (zs.empty()) zs.push_back(0);
    return Subgroup(std::move(members), std::move(zs));
  });
}

const Subgroup& FiniteGroup::derived_subgroup() const {
  return derived_.get([this] {
    std::vector<Idx> comms;
    for (Idx a : gens_) {
      for (Idx b : gens_) {
        Idx c = commutator(a, b);
        if (c != 0) comms.push_back(c);
      }
    }
    if (comms.empty()) return trivial_subgroup(*this);
    return normal_closure(*this, std::move(comms));
  });
}

const ConjugacyClasses& FiniteGroup::conjugacy_classes() const {
  return classes_.get([this] {
    ConjugacyClasses cc;
    cc.class_of.assign(n_, kInvalidIdx);
    for (Idx x = 0; x < n_; ++x) {
      if (cc.class_of[x] != kInvalidIdx) continue;
      Idx id = static_cast<Idx>(cc.classes.size());
      std::vector<Idx> members{x};
      cc.class_of[x] = id;
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (Idx s : gens_) {
          Idx y = conjugate(members[i], s);
          if (cc.class_of[y] == kInvalidIdx) {
            cc.class_of[y] = id;
            members.push_back(y);
          }
        }
      }
      std::sort(members.begin(), members.end());
      cc.classes.push_back(std::move(members));
    }
    return cc;
  });
}

bool FiniteGroup::is_perfect() const { return derived_subgroup().order() == n_; }

bool FiniteGroup::is_abelian() const { return center().order() == n_; }

GroupPtr make_group(std::shared_ptr<const GroupOps> ops, std::vector<Idx> generators,
                    std::string name) {
  return std::make_shared<const FiniteGroup>(std::move(ops), std::move(generators),
                                             std::move(name));
}

GroupPtr make_table_group(Idx n, std::vector<Idx> table, std::vector<Idx> generators,
                          std::string name) {
  auto ops = std::make_shared<const DenseTableOps>(n, std::move(table), name);
  return make_group(ops, std::move(generators), std::move(name));
}

Subgroup closure(const FiniteGroup& g, std::vector<Idx> gens) {
  if (gens.empty()) throw Error("closure of empty generator list");
  for (Idx s : gens) {
    if (s >= g.size()) throw Error("closure generator out of range");
  }
  IndexSet members(g.size());
  members.set(0);
  std::vector<Idx> work{0};
  for (Idx s : gens) {
    if (!members.test(s)) {
      members.set(s);
      work.push_back(s);
    }
  }
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (Idx s : gens) {
      Idx y = g.mul(work[i], s);
      if (!members.test(y)) {
        members.set(y);
        work.push_back(y);
      }
    }
  }
  return Subgroup(std::move(members), sorted_unique(std::move(gens)));
}

Subgroup normal_closure(const FiniteGroup& g, std::vector<Idx> seed) {
  std::vector<Idx> gens = sorted_unique(std::move(seed));
  gens.erase(std::remove(gens.begin(), gens.end(), Idx{0}), gens.end());
  if (gens.empty()) return trivial_subgroup(g);
  Subgroup h = closure(g, gens);
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t current = gens.size();
    for (std::size_t i = 0; i < current; ++i) {
      for (Idx s : g.generators()) {
        Idx c = g.conjugate(gens[i], s);
        if (!h.contains(c)) {
          gens.push_back(c);
          grew = true;
        }
      }
    }
    if (grew) h = closure(g, gens);
  }
  return h;
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  IndexSet members(g.size());
  members.set(0);
  return Subgroup(std::move(members), {0});
}

Subgroup whole_subgroup(const FiniteGroup& g) {
  IndexSet members(g.size());
  for (Idx x = 0; x < g.size(); ++x) members.set(x);
  return Subgroup(std::move(members), g.generators());
}

Subgroup subgroup_center(const FiniteGroup& g, const Subgroup& s) {
  IndexSet members(g.size());
  std::vector<Idx> zs;
  for (Idx x : s.elements()) {
    bool commutes = true;
    for (Idx t : s.generators()) {
      if (g.mul(x, t) != g.mul(t, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) {
      members.set(x);
      if (x != 0) zs.push_back(x);
    }
  }
  if (zs.empty()) zs.push_back(0);
  return Subgroup(std::move(members), std::move(zs));
}

Subgroup subgroup_derived(const FiniteGroup& g, const Subgroup& s) {
  // normal closure inside s of the commutators of its generators
  std::vector<Idx> gens;
  for (Idx a : s.generators()) {
    for (Idx b : s.generators()) {
      Idx c = g.commutator(a, b);
      if (c != 0) gens.push_back(c);
    }
  }
  gens = sorted_unique(std::move(gens));
  if (gens.empty()) return trivial_subgroup(g);
  Subgroup h = closure(g, gens);
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t current = gens.size();
    for (std::size_t i = 0; i < current; ++i) {
      for (Idx t : s.generators()) {
        Idx c = g.conjugate(gens[i], t);
        if (!h.contains(c)) {
          gens.push_back(c);
          grew = true;
        }
      }
    }
    if (grew) h = closure(g, gens);
  }
  return h;
}

bool subgroup_is_normal(const FiniteGroup& g, const Subgroup& s) {
  for (Idx x : s.generators()) {
    for (Idx t : g.generators()) {
      if (!s.contains(g.conjugate(x, t))) return false;
    }
  }
  return true;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, std::size_t max_count_guard) {
  const ConjugacyClasses& cc = g.conjugacy_classes();
  std::vector<Subgroup> atoms;
  auto push_unique = [](std::vector<Subgroup>& v, Subgroup s) {
    for (const Subgroup& t : v) {
      if (t == s) return false;
    }
    v.push_back(std::move(s));
    return true;
  };
  atoms.push_back(trivial_subgroup(g));
  for (const auto& cls : cc.classes) {
    if (cls.size() == 1 && cls[0] == 0) continue;
    push_unique(atoms, normal_closure(g, {cls[0]}));
  }
  push_unique(atoms, closure(g, g.generators()));

  // join-closure
  std::vector<Subgroup> lattice = atoms;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (lattice.size() > max_count_guard) {
        throw GuardError("normal subgroup lattice exceeded guard of " +
                         std::to_string(max_count_guard));
      }
      if (lattice[i].members().is_subset_of(lattice[j].members()) ||
          lattice[j].members().is_subset_of(lattice[i].members())) {
        continue;
      }
      std::vector<Idx> joint = lattice[i].generators();
      joint.insert(joint.end(), lattice[j].generators().begin(), lattice[j].generators().end());
      push_unique(lattice, closure(g, std::move(joint)));
    }
  }
  std::sort(lattice.begin(), lattice.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members().lex_less(b.members());
  });
  return lattice;
}

namespace {

class ExtractedOps final : public GroupOps {
 public:
  ExtractedOps(GroupPtr parent, std::vector<Idx> to_parent, std::vector<Idx> to_local,
               std::string label)
      : parent_(std::move(parent)),
        to_parent_(std::move(to_parent)),
        to_local_(std::move(to_local)),
        label_(std::move(label)) {}

  Idx size() const override { return static_cast<Idx>(to_parent_.size()); }
  Idx mul(Idx a, Idx b) const override {
    return to_local_[parent_->mul(to_parent_[a], to_parent_[b])];
  }
  Idx inverse_hint(Idx a) const override { return to_local_[parent_->inverse(to_parent_[a])]; }
  std::string describe() const override { return label_; }

 private:
  GroupPtr parent_;
  std::vector<Idx> to_parent_;
  std::vector<Idx> to_local_;
  std::string label_;
};

class QuotientOps final : public GroupOps {
 public:
  QuotientOps(GroupPtr parent, std::vector<Idx> projection, std::vector<Idx> section,
              std::string label)
      : parent_(std::move(parent)),
        projection_(std::move(projection)),
        section_(std::move(section)),
        label_(std::move(label)) {}

  Idx size() const override { return static_cast<Idx>(section_.size()); }
  Idx mul(Idx a, Idx b) const override {
    return projection_[parent_->mul(section_[a], section_[b])];
  }
  Idx inverse_hint(Idx a) const override { return projection_[parent_->inverse(section_[a])]; }
  std::string describe() const override { return label_; }

 private:
  GroupPtr parent_;
  std::vector<Idx> projection_;
  std::vector<Idx> section_;
  std::string label_;
};

GroupPtr densify_if_small(std::shared_ptr<const GroupOps> ops, std::vector<Idx> gens,
                          const std::string& name) {
  Idx n = ops->size();
  if (n <= kDenseMaterializeLimit) {
    std::vector<Idx> table(static_cast<std::size_t>(n) * n);
    for (Idx a = 0; a < n; ++a) {
      for (Idx b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = ops->mul(a, b);
    }
    return make_table_group(n, std::move(table), std::move(gens), name);
  }
  return make_group(std::move(ops), std::move(gens), name);
}

}  // namespace

ExtractedSubgroup extract_subgroup(const GroupPtr& parent, const Subgroup& s, std::string name) {
  std::vector<Idx> to_parent = s.elements();  // ascending, so identity maps to local 0
  std::vector<Idx> to_local(parent->size(), kInvalidIdx);
  for (Idx i = 0; i < to_parent.size(); ++i) to_local[to_parent[i]] = i;
  if (to_parent.empty() || to_parent[0] != 0) throw Error("subgroup without identity");
  std::vector<Idx> local_gens;
  for (Idx pg : s.generators()) {
    if (to_local[pg] == kInvalidIdx) throw Error("subgroup generator outside member set");
    local_gens.push_back(to_local[pg]);
  }
  if (name.empty()) name = parent->name() + "-sub" + std::to_string(to_parent.size());
  auto ops = std::make_shared<const ExtractedOps>(parent, to_parent, to_local, name);
  ExtractedSubgroup out;
  out.group = densify_if_small(ops, std::move(local_gens), name);
  out.to_parent = std::move(to_parent);
  out.to_local = std::move(to_local);
  return out;
}

CentralQuotient quotient_by_central(const GroupPtr& g, const Subgroup& s, std::string name) {
  if (!s.members().is_subset_of(g->center().members())) {
    throw Error("quotient kernel is not central in " + g->name());
  }
  const std::vector<Idx> zs = s.elements();
  const Idx n = g->size();
  std::vector<Idx> canon(n);
  for (Idx x = 0; x < n; ++x) {
    Idx least = x;
    for (Idx z : zs) least = std::min(least, g->mul(x, z));
    canon[x] = least;
  }
  std::vector<Idx> q_index(n, kInvalidIdx);
  std::vector<Idx> section;
  section.push_back(0);
  q_index[0] = 0;
  std::vector<Idx> gen_reps;
  for (Idx pg : g->generators()) gen_reps.push_back(canon[pg]);
  for (std::size_t i = 0; i < section.size(); ++i) {
    for (Idx pg : g->generators()) {
      Idx y = canon[g->mul(section[i], pg)];
      if (q_index[y] == kInvalidIdx) {
        q_index[y] = static_cast<Idx>(section.size());
        section.push_back(y);
      }
    }
  }
  std::vector<Idx> projection(n);
  for (Idx x = 0; x < n; ++x) projection[x] = q_index[canon[x]];
  std::vector<Idx> q_gens;
  for (Idx r : gen_reps) q_gens.push_back(q_index[r]);
  if (name.empty()) name = g->name() + "/Z" + std::to_string(zs.size());
  auto ops = std::make_shared<const QuotientOps>(g, projection, section, name);
  CentralQuotient out;
  out.group = densify_if_small(ops, std::move(q_gens), name);
  out.projection = std::move(projection);
  out.section = std::move(section);
  return out;
}

bool is_quasisimple(const GroupPtr& g) {
  if (!g->is_perfect()) return false;
  CentralQuotient q = quotient_by_central(g, g->center());
  if (q.group->size() == 1) return false;
  return normal_subgroups(*q.group).size() == 2;
}

}  // namespace multihol
