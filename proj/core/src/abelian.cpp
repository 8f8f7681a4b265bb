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

#include "multihol/abelian.hpp"

#include <algorithm>
#include <functional>

namespace multihol {

namespace {

std::vector<std::pair<unsigned, unsigned>> factorize(unsigned n) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

AbelianInvariants AbelianInvariants::from_cyclic_orders(const std::vector<unsigned>& orders) {
  AbelianInvariants inv;
  for (unsigned o : orders) {
    if (o == 0) throw Error("cyclic order 0");
    for (auto [p, e] : factorize(o)) inv.primary_[p].push_back(e);
  }
  for (auto& [p, exps] : inv.primary_) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
  }
  return inv;
}

AbelianInvariants AbelianInvariants::of_subgroup(const FiniteGroup& g, const Subgroup& s) {
  const std::vector<Idx> elems = s.elements();
  for (Idx a : s.generators()) {
    for (Idx b : s.generators()) {
      if (g.mul(a, b) != g.mul(b, a)) throw Error("subgroup is not abelian");
    }
  }
  // per prime p: count elements killed by p^k, read the partition off the
  // successive logarithmic increments
  AbelianInvariants inv;
  for (auto [p, pe] : factorize(static_cast<unsigned>(elems.size()))) {
    (void)pe;
    std::vector<unsigned> counts;  // counts[k] = #{a : a^(p^k) = e}
    counts.push_back(1);
    while (true) {
      unsigned long long pk = 1;
      for (unsigned i = 0; i < counts.size(); ++i) pk *= p;
      unsigned c = 0;
      for (Idx a : elems) {
        if (g.power(a, pk) == 0) ++c;
      }
      counts.push_back(c);
      if (c == counts[counts.size() - 2]) break;  // stabilized
    }
    std::vector<unsigned> logs;  // log_p of counts
    for (unsigned c : counts) {
      unsigned l = 0;
      while (c > 1) {
        c /= p;
        ++l;
      }
      logs.push_back(l);
    }
    // increments logs[k]-logs[k-1] = number of parts >= k
    std::vector<unsigned> exps;
    for (std::size_t k = 1; k < logs.size(); ++k) {
      unsigned parts_ge_k = logs[k] - logs[k - 1];
      while (exps.size() < parts_ge_k) exps.push_back(0);
      for (unsigned i = 0; i < parts_ge_k; ++i) exps[i] = static_cast<unsigned>(k);
    }
    if (!exps.empty()) {
      std::sort(exps.begin(), exps.end(), std::greater<>());
      inv.primary_[p] = std::move(exps);
    }
  }
  return inv;
}

bool AbelianInvariants::contains_subgroup_isomorphic_to(const AbelianInvariants& other) const {
  for (const auto& [p, need] : other.primary_) {
    auto it = primary_.find(p);
    if (it == primary_.end()) return false;
    const auto& have = it->second;
    if (need.size() > have.size()) return false;
    for (std::size_t i = 0; i < need.size(); ++i) {
      if (need[i] > have[i]) return false;
    }
  }
  return true;
}

unsigned long long AbelianInvariants::order() const {
  unsigned long long n = 1;
  for (const auto& [p, exps] : primary_) {
    for (unsigned e : exps) {
      for (unsigned i = 0; i < e; ++i) n *= p;
    }
  }
  return n;
}

std::vector<unsigned> AbelianInvariants::primary_cyclic_orders() const {
  std::vector<unsigned> out;
  for (const auto& [p, exps] : primary_) {
    for (unsigned e : exps) {
      unsigned q = 1;
      for (unsigned i = 0; i < e; ++i) q *= p;
      out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string AbelianInvariants::to_string() const {
  std::vector<unsigned> orders = primary_cyclic_orders();
  if (orders.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) s += " x ";
    s += "Z" + std::to_string(orders[i]);
  }
  return s;
}

}  // namespace multihol
