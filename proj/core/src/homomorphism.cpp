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

#include "multihol/homomorphism.hpp"

#include <string>

namespace multihol {

namespace {

bool table_is_bijective(const std::vector<Idx>& table, Idx target_size) {
  if (table.size() != target_size) return false;
  std::vector<bool> hit(target_size, false);
  for (Idx y : table) {
    if (y >= target_size || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

std::optional<Homomorphism> extend_impl(const GroupPtr& source, const GroupPtr& target,
                                        std::span<const Idx> gen_images, Idx* bad_elem,
                                        Idx* bad_slot) {
  const auto& gens = source->generators();
  if (gen_images.size() != gens.size()) throw Error("one image required per generator");
  for (Idx y : gen_images) {
    if (y >= target->size()) throw Error("generator image out of range");
  }
  std::vector<Idx> image(source->size(), kInvalidIdx);
  image[0] = 0;
  for (Idx x : source->bfs_order()) {
    if (x == 0) continue;
    const CayleyWord& w = source->cayley_words()[x];
    image[x] = target->mul(image[w.pred], gen_images[w.gen_slot]);
  }
  for (Idx x = 0; x < source->size(); ++x) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      if (image[source->mul(x, gens[gi])] != target->mul(image[x], gen_images[gi])) {
        if (bad_elem) *bad_elem = x;
        if (bad_slot) *bad_slot = static_cast<Idx>(gi);
        return std::nullopt;
      }
    }
  }
  Homomorphism h;
  h.source = source;
  h.target = target;
  h.image_table = std::move(image);
  h.generator_images.assign(gen_images.begin(), gen_images.end());
  h.bijective = source->size() == target->size() && table_is_bijective(h.image_table, target->size());
  return h;
}

}  // namespace

bool Homomorphism::is_identity() const {
  for (Idx x = 0; x < image_table.size(); ++x) {
    if (image_table[x] != x) return false;
  }
  return true;
}

Homomorphism extend_hom(const GroupPtr& source, const GroupPtr& target,
                        std::span<const Idx> generator_images) {
  Idx bad_elem = 0, bad_slot = 0;
  auto h = extend_impl(source, target, generator_images, &bad_elem, &bad_slot);
  if (!h) {
    throw NotAHomomorphismError(
        bad_elem, bad_slot,
        "edge check failed at element " + std::to_string(bad_elem) + ", generator slot " +
            std::to_string(bad_slot));
  }
  return *std::move(h);
}

std::optional<Homomorphism> try_extend_hom(const GroupPtr& source, const GroupPtr& target,
                                           std::span<const Idx> generator_images) {
  return extend_impl(source, target, generator_images, nullptr, nullptr);
}

Homomorphism hom_from_table(const GroupPtr& source, const GroupPtr& target,
                            std::vector<Idx> table) {
  if (table.size() != source->size()) throw Error("image table has the wrong size");
  if (table[0] != 0) throw Error("image table does not fix the identity");
  const auto& gens = source->generators();
  for (Idx x = 0; x < source->size(); ++x) {
    if (table[x] >= target->size()) throw Error("image table entry out of range");
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      if (table[source->mul(x, gens[gi])] != target->mul(table[x], table[gens[gi]])) {
        throw NotAHomomorphismError(x, static_cast<Idx>(gi), "table edge check failed");
      }
    }
  }
  Homomorphism h;
  h.source = source;
  h.target = target;
  for (Idx s : gens) h.generator_images.push_back(table[s]);
  h.image_table = std::move(table);
  h.bijective =
      source->size() == target->size() && table_is_bijective(h.image_table, target->size());
  return h;
}

Homomorphism identity_automorphism(const GroupPtr& g) {
  Homomorphism h;
  h.source = g;
  h.target = g;
  h.image_table.resize(g->size());
  for (Idx x = 0; x < g->size(); ++x) h.image_table[x] = x;
  h.generator_images = g->generators();
  h.bijective = true;
  return h;
}

Homomorphism compose(const Homomorphism& first, const Homomorphism& then) {
  if (first.target != then.source) throw Error("composition of incompatible homomorphisms");
  Homomorphism h;
  h.source = first.source;
  h.target = then.target;
  h.image_table.resize(first.image_table.size());
  for (Idx x = 0; x < h.image_table.size(); ++x) h.image_table[x] = then(first(x));
  for (Idx s : first.source->generators()) h.generator_images.push_back(h.image_table[s]);
  h.bijective = first.bijective && then.bijective;
  return h;
}

Homomorphism inverse_of(const Homomorphism& h) {
  if (!h.bijective) throw Error("inverse of a non-bijective homomorphism");
  Homomorphism r;
  r.source = h.target;
  r.target = h.source;
  r.image_table.assign(h.image_table.size(), kInvalidIdx);
  for (Idx x = 0; x < h.image_table.size(); ++x) r.image_table[h.image_table[x]] = x;
  for (Idx s : r.source->generators()) r.generator_images.push_back(r.image_table[s]);
  r.bijective = true;
  return r;
}

Homomorphism inner_automorphism(const GroupPtr& g, Idx by) {
  std::vector<Idx> images;
  images.reserve(g->generators().size());
  for (Idx s : g->generators()) images.push_back(g->conjugate(s, by));
  return extend_hom(g, g, images);
}

bool is_automorphism(const Homomorphism& h) {
  return h.source == h.target && h.bijective && h.image_table[0] == 0;
}

}  // namespace multihol
