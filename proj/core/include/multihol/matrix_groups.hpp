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
// Matrix groups over the small fields, enumerated by closure of generator
// matrices. Elements are indexed in breadth-first discovery order with
// the identity matrix at index 0. Groups small enough get a dense
// multiplication table; larger ones multiply matrices on the fly and look
// the product up by its packed code.

#ifndef MULTIHOL_MATRIX_GROUPS_HPP_
#define MULTIHOL_MATRIX_GROUPS_HPP_

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "multihol/finite_group.hpp"
#include "multihol/gf.hpp"
#include "multihol/homomorphism.hpp"

namespace multihol {

template <typename M>
class MatrixOps final : public GroupOps {
 public:
  MatrixOps(std::vector<M> generator_matrices, std::string label, Idx expected_order);

  Idx size() const override { return static_cast<Idx>(codes_.size()); }
  Idx mul(Idx a, Idx b) const override {
    if (!dense_.empty()) return dense_[static_cast<std::size_t>(a) * codes_.size() + b];
    return index_at((matrix_of(a) * matrix_of(b)).code());
  }
  Idx inverse_hint(Idx a) const override { return index_at(matrix_of(a).inverse().code()); }
  std::string describe() const override { return label_; }

  M matrix_of(Idx i) const { return M::from_code(codes_[i]); }
  Idx index_of(const M& m) const { return index_at(m.code()); }
  bool contains(const M& m) const { return index_.count(m.code()) != 0; }
  const std::vector<Idx>& generator_indices() const { return gen_indices_; }

 private:
  Idx index_at(std::uint64_t code) const {
    auto it = index_.find(code);
    if (it == index_.end()) throw Error(label_ + ": matrix not in group");
    return it->second;
  }

  std::vector<std::uint64_t> codes_;
  std::unordered_map<std::uint64_t, Idx> index_;
  std::vector<Idx> gen_indices_;
  std::vector<Idx> dense_;
  std::string label_;
};

// A matrix group together with its code table, for building automorphism
// certificates from matrix recipes.
template <typename M>
class MatrixGroup {
 public:
  // expected_order 0 skips the order gate
  static MatrixGroup enumerate(std::vector<M> generator_matrices, std::string name,
                               Idx expected_order = 0);

  const GroupPtr& group() const { return group_; }
  Idx index_of(const M& m) const { return ops_->index_of(m); }
  M matrix_of(Idx i) const { return ops_->matrix_of(i); }

  // x -> c^-1 x c as a verified automorphism; c need not lie in the group
  Homomorphism conjugation_automorphism(const M& c) const;

  // automorphism induced by an entrywise-compatible matrix map, e.g. a
  // field automorphism applied entrywise or inverse-transpose
  Homomorphism matrix_map_automorphism(const std::function<M(const M&)>& f) const;

 private:
  std::shared_ptr<const MatrixOps<M>> ops_;
  GroupPtr group_;
};

extern template class MatrixOps<Mat2Gf5>;
extern template class MatrixOps<Mat2Gf7>;
extern template class MatrixOps<Mat3Gf4>;
extern template class MatrixGroup<Mat2Gf5>;
extern template class MatrixGroup<Mat2Gf7>;
extern template class MatrixGroup<Mat3Gf4>;

// Determinant-one matrix group for (dim, q) in {(2,5), (2,7), (3,4)},
// enumerated from transvection generators.
GroupPtr special_linear(unsigned dim, unsigned q);

}  // namespace multihol

#endif  // MULTIHOL_MATRIX_GROUPS_HPP_
