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

#include "multihol/matrix_groups.hpp"

#include <deque>

namespace multihol {

namespace {
constexpr Idx kMatrixDenseLimit = 2048;
}

template <typename M>
MatrixOps<M>::MatrixOps(std::vector<M> generator_matrices, std::string label, Idx expected_order)
    : label_(std::move(label)) {
  const M id = M::identity();
  codes_.push_back(id.code());
  index_.emplace(id.code(), 0);
  std::deque<M> queue{id};
  while (!queue.empty()) {
    M x = queue.front();
    queue.pop_front();
    for (const M& g : generator_matrices) {
      M y = x * g;
      auto [it, fresh] = index_.emplace(y.code(), static_cast<Idx>(codes_.size()));
      if (fresh) {
        codes_.push_back(y.code());
        queue.push_back(y);
      }
    }
  }
  if (expected_order != 0 && codes_.size() != expected_order) {
    throw CheckError(label_ + ": closure has order " + std::to_string(codes_.size()) +
                     ", expected " + std::to_string(expected_order));
  }
  for (const M& g : generator_matrices) gen_indices_.push_back(index_.at(g.code()));
  if (codes_.size() <= kMatrixDenseLimit) {
    const Idx n = static_cast<Idx>(codes_.size());
    dense_.resize(static_cast<std::size_t>(n) * n);
    for (Idx a = 0; a < n; ++a) {
      M ma = matrix_of(a);
      for (Idx b = 0; b < n; ++b) {
        dense_[static_cast<std::size_t>(a) * n + b] = index_.at((ma * matrix_of(b)).code());
      }
    }
  }
}

template <typename M>
MatrixGroup<M> MatrixGroup<M>::enumerate(std::vector<M> generator_matrices, std::string name,
                                         Idx expected_order) {
  MatrixGroup out;
  out.ops_ = std::make_shared<const MatrixOps<M>>(std::move(generator_matrices), name,
                                                  expected_order);
  out.group_ = make_group(out.ops_, out.ops_->generator_indices(), std::move(name));
  return out;
}

template <typename M>
Homomorphism MatrixGroup<M>::conjugation_automorphism(const M& c) const {
  const M ci = c.inverse();
  std::vector<Idx> images;
  for (Idx s : group_->generators()) images.push_back(ops_->index_of(ci * matrix_of(s) * c));
  return extend_hom(group_, group_, images);
}

template <typename M>
Homomorphism MatrixGroup<M>::matrix_map_automorphism(const std::function<M(const M&)>& f) const {
  std::vector<Idx> images;
  for (Idx s : group_->generators()) images.push_back(ops_->index_of(f(matrix_of(s))));
  return extend_hom(group_, group_, images);
}

template class MatrixOps<Mat2Gf5>;
template class MatrixOps<Mat2Gf7>;
template class MatrixOps<Mat3Gf4>;
template class MatrixGroup<Mat2Gf5>;
template class MatrixGroup<Mat2Gf7>;
template class MatrixGroup<Mat3Gf4>;

namespace {

template <typename F>
Mat<F, 2> transvection2(unsigned r, unsigned c) {
  auto m = Mat<F, 2>::identity();
  m.at(r, c) = 1;
  return m;
}

template <typename F>
std::vector<Mat<F, 3>> sl3_generators() {
  std::vector<Mat<F, 3>> gens;
  for (auto [r, c] : {std::pair{0u, 1u}, {1u, 0u}, {1u, 2u}, {2u, 1u}}) {
    for (GfElem v : {GfElem{1}, GfElem{2}}) {
      auto m = Mat<F, 3>::identity();
      m.at(r, c) = v;
      gens.push_back(m);
    }
  }
  return gens;
}

}  // namespace

GroupPtr special_linear(unsigned dim, unsigned q) {
  if (dim == 2 && q == 5) {
    return MatrixGroup<Mat2Gf5>::enumerate({transvection2<Gf5>(0, 1), transvection2<Gf5>(1, 0)},
                                           "SL(2,5)", 120)
        .group();
  }
  if (dim == 2 && q == 7) {
    return MatrixGroup<Mat2Gf7>::enumerate({transvection2<Gf7>(0, 1), transvection2<Gf7>(1, 0)},
                                           "SL(2,7)", 336)
        .group();
  }
  if (dim == 3 && q == 4) {
    return MatrixGroup<Mat3Gf4>::enumerate(sl3_generators<Gf4>(), "SL(3,4)", 60480).group();
  }
  throw InputError("unsupported special linear parameters (" + std::to_string(dim) + "," +
                   std::to_string(q) + ")");
}

}  // namespace multihol
