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

#include "multihol/matrix_groups.hpp"

using namespace multihol;

namespace {

// field axioms, exhaustively; the fields are tiny by design
template <typename F>
void check_field_axioms() {
  const unsigned q = F::size;
  for (GfElem a = 0; a < q; ++a) {
    CHECK(F::add(a, 0) == a);
    CHECK(F::mul(a, 1) == a);
    CHECK(F::add(a, F::neg(a)) == 0);
    if (a != 0) CHECK(F::mul(a, F::inv(a)) == 1);
    for (GfElem b = 0; b < q; ++b) {
      CHECK(F::add(a, b) == F::add(b, a));
      CHECK(F::mul(a, b) == F::mul(b, a));
      for (GfElem c = 0; c < q; ++c) {
        CHECK(F::add(F::add(a, b), c) == F::add(a, F::add(b, c)));
        CHECK(F::mul(F::mul(a, b), c) == F::mul(a, F::mul(b, c)));
        CHECK(F::mul(a, F::add(b, c)) == F::add(F::mul(a, b), F::mul(a, c)));
      }
    }
  }
}

}  // namespace

TEST_CASE("field axioms hold exhaustively") {
  check_field_axioms<Gf4>();
  check_field_axioms<Gf5>();
  check_field_axioms<Gf7>();
}

TEST_CASE("squaring is a field automorphism of the four-element field") {
  for (GfElem a = 0; a < 4; ++a) {
    for (GfElem b = 0; b < 4; ++b) {
      CHECK(Gf4::mul(Gf4::mul(a, b), Gf4::mul(a, b)) ==
            Gf4::mul(Gf4::mul(a, a), Gf4::mul(b, b)));
      CHECK(Gf4::mul(Gf4::add(a, b), Gf4::add(a, b)) ==
            Gf4::add(Gf4::mul(a, a), Gf4::mul(b, b)));
    }
  }
}

TEST_CASE("matrix codes round-trip and inverses work") {
  GroupPtr g = special_linear(2, 5);
  const auto& ops = dynamic_cast<const MatrixOps<Mat2Gf5>&>(g->ops());
  for (Idx i = 0; i < g->size(); ++i) {
    Mat2Gf5 m = ops.matrix_of(i);
    CHECK(Mat2Gf5::from_code(m.code()) == m);
    CHECK(m * m.inverse() == Mat2Gf5::identity());
    CHECK(m.det() == 1);
    CHECK(ops.index_of(m) == i);
  }
}

TEST_CASE("special linear orders match the closed formula") {
  // q(q^2 - 1), re-derived by closure during construction
  CHECK(special_linear(2, 5)->size() == 120);
  CHECK(special_linear(2, 7)->size() == 336);
  CHECK(special_linear(3, 4)->size() == 60480);
  CHECK_THROWS_AS(special_linear(2, 4), InputError);
  CHECK_THROWS_AS(special_linear(4, 2), InputError);
}

TEST_CASE("identity matrix sits at index zero") {
  for (auto g : {special_linear(2, 5), special_linear(2, 7)}) {
    CHECK(g->mul(0, 0) == 0);
    CHECK(g->inverse(0) == 0);
  }
  GroupPtr g7 = special_linear(2, 7);
  const auto& ops = dynamic_cast<const MatrixOps<Mat2Gf7>&>(g7->ops());
  CHECK(ops.matrix_of(0) == Mat2Gf7::identity());
}

TEST_CASE("three-dimensional determinants and transposes") {
  auto m = Mat3Gf4::identity();
  m.at(0, 1) = 2;
  m.at(2, 0) = 3;
  CHECK(m.det() == 1);
  CHECK(m.transposed().transposed() == m);
  CHECK(m * m.inverse() == Mat3Gf4::identity());
  CHECK(Mat3Gf4::from_code(m.code()) == m);
}
