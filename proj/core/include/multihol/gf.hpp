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
// Small finite fields and fixed-size matrices over them. Only the fields
// actually used by the builtin matrix groups are provided: the prime fields
// F5 and F7 as byte residues and F4 = F2[x]/(x^2+x+1) as 2-bit packed
// polynomial residues (0, 1, w, w+1 encoded as 0, 1, 2, 3).

#ifndef MULTIHOL_GF_HPP_
#define MULTIHOL_GF_HPP_

#include <array>
#include <cstdint>

#include "multihol/common.hpp"

namespace multihol {

using GfElem = std::uint8_t;

struct Gf5 {
  static constexpr unsigned size = 5;
  static constexpr GfElem add(GfElem a, GfElem b) { return static_cast<GfElem>((a + b) % 5); }
  static constexpr GfElem neg(GfElem a) { return static_cast<GfElem>((5 - a) % 5); }
  static constexpr GfElem mul(GfElem a, GfElem b) { return static_cast<GfElem>((a * b) % 5); }
  static constexpr GfElem inv(GfElem a) {
    constexpr std::array<GfElem, 5> t{0, 1, 3, 2, 4};
    return t[a];
  }
};

struct Gf7 {
  static constexpr unsigned size = 7;
  static constexpr GfElem add(GfElem a, GfElem b) { return static_cast<GfElem>((a + b) % 7); }
  static constexpr GfElem neg(GfElem a) { return static_cast<GfElem>((7 - a) % 7); }
  static constexpr GfElem mul(GfElem a, GfElem b) { return static_cast<GfElem>((a * b) % 7); }
  static constexpr GfElem inv(GfElem a) {
    constexpr std::array<GfElem, 7> t{0, 1, 4, 5, 2, 3, 6};
    return t[a];
  }
};

struct Gf4 {
  static constexpr unsigned size = 4;
  static constexpr GfElem add(GfElem a, GfElem b) { return static_cast<GfElem>(a ^ b); }
  static constexpr GfElem neg(GfElem a) { return a; }  // char 2
  static constexpr GfElem mul(GfElem a, GfElem b) {
    // (a0 + a1 w)(b0 + b1 w) with w^2 = w + 1
    GfElem a0 = a & 1, a1 = (a >> 1) & 1, b0 = b & 1, b1 = (b >> 1) & 1;
    GfElem c0 = (a0 & b0) ^ (a1 & b1);
    GfElem c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
    return static_cast<GfElem>(c0 | (c1 << 1));
  }
  static constexpr GfElem inv(GfElem a) {
    constexpr std::array<GfElem, 4> t{0, 1, 3, 2};
    return t[a];
  }
};

// Row-major dim x dim matrix, packed into a 64-bit code for hashing and
// element identification. Codes use base F::size digit packing.
template <typename F, unsigned Dim>
struct Mat {
  std::array<GfElem, Dim * Dim> e{};

  GfElem at(unsigned r, unsigned c) const { return e[r * Dim + c]; }
  GfElem& at(unsigned r, unsigned c) { return e[r * Dim + c]; }

  static Mat identity() {
    Mat m;
    for (unsigned i = 0; i < Dim; ++i) m.at(i, i) = 1;
    return m;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    Mat r;
    for (unsigned i = 0; i < Dim; ++i) {
      for (unsigned j = 0; j < Dim; ++j) {
        GfElem s = 0;
        for (unsigned k = 0; k < Dim; ++k) s = F::add(s, F::mul(a.at(i, k), b.at(k, j)));
        r.at(i, j) = s;
      }
    }
    return r;
  }

  bool operator==(const Mat&) const = default;

  std::uint64_t code() const {
    std::uint64_t c = 0;
    for (unsigned i = Dim * Dim; i-- > 0;) c = c * F::size + e[i];
    return c;
  }

  static Mat from_code(std::uint64_t c) {
    Mat m;
    for (unsigned i = 0; i < Dim * Dim; ++i) {
      m.e[i] = static_cast<GfElem>(c % F::size);
      c /= F::size;
    }
    return m;
  }

  GfElem det() const {
    if constexpr (Dim == 2) {
      return F::add(F::mul(e[0], e[3]), F::neg(F::mul(e[1], e[2])));
    } else {
      static_assert(Dim == 3);
      GfElem d = 0;
      d = F::add(d, F::mul(e[0], F::add(F::mul(e[4], e[8]), F::neg(F::mul(e[5], e[7])))));
      d = F::add(d, F::neg(F::mul(e[1], F::add(F::mul(e[3], e[8]), F::neg(F::mul(e[5], e[6]))))));
      d = F::add(d, F::mul(e[2], F::add(F::mul(e[3], e[7]), F::neg(F::mul(e[4], e[6])))));
      return d;
    }
  }

  // adjugate-based inverse; matrices here always have nonzero determinant
  Mat inverse() const {
    GfElem di = F::inv(det());
    Mat r;
    if constexpr (Dim == 2) {
      r.e = {F::mul(di, e[3]), F::mul(di, F::neg(e[1])), F::mul(di, F::neg(e[2])),
             F::mul(di, e[0])};
    } else {
      static_assert(Dim == 3);
      auto cof = [&](unsigned i, unsigned j) {
        unsigned r0 = (i + 1) % 3, r1 = (i + 2) % 3;
        unsigned c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        return F::add(F::mul(at(r0, c0), at(r1, c1)), F::neg(F::mul(at(r0, c1), at(r1, c0))));
      };
      for (unsigned i = 0; i < 3; ++i) {
        for (unsigned j = 0; j < 3; ++j) r.at(i, j) = F::mul(di, cof(j, i));
      }
    }
    return r;
  }

  Mat transposed() const {
    Mat r;
    for (unsigned i = 0; i < Dim; ++i) {
      for (unsigned j = 0; j < Dim; ++j) r.at(i, j) = at(j, i);
    }
    return r;
  }
};

using Mat2Gf5 = Mat<Gf5, 2>;
using Mat2Gf7 = Mat<Gf7, 2>;
using Mat3Gf4 = Mat<Gf4, 3>;

}  // namespace multihol

#endif  // MULTIHOL_GF_HPP_
