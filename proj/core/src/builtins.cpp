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

#include "multihol/builtins.hpp"

#include "multihol/matrix_groups.hpp"

namespace multihol {

namespace {

template <typename F, unsigned Dim>
Mat<F, Dim> mat(std::initializer_list<GfElem> entries) {
  Mat<F, Dim> m;
  std::size_t i = 0;
  for (GfElem e : entries) m.e[i++] = e;
  return m;
}

Idx canonical_central_generator_of(const FiniteGroup& g) {
  const Subgroup& z = g.center();
  Idx best = 0, best_order = 1;
  for (Idx c : z.elements()) {
    Idx o = g.element_order(c);
    if (o > best_order) {
      best = c;
      best_order = o;
    }
  }
  return best;
}

void gate_center(const BuiltinFactor& f) {
  AbelianInvariants got = AbelianInvariants::of_subgroup(*f.group, f.group->center());
  if (!(got == f.declared_center)) {
    throw CheckError(f.label + ": center is " + got.to_string() + ", declared " +
                     f.declared_center.to_string());
  }
  if (!is_quasisimple(f.group)) throw CheckError(f.label + ": not quasisimple");
}

template <typename M>
BuiltinFactor make_sl2_factor(FactorKind kind, const char* label, SimpleName quotient,
                              Idx expected_order, const M& diag) {
  auto id = M::identity();
  auto e = id, f = id;
  e.at(0, 1) = 1;
  f.at(1, 0) = 1;
  MatrixGroup<M> mg = MatrixGroup<M>::enumerate({e, f}, label, expected_order);

  BuiltinFactor out;
  out.kind = kind;
  out.label = label;
  out.group = mg.group();
  out.declared_center = AbelianInvariants::from_cyclic_orders({2});
  out.descriptor = QuasisimpleDescriptor{quotient, out.declared_center, std::nullopt};
  out.canonical_central_generator = canonical_central_generator_of(*out.group);
  out.outer_certificates.push_back(
      {"diagonal", [mg, diag] { return mg.conjugation_automorphism(diag); }});
  gate_center(out);
  return out;
}

BuiltinFactor make_three_a6() {
  // generators of the 1080-element subgroup of SL(3,4) covering A6,
  // found as the stabilizer of a hyperoval in PG(2,4); correctness is
  // re-established here by the order and center gates
  const auto a = mat<Gf4, 3>({0, 0, 1, 0, 1, 0, 1, 0, 0});
  const auto b = mat<Gf4, 3>({0, 0, 1, 1, 0, 0, 2, 1, 3});
  MatrixGroup<Mat3Gf4> mg = MatrixGroup<Mat3Gf4>::enumerate({a, b}, "3.A6", 1080);

  BuiltinFactor out;
  out.kind = FactorKind::THREE_A6;
  out.label = "3.A6";
  out.group = mg.group();
  out.declared_center = AbelianInvariants::from_cyclic_orders({3});
  out.descriptor = QuasisimpleDescriptor{SimpleName::A6, out.declared_center, std::nullopt};
  out.canonical_central_generator = canonical_central_generator_of(*out.group);
  // the entrywise field automorphism fixes the defining hyperoval, so it
  // restricts to this subgroup
  out.outer_certificates.push_back({"field", [mg] {
                                      return mg.matrix_map_automorphism([](const Mat3Gf4& m) {
                                        Mat3Gf4 r = m;
                                        for (auto& v : r.e) v = Gf4::mul(v, v);
                                        return r;
                                      });
                                    }});
  gate_center(out);
  return out;
}

BuiltinFactor make_sl3_4() {
  std::vector<Mat3Gf4> gens;
  for (auto [r, c] : {std::pair{0u, 1u}, {1u, 0u}, {1u, 2u}, {2u, 1u}}) {
    for (GfElem v : {GfElem{1}, GfElem{2}}) {
      auto m = Mat3Gf4::identity();
      m.at(r, c) = v;
      gens.push_back(m);
    }
  }
  MatrixGroup<Mat3Gf4> mg = MatrixGroup<Mat3Gf4>::enumerate(gens, "SL(3,4)", 60480);

  BuiltinFactor out;
  out.kind = FactorKind::SL3_4;
  out.label = "SL(3,4)";
  out.group = mg.group();
  out.declared_center = AbelianInvariants::from_cyclic_orders({3});
  out.descriptor = QuasisimpleDescriptor{SimpleName::PSL3_4, out.declared_center, std::nullopt};
  out.canonical_central_generator = canonical_central_generator_of(*out.group);
  out.outer_certificates.push_back({"diagonal", [mg] {
                                      auto d = Mat3Gf4::identity();
                                      d.at(0, 0) = 2;
                                      return mg.conjugation_automorphism(d);
                                    }});
  out.outer_certificates.push_back({"field", [mg] {
                                      return mg.matrix_map_automorphism([](const Mat3Gf4& m) {
                                        Mat3Gf4 r = m;
                                        for (auto& v : r.e) v = Gf4::mul(v, v);
                                        return r;
                                      });
                                    }});
  out.outer_certificates.push_back({"graph", [mg] {
                                      return mg.matrix_map_automorphism(
                                          [](const Mat3Gf4& m) { return m.inverse().transposed(); });
                                    }});
  // inverse-transpose sends the scalar cI to (1/c)I
  out.inverting_certificate = AutCertificateRecipe{
      "graph", [mg] {
        return mg.matrix_map_automorphism(
            [](const Mat3Gf4& m) { return m.inverse().transposed(); });
      }};
  gate_center(out);
  return out;
}

}  // namespace

BuiltinFactor builtin(FactorKind kind) {
  switch (kind) {
    case FactorKind::SL2_5: {
      auto d = Mat2Gf5::identity();
      d.at(0, 0) = 2;  // non-square mod 5
      return make_sl2_factor(FactorKind::SL2_5, "SL(2,5)", SimpleName::A5, 120, d);
    }
    case FactorKind::SL2_7: {
      auto d = Mat2Gf7::identity();
      d.at(0, 0) = 3;  // non-square mod 7
      return make_sl2_factor(FactorKind::SL2_7, "SL(2,7)", SimpleName::PSL2_7, 336, d);
    }
    case FactorKind::THREE_A6:
      return make_three_a6();
    case FactorKind::SL3_4:
      throw InputError("SL(3,4) is not a named builtin; use special_linear_factor(3,4)");
  }
  throw InputError("unknown builtin factor");
}

BuiltinFactor special_linear_factor(unsigned dim, unsigned q) {
  if (dim == 2 && q == 5) return builtin(FactorKind::SL2_5);
  if (dim == 2 && q == 7) return builtin(FactorKind::SL2_7);
  if (dim == 3 && q == 4) return make_sl3_4();
  throw InputError("unsupported special linear parameters (" + std::to_string(dim) + "," +
                   std::to_string(q) + ")");
}

BuiltinFactor factor_from_name(const std::string& name) {
  if (name == "SL2_5") return builtin(FactorKind::SL2_5);
  if (name == "SL2_7") return builtin(FactorKind::SL2_7);
  if (name == "THREE_A6") return builtin(FactorKind::THREE_A6);
  throw InputError("unknown builtin factor name: " + name);
}

Homomorphism diagonal_automorphism_certificate(const BuiltinFactor& factor) {
  if (factor.kind != FactorKind::SL2_5 && factor.kind != FactorKind::SL2_7) {
    throw InputError("diagonal certificate shipped for SL(2,q) factors only");
  }
  for (const auto& cert : factor.outer_certificates) {
    if (cert.label == "diagonal") return cert.build();
  }
  throw Error(factor.label + ": missing diagonal certificate");
}

}  // namespace multihol
