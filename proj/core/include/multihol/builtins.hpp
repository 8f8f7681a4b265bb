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
// The builtin quasisimple factors, realized as matrix groups with
// machine-checked gates: the declared order and center structure are
// verified at construction, because the generator matrices are shipped
// data rather than derived objects.

#ifndef MULTIHOL_BUILTINS_HPP_
#define MULTIHOL_BUILTINS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "multihol/catalog.hpp"
#include "multihol/homomorphism.hpp"

namespace multihol {

enum class FactorKind { SL2_5, SL2_7, THREE_A6, SL3_4 };

struct AutCertificateRecipe {
  std::string label;
  std::function<Homomorphism()> build;  // throws if the certificate is rejected
};

struct BuiltinFactor {
  FactorKind kind;
  std::string label;
  GroupPtr group;
  QuasisimpleDescriptor descriptor;
  AbelianInvariants declared_center;
  // least-index central element of maximal order
  Idx canonical_central_generator = 0;
  std::vector<AutCertificateRecipe> outer_certificates;
  // a certificate inverting the whole center, when one is shipped;
  // otherwise the pipeline searches for one
  std::optional<AutCertificateRecipe> inverting_certificate;
};

// The three named builtins: SL2_5, SL2_7, THREE_A6 (the triple cover of
// A6 inside SL(3,4)). Throws InputError for SL3_4, which is reachable
// through special_linear_factor only.
BuiltinFactor builtin(FactorKind kind);

// Factor entry for special_linear parameters, including (3,4).
BuiltinFactor special_linear_factor(unsigned dim, unsigned q);

// Spec-file names: SL2_5, SL2_7, THREE_A6.
BuiltinFactor factor_from_name(const std::string& name);

// The outer automorphism of SL(2,q) induced by conjugation with a fixed
// non-square-determinant matrix; throws if the edge check rejects it.
Homomorphism diagonal_automorphism_certificate(const BuiltinFactor& factor);

}  // namespace multihol

#endif  // MULTIHOL_BUILTINS_HPP_
