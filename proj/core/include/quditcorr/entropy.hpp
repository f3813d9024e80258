// Copyright 2026 The quditcorr Authors
//
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

#pragma once

#include <array>

#include "quditcorr/linalg.hpp"
#include "quditcorr/report.hpp"

namespace quditcorr {

/// Deformation parameter of the Tsallis entropy; q = 1 is von Neumann.
struct EntropyParams {
  double q = 1.0;

  void validate() const;  // q > 0, finite
  bool is_von_neumann() const;
};

/// -sum_i f(lambda_i) ln_q(lambda_i) over an eigenvalue list, where terms
/// with lambda_i <= tol::kEigenFloor contribute zero.
double entropy_of_spectrum(const RealVector& eigenvalues, double q = 1.0);

/// -Tr rho ln rho in nats.
double von_neumann_entropy(const DensityMatrix& rho);

/// -Tr rho ln_q rho.
double deformed_entropy(const DensityMatrix& rho, double q);

/// Tr rho (ln rho - ln sigma). Returns +infinity when sigma has a null
/// direction v (eigenvalue <= tol::kEigenFloor) with <v|rho|v> above
/// tol::kSupportWeight. Throws DimensionError on size mismatch.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Which pair of compressions stands in for the two "subsystems".
enum class SubadditivityVariant {
  /// Qutrit decoherence maps M1 and M2 (n = 3 only).
  RawMaps,
  /// portrait_qubit and portrait_reduce (any n >= 3).
  Portrait,
};

/// lhs = S_q(first) + S_q(second), rhs = S_q(a).
InequalityReport check_subadditivity(
    const DensityMatrix& a, double q = 1.0,
    SubadditivityVariant variant = SubadditivityVariant::Portrait);

/// Same quantities as check_subadditivity; the margin is I_q.
InequalityReport single_qudit_mutual_info(
    const DensityMatrix& a, double q = 1.0,
    SubadditivityVariant variant = SubadditivityVariant::Portrait);

/// Diagonal specialization for a probability 3-vector:
///   -(d1+d2) ln(d1+d2) - (d1+d3) ln(d1+d3) >= -d1 ln d1.
/// Throws InvalidDensityError when d is not a distribution.
InequalityReport diagonal_inequality(const std::array<double, 3>& d);

}  // namespace quditcorr
