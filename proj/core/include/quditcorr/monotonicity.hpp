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
#include <string>
#include <vector>

#include "quditcorr/linalg.hpp"
#include "quditcorr/report.hpp"

namespace quditcorr {

/// Permutation of the four basis labels 3/2, 1/2, -1/2, -3/2 (0-based).
using Perm4 = std::array<Index, 4>;

inline constexpr Perm4 kIdentityPerm4{0, 1, 2, 3};

/// All 24 permutations in lexicographic order.
std::vector<Perm4> all_perm4();

enum class ReductionKind {
  /// Trace over the first factor of a dim1 x dim2 matrix.
  PartialTrace,
  /// Spin-3/2 portrait after a simultaneous index permutation.
  Qudit32Portrait,
  /// Two-qubit reduction that is not a partial trace.
  Alternative,
};

/// A trace-preserving compression R together with the embedding used to
/// compare ln R(rho) - ln R(sigma) against the uncompressed difference.
class Reduction {
 public:
  static Reduction partial_trace(Index dim1 = 2, Index dim2 = 2);
  static Reduction qudit32(const Perm4& perm = kIdentityPerm4);
  static Reduction alternative();

  ReductionKind kind() const noexcept { return kind_; }
  const Perm4& perm() const noexcept { return perm_; }
  Index input_dim() const noexcept { return dim1_ * dim2_; }
  std::string name() const;

  DensityMatrix apply(const DensityMatrix& rho) const;

  /// Embeds a reduced-space operator back into the input space so that
  /// Tr[rho lift(X)] = Tr[apply(rho) X] for every rho.
  ComplexMatrix lift(const ComplexMatrix& reduced) const;

 private:
  Reduction(ReductionKind k, Index d1, Index d2, Perm4 p)
      : kind_(k), dim1_(d1), dim2_(d2), perm_(p) {}

  ReductionKind kind_;
  Index dim1_;
  Index dim2_;
  Perm4 perm_;
};

/// [[r11 + r22, r14 + r23], [r41 + r32, r33 + r44]] for a 4x4 rho.
/// Equals Tr_2 after exchanging basis vectors 3 and 4, hence is always a
/// density matrix; the result is still validated.
DensityMatrix alt_reduction(const DensityMatrix& rho);

/// Spin-3/2 portrait [[r11 + r33, r12 + r34], [r21 + r43, r22 + r44]] of the
/// permuted matrix r(i, j) = rho(perm[i], perm[j]).
DensityMatrix permuted_portrait(const DensityMatrix& rho,
                                const Perm4& perm = kIdentityPerm4);

/// lhs = D(rho || sigma), rhs = D(R rho || R sigma), tolerance 1e-9.
/// An infinite lhs is reported with details["support_violation"] = 1.
InequalityReport check_monotonicity(const DensityMatrix& rho,
                                    const DensityMatrix& sigma,
                                    const Reduction& reduction);

/// ||(ln rho - ln sigma) - lift(ln R rho - ln R sigma)||_max.
/// Throws SupportError if either input or reduced pair is rank deficient.
double equality_residual(const DensityMatrix& rho, const DensityMatrix& sigma,
                         const Reduction& reduction);

}  // namespace quditcorr
