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

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

#include "quditcorr/error.hpp"
#include "quditcorr/tolerances.hpp"

namespace quditcorr {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Hermitian, unit-trace, positive-semidefinite square matrix.
///
/// Instances can only be obtained through validation, so every
/// DensityMatrix in the program satisfies the invariants within the
/// tolerances of quditcorr::tol.
class DensityMatrix {
 public:
  /// Validates `m` and throws InvalidDensityError on failure. The stored
  /// matrix is the Hermitian part (m + m^dagger)/2, which differs from `m`
  /// by at most the Hermiticity tolerance.
  static DensityMatrix from(const ComplexMatrix& m);

  /// 1_n / n.
  static DensityMatrix maximally_mixed(Index n);

  /// |psi><psi| / <psi|psi>.
  static DensityMatrix pure(const ComplexVector& psi);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  Index dim() const noexcept { return m_.rows(); }

  Complex operator()(Index r, Index c) const { return m_(r, c); }

 private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

struct Spectrum {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors;  // orthonormal columns
};

bool is_finite(const ComplexMatrix& a);

/// max |a_jk - conj(a_kj)|; requires a square matrix.
double hermiticity_defect(const ComplexMatrix& a);

/// ||u^dagger u - 1||_max.
double unitarity_defect(const ComplexMatrix& u);

/// Row-major flattening: (a_11, a_12, ..., a_1m, a_21, ...).
ComplexVector vectorize(const ComplexMatrix& a);

/// Inverse of vectorize. Throws DimensionError when v.size() != rows * cols.
ComplexMatrix devectorize(const ComplexVector& v, Index rows, Index cols);

/// Kronecker product; block (j, k) of the result is a_jk * b.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { First = 1, Second = 2 };

/// Partial trace of a (dim1 * dim2)-square matrix over one factor.
/// Index convention: flat index = i1 * dim2 + i2.
ComplexMatrix partial_trace(const ComplexMatrix& a, Index dim1, Index dim2,
                            Subsystem traced);
DensityMatrix partial_trace(const DensityMatrix& rho, Index dim1, Index dim2,
                            Subsystem traced);

/// Transpose of the second-factor index of a 2x2-blocked 4x4 matrix, i.e.
/// each 2x2 block is transposed in place. Throws DimensionError unless 4x4.
ComplexMatrix partial_transpose(const ComplexMatrix& rho);
ComplexMatrix partial_transpose(const DensityMatrix& rho);

/// Eigendecomposition of a Hermitian matrix. Throws InvalidDensityError when
/// the input is not Hermitian within tol::kHermiticity.
Spectrum hermitian_eig(const ComplexMatrix& a);

/// U diag(f(lambda)) U^dagger.
template <typename F>
ComplexMatrix spectral_apply(const Spectrum& s, F&& f) {
  RealVector mapped(s.eigenvalues.size());
  for (Index i = 0; i < mapped.size(); ++i) mapped(i) = f(s.eigenvalues(i));
  return s.eigenvectors * mapped.asDiagonal() * s.eigenvectors.adjoint();
}

/// Deformed logarithm ln_q(x) = (x^{q-1} - 1)/(q - 1), ln x at q = 1.
double deformed_log(double x, double q);

/// Spectral ln_q of a density matrix. Eigenvalues below tol::kEigenFloor
/// (including rounding noise down to -tol::kPsd) are raised to the floor
/// before the logarithm is taken.
ComplexMatrix matrix_ln(const DensityMatrix& a, double q = 1.0);

/// Same as above for an arbitrary PSD Hermitian matrix; throws
/// InvalidDensityError if an eigenvalue is below -tol::kPsd.
ComplexMatrix matrix_ln(const ComplexMatrix& a, double q = 1.0);

/// Spin-1/2 rotation exp(-i phi sz/2) exp(-i theta sy/2) exp(-i psi sz/2).
ComplexMatrix su2_from_euler(double phi, double theta, double psi);

/// Simultaneous row/column permutation: result(i, j) = a(perm[i], perm[j]).
ComplexMatrix permute_indices(const ComplexMatrix& a,
                              const std::vector<Index>& perm);

/// Direct sum a (+) b.
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs(const ComplexMatrix& a);

}  // namespace quditcorr
