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

#include "quditcorr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace quditcorr {

namespace {

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols()) {
    std::ostringstream os;
    os << what << ": expected a square matrix, got " << a.rows() << "x"
       << a.cols();
    throw DimensionError(os.str());
  }
}

}  // namespace

bool is_finite(const ComplexMatrix& a) {
  for (Index i = 0; i < a.size(); ++i) {
    const Complex z = a.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& a) {
  require_square(a, "hermiticity_defect");
  return max_abs(a - a.adjoint());
}

double unitarity_defect(const ComplexMatrix& u) {
  require_square(u, "unitarity_defect");
  return max_abs(u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols()));
}

DensityMatrix DensityMatrix::from(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw InvalidDensityError("density matrix must be square and non-empty");
  }
  if (!is_finite(m)) throw InvalidDensityError("density matrix has non-finite entries");
  const double herm = hermiticity_defect(m);
  if (herm > tol::kHermiticity) {
    std::ostringstream os;
    os << "density matrix is not Hermitian (defect " << herm << ")";
    throw InvalidDensityError(os.str());
  }
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  const double trace = h.trace().real();
  if (std::abs(trace - 1.0) > tol::kTrace) {
    std::ostringstream os;
    os.precision(17);
    os << "density matrix trace is " << trace << ", expected 1";
    throw InvalidDensityError(os.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol::kPsd) {
    std::ostringstream os;
    os << "density matrix is not positive semidefinite (min eigenvalue "
       << min_eig << ")";
    throw InvalidDensityError(os.str());
  }
  return DensityMatrix(std::move(h));
}

DensityMatrix DensityMatrix::maximally_mixed(Index n) {
  if (n < 1) throw DimensionError("maximally_mixed: n must be positive");
  return DensityMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(n));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double norm2 = psi.squaredNorm();
  if (psi.size() == 0 || !(norm2 > 0.0)) {
    throw InvalidDensityError("pure: state vector must be non-zero");
  }
  ComplexMatrix m = psi * psi.adjoint() / norm2;
  m = 0.5 * (m + m.adjoint());
  return DensityMatrix(std::move(m));
}

ComplexVector vectorize(const ComplexMatrix& a) {
  ComplexVector v(a.size());
  for (Index j = 0; j < a.rows(); ++j)
    for (Index k = 0; k < a.cols(); ++k) v(j * a.cols() + k) = a(j, k);
  return v;
}

ComplexMatrix devectorize(const ComplexVector& v, Index rows, Index cols) {
  if (rows < 1 || cols < 1 || v.size() != rows * cols) {
    std::ostringstream os;
    os << "devectorize: vector of length " << v.size() << " does not fill a "
       << rows << "x" << cols << " matrix";
    throw DimensionError(os.str());
  }
  ComplexMatrix a(rows, cols);
  for (Index j = 0; j < rows; ++j)
    for (Index k = 0; k < cols; ++k) a(j, k) = v(j * cols + k);
  return a;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index j = 0; j < a.rows(); ++j)
    for (Index k = 0; k < a.cols(); ++k)
      out.block(j * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(j, k) * b;
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& a, Index dim1, Index dim2,
                            Subsystem traced) {
  require_square(a, "partial_trace");
  if (dim1 < 1 || dim2 < 1 || dim1 * dim2 != a.rows()) {
    std::ostringstream os;
    os << "partial_trace: " << a.rows() << " does not factor as " << dim1
       << "x" << dim2;
    throw DimensionError(os.str());
  }
  if (traced == Subsystem::First) {
    ComplexMatrix out = ComplexMatrix::Zero(dim2, dim2);
    for (Index i = 0; i < dim1; ++i) out += a.block(i * dim2, i * dim2, dim2, dim2);
    return out;
  }
  ComplexMatrix out(dim1, dim1);
  for (Index i = 0; i < dim1; ++i)
    for (Index j = 0; j < dim1; ++j)
      out(i, j) = a.block(i * dim2, j * dim2, dim2, dim2).trace();
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Index dim1, Index dim2,
                            Subsystem traced) {
  return DensityMatrix::from(partial_trace(rho.matrix(), dim1, dim2, traced));
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw DimensionError("partial_transpose: expected a 4x4 matrix");
  }
  ComplexMatrix out(4, 4);
  for (Index bj = 0; bj < 2; ++bj)
    for (Index bk = 0; bk < 2; ++bk)
      out.block(2 * bj, 2 * bk, 2, 2) = rho.block(2 * bj, 2 * bk, 2, 2).transpose();
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho) {
  return partial_transpose(rho.matrix());
}

Spectrum hermitian_eig(const ComplexMatrix& a) {
  require_square(a, "hermitian_eig");
  if (!is_finite(a)) throw InvalidDensityError("hermitian_eig: non-finite input");
  const double herm = hermiticity_defect(a);
  if (herm > tol::kHermiticity) {
    std::ostringstream os;
    os << "hermitian_eig: matrix is not Hermitian (defect " << herm << ")";
    throw InvalidDensityError(os.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (a + a.adjoint()));
  if (es.info() != Eigen::Success) {
    throw InvalidDensityError("hermitian_eig: eigensolver did not converge");
  }
  return Spectrum{es.eigenvalues(), es.eigenvectors()};
}

double deformed_log(double x, double q) {
  if (std::abs(q - 1.0) < tol::kDeformationOne) return std::log(x);
  return (std::pow(x, q - 1.0) - 1.0) / (q - 1.0);
}

ComplexMatrix matrix_ln(const ComplexMatrix& a, double q) {
  const Spectrum s = hermitian_eig(a);
  if (s.eigenvalues.size() > 0 && s.eigenvalues(0) < -tol::kPsd) {
    std::ostringstream os;
    os << "matrix_ln: negative eigenvalue " << s.eigenvalues(0);
    throw InvalidDensityError(os.str());
  }
  return spectral_apply(s, [q](double lambda) {
    return deformed_log(std::max(lambda, tol::kEigenFloor), q);
  });
}

ComplexMatrix matrix_ln(const DensityMatrix& a, double q) {
  return matrix_ln(a.matrix(), q);
}

ComplexMatrix su2_from_euler(double phi, double theta, double psi) {
  const Complex i{0.0, 1.0};
  auto rz = [&](double angle) {
    ComplexMatrix r = ComplexMatrix::Zero(2, 2);
    r(0, 0) = std::exp(-i * (angle / 2.0));
    r(1, 1) = std::exp(i * (angle / 2.0));
    return r;
  };
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  ComplexMatrix ry(2, 2);
  ry << c, -s, s, c;
  return rz(phi) * ry * rz(psi);
}

ComplexMatrix permute_indices(const ComplexMatrix& a,
                              const std::vector<Index>& perm) {
  require_square(a, "permute_indices");
  const Index n = a.rows();
  if (static_cast<Index>(perm.size()) != n) {
    throw DimensionError("permute_indices: permutation length mismatch");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Index p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
      throw DimensionError("permute_indices: not a permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  ComplexMatrix out(n, n);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c)
      out(r, c) = a(perm[static_cast<std::size_t>(r)], perm[static_cast<std::size_t>(c)]);
  return out;
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = ComplexMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

}  // namespace quditcorr
