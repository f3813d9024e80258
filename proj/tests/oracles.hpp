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

// Independent reference computations used only by the tests. Nothing in
// here calls the library routine it is compared against.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;

/// Kronecker product from the index formula (A (x) B)_{(i,k),(j,l)} = A_ij B_kl.
inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// Tr_1 by explicit sum over the first index: out(m, m') = sum_i a((i,m),(i,m')).
inline Mat trace_first(const Mat& a, Eigen::Index d1, Eigen::Index d2) {
  Mat out = Mat::Zero(d2, d2);
  for (Eigen::Index m = 0; m < d2; ++m)
    for (Eigen::Index mp = 0; mp < d2; ++mp)
      for (Eigen::Index i = 0; i < d1; ++i) out(m, mp) += a(i * d2 + m, i * d2 + mp);
  return out;
}

inline Mat trace_second(const Mat& a, Eigen::Index d1, Eigen::Index d2) {
  Mat out = Mat::Zero(d1, d1);
  for (Eigen::Index i = 0; i < d1; ++i)
    for (Eigen::Index ip = 0; ip < d1; ++ip)
      for (Eigen::Index m = 0; m < d2; ++m) out(i, ip) += a(i * d2 + m, ip * d2 + m);
  return out;
}

/// The partially transposed 4x4 matrix written out entry by entry
/// (1-based r_jk -> r(j-1, k-1)).
inline Mat partial_transpose_table(const Mat& r) {
  Mat t(4, 4);
  t << r(0, 0), r(1, 0), r(0, 2), r(1, 2),
       r(0, 1), r(1, 1), r(0, 3), r(1, 3),
       r(2, 0), r(3, 0), r(2, 2), r(3, 2),
       r(2, 1), r(3, 1), r(2, 3), r(3, 3);
  return t;
}

/// Eigenvalues through the general (non-Hermitian) complex solver, sorted.
inline std::vector<double> eigenvalues_general(const Mat& a) {
  Eigen::ComplexEigenSolver<Mat> es(a);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i).real());
  std::sort(out.begin(), out.end());
  return out;
}

inline double xlnx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

/// -sum p ln p over general-solver eigenvalues.
inline double entropy_general(const Mat& a) {
  double s = 0.0;
  for (double l : eigenvalues_general(a))
    if (l > 1e-14) s -= l * std::log(l);
  return s;
}

/// Closed form of the classical CHSH polynomial: correlators (2p-1)(2r-1).
inline double chsh_polynomial(double x, double y, double z, double t) {
  auto e = [](double p, double r) { return (2 * p - 1) * (2 * r - 1); };
  return e(x, z) + e(x, t) + e(y, z) - e(y, t);
}

/// 2x2 spin rotation exp(-i a/2 s) via the closed form cos(a/2) 1 - i sin(a/2) s.
inline Mat exp_pauli(const Mat& s, double angle) {
  return std::cos(angle / 2) * Mat::Identity(2, 2) - cd(0, 1) * std::sin(angle / 2) * s;
}

inline Mat sigma_y() {
  Mat s(2, 2);
  s << 0, cd(0, -1), cd(0, 1), 0;
  return s;
}

inline Mat sigma_z() {
  Mat s(2, 2);
  s << 1, 0, 0, -1;
  return s;
}

/// Correlator <A (x) B> for spin directions of u_a^dagger sz u_a etc.
inline double correlator(const Mat& rho, const Mat& ua, const Mat& ub) {
  const Mat a = ua.adjoint() * sigma_z() * ua;
  const Mat b = ub.adjoint() * sigma_z() * ub;
  return (rho * kron(a, b)).trace().real();
}

inline Mat bell() {
  Mat r = Mat::Zero(4, 4);
  r(0, 0) = r(0, 3) = r(3, 0) = r(3, 3) = 0.5;
  return r;
}

}  // namespace oracle
