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

#include "quditcorr/maps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace quditcorr {

std::string_view to_string(MapKind k) {
  switch (k) {
    case MapKind::M1: return "M1";
    case MapKind::M2: return "M2";
    case MapKind::M1Tilde: return "M1_tilde";
    case MapKind::M2Tilde: return "M2_tilde";
    case MapKind::Generic: return "generic";
  }
  return "unknown";
}

Index MapMatrix::n() const {
  const auto root = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(N()))));
  if (root * root != N()) throw DimensionError("MapMatrix: N is not a perfect square");
  return root;
}

bool MapMatrix::is_diagonal() const {
  for (Index r = 0; r < entries.rows(); ++r)
    for (Index c = 0; c < entries.cols(); ++c)
      if (r != c && entries(r, c) != Complex(0.0, 0.0)) return false;
  return true;
}

void ProjectorSet::validate() const {
  if (projectors.empty()) throw DimensionError("ProjectorSet: empty");
  const Index n = projectors.front().rows();
  for (const auto& p : projectors) {
    if (p.rows() != n || p.cols() != n) {
      throw DimensionError("ProjectorSet: all P_s must be square of the same size");
    }
    if (orthogonal) {
      if (max_abs(p * p - p) > tol::kHermiticity || hermiticity_defect(p) > tol::kHermiticity) {
        throw InvalidDensityError("ProjectorSet: P_s is not an orthogonal projector");
      }
    }
  }
}

MapMatrix build_projector_map(const ProjectorSet& ps) {
  ps.validate();
  const Index n = ps.projectors.front().rows();
  MapMatrix out{MapKind::Generic, ComplexMatrix::Zero(n * n, n * n)};
  for (const auto& p : ps.projectors) out.entries += tensor_product(p, p.conjugate());
  return out;
}

ComplexMatrix leading_projector(Index n) {
  ComplexMatrix p = ComplexMatrix::Identity(n, n);
  p(n - 1, n - 1) = 0.0;
  return p;
}

ComplexMatrix trailing_projector(Index n) {
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  p(n - 1, n - 1) = 1.0;
  return p;
}

namespace {

void require_n_at_least_2(Index n, const char* what) {
  if (n < 2) {
    std::ostringstream os;
    os << what << ": n must be >= 2, got " << n;
    throw DimensionError(os.str());
  }
}

}  // namespace

MapMatrix m2_matrix(Index n) {
  require_n_at_least_2(n, "m2_matrix");
  MapMatrix m = build_projector_map({{leading_projector(n), trailing_projector(n)}, true});
  m.label = MapKind::M2;
  return m;
}

MapMatrix m1_matrix(Index n) {
  require_n_at_least_2(n, "m1_matrix");
  ComplexMatrix odd = ComplexMatrix::Zero(n, n);
  ComplexMatrix even = ComplexMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    // Position i is 1-based i + 1.
    if (i % 2 == 0) {
      odd(i, i) = 1.0;
    } else {
      even(i, i) = 1.0;
    }
  }
  MapMatrix m = build_projector_map({{odd, even}, true});
  m.label = MapKind::M1;
  return m;
}

MapMatrix m2_tilde_matrix(Index n) {
  MapMatrix m = m2_matrix(n);
  const Index N = m.N();
  m.entries(0, N - 1) += 1.0;
  m.entries(N - 1, N - 1) -= 1.0;
  m.label = MapKind::M2Tilde;
  return m;
}

MapMatrix m1_tilde_matrix(Index n) {
  if (n != 3) throw DimensionError("m1_tilde_matrix: only defined for n = 3");
  ComplexMatrix a = ComplexMatrix::Zero(3, 3);
  a(0, 0) = 1.0;
  a(1, 2) = 1.0;
  ComplexMatrix b = ComplexMatrix::Zero(3, 3);
  b(0, 1) = 1.0;
  ComplexMatrix l = ComplexMatrix::Zero(9, 9);
  l.block(0, 0, 3, 3) = a;
  l.block(0, 3, 3, 3) = b;
  l.block(3, 6, 3, 3) = a;
  return MapMatrix{MapKind::M1Tilde, l};
}

ComplexMatrix apply_map(const MapMatrix& L, const ComplexMatrix& a) {
  if (a.rows() != a.cols() || L.entries.rows() != L.entries.cols() ||
      L.N() != a.size()) {
    std::ostringstream os;
    os << "apply_map: a " << L.N() << "x" << L.N() << " map cannot act on a "
       << a.rows() << "x" << a.cols() << " matrix";
    throw DimensionError(os.str());
  }
  return devectorize(L.entries * vectorize(a), a.rows(), a.cols());
}

DensityMatrix portrait_qubit(const DensityMatrix& a) {
  const Index n = a.dim();
  if (n < 2) throw DimensionError("portrait_qubit: n must be >= 2");
  const ComplexMatrix& m = a.matrix();
  ComplexMatrix out(2, 2);
  out(0, 0) = m.diagonal().head(n - 1).sum();
  out(0, 1) = m(0, n - 1);
  out(1, 0) = m(n - 1, 0);
  out(1, 1) = m(n - 1, n - 1);
  return DensityMatrix::from(out);
}

DensityMatrix portrait_reduce(const DensityMatrix& a) {
  const Index n = a.dim();
  if (n < 3) throw DimensionError("portrait_reduce: n must be >= 3");
  ComplexMatrix out = a.matrix().topLeftCorner(n - 1, n - 1);
  out(0, 0) += a.matrix()(n - 1, n - 1);
  return DensityMatrix::from(out);
}

InequalityReport is_positive_map_on_sample(const MapMatrix& L, int trials,
                                           Seed seed) {
  const Index n = L.n();
  double min_eig = std::numeric_limits<double>::infinity();
  double max_trace_dev = 0.0;
  double max_herm = 0.0;
  for (int t = 0; t < trials; ++t) {
    const DensityMatrix rho = random_density(n, derive_seed(seed, static_cast<std::uint64_t>(t)));
    const ComplexMatrix out = apply_map(L, rho.matrix());
    const double herm = hermiticity_defect(out);
    max_herm = std::max(max_herm, herm);
    max_trace_dev = std::max(max_trace_dev, std::abs(out.trace() - Complex(1.0, 0.0)));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (out + out.adjoint()),
                                                    Eigen::EigenvaluesOnly);
    min_eig = std::min(min_eig, es.eigenvalues().minCoeff());
  }
  if (trials <= 0) min_eig = 0.0;
  InequalityReport r = make_report("positive_map[" + std::string(to_string(L.label)) + "]",
                                   min_eig, 0.0, tol::kPsd, seed_digest(seed));
  r.details["max_trace_deviation"] = max_trace_dev;
  r.details["max_hermiticity_defect"] = max_herm;
  r.details["trials"] = trials;
  return r;
}

}  // namespace quditcorr
