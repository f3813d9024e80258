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

#include <string_view>
#include <vector>

#include "quditcorr/linalg.hpp"
#include "quditcorr/random.hpp"
#include "quditcorr/report.hpp"

namespace quditcorr {

enum class MapKind { M1, M2, M1Tilde, M2Tilde, Generic };

std::string_view to_string(MapKind k);

/// N x N matrix L acting on row-major vectorized n x n matrices, N = n^2:
/// b = devectorize(L * vectorize(a)).
struct MapMatrix {
  MapKind label = MapKind::Generic;
  ComplexMatrix entries;

  /// Side length n of the matrices the map acts on.
  Index n() const;
  Index N() const { return entries.rows(); }
  bool is_diagonal() const;
};

/// Kraus-like family P_s for a -> sum_s P_s a P_s^dagger.
struct ProjectorSet {
  std::vector<ComplexMatrix> projectors;
  /// When set, each P_s must satisfy P_s^2 = P_s = P_s^dagger within 1e-12.
  bool orthogonal = false;

  void validate() const;
};

/// sum_s P_s (x) conj(P_s). Diagonal when every P_s is a diagonal projector.
MapMatrix build_projector_map(const ProjectorSet& ps);

/// Rank-(n-1) projector onto the first n-1 basis vectors.
ComplexMatrix leading_projector(Index n);
/// Rank-1 projector onto the last basis vector.
ComplexMatrix trailing_projector(Index n);

/// Diagonal decoherence map b = P_{n-1} a P_{n-1} + P_n a P_n.
/// The zero diagonal entries sit at J = n, 2n, ..., (n-1)n and
/// J = n^2-n+1, ..., n^2-1 (1-based).
MapMatrix m2_matrix(Index n);

/// Parity decoherence: projectors onto odd and even basis positions.
/// For n = 3 this is blockdiag(Pi_1, Pi_2, Pi_1), Pi_1 = diag(1,0,1),
/// Pi_2 = diag(0,1,0).
MapMatrix m1_matrix(Index n);

/// M2 with (1, N) set to 1 and (N, N) set to 0: moves a_nn onto a_11 and
/// clears the last row and column.
MapMatrix m2_tilde_matrix(Index n);

/// The 9x9 block map [[A, B, 0], [0, 0, A], [0, 0, 0]]; qutrit only.
MapMatrix m1_tilde_matrix(Index n = 3);

ComplexMatrix apply_map(const MapMatrix& L, const ComplexMatrix& a);

/// 2x2 compression [[a_11 + ... + a_{n-1,n-1}, a_1n], [a_n1, a_nn]].
DensityMatrix portrait_qubit(const DensityMatrix& a);

/// (n-1)x(n-1) compression: leading principal block with a_nn added to
/// the (1,1) entry. Requires n >= 3.
DensityMatrix portrait_reduce(const DensityMatrix& a);

/// Applies L to `trials` Ginibre densities of size n = L.n().
/// lhs is the smallest output eigenvalue, rhs = 0, tolerance tol::kPsd.
/// details: "max_trace_deviation", "max_hermiticity_defect".
InequalityReport is_positive_map_on_sample(const MapMatrix& L, int trials,
                                           Seed seed);

}  // namespace quditcorr
