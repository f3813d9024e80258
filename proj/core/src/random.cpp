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

#include "quditcorr/random.hpp"

#include <cmath>

namespace quditcorr {

Seed derive_seed(Seed seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Engine make_engine(Seed seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32)};
  return Engine(seq);
}

ComplexMatrix ginibre(Index rows, Index cols, Engine& engine) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  // Column-major fill keeps the stream order independent of Eigen internals.
  for (Index c = 0; c < cols; ++c)
    for (Index r = 0; r < rows; ++r) {
      const double re = normal(engine);
      const double im = normal(engine);
      g(r, c) = Complex(re, im);
    }
  return g;
}

DensityMatrix random_density(Index n, Engine& engine) {
  if (n < 1) throw DimensionError("random_density: n must be positive");
  const ComplexMatrix g = ginibre(n, n, engine);
  ComplexMatrix w = g * g.adjoint();
  w = 0.5 * (w + w.adjoint());
  w /= w.trace().real();
  return DensityMatrix::from(w);
}

DensityMatrix random_density(Index n, Seed seed) {
  Engine engine = make_engine(seed);
  return random_density(n, engine);
}

ComplexMatrix random_unitary(Index n, Engine& engine) {
  if (n < 1) throw DimensionError("random_unitary: n must be positive");
  const ComplexMatrix g = ginibre(n, n, engine);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix& r = qr.matrixQR();
  for (Index k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= mag > 0.0 ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

ComplexMatrix random_unitary(Index n, Seed seed) {
  Engine engine = make_engine(seed);
  return random_unitary(n, engine);
}

DensityMatrix random_pure(Index n, Engine& engine) {
  const ComplexMatrix g = ginibre(n, 1, engine);
  return DensityMatrix::pure(g.col(0));
}

}  // namespace quditcorr
