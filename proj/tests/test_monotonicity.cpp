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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace quditcorr;
using testing::diag;
using testing::max_diff;

namespace {

DensityMatrix regularized(const DensityMatrix& rho) {
  const Index n = rho.dim();
  return DensityMatrix::from((rho.matrix() + 1e-6 * ComplexMatrix::Identity(n, n) / static_cast<double>(n)) /
                             (1.0 + 1e-6));
}

}  // namespace

TEST_CASE("all_perm4") {
  const auto perms = all_perm4();
  CHECK(perms.size() == 24);
  CHECK(perms.front() == kIdentityPerm4);
}

TEST_CASE("alt_reduction") {
  CHECK(max_diff(alt_reduction(DensityMatrix::maximally_mixed(4)).matrix(),
                 0.5 * ComplexMatrix::Identity(2, 2)) < 1e-15);
  CHECK(max_diff(alt_reduction(testing::bell_density()).matrix(), ComplexMatrix::Constant(2, 2, 0.5)) <
        1e-15);

  for (Seed s = 0; s < 10000; ++s) {
    const DensityMatrix rho = random_density(4, s);
    const ComplexMatrix& r = rho.matrix();
    const DensityMatrix red = alt_reduction(rho);
    CHECK(std::abs(red.matrix().trace().real() - 1.0) < 1e-12);
    // Entry sums written out.
    CHECK(std::abs(red(0, 0) - (r(1, 1) + r(0, 0))) < 1e-15);
    CHECK(std::abs(red(0, 1) - (r(1, 2) + r(0, 3))) < 1e-15);
    CHECK(std::abs(red(1, 0) - (r(2, 1) + r(3, 0))) < 1e-15);
    CHECK(std::abs(red(1, 1) - (r(2, 2) + r(3, 3))) < 1e-15);
    // Positive for every sample: it is Tr_2 after exchanging basis vectors 3 and 4.
    CHECK(hermitian_eig(red.matrix()).eigenvalues(0) >= -1e-12);
  }
  CHECK_THROWS_AS(alt_reduction(DensityMatrix::maximally_mixed(3)), DimensionError);
}

TEST_CASE("permuted_portrait") {
  const DensityMatrix rho = random_density(4, 3);
  const ComplexMatrix& r = rho.matrix();
  const DensityMatrix p = permuted_portrait(rho);
  // Labels 3/2, 1/2, -1/2, -3/2 -> 0..3.
  CHECK(std::abs(p(0, 0) - (r(0, 0) + r(2, 2))) < 1e-15);
  CHECK(std::abs(p(0, 1) - (r(0, 1) + r(2, 3))) < 1e-15);
  CHECK(std::abs(p(1, 0) - (r(1, 0) + r(3, 2))) < 1e-15);
  CHECK(std::abs(p(1, 1) - (r(1, 1) + r(3, 3))) < 1e-15);
  CHECK(max_diff(p.matrix(), oracle::trace_first(r, 2, 2)) < 1e-15);

  const DensityMatrix d = DensityMatrix::from(diag({0.1, 0.2, 0.3, 0.4}));
  // swap(1, 2): diagonal becomes (0.2, 0.1, 0.3, 0.4).
  CHECK(max_diff(permuted_portrait(d, {1, 0, 2, 3}).matrix(), diag({0.5, 0.5})) < 1e-15);
  CHECK(max_diff(permuted_portrait(d, {0, 2, 1, 3}).matrix(), diag({0.3, 0.7})) < 1e-15);
}

TEST_CASE("Reduction::lift is the adjoint of apply") {
  std::vector<Reduction> reductions{Reduction::partial_trace(), Reduction::alternative()};
  for (const Perm4& p : all_perm4()) reductions.push_back(Reduction::qudit32(p));
  Engine engine = make_engine(99);
  for (const Reduction& red : reductions) {
    const DensityMatrix rho = random_density(4, engine);
    const ComplexMatrix x = ginibre(2, 2, engine);
    const Complex lhs = (rho.matrix() * red.lift(x)).trace();
    const Complex rhs = (red.apply(rho).matrix() * x).trace();
    CHECK(std::abs(lhs - rhs) < 1e-13);
  }
  CHECK_THROWS_AS(Reduction::qudit32({0, 0, 1, 2}), DimensionError);
}

TEST_CASE("check_monotonicity") {
  const DensityMatrix rho = random_density(4, 10);
  const auto same = check_monotonicity(rho, rho, Reduction::partial_trace());
  CHECK(std::abs(same.lhs) < 1e-12);
  CHECK(std::abs(same.rhs) < 1e-12);

  SUBCASE("shared first factor gives equality") {
    for (Seed s = 0; s < 20; ++s) {
      const DensityMatrix tau = random_density(2, derive_seed(s, 0));
      const DensityMatrix r2 = random_density(2, derive_seed(s, 1));
      const DensityMatrix s2 = random_density(2, derive_seed(s, 2));
      const DensityMatrix a = DensityMatrix::from(tensor_product(tau.matrix(), r2.matrix()));
      const DensityMatrix b = DensityMatrix::from(tensor_product(tau.matrix(), s2.matrix()));
      const auto r = check_monotonicity(a, b, Reduction::partial_trace());
      CHECK(std::abs(r.margin) <= 1e-10);
      CHECK(equality_residual(a, b, Reduction::partial_trace()) <= 1e-10);
    }
  }

  SUBCASE("random pairs, every reduction") {
    std::vector<Reduction> reductions{Reduction::partial_trace(), Reduction::alternative()};
    for (const Perm4& p : all_perm4()) reductions.push_back(Reduction::qudit32(p));
    for (Seed s = 0; s < 100; ++s) {
      const DensityMatrix a = random_density(4, derive_seed(s, 0));
      const DensityMatrix b = regularized(random_density(4, derive_seed(s, 1)));
      for (const Reduction& red : reductions) {
        const auto r = check_monotonicity(a, b, red);
        CHECK(r.margin >= -1e-9);
        CHECK(r.pass);
      }
    }
  }

  SUBCASE("non-qubit partial trace") {
    for (Seed s = 0; s < 20; ++s) {
      const DensityMatrix a = random_density(6, derive_seed(s, 0));
      const DensityMatrix b = random_density(6, derive_seed(s, 1));
      CHECK(check_monotonicity(a, b, Reduction::partial_trace(2, 3)).pass);
      CHECK(check_monotonicity(a, b, Reduction::partial_trace(3, 2)).pass);
    }
  }

  SUBCASE("support violation") {
    ComplexVector e1 = ComplexVector::Zero(4), e2 = ComplexVector::Zero(4);
    e1(0) = 1;
    e2(1) = 1;
    const auto r = check_monotonicity(DensityMatrix::pure(e1), DensityMatrix::pure(e2),
                                      Reduction::partial_trace());
    CHECK(std::isinf(r.lhs));
    CHECK(r.pass);
    CHECK(r.details.at("support_violation") == 1.0);
  }

  CHECK_THROWS_AS(check_monotonicity(rho, DensityMatrix::maximally_mixed(3), Reduction::partial_trace()),
                  DimensionError);
}

TEST_CASE("equality_residual") {
  const DensityMatrix rho = random_density(4, 1);
  CHECK(equality_residual(rho, rho, Reduction::alternative()) < 1e-12);

  for (Seed s = 0; s < 50; ++s) {
    const DensityMatrix a = random_density(4, derive_seed(s, 0));
    const DensityMatrix b = random_density(4, derive_seed(s, 1));
    for (const Reduction& red : {Reduction::partial_trace(), Reduction::alternative(),
                                 Reduction::qudit32({3, 1, 0, 2})}) {
      const double residual = equality_residual(a, b, red);
      const double margin = check_monotonicity(a, b, red).margin;
      CHECK(residual > 1e-6);
      CHECK(margin > 0.0);
    }
  }

  ComplexVector e1 = ComplexVector::Zero(4);
  e1(0) = 1;
  CHECK_THROWS_AS(equality_residual(DensityMatrix::pure(e1), rho, Reduction::partial_trace()), SupportError);
}
