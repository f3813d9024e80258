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

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace quditcorr;

namespace {

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

TEST_CASE("tomogram") {
  const Tomogram bell = tomogram(testing::bell_density(), ComplexMatrix::Identity(4, 4));
  const std::vector<double> expected{0.5, 0.0, 0.0, 0.5};
  CHECK(bell.probs == expected);
  CHECK(bell.index_labels == std::vector<std::string>{"1", "2", "3", "4"});

  Engine engine = make_engine(6);
  for (int t = 0; t < 50; ++t) {
    const Index n = 2 + t % 7;
    const DensityMatrix rho = random_density(n, engine);
    const ComplexMatrix u = random_unitary(n, engine);
    const Tomogram w = tomogram(rho, u);
    CHECK(std::abs(sum(w.probs) - 1.0) <= 1e-10);
    const ComplexMatrix rotated = u * rho.matrix() * u.adjoint();
    for (Index k = 0; k < n; ++k) {
      CHECK(w.probs[static_cast<std::size_t>(k)] >= 0.0);
      CHECK(std::abs(w.probs[static_cast<std::size_t>(k)] - rotated(k, k).real()) < 1e-14);
    }
  }

  for (int t = 0; t < 10; ++t) {
    const Tomogram w = tomogram(DensityMatrix::maximally_mixed(4), random_unitary(4, engine));
    for (double p : w.probs) CHECK(std::abs(p - 0.25) < 1e-15);
  }

  SUBCASE("permutation covariance") {
    const DensityMatrix rho = random_density(4, engine);
    const ComplexMatrix u = random_unitary(4, engine);
    const std::vector<Index> perm{2, 0, 3, 1};
    ComplexMatrix p = ComplexMatrix::Zero(4, 4);
    for (Index i = 0; i < 4; ++i) p(i, perm[static_cast<std::size_t>(i)]) = 1.0;
    const Tomogram base = tomogram(rho, u);
    const Tomogram permuted = tomogram(rho, p * u);
    for (Index i = 0; i < 4; ++i)
      CHECK(std::abs(permuted.probs[static_cast<std::size_t>(i)] -
                     base.probs[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]) < 1e-15);
  }

  const Tomogram labeled = tomogram(testing::bell_density(), ComplexMatrix::Identity(4, 4),
                                    IndexBijection(BijectionKind::Qudit32));
  CHECK(labeled.index_labels.front() == "3/2");

  ComplexMatrix not_unitary = ComplexMatrix::Identity(4, 4);
  not_unitary(0, 0) = 2.0;
  CHECK_THROWS_AS(tomogram(testing::bell_density(), not_unitary), NonUnitaryError);
  CHECK_THROWS_AS(tomogram(testing::bell_density(), ComplexMatrix::Identity(3, 3)), DimensionError);
}

TEST_CASE("marginal") {
  const Tomogram bell = tomogram(testing::bell_density(), ComplexMatrix::Identity(4, 4));
  const auto m = marginal(bell, 2, 2, Subsystem::Second);
  CHECK(m == std::vector<double>{0.5, 0.5});
  CHECK(marginal(bell, 2, 2, Subsystem::First) == std::vector<double>{0.5, 0.5});

  Tomogram uniform;
  uniform.probs.assign(6, 1.0 / 6.0);
  const auto u1 = marginal(uniform, 2, 3, Subsystem::Second);
  const auto u2 = marginal(uniform, 2, 3, Subsystem::First);
  CHECK(u1.size() == 2);
  CHECK(u2.size() == 3);
  for (double p : u1) CHECK(p == doctest::Approx(0.5));
  for (double p : u2) CHECK(p == doctest::Approx(1.0 / 3.0));

  // Three factors, explicit index arithmetic.
  Tomogram t;
  for (int i = 0; i < 12; ++i) t.probs.push_back(i + 1);
  const auto mid = marginal(t, {2, 3, 2}, 1);
  // flat = i0 * 6 + i1 * 2 + i2
  for (int i1 = 0; i1 < 3; ++i1) {
    double expected = 0;
    for (int i0 = 0; i0 < 2; ++i0)
      for (int i2 = 0; i2 < 2; ++i2) expected += i0 * 6 + i1 * 2 + i2 + 1;
    CHECK(mid[static_cast<std::size_t>(i1)] == expected);
  }

  Engine engine = make_engine(9);
  const Tomogram w = tomogram(random_density(6, engine), random_unitary(6, engine));
  CHECK(std::abs(sum(marginal(w, 2, 3, Subsystem::First)) - 1.0) < 1e-12);
  CHECK(std::abs(sum(marginal(w, 2, 3, Subsystem::Second)) - 1.0) < 1e-12);

  CHECK_THROWS_AS(marginal(w, 4, 2, Subsystem::First), DimensionError);
  CHECK_THROWS_AS(marginal(w, {2, 3}, 2), DimensionError);
}

TEST_CASE("no_signaling_check") {
  for (Seed s = 0; s < 5; ++s) {
    const auto r = no_signaling_check(random_density(4, s), {2, 2}, 100, s);
    CHECK(r.pass);
    CHECK(r.details.at("max_deviation") <= 1e-12);
  }

  // d1 = 1: the kept factor is the whole space.
  const auto trivial = no_signaling_check(random_density(3, 1), {1, 3}, 10, 1);
  CHECK(trivial.pass);

  // Padded spin-2 matrix read as qubit x qutrit.
  const DensityMatrix padded = embed_pad(random_density(5, 2), 6);
  CHECK(no_signaling_check(padded, {2, 3}, 50, 3).pass);
  CHECK(no_signaling_check(padded, {3, 2}, 50, 3).pass);

  // Three qubits.
  CHECK(no_signaling_check(random_density(8, 4), {2, 2, 2}, 50, 4).pass);

  // Any Hermitian unit-trace matrix, not only composite states: a pure state
  // of a single 4-level system behaves the same.
  Engine engine = make_engine(5);
  CHECK(no_signaling_check(random_pure(4, engine), {2, 2}, 50, 5).pass);

  CHECK_THROWS_AS(no_signaling_check(random_density(5, 1), {2, 3}, 1, 1), DimensionError);
}

TEST_CASE("embed_pad") {
  const DensityMatrix a = random_density(5, 7);
  const DensityMatrix p = embed_pad(a, 6);
  CHECK(p.dim() == 6);
  CHECK(p.matrix().topLeftCorner(5, 5) == a.matrix());
  CHECK(p.matrix().row(5).cwiseAbs().maxCoeff() == 0.0);
  CHECK(embed_pad(a, 5).matrix() == a.matrix());
  CHECK_THROWS_AS(embed_pad(a, 4), DimensionError);

  auto ev_a = oracle::eigenvalues_general(a.matrix());
  ev_a.push_back(0.0);
  std::sort(ev_a.begin(), ev_a.end());
  const Spectrum sp = hermitian_eig(p.matrix());
  for (Index i = 0; i < 6; ++i) CHECK(std::abs(sp.eigenvalues(i) - ev_a[static_cast<std::size_t>(i)]) < 1e-12);

  // u = u0 (+) 1 leaves the original block's probabilities intact.
  const ComplexMatrix u0 = random_unitary(5, 8);
  const Tomogram small = tomogram(a, u0);
  const Tomogram big = tomogram(p, direct_sum(u0, ComplexMatrix::Identity(1, 1)));
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(small.probs[i] - big.probs[i]) < 1e-15);
  CHECK(big.probs[5] == 0.0);
}

TEST_CASE("index_bijection") {
  const IndexBijection two = index_bijection(BijectionKind::TwoQubit);
  CHECK(two.index_of("1/2,-1/2") == 2);
  CHECK(two.index_of("-1/2,-1/2") == 4);
  const IndexBijection q = index_bijection(BijectionKind::Qudit32);
  CHECK(q.index_of("-3/2") == 4);
  CHECK(q.index_of("3/2") == 1);
  const IndexBijection qq = index_bijection(BijectionKind::QubitQutrit);
  CHECK(qq.size() == 6);
  CHECK(qq.index_of("-2") == 1);
  CHECK(qq.index_of("0") == 3);
  CHECK(qq.label_of(3) == "1/2,-1");
  CHECK(qq.index_of("an") == 6);

  for (const auto& b : {two, q, qq}) {
    std::set<std::string> distinct(b.labels().begin(), b.labels().end());
    CHECK(distinct.size() == b.size());
    for (std::size_t i = 1; i <= b.size(); ++i) CHECK(b.index_of(b.label_of(i)) == i);
  }
  CHECK_THROWS_AS(two.index_of("3/2"), ParseError);
  CHECK_THROWS_AS(bijection_kind_from_string("three_qubit"), ParseError);
  CHECK(bijection_kind_from_string("qudit32") == BijectionKind::Qudit32);
}
