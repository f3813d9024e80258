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

#include "quditcorr/bell.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <sstream>
#include <thread>

#include "quditcorr/optimize.hpp"

namespace quditcorr {

std::array<double, 12> ChshSetting::to_angles() const {
  return {a.phi, a.theta, a.psi, b.phi, b.theta, b.psi,
          c.phi, c.theta, c.psi, d.phi, d.theta, d.psi};
}

ChshSetting ChshSetting::from_angles(const std::array<double, 12>& x) {
  return ChshSetting{{x[0], x[1], x[2]}, {x[3], x[4], x[5]},
                     {x[6], x[7], x[8]}, {x[9], x[10], x[11]}};
}

const RealMatrix4& chsh_sign_matrix() {
  static const RealMatrix4 sign = [] {
    RealMatrix4 m;
    m << 1, -1, -1, 1,
         1, -1, -1, 1,
         1, -1, -1, 1,
        -1, 1, 1, -1;
    return m;
  }();
  return sign;
}

RealMatrix4 stochastic_tomogram_matrix(const DensityMatrix& rho,
                                       const std::array<ComplexMatrix, 4>& us) {
  if (rho.dim() != 4) throw DimensionError("stochastic_tomogram_matrix: expected a 4x4 density");
  RealMatrix4 m;
  for (Index k = 0; k < 4; ++k) {
    const Tomogram t = tomogram(rho, us[static_cast<std::size_t>(k)]);
    for (Index n = 0; n < 4; ++n) m(n, k) = t.probs[static_cast<std::size_t>(n)];
  }
  return m;
}

std::array<ComplexMatrix, 4> product_unitaries(const ChshSetting& s, Pairing pairing) {
  const ComplexMatrix ua = s.a.matrix();
  const ComplexMatrix ub = s.b.matrix();
  const ComplexMatrix uc = s.c.matrix();
  const ComplexMatrix ud = s.d.matrix();
  return {tensor_product(ua, ub), tensor_product(ua, uc),
          tensor_product(ud, pairing == Pairing::Standard ? ub : ua),
          tensor_product(ud, uc)};
}

double chsh_value(const DensityMatrix& rho, const ChshSetting& setting, Pairing pairing) {
  const RealMatrix4 m = stochastic_tomogram_matrix(rho, product_unitaries(setting, pairing));
  return (chsh_sign_matrix() * m).trace();
}

double classical_B(double x, double y, double z, double t) {
  Eigen::Matrix2d first;
  first << x, y, 1.0 - x, 1.0 - y;
  Eigen::Matrix2d second;
  second << z, t, 1.0 - z, 1.0 - t;
  RealMatrix4 m;
  for (Index j = 0; j < 2; ++j)
    for (Index k = 0; k < 2; ++k) m.block<2, 2>(2 * j, 2 * k) = first(j, k) * second;
  return (chsh_sign_matrix() * m).trace();
}

InequalityReport laplace_check(const std::vector<std::array<double, 4>>& points, double h) {
  double worst = 0.0;
  double worst_axis = 0.0;
  for (const auto& p : points) {
    const double center = classical_B(p[0], p[1], p[2], p[3]);
    double laplacian = 0.0;
    for (std::size_t axis = 0; axis < 4; ++axis) {
      auto plus = p;
      auto minus = p;
      plus[axis] += h;
      minus[axis] -= h;
      const double second =
          (classical_B(plus[0], plus[1], plus[2], plus[3]) - 2.0 * center +
           classical_B(minus[0], minus[1], minus[2], minus[3])) / (h * h);
      worst_axis = std::max(worst_axis, std::abs(second));
      laplacian += second;
    }
    worst = std::max(worst, std::abs(laplacian));
  }
  std::ostringstream name;
  name << "laplace[points=" << points.size() << ";h=" << h << ']';
  InequalityReport r = make_report(name.str(), 0.0, worst, 1e-6);
  r.details["max_axis_second_difference"] = worst_axis;
  return r;
}

void SeparableSpec::validate() const {
  if (weights.empty() || weights.size() != factors.size()) {
    throw InvalidDensityError("SeparableSpec: need one weight per factor pair");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw InvalidDensityError("SeparableSpec: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > tol::kTrace) {
    throw InvalidDensityError("SeparableSpec: weights must sum to 1");
  }
  for (const auto& [f1, f2] : factors) {
    if (f1.dim() != 2 || f2.dim() != 2) {
      throw DimensionError("SeparableSpec: factors must be 2x2 density matrices");
    }
  }
}

SeparableSpec random_separable_spec(int terms, Seed seed) {
  if (terms < 1) throw DimensionError("random_separable_spec: terms must be positive");
  Engine engine = make_engine(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> coin(0, 1);
  SeparableSpec spec;
  double total = 0.0;
  for (int k = 0; k < terms; ++k) {
    // Exponential spacings give a uniform point on the simplex.
    const double w = -std::log(1.0 - unit(engine));
    spec.weights.push_back(w);
    total += w;
    // Pure factors reach the boundary of the separable set, mixed ones
    // probe the interior.
    auto factor = [&] {
      return coin(engine) ? random_pure(2, engine) : random_density(2, engine);
    };
    DensityMatrix f1 = factor();
    DensityMatrix f2 = factor();
    spec.factors.emplace_back(std::move(f1), std::move(f2));
  }
  for (double& w : spec.weights) w /= total;
  // Absorb the rounding residue so the weights sum to one within 1e-15.
  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < spec.weights.size(); ++k) sum += spec.weights[k];
  spec.weights.back() = std::max(0.0, 1.0 - sum);
  return spec;
}

DensityMatrix mix_separable(const SeparableSpec& spec) {
  spec.validate();
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  for (std::size_t k = 0; k < spec.weights.size(); ++k) {
    m += spec.weights[k] *
         tensor_product(spec.factors[k].first.matrix(), spec.factors[k].second.matrix());
  }
  return DensityMatrix::from(m);
}

PptResult ppt_check(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw DimensionError("ppt_check: expected a 4x4 density");
  const Spectrum s = hermitian_eig(partial_transpose(rho));
  PptResult r;
  r.min_pt_eigenvalue = s.eigenvalues(0);
  r.is_ppt = r.min_pt_eigenvalue >= -tol::kPsd;
  return r;
}

namespace {

struct RestartResult {
  double abs_value = 0.0;
  double signed_value = 0.0;
  std::array<double, 12> angles{};
  int evaluations = 0;
};

RestartResult run_restart(const DensityMatrix& rho, const ChshOptions& options, int index) {
  std::array<double, 12> start{};
  if (index == 0 && options.initial) {
    start = options.initial->to_angles();
  } else {
    Engine engine = make_engine(derive_seed(options.seed, static_cast<std::uint64_t>(index)));
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (double& x : start) x = angle(engine);
  }
  auto objective = [&](const std::vector<double>& x) {
    std::array<double, 12> a{};
    std::copy(x.begin(), x.end(), a.begin());
    return -std::abs(chsh_value(rho, ChshSetting::from_angles(a), options.pairing));
  };
  NelderMeadOptions nm;
  nm.max_evaluations = options.max_evaluations;
  nm.diameter_tolerance = options.diameter_tolerance;
  const NelderMeadResult res =
      nelder_mead(objective, std::vector<double>(start.begin(), start.end()), nm);

  RestartResult out;
  out.evaluations = res.evaluations;
  std::copy(res.x.begin(), res.x.end(), out.angles.begin());
  out.signed_value = chsh_value(rho, ChshSetting::from_angles(out.angles), options.pairing);
  out.abs_value = std::abs(out.signed_value);

  // The simplex never returns a point worse than its start vertex, but keep
  // the guarantee explicit for user-supplied starting settings.
  const double start_value = chsh_value(rho, ChshSetting::from_angles(start), options.pairing);
  if (std::abs(start_value) > out.abs_value) {
    out.angles = start;
    out.signed_value = start_value;
    out.abs_value = std::abs(start_value);
  }
  return out;
}

}  // namespace

ChshOptimum optimize_chsh(const DensityMatrix& rho, const ChshOptions& options) {
  if (rho.dim() != 4) throw DimensionError("optimize_chsh: expected a 4x4 density");
  const int restarts = std::max(1, options.restarts);
  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                          : options.threads;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(restarts));

  std::vector<RestartResult> results(static_cast<std::size_t>(restarts));
  if (threads <= 1) {
    for (int i = 0; i < restarts; ++i) results[static_cast<std::size_t>(i)] = run_restart(rho, options, i);
  } else {
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.push_back(std::async(std::launch::async, [&, w] {
        for (int i = static_cast<int>(w); i < restarts; i += static_cast<int>(threads))
          results[static_cast<std::size_t>(i)] = run_restart(rho, options, i);
      }));
    }
    for (auto& f : workers) f.get();
  }

  // Merge by max; ties go to the lowest restart index so the result does not
  // depend on the thread count.
  ChshOptimum best;
  best.best_B = -1.0;
  for (int i = 0; i < restarts; ++i) {
    const RestartResult& r = results[static_cast<std::size_t>(i)];
    best.evaluations += r.evaluations;
    if (r.abs_value > best.best_B) {
      best.best_B = r.abs_value;
      best.signed_B = r.signed_value;
      best.best_setting = ChshSetting::from_angles(r.angles);
      best.best_restart = i;
    }
  }
  return best;
}

Qudit32Interpretation qudit32_interpretation(const DensityMatrix& rho,
                                             const ChshSetting& setting) {
  if (rho.dim() != 4) throw DimensionError("qudit32_interpretation: expected a 4x4 density");
  const IndexBijection two_qubit(BijectionKind::TwoQubit);
  const IndexBijection qudit(BijectionKind::Qudit32);
  const ComplexMatrix id = ComplexMatrix::Identity(4, 4);

  Qudit32Interpretation out;
  out.two_qubit = tomogram(rho, id, two_qubit);
  out.qudit32 = tomogram(rho, id, qudit);

  // Read the stochastic matrix through each label table: row n of M is the
  // outcome whose label maps to flat index n.
  const RealMatrix4 m = stochastic_tomogram_matrix(rho, product_unitaries(setting, Pairing::Standard));
  auto through = [&](const IndexBijection& bij) {
    RealMatrix4 relabeled;
    for (std::size_t n = 1; n <= 4; ++n) {
      const std::size_t row = bij.index_of(bij.label_of(n)) - 1;
      relabeled.row(static_cast<Index>(n - 1)) = m.row(static_cast<Index>(row));
    }
    return (chsh_sign_matrix() * relabeled).trace();
  };
  out.chsh_two_qubit = through(two_qubit);
  out.chsh_qudit32 = through(qudit);
  return out;
}

}  // namespace quditcorr
