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
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "quditcorr/linalg.hpp"
#include "quditcorr/random.hpp"
#include "quditcorr/report.hpp"
#include "quditcorr/tomography.hpp"

namespace quditcorr {

using RealMatrix4 = Eigen::Matrix4d;

/// Euler angles (radians) of an SU(2) element, z-y-z convention.
struct UnitaryParam {
  double phi = 0.0;
  double theta = 0.0;
  double psi = 0.0;

  ComplexMatrix matrix() const { return su2_from_euler(phi, theta, psi); }
};

/// Four local settings u_a, u_b, u_c, u_d.
struct ChshSetting {
  UnitaryParam a, b, c, d;

  std::array<double, 12> to_angles() const;
  static ChshSetting from_angles(const std::array<double, 12>& x);
};

enum class Pairing {
  /// u1 = a(x)b, u2 = a(x)c, u3 = d(x)b, u4 = d(x)c.
  Standard,
  /// u3 = d(x)a. Breaks the CHSH sign pattern; |B| reaches 4 on the Bell state.
  ReuseA,
};

/// Sign pattern whose rows 1-3 are (1,-1,-1,1) and row 4 is (-1,1,1,-1).
const RealMatrix4& chsh_sign_matrix();

/// Column k is the tomogram of rho under us[k].
RealMatrix4 stochastic_tomogram_matrix(const DensityMatrix& rho,
                                       const std::array<ComplexMatrix, 4>& us);

std::array<ComplexMatrix, 4> product_unitaries(const ChshSetting& s,
                                               Pairing pairing);

/// B = Tr(I M(u1, u2, u3, u4)).
double chsh_value(const DensityMatrix& rho, const ChshSetting& setting,
                  Pairing pairing = Pairing::Standard);

inline constexpr double kClassicalBound = 2.0;
inline const double kTsirelsonBound = 2.0 * std::sqrt(2.0);

/// B for M = [[x, y], [1-x, 1-y]] (x) [[z, t], [1-z, 1-t]].
/// Arguments outside [0, 1] are evaluated anyway (the function is a
/// polynomial); callers that need the unit cube check it themselves.
double classical_B(double x, double y, double z, double t);

/// Central-difference Laplacian of classical_B at each point.
/// lhs = 0, rhs = max |Laplacian|, tolerance 1e-6.
/// details: "max_axis_second_difference".
InequalityReport laplace_check(const std::vector<std::array<double, 4>>& points,
                               double h = 1e-3);

/// Convex combination sum_k p_k rho1_k (x) rho2_k of 2x2 factors.
struct SeparableSpec {
  std::vector<double> weights;
  std::vector<std::pair<DensityMatrix, DensityMatrix>> factors;

  void validate() const;
};

SeparableSpec random_separable_spec(int terms, Seed seed);

DensityMatrix mix_separable(const SeparableSpec& spec);

struct PptResult {
  double min_pt_eigenvalue = 0.0;
  bool is_ppt = true;
};

/// is_ppt <=> min eigenvalue of the partial transpose >= -tol::kPsd.
PptResult ppt_check(const DensityMatrix& rho);

struct ChshOptions {
  int restarts = 32;
  int max_evaluations = 2000;  // per restart
  double diameter_tolerance = 1e-8;
  Seed seed = 0;
  Pairing pairing = Pairing::Standard;
  /// Used as the starting point of restart 0 when set.
  std::optional<ChshSetting> initial;
  /// Worker threads for restarts; 0 picks hardware concurrency.
  unsigned threads = 1;
};

struct ChshOptimum {
  double best_B = 0.0;       // max |B| found
  double signed_B = 0.0;     // B at best_setting
  ChshSetting best_setting;
  int evaluations = 0;
  int best_restart = 0;
};

/// Multi-start Nelder-Mead maximization of |B| over the 12 Euler angles.
ChshOptimum optimize_chsh(const DensityMatrix& rho,
                          const ChshOptions& options = {});

/// The same numbers read through the two-qubit and spin-3/2 labelings.
struct Qudit32Interpretation {
  Tomogram two_qubit;  // at u = 1_4
  Tomogram qudit32;    // at u = 1_4
  double chsh_two_qubit = 0.0;
  double chsh_qudit32 = 0.0;
};

Qudit32Interpretation qudit32_interpretation(const DensityMatrix& rho,
                                             const ChshSetting& setting = {});

}  // namespace quditcorr
