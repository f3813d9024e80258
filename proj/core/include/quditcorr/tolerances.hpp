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

namespace quditcorr::tol {

inline constexpr double kHermiticity = 1e-12;
inline constexpr double kTrace = 1e-12;
/// Smallest eigenvalue still accepted as positive semidefinite.
inline constexpr double kPsd = 1e-10;
inline constexpr double kReconstruction = 1e-10;
inline constexpr double kUnitary = 1e-10;
/// Eigenvalues at or below this are zero in x ln x and support tests.
inline constexpr double kEigenFloor = 1e-14;
/// |q - 1| below this selects the natural logarithm.
inline constexpr double kDeformationOne = 1e-8;
/// Weight of rho on a null direction of sigma that counts as support violation.
inline constexpr double kSupportWeight = 1e-12;
/// Tomogram probabilities in [-kProbabilityClamp, 0) are clamped to zero.
inline constexpr double kProbabilityClamp = 1e-12;
inline constexpr double kProbabilitySum = 1e-10;

}  // namespace quditcorr::tol
