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

#include <cstdint>
#include <random>

#include "quditcorr/linalg.hpp"

namespace quditcorr {

using Seed = std::uint64_t;
using Engine = std::mt19937_64;

/// Counter-based seed splitter (SplitMix64 finalizer over seed and index).
/// Streams derived from distinct (seed, index) pairs are independent for
/// all practical purposes, so batch trials can run in any order.
Seed derive_seed(Seed seed, std::uint64_t index);

Engine make_engine(Seed seed);

/// n x n matrix with i.i.d. standard complex Gaussian entries.
ComplexMatrix ginibre(Index rows, Index cols, Engine& engine);

/// G G^dagger / Tr(G G^dagger) for Ginibre G; full rank almost surely.
DensityMatrix random_density(Index n, Seed seed);
DensityMatrix random_density(Index n, Engine& engine);

/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of
/// diag(R) moved into Q.
ComplexMatrix random_unitary(Index n, Seed seed);
ComplexMatrix random_unitary(Index n, Engine& engine);

/// Haar-random pure state |psi><psi|.
DensityMatrix random_pure(Index n, Engine& engine);

}  // namespace quditcorr
