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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quditcorr/linalg.hpp"
#include "quditcorr/random.hpp"
#include "quditcorr/report.hpp"

namespace quditcorr {

enum class BijectionKind {
  /// (m1, m2) in {1/2, -1/2}^2, m1 major: 1/2 1/2 <-> 1, ..., -1/2 -1/2 <-> 4.
  TwoQubit,
  /// m in {3/2, 1/2, -1/2, -3/2} <-> 1..4.
  Qudit32,
  /// Spin-2 levels plus one auxiliary vector onto qubit x qutrit labels
  /// (m1, m2), m1 in {1/2, -1/2} major, m2 in {1, 0, -1}.
  QubitQutrit,
};

std::string_view to_string(BijectionKind k);
BijectionKind bijection_kind_from_string(std::string_view s);

/// Outcome label <-> 1-based flat index.
class IndexBijection {
 public:
  explicit IndexBijection(BijectionKind kind);

  BijectionKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return labels_.size(); }

  /// Labels in flat-index order.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Alternative labels of the same positions (spin-2 names for
  /// QubitQutrit); empty for the other kinds.
  const std::vector<std::string>& aliases() const noexcept { return aliases_; }

  /// 1-based flat index; accepts labels and aliases. Throws ParseError.
  std::size_t index_of(std::string_view label) const;
  const std::string& label_of(std::size_t index) const;

 private:
  BijectionKind kind_;
  std::vector<std::string> labels_;
  std::vector<std::string> aliases_;
};

IndexBijection index_bijection(BijectionKind kind);

/// Outcome distribution w_n(u) = <n| u rho u^dagger |n>.
struct Tomogram {
  std::vector<double> probs;
  std::string unitary_digest;
  std::vector<std::string> index_labels;
};

/// Throws NonUnitaryError if u is not unitary within tol::kUnitary and
/// DimensionError on a size mismatch. Labels default to "1".."N".
Tomogram tomogram(const DensityMatrix& rho, const ComplexMatrix& u,
                  const std::optional<IndexBijection>& labels = std::nullopt);

/// Distribution of factor `keep` (0-based) of a product outcome space with
/// the given factor dimensions (first factor major).
std::vector<double> marginal(const Tomogram& t, const std::vector<Index>& dims,
                             std::size_t keep);

/// Two-factor form: sums out factor `over` (Subsystem::First sums m1).
std::vector<double> marginal(const Tomogram& t, Index d1, Index d2,
                             Subsystem over);

/// u_1 (x) u_2 (x) ... (x) u_m.
ComplexMatrix kron_all(const std::vector<ComplexMatrix>& factors);

/// For each trial and each factor k: draw Haar local unitaries, compute the
/// marginal of factor k, redraw every other factor's unitary, and compare.
/// lhs = 0, rhs = worst sup-norm deviation, tolerance 1e-12.
/// Throws DimensionError unless prod(dims) == A.dim().
InequalityReport no_signaling_check(const DensityMatrix& A,
                                    const std::vector<Index>& dims, int trials,
                                    Seed seed);

/// [[A, 0], [0, 0]] of size n_tilde. Throws DimensionError if n_tilde < N.
DensityMatrix embed_pad(const DensityMatrix& A, Index n_tilde);

}  // namespace quditcorr
