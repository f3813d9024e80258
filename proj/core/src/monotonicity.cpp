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

#include "quditcorr/monotonicity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "quditcorr/entropy.hpp"

namespace quditcorr {

std::vector<Perm4> all_perm4() {
  std::vector<Perm4> out;
  Perm4 p = kIdentityPerm4;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

void require_4x4(const DensityMatrix& rho, const char* what) {
  if (rho.dim() != 4) {
    std::ostringstream os;
    os << what << ": expected a 4x4 density matrix, got " << rho.dim() << "x" << rho.dim();
    throw DimensionError(os.str());
  }
}

// P with P(i, perm[i]) = 1, so (P a P^T)(i, j) = a(perm[i], perm[j]).
ComplexMatrix permutation_matrix(const Perm4& perm) {
  ComplexMatrix p = ComplexMatrix::Zero(4, 4);
  for (Index i = 0; i < 4; ++i) p(i, perm[static_cast<std::size_t>(i)]) = 1.0;
  return p;
}

// Exchanges basis vectors 3 and 4 (1-based).
const ComplexMatrix& swap34() {
  static const ComplexMatrix w = permutation_matrix({0, 1, 3, 2});
  return w;
}

std::vector<Index> to_vector(const Perm4& p) { return {p.begin(), p.end()}; }

}  // namespace

Reduction Reduction::partial_trace(Index dim1, Index dim2) {
  if (dim1 < 1 || dim2 < 1) throw DimensionError("Reduction: factor dimensions must be positive");
  return Reduction(ReductionKind::PartialTrace, dim1, dim2, kIdentityPerm4);
}

Reduction Reduction::qudit32(const Perm4& perm) {
  std::array<bool, 4> seen{};
  for (Index p : perm) {
    if (p < 0 || p > 3 || seen[static_cast<std::size_t>(p)]) {
      throw DimensionError("Reduction: not a permutation of {0,1,2,3}");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  return Reduction(ReductionKind::Qudit32Portrait, 2, 2, perm);
}

Reduction Reduction::alternative() {
  return Reduction(ReductionKind::Alternative, 2, 2, kIdentityPerm4);
}

std::string Reduction::name() const {
  std::ostringstream os;
  switch (kind_) {
    case ReductionKind::PartialTrace:
      os << "ptrace[" << dim1_ << 'x' << dim2_ << ']';
      break;
    case ReductionKind::Qudit32Portrait:
      os << "j32[perm=";
      for (Index p : perm_) os << p + 1;
      os << ']';
      break;
    case ReductionKind::Alternative:
      os << "alt";
      break;
  }
  return os.str();
}

DensityMatrix Reduction::apply(const DensityMatrix& rho) const {
  switch (kind_) {
    case ReductionKind::PartialTrace:
      return quditcorr::partial_trace(rho, dim1_, dim2_, Subsystem::First);
    case ReductionKind::Qudit32Portrait:
      return permuted_portrait(rho, perm_);
    case ReductionKind::Alternative:
      return alt_reduction(rho);
  }
  throw DimensionError("Reduction: unknown kind");
}

ComplexMatrix Reduction::lift(const ComplexMatrix& reduced) const {
  switch (kind_) {
    case ReductionKind::PartialTrace:
      return tensor_product(ComplexMatrix::Identity(dim1_, dim1_), reduced);
    case ReductionKind::Qudit32Portrait: {
      const ComplexMatrix p = permutation_matrix(perm_);
      return p.transpose() * tensor_product(ComplexMatrix::Identity(2, 2), reduced) * p;
    }
    case ReductionKind::Alternative:
      return swap34().transpose() *
             tensor_product(reduced, ComplexMatrix::Identity(2, 2)) * swap34();
  }
  throw DimensionError("Reduction: unknown kind");
}

DensityMatrix alt_reduction(const DensityMatrix& rho) {
  require_4x4(rho, "alt_reduction");
  const ComplexMatrix& r = rho.matrix();
  ComplexMatrix out(2, 2);
  out(0, 0) = r(0, 0) + r(1, 1);
  out(0, 1) = r(0, 3) + r(1, 2);
  out(1, 0) = r(3, 0) + r(2, 1);
  out(1, 1) = r(2, 2) + r(3, 3);
  try {
    return DensityMatrix::from(out);
  } catch (const InvalidDensityError& e) {
    throw InvalidDensityError(std::string("alt_reduction produced a non-density matrix: ") + e.what());
  }
}

DensityMatrix permuted_portrait(const DensityMatrix& rho, const Perm4& perm) {
  require_4x4(rho, "permuted_portrait");
  const ComplexMatrix r = permute_indices(rho.matrix(), to_vector(perm));
  ComplexMatrix out(2, 2);
  out(0, 0) = r(0, 0) + r(2, 2);
  out(0, 1) = r(0, 1) + r(2, 3);
  out(1, 0) = r(1, 0) + r(3, 2);
  out(1, 1) = r(1, 1) + r(3, 3);
  return DensityMatrix::from(out);
}

InequalityReport check_monotonicity(const DensityMatrix& rho,
                                    const DensityMatrix& sigma,
                                    const Reduction& reduction) {
  if (rho.dim() != sigma.dim() || rho.dim() != reduction.input_dim()) {
    throw DimensionError("check_monotonicity: input sizes do not match the reduction");
  }
  const double full = relative_entropy(rho, sigma);
  const std::string name = "monotonicity[" + reduction.name() + "]";
  std::string dg = digest(rho.matrix()) + "/" + digest(sigma.matrix());
  if (std::isinf(full)) {
    InequalityReport r = make_report(name, full, 0.0, 1e-9, std::move(dg));
    r.details["support_violation"] = 1.0;
    return r;
  }
  const double reduced = relative_entropy(reduction.apply(rho), reduction.apply(sigma));
  return make_report(name, full, reduced, 1e-9, std::move(dg));
}

double equality_residual(const DensityMatrix& rho, const DensityMatrix& sigma,
                         const Reduction& reduction) {
  if (rho.dim() != sigma.dim() || rho.dim() != reduction.input_dim()) {
    throw DimensionError("equality_residual: input sizes do not match the reduction");
  }
  auto full_rank_log = [](const DensityMatrix& m, const char* which) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m.matrix(), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() <= tol::kEigenFloor) {
      throw SupportError(std::string("equality_residual: ") + which + " is rank deficient");
    }
    return matrix_ln(m);
  };
  const ComplexMatrix full = full_rank_log(rho, "rho") - full_rank_log(sigma, "sigma");
  const ComplexMatrix reduced = full_rank_log(reduction.apply(rho), "R(rho)") -
                                full_rank_log(reduction.apply(sigma), "R(sigma)");
  return max_abs(full - reduction.lift(reduced));
}

}  // namespace quditcorr
