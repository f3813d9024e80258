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

#include "quditcorr/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace quditcorr {

std::string_view to_string(BijectionKind k) {
  switch (k) {
    case BijectionKind::TwoQubit: return "two_qubit";
    case BijectionKind::Qudit32: return "qudit32";
    case BijectionKind::QubitQutrit: return "qubit_qutrit";
  }
  return "unknown";
}

BijectionKind bijection_kind_from_string(std::string_view s) {
  if (s == "two_qubit") return BijectionKind::TwoQubit;
  if (s == "qudit32") return BijectionKind::Qudit32;
  if (s == "qubit_qutrit") return BijectionKind::QubitQutrit;
  throw ParseError("unknown index bijection '" + std::string(s) + "'");
}

IndexBijection::IndexBijection(BijectionKind kind) : kind_(kind) {
  switch (kind) {
    case BijectionKind::TwoQubit:
      labels_ = {"1/2,1/2", "1/2,-1/2", "-1/2,1/2", "-1/2,-1/2"};
      break;
    case BijectionKind::Qudit32:
      labels_ = {"3/2", "1/2", "-1/2", "-3/2"};
      break;
    case BijectionKind::QubitQutrit:
      // |0> is listed as |1/2,1> in the source table, which would collide
      // with |-2>; it takes the remaining label |1/2,-1>.
      labels_ = {"1/2,1", "1/2,0", "1/2,-1", "-1/2,1", "-1/2,0", "-1/2,-1"};
      aliases_ = {"-2", "-1", "0", "1", "2", "an"};
      break;
  }
}

std::size_t IndexBijection::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i + 1;
  for (std::size_t i = 0; i < aliases_.size(); ++i)
    if (aliases_[i] == label) return i + 1;
  throw ParseError("label '" + std::string(label) + "' is not part of the " +
                   std::string(to_string(kind_)) + " bijection");
}

const std::string& IndexBijection::label_of(std::size_t index) const {
  if (index < 1 || index > labels_.size()) {
    throw ParseError("index out of range for the " + std::string(to_string(kind_)) + " bijection");
  }
  return labels_[index - 1];
}

IndexBijection index_bijection(BijectionKind kind) { return IndexBijection(kind); }

Tomogram tomogram(const DensityMatrix& rho, const ComplexMatrix& u,
                  const std::optional<IndexBijection>& labels) {
  if (u.rows() != rho.dim() || u.cols() != rho.dim()) {
    throw DimensionError("tomogram: unitary and density sizes differ");
  }
  const double defect = unitarity_defect(u);
  if (!(defect <= tol::kUnitary)) {
    std::ostringstream os;
    os << "tomogram: matrix is not unitary (defect " << defect << ")";
    throw NonUnitaryError(os.str());
  }
  const Index n = rho.dim();
  Tomogram t;
  t.probs.resize(static_cast<std::size_t>(n));
  // <k| u rho u^dagger |k> = sum_j (u rho)_kj conj(u_kj).
  const ComplexMatrix ur = u * rho.matrix();
  for (Index k = 0; k < n; ++k) {
    double p = ur.row(k).cwiseProduct(u.row(k).conjugate()).sum().real();
    if (p < 0.0 && p >= -tol::kProbabilityClamp) p = 0.0;
    t.probs[static_cast<std::size_t>(k)] = p;
  }
  t.unitary_digest = digest(u);
  if (labels) {
    if (static_cast<Index>(labels->size()) != n) {
      throw DimensionError("tomogram: label table size differs from the dimension");
    }
    t.index_labels = labels->labels();
  } else {
    for (Index k = 1; k <= n; ++k) t.index_labels.push_back(std::to_string(k));
  }
  return t;
}

std::vector<double> marginal(const Tomogram& t, const std::vector<Index>& dims,
                             std::size_t keep) {
  if (dims.empty() || keep >= dims.size()) {
    throw DimensionError("marginal: factor index out of range");
  }
  Index total = 1;
  for (Index d : dims) {
    if (d < 1) throw DimensionError("marginal: factor dimensions must be positive");
    total *= d;
  }
  if (total != static_cast<Index>(t.probs.size())) {
    std::ostringstream os;
    os << "marginal: " << t.probs.size() << " outcomes do not factor into the given dims";
    throw DimensionError(os.str());
  }
  Index stride = 1;
  for (std::size_t f = keep + 1; f < dims.size(); ++f) stride *= dims[f];
  const Index dk = dims[keep];
  std::vector<double> out(static_cast<std::size_t>(dk), 0.0);
  for (Index flat = 0; flat < total; ++flat) {
    out[static_cast<std::size_t>((flat / stride) % dk)] += t.probs[static_cast<std::size_t>(flat)];
  }
  return out;
}

std::vector<double> marginal(const Tomogram& t, Index d1, Index d2, Subsystem over) {
  return marginal(t, {d1, d2}, over == Subsystem::First ? 1 : 0);
}

ComplexMatrix kron_all(const std::vector<ComplexMatrix>& factors) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (const auto& f : factors) out = tensor_product(out, f);
  return out;
}

InequalityReport no_signaling_check(const DensityMatrix& A,
                                    const std::vector<Index>& dims, int trials,
                                    Seed seed) {
  Index total = 1;
  for (Index d : dims) {
    if (d < 1) throw DimensionError("no_signaling_check: dimensions must be positive");
    total *= d;
  }
  if (dims.empty() || total != A.dim()) {
    std::ostringstream os;
    os << "no_signaling_check: product of dims is " << total << ", matrix is "
       << A.dim() << "x" << A.dim();
    throw DimensionError(os.str());
  }
  Engine engine = make_engine(seed);
  auto draw = [&](std::vector<ComplexMatrix>& us, std::size_t except) {
    for (std::size_t f = 0; f < dims.size(); ++f)
      if (f != except) us[f] = random_unitary(dims[f], engine);
  };
  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    for (std::size_t keep = 0; keep < dims.size(); ++keep) {
      std::vector<ComplexMatrix> us(dims.size());
      draw(us, dims.size());
      const auto before = marginal(tomogram(A, kron_all(us)), dims, keep);
      draw(us, keep);
      const auto after = marginal(tomogram(A, kron_all(us)), dims, keep);
      for (std::size_t i = 0; i < before.size(); ++i)
        worst = std::max(worst, std::abs(before[i] - after[i]));
    }
  }
  std::ostringstream name;
  name << "no_signaling[";
  for (std::size_t f = 0; f < dims.size(); ++f) name << (f ? "x" : "") << dims[f];
  name << ']';
  InequalityReport r = make_report(name.str(), 0.0, worst, 1e-12, digest(A.matrix()));
  r.details["max_deviation"] = worst;
  r.details["trials"] = trials;
  return r;
}

DensityMatrix embed_pad(const DensityMatrix& A, Index n_tilde) {
  if (n_tilde < A.dim()) {
    std::ostringstream os;
    os << "embed_pad: target size " << n_tilde << " is smaller than " << A.dim();
    throw DimensionError(os.str());
  }
  ComplexMatrix out = ComplexMatrix::Zero(n_tilde, n_tilde);
  out.topLeftCorner(A.dim(), A.dim()) = A.matrix();
  return DensityMatrix::from(out);
}

}  // namespace quditcorr
