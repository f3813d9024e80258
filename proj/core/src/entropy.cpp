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

#include "quditcorr/entropy.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "quditcorr/maps.hpp"

namespace quditcorr {

void EntropyParams::validate() const {
  if (!std::isfinite(q) || q <= 0.0) {
    std::ostringstream os;
    os << "deformation parameter q must be positive, got " << q;
    throw InvalidDensityError(os.str());
  }
}

bool EntropyParams::is_von_neumann() const {
  return std::abs(q - 1.0) < tol::kDeformationOne;
}

double entropy_of_spectrum(const RealVector& eigenvalues, double q) {
  EntropyParams{q}.validate();
  double s = 0.0;
  for (Index i = 0; i < eigenvalues.size(); ++i) {
    const double lambda = eigenvalues(i);
    if (lambda <= tol::kEigenFloor) continue;
    s -= lambda * deformed_log(lambda, q);
  }
  return s;
}

namespace {

RealVector eigenvalues_of(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

// Entropy of a Hermitian PSD matrix that is a density matrix up to a
// block of zeros (the raw M1/M2 outputs keep trace one).
double entropy_of(const ComplexMatrix& a, double q) {
  return entropy_of_spectrum(hermitian_eig(a).eigenvalues, q);
}

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_of_spectrum(eigenvalues_of(rho), 1.0);
}

double deformed_entropy(const DensityMatrix& rho, double q) {
  return entropy_of_spectrum(eigenvalues_of(rho), q);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionError("relative_entropy: rho and sigma differ in size");
  }
  const Spectrum r = hermitian_eig(rho.matrix());
  const Spectrum s = hermitian_eig(sigma.matrix());

  // Tr rho ln sigma = sum_j <v_j|rho|v_j> ln mu_j.
  const ComplexMatrix rho_in_sigma = s.eigenvectors.adjoint() * rho.matrix() * s.eigenvectors;
  double cross = 0.0;
  for (Index j = 0; j < s.eigenvalues.size(); ++j) {
    const double weight = rho_in_sigma(j, j).real();
    const double mu = s.eigenvalues(j);
    if (mu <= tol::kEigenFloor) {
      if (weight > tol::kSupportWeight) return std::numeric_limits<double>::infinity();
      continue;
    }
    cross += weight * std::log(mu);
  }
  const double neg_entropy = -entropy_of_spectrum(r.eigenvalues, 1.0);
  return neg_entropy - cross;
}

namespace {

struct SubadditivityTerms {
  double first = 0.0;
  double second = 0.0;
  double whole = 0.0;
  const char* label = "";
};

SubadditivityTerms subadditivity_terms(const DensityMatrix& a, double q,
                                       SubadditivityVariant variant) {
  EntropyParams{q}.validate();
  SubadditivityTerms t;
  t.whole = deformed_entropy(a, q);
  if (variant == SubadditivityVariant::RawMaps) {
    if (a.dim() != 3) {
      throw DimensionError("raw-map subadditivity is defined for qutrits (n = 3) only");
    }
    t.first = entropy_of(apply_map(m1_matrix(3), a.matrix()), q);
    t.second = entropy_of(apply_map(m2_matrix(3), a.matrix()), q);
    t.label = "raw";
  } else {
    if (a.dim() < 3) throw DimensionError("portrait subadditivity needs n >= 3");
    t.first = deformed_entropy(portrait_qubit(a), q);
    t.second = deformed_entropy(portrait_reduce(a), q);
    t.label = "portrait";
  }
  return t;
}

std::string describe(const char* what, const SubadditivityTerms& t, Index n, double q) {
  std::ostringstream os;
  os << what << '[' << t.label << ";n=" << n << ";q=" << q << ']';
  return os.str();
}

}  // namespace

InequalityReport check_subadditivity(const DensityMatrix& a, double q,
                                     SubadditivityVariant variant) {
  const SubadditivityTerms t = subadditivity_terms(a, q, variant);
  InequalityReport r = make_report(describe("subadditivity", t, a.dim(), q),
                                   t.first + t.second, t.whole, tol::kPsd,
                                   digest(a.matrix()));
  r.details["S_first"] = t.first;
  r.details["S_second"] = t.second;
  return r;
}

InequalityReport single_qudit_mutual_info(const DensityMatrix& a, double q,
                                          SubadditivityVariant variant) {
  const SubadditivityTerms t = subadditivity_terms(a, q, variant);
  InequalityReport r = make_report(describe("mutual_info", t, a.dim(), q),
                                   t.first + t.second, t.whole, tol::kPsd,
                                   digest(a.matrix()));
  r.details["I_q"] = r.margin;
  return r;
}

InequalityReport diagonal_inequality(const std::array<double, 3>& d) {
  double total = 0.0;
  for (double x : d) {
    if (!std::isfinite(x) || x < 0.0) {
      throw InvalidDensityError("diagonal_inequality: entries must be non-negative");
    }
    total += x;
  }
  if (std::abs(total - 1.0) > tol::kTrace) {
    throw InvalidDensityError("diagonal_inequality: entries must sum to 1");
  }
  auto xlnx = [](double x) { return x > 0.0 ? x * std::log(x) : 0.0; };
  const double lhs = -xlnx(d[0] + d[1]) - xlnx(d[0] + d[2]);
  const double rhs = -xlnx(d[0]);
  std::ostringstream name;
  name << "diagonal[" << d[0] << ';' << d[1] << ';' << d[2] << ']';
  return make_report(name.str(), lhs, rhs, 1e-12);
}

}  // namespace quditcorr
