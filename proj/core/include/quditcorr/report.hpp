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

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <string>

#include "quditcorr/linalg.hpp"

namespace quditcorr {

/// Outcome of evaluating one inequality lhs >= rhs.
///
/// margin = lhs - rhs and pass <=> margin >= -tolerance. An infinite lhs
/// (support violation in a relative entropy) gives margin = +inf and the
/// inequality holds vacuously; `details["support_violation"]` flags it.
struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool pass = true;
  double tolerance = 0.0;
  std::string digest;
  std::map<std::string, double> details;
};

InequalityReport make_report(std::string name, double lhs, double rhs,
                             double tolerance, std::string digest = {});

/// 16-hex-digit FNV-1a digest of the matrix shape and entries.
std::string digest(const ComplexMatrix& a);
std::string seed_digest(std::uint64_t seed);

/// Non-finite doubles are emitted as the strings "inf", "-inf", "nan".
nlohmann::json to_json(const InequalityReport& r);

std::string csv_header();
std::string to_csv(const InequalityReport& r);

}  // namespace quditcorr
