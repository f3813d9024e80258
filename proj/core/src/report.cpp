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

#include "quditcorr/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace quditcorr {

InequalityReport make_report(std::string name, double lhs, double rhs,
                             double tolerance, std::string digest) {
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = (std::isinf(lhs) && lhs > 0) ? lhs : lhs - rhs;
  r.tolerance = tolerance;
  r.pass = r.margin >= -tolerance;
  r.digest = std::move(digest);
  return r;
}

std::string digest(const ComplexMatrix& a) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= p[i];
      h *= 0x100000001b3ULL;
    }
  };
  const std::int64_t shape[2] = {static_cast<std::int64_t>(a.rows()),
                                 static_cast<std::int64_t>(a.cols())};
  mix(shape, sizeof(shape));
  for (Index r = 0; r < a.rows(); ++r)
    for (Index c = 0; c < a.cols(); ++c) {
      const double parts[2] = {a(r, c).real(), a(r, c).imag()};
      mix(parts, sizeof(parts));
    }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string seed_digest(std::uint64_t seed) { return "seed:" + std::to_string(seed); }

namespace {

nlohmann::json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

std::string csv_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  // Same shortest round-trip formatting as the JSON writer.
  return nlohmann::json(x).dump();
}

}  // namespace

nlohmann::json to_json(const InequalityReport& r) {
  nlohmann::json j{{"name", r.name},          {"lhs", number(r.lhs)},
                   {"rhs", number(r.rhs)},    {"margin", number(r.margin)},
                   {"pass", r.pass},          {"tolerance", number(r.tolerance)},
                   {"digest", r.digest}};
  if (!r.details.empty()) {
    nlohmann::json d = nlohmann::json::object();
    for (const auto& [k, v] : r.details) d[k] = number(v);
    j["details"] = std::move(d);
  }
  return j;
}

std::string csv_header() { return "name,lhs,rhs,margin,pass,tolerance,digest"; }

std::string to_csv(const InequalityReport& r) {
  std::ostringstream os;
  os << r.name << ',' << csv_number(r.lhs) << ',' << csv_number(r.rhs) << ','
     << csv_number(r.margin) << ',' << (r.pass ? "true" : "false") << ','
     << csv_number(r.tolerance) << ',' << r.digest;
  return os.str();
}

}  // namespace quditcorr
