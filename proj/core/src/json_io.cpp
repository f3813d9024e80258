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

#include "quditcorr/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace quditcorr {

namespace {

nlohmann::json part_to_json(const ComplexMatrix& a, bool imag) {
  nlohmann::json rows = nlohmann::json::array();
  for (Index r = 0; r < a.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Index c = 0; c < a.cols(); ++c) row.push_back(imag ? a(r, c).imag() : a(r, c).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

void read_part(const nlohmann::json& j, const char* key, Index rows, Index cols,
               ComplexMatrix& out, bool imag) {
  const auto& part = j.at(key);
  if (!part.is_array() || static_cast<Index>(part.size()) != rows) {
    throw ParseError(std::string("matrix JSON: \"") + key + "\" must have `rows` rows");
  }
  for (Index r = 0; r < rows; ++r) {
    const auto& row = part[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw ParseError(std::string("matrix JSON: row of \"") + key + "\" must have `cols` entries");
    }
    for (Index c = 0; c < cols; ++c) {
      const auto& v = row[static_cast<std::size_t>(c)];
      if (!v.is_number()) throw ParseError("matrix JSON: entries must be numbers");
      const double x = v.get<double>();
      if (!std::isfinite(x)) throw ParseError("matrix JSON: non-finite entry");
      if (imag) {
        out(r, c).imag(x);
      } else {
        out(r, c).real(x);
      }
    }
  }
}

}  // namespace

nlohmann::json matrix_to_json(const ComplexMatrix& a) {
  return nlohmann::json{{"rows", a.rows()},
                        {"cols", a.cols()},
                        {"re", part_to_json(a, false)},
                        {"im", part_to_json(a, true)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("matrix JSON: expected an object");
  try {
    const auto& jr = j.at("rows");
    const auto& jc = j.at("cols");
    if (!jr.is_number_integer() || !jc.is_number_integer()) {
      throw ParseError("matrix JSON: rows and cols must be integers");
    }
    const auto rows = jr.get<Index>();
    const auto cols = jc.get<Index>();
    if (rows < 1 || cols < 1) throw ParseError("matrix JSON: rows and cols must be positive");
    ComplexMatrix a = ComplexMatrix::Zero(rows, cols);
    read_part(j, "re", rows, cols, a, false);
    if (j.contains("im")) read_part(j, "im", rows, cols, a, true);
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what());
  }
}

DensityMatrix density_from_json(const nlohmann::json& j) {
  return DensityMatrix::from(matrix_from_json(j));
}

ComplexMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return matrix_from_json(j);
}

DensityMatrix load_density(const std::filesystem::path& path) {
  return DensityMatrix::from(load_matrix(path));
}

void save_matrix(const std::filesystem::path& path, const ComplexMatrix& a) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << matrix_to_json(a).dump() << '\n';
}

}  // namespace quditcorr
