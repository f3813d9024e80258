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

#include <filesystem>

#include "quditcorr/linalg.hpp"

namespace quditcorr {

/// Matrix schema: {"rows": n, "cols": m, "re": [[...]], "im": [[...]]}.
/// "im" may be omitted for real matrices when reading.
nlohmann::json matrix_to_json(const ComplexMatrix& a);

/// Throws ParseError on schema violations or non-finite entries.
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// matrix_from_json followed by DensityMatrix validation.
DensityMatrix density_from_json(const nlohmann::json& j);

ComplexMatrix load_matrix(const std::filesystem::path& path);
DensityMatrix load_density(const std::filesystem::path& path);
void save_matrix(const std::filesystem::path& path, const ComplexMatrix& a);

}  // namespace quditcorr
