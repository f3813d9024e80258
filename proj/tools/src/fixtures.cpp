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

#include <quditcorr/cli/runner.hpp>
#include <quditcorr/json_io.hpp>

namespace quditcorr::cli {

ComplexMatrix bell_fixture() {
  ComplexMatrix r = ComplexMatrix::Zero(4, 4);
  r(0, 0) = r(0, 3) = r(3, 0) = r(3, 3) = 0.5;
  return r;
}

ComplexMatrix mixed4_fixture() { return 0.25 * ComplexMatrix::Identity(4, 4); }

ComplexMatrix qutrit_test_fixture() {
  ComplexMatrix a(3, 3);
  a << 0.5, 0.1, 0.2,
       0.1, 0.3, 0.0,
       0.2, 0.0, 0.2;
  return a;
}

std::vector<std::filesystem::path> write_fixtures(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const std::vector<std::pair<std::string, ComplexMatrix>> all{
      {"bell.json", bell_fixture()},
      {"mixed4.json", mixed4_fixture()},
      {"qutrit_test.json", qutrit_test_fixture()},
  };
  std::vector<std::filesystem::path> written;
  for (const auto& [name, m] : all) {
    written.push_back(dir / name);
    save_matrix(written.back(), m);
  }
  return written;
}

}  // namespace quditcorr::cli
