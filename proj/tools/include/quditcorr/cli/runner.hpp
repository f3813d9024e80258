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

#include <quditcorr/linalg.hpp>
#include <quditcorr/random.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace quditcorr::cli {

enum class OutputFormat { Json, Csv };

/// Exit codes of run().
inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInvalidInput = 2;

struct RunConfig {
  std::string command;  // maps | ineq | tomo | bell | fixtures
  std::string action;   // leaf subcommand; empty for fixtures

  std::optional<std::filesystem::path> state;
  std::optional<std::filesystem::path> unitary;
  std::optional<std::filesystem::path> output;      // stdout when unset
  std::optional<std::filesystem::path> violations;  // sidecar override
  std::filesystem::path fixtures_dir = ".";

  int trials = 1;
  Seed seed = 0;
  std::optional<double> tolerance;  // replaces every report's tolerance
  OutputFormat format = OutputFormat::Json;
  unsigned jobs = 1;

  Index n = 3;
  double q = 1.0;
  std::string kind = "m2";
  std::string variant = "portrait";
  std::string reduction = "ptrace";
  std::string perm = "1234";
  std::vector<Index> dims{2, 2};
  std::string bijection;  // empty: numeric labels
  int restarts = 32;
  int settings = 100;
  int terms = 8;
  int points = 100;
  bool strict_pairing = false;

  /// trials >= 1, tolerance > 0, jobs >= 1. Throws ParseError.
  void validate() const;
};

/// Executes one subcommand. Reports go to `out` (or config.output) one per
/// line; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs them.
/// Help prints to `out` and returns 0; parse errors return 2.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

ComplexMatrix bell_fixture();
ComplexMatrix mixed4_fixture();
ComplexMatrix qutrit_test_fixture();

/// Writes bell.json, mixed4.json and qutrit_test.json into `dir`.
std::vector<std::filesystem::path> write_fixtures(const std::filesystem::path& dir);

}  // namespace quditcorr::cli
