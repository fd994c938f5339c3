// Copyright 2026 The qcenter Authors
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

// Command runners shared by the C API and the tests. Each returns the
// report and any files the command produces; errors propagate as exceptions.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcenter/report.hpp"

namespace qcenter {

struct SuiteOptions {
  std::optional<int> degree;  // command-specific default when unset
  int hbar = 2;
  bool even = false;
  int hexagon_sign = 1;
  std::string associator_path;
  unsigned seed = 0;
  int jobs = 1;
  bool timing = false;
};

struct Artifact {
  std::string name;
  std::string content;
};

struct SuiteResult {
  Report report;
  std::vector<Artifact> artifacts;
  /// 0 if every record passes, else 1.
  int exit_code() const { return report.passed() ? 0 : 1; }
};

/// Dispatches on the command name; `input` is the algebra file path (may be
/// empty for solve-associator).
SuiteResult run_command(const std::string& command, const std::string& input, const SuiteOptions& opt);

SuiteResult run_check(const std::string& input, const SuiteOptions& opt);
SuiteResult run_double(const std::string& input, const SuiteOptions& opt);
SuiteResult run_poisson_center(const std::string& input, const SuiteOptions& opt);
SuiteResult run_duflo(const std::string& input, const SuiteOptions& opt);
SuiteResult run_solve_associator(const std::string& input, const SuiteOptions& opt);
SuiteResult run_ek_verify(const std::string& input, const SuiteOptions& opt);

/// Names of the bundled example files (without directory).
std::vector<std::string> bundled_algebras();
std::string bundled_path(const std::string& name);

}  // namespace qcenter
