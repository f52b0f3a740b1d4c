// Copyright 2026 The negaff Authors
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

#ifndef NEGAFF_HARNESS_HPP
#define NEGAFF_HARNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "negaff/report.hpp"

namespace negaff {

struct RunConfig {
    std::vector<int> levels = {1, 2, 3, 4};
    int truncation = 6;
    int fock_degree = 4;
    int sectors = 2;
    std::vector<std::string> suites = {"heisenberg", "delta", "parafermion", "realization", "zalgebra", "vacuum"};
    std::string format = "json";
    std::string out;     // empty: standard output
    std::string golden;  // empty: no golden files
    bool literal_hy = false;
    bool literal_exchange = false;
    int jobs = 0;  // 0: hardware concurrency
};

/// Error message for an invalid configuration.
std::optional<std::string> validate(const RunConfig& cfg);

struct SuiteReport {
    std::string suite;
    VerifyReport report;
};

struct RunResult {
    std::vector<SuiteReport> reports;  // ordered by (id, k, sector)
    int exit_code = 0;
};

/// 0 if every report passes, 2 if any fails, otherwise 3.
int exit_code(const std::vector<SuiteReport>& reports);

/// Runs every selected suite for every level. Independent (suite, k)
/// tasks run concurrently; the result does not depend on scheduling.
RunResult run(const RunConfig& cfg);

std::string emit_json(const RunConfig& cfg, const std::vector<SuiteReport>& reports);
std::string emit_text(const std::vector<SuiteReport>& reports);

/// Writes <dir>/<suite>/<k>/<identity>.json; returns the number of files.
int write_golden(const std::string& dir, const std::vector<SuiteReport>& reports);

}  // namespace negaff

#endif
