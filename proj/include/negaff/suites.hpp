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

#ifndef NEGAFF_SUITES_HPP
#define NEGAFF_SUITES_HPP

#include <string>
#include <vector>

#include "negaff/report.hpp"

namespace negaff {

struct SuiteOptions {
    int N = 6;
    int D = 4;
    int W = 2;
    bool literal_hy = false;
    bool literal_exchange = false;
};

/// heisenberg, delta, parafermion, realization, zalgebra, vacuum.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Reports of one suite at level k. Throws std::invalid_argument for an
/// unknown suite.
std::vector<VerifyReport> run_suite(const std::string& suite, int k, const SuiteOptions& opts);

std::vector<VerifyReport> delta_suite(int k, int N, int D);
std::vector<VerifyReport> parafermion_suite(int k, int N);

}  // namespace negaff

#endif
