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

#ifndef NEGAFF_REPORT_HPP
#define NEGAFF_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "negaff/exponent.hpp"
#include "negaff/rat.hpp"

namespace negaff {

enum class Status { Pass, Fail, Inconclusive };

std::string status_name(Status s);

/// First differing coefficient of a failed check.
struct Mismatch {
    std::string where;  // free-form locator, e.g. matrix entry or symbol
    Exponent ez, ew;
    Rat lhs, rhs;
};

/// Extent of the coefficients actually compared.
struct CheckedWindow {
    std::int64_t checked = 0;
    std::optional<Exponent> ez_lo, ez_hi, ew_lo, ew_hi;
    int truncation = 0;
    int fock_degree = 0;

    void note(const Exponent& ez, const Exponent& ew);
    void merge(const CheckedWindow& other);
};

/// Outcome of one comparison.
struct CheckOutcome {
    Status status = Status::Inconclusive;
    CheckedWindow window;
    std::optional<Mismatch> mismatch;
};

/// Folds several outcomes: any fail wins, then any inconclusive.
CheckOutcome combine(const std::vector<CheckOutcome>& parts);

struct VerifyReport {
    std::string id;
    int k = 0;
    int sector = 0;
    int truncation = 0;
    int fock_degree = 0;
    int sector_range = 0;
    Status status = Status::Inconclusive;
    CheckedWindow window;
    std::optional<Mismatch> mismatch;
};

VerifyReport make_report(const std::string& id, int k, int sector, const CheckOutcome& outcome);

}  // namespace negaff

#endif
