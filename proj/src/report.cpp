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

#include "negaff/report.hpp"

#include <algorithm>

namespace negaff {

std::string status_name(Status s) {
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::Inconclusive:
        return "inconclusive";
    }
    return "";
}

void CheckedWindow::note(const Exponent& ez, const Exponent& ew) {
    ++checked;
    if (!ez_lo || ez < *ez_lo) ez_lo = ez;
    if (!ez_hi || ez > *ez_hi) ez_hi = ez;
    if (!ew_lo || ew < *ew_lo) ew_lo = ew;
    if (!ew_hi || ew > *ew_hi) ew_hi = ew;
}

void CheckedWindow::merge(const CheckedWindow& o) {
    checked += o.checked;
    if (o.ez_lo && (!ez_lo || *o.ez_lo < *ez_lo)) ez_lo = o.ez_lo;
    if (o.ez_hi && (!ez_hi || *o.ez_hi > *ez_hi)) ez_hi = o.ez_hi;
    if (o.ew_lo && (!ew_lo || *o.ew_lo < *ew_lo)) ew_lo = o.ew_lo;
    if (o.ew_hi && (!ew_hi || *o.ew_hi > *ew_hi)) ew_hi = o.ew_hi;
    truncation = std::max(truncation, o.truncation);
    fock_degree = std::max(fock_degree, o.fock_degree);
}

CheckOutcome combine(const std::vector<CheckOutcome>& parts) {
    CheckOutcome out;
    out.status = Status::Pass;
    for (const auto& p : parts) {
        out.window.merge(p.window);
        if (p.status == Status::Fail) {
            if (out.status != Status::Fail) out.mismatch = p.mismatch;
            out.status = Status::Fail;
        } else if (p.status == Status::Inconclusive && out.status == Status::Pass) {
            out.status = Status::Inconclusive;
        }
    }
    if (parts.empty()) out.status = Status::Inconclusive;
    return out;
}

VerifyReport make_report(const std::string& id, int k, int sector, const CheckOutcome& outcome) {
    VerifyReport r;
    r.id = id;
    r.k = k;
    r.sector = sector;
    r.status = outcome.status;
    r.window = outcome.window;
    r.truncation = outcome.window.truncation;
    r.fock_degree = outcome.window.fock_degree;
    r.mismatch = outcome.mismatch;
    return r;
}

}  // namespace negaff
