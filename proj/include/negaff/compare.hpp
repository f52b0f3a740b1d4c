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

#ifndef NEGAFF_COMPARE_HPP
#define NEGAFF_COMPARE_HPP

#include <set>
#include <vector>

#include "negaff/report.hpp"
#include "negaff/series.hpp"

namespace negaff {

/// Coefficient-wise comparison of two series on the points where both are
/// authoritative (and, if given, inside `extra`). Every stored point of
/// either side is examined; `probes` adds points that count as checked
/// even when both sides vanish there. No checked point means inconclusive.
///
/// `diff(l, r, mismatch)` returns true and fills the mismatch when the
/// coefficients differ.
template <class C, class Diff>
CheckOutcome compare_series(const Series2<C>& lhs, const Series2<C>& rhs, const WindowPtr& extra, Diff diff,
                            const std::vector<ExpPair>& probes = {}) {
    std::set<ExpPair> points;
    for (const auto& [p, c] : lhs.terms()) points.insert(p);
    for (const auto& [p, c] : rhs.terms()) points.insert(p);
    points.insert(probes.begin(), probes.end());
    CheckOutcome out;
    out.status = Status::Pass;
    const C zero{};
    for (const auto& p : points) {
        if (extra && !extra->covers(Zone::point(p.first, p.second))) continue;
        if (!lhs.known(p) || !rhs.known(p)) continue;
        out.window.note(p.first, p.second);
        if (out.mismatch) continue;
        auto li = lhs.terms().find(p);
        auto ri = rhs.terms().find(p);
        const C& l = li == lhs.terms().end() ? zero : li->second;
        const C& r = ri == rhs.terms().end() ? zero : ri->second;
        Mismatch m;
        if (diff(l, r, m)) {
            m.ez = p.first;
            m.ew = p.second;
            out.mismatch = m;
            out.status = Status::Fail;
        }
    }
    if (out.window.checked == 0) out.status = Status::Inconclusive;
    return out;
}

inline CheckOutcome compare_scalar(const FracSeries2& lhs, const FracSeries2& rhs, const WindowPtr& extra = nullptr,
                                   const std::vector<ExpPair>& probes = {}, const std::string& where = "scalar") {
    return compare_series(
        lhs, rhs, extra,
        [&](const Rat& l, const Rat& r, Mismatch& m) {
            if (l == r) return false;
            m.where = where;
            m.lhs = l;
            m.rhs = r;
            return true;
        },
        probes);
}

}  // namespace negaff

#endif
