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

#include "negaff/delta.hpp"

#include <set>

namespace negaff {

namespace {

Zone antidiagonal() { return Zone().with_t(Exponent(0), Exponent(0)); }

FracSeries2 delta_with(int N, bool weighted) {
    if (N < 0) throw std::invalid_argument("delta: negative order");
    std::map<ExpPair, Rat> terms;
    for (int n = -N; n <= N; ++n) terms.emplace(ExpPair(Exponent(-n), Exponent(n)), weighted ? Rat(n) : Rat(1));
    Zone box = Zone().with_ez(Exponent(-N), Exponent(N)).with_ew(Exponent(-N), Exponent(N));
    return FracSeries2(std::move(terms), antidiagonal(), Window::zone(box));
}

}  // namespace

FracSeries2 delta(int N) { return delta_with(N, false); }

FracSeries2 w_d_delta(int N) { return delta_with(N, true); }

FracSeries2 delta_twisted(const Exponent& s, int N) { return mul(monomial(-s, s), delta(N)); }

WindowPtr safe_window(int N, int spread) {
    if (N - spread < 0) return Window::zone(Zone::empty());
    Exponent m(N - spread);
    return Window::zone(Zone().with_ew(-m, m));
}

FracSeries2 double_pole(int k, Region region, int N) {
    std::map<ExpPair, Rat> terms;
    for (int n = 1; n <= N + 1; ++n) {
        ExpPair p = region == Region::InnerW ? ExpPair(Exponent(-n), Exponent(n)) : ExpPair(Exponent(n), Exponent(-n));
        terms.emplace(p, Rat(-k) * Rat(n));
    }
    Zone hull = antidiagonal();
    Zone window;
    if (region == Region::InnerW) {
        hull = hull.with_ew(Exponent(1), std::nullopt);
        window = Zone().with_ew(std::nullopt, Exponent(N + 1));
    } else {
        hull = hull.with_ez(Exponent(1), std::nullopt);
        window = Zone().with_ez(std::nullopt, Exponent(N + 1));
    }
    return FracSeries2(std::move(terms), hull, Window::zone(window), region);
}

CheckOutcome substitution_check(const FracSeries2& f, int N, const std::optional<FracSeries2>& diagonal_value) {
    FracSeries2 g = diagonal_value ? *diagonal_value : diagonal(f);
    auto d = delta(N);
    auto lhs = mul(f, d);
    auto rhs = mul(g, d);
    // both sides may vanish identically; probe the delta support through
    // every term of f and g (and through the origin)
    std::set<Exponent> shifts = {Exponent(0)};
    for (const auto& [p, c] : f.terms()) shifts.insert(p.first + p.second);
    for (const auto& [p, c] : g.terms()) shifts.insert(p.first + p.second);
    std::vector<ExpPair> probes;
    for (const auto& t : shifts)
        for (int n = -N; n <= N; ++n) probes.emplace_back(t - Exponent(n), Exponent(n));
    auto out = compare_scalar(lhs, rhs, nullptr, probes, "substitution");
    out.window.truncation = N;
    return out;
}

CheckOutcome region_difference_check(int k, int N) {
    auto diff = region_difference(double_pole(k, Region::InnerW, N), double_pole(k, Region::InnerZ, N));
    auto target = scale(w_d_delta(N), Rat(-k));
    std::vector<ExpPair> probes;
    for (int n = -N; n <= N; ++n) probes.emplace_back(Exponent(-n), Exponent(n));
    auto out = compare_scalar(diff, target, safe_window(N, 2), probes, "region difference");
    out.window.truncation = N;
    return out;
}

}  // namespace negaff
