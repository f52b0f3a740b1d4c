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

#include "negaff/lattice.hpp"

namespace negaff {

namespace {

void put(LatticeVector& v, int n, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = v.try_emplace(n, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

}  // namespace

LatticeVector lattice_basis(int n) { return {{n, Rat(1)}}; }

LatticeVector shift(int m, const LatticeVector& v) {
    LatticeVector out;
    for (const auto& [n, c] : v) put(out, n + m, c);
    return out;
}

LatticeVector h0_act(const LatticeVector& v) {
    LatticeVector out;
    for (const auto& [n, c] : v) put(out, n, Rat(2L * n) * c);
    return out;
}

Exponent sector_exponent(const SectorPower& p, int n) { return Exponent(2) * p.a * Exponent(n); }

Exponent commute_z_past_e(const SectorPower& p, int m) { return Exponent(2) * p.a * Exponent(m); }

}  // namespace negaff
