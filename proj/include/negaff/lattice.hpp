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

#ifndef NEGAFF_LATTICE_HPP
#define NEGAFF_LATTICE_HPP

#include <map>

#include "negaff/exponent.hpp"
#include "negaff/rat.hpp"

namespace negaff {

/// Element of C(Z alpha): e^{n alpha} -> coefficient.
using LatticeVector = std::map<int, Rat>;

/// The operator z^{a alpha}; on e^{n alpha} it contributes z^{2an}.
struct SectorPower {
    Exponent a;
};

LatticeVector lattice_basis(int n);

/// Multiplication by e^{m alpha}.
LatticeVector shift(int m, const LatticeVector& v);

/// h(0) with h = alpha: e^{n alpha} -> 2n e^{n alpha}.
LatticeVector h0_act(const LatticeVector& v);

/// 2 a n.
Exponent sector_exponent(const SectorPower& p, int n);

/// Scalar exponent from moving z^{a alpha} across e^{m alpha}: 2 a m.
Exponent commute_z_past_e(const SectorPower& p, int m);

}  // namespace negaff

#endif
