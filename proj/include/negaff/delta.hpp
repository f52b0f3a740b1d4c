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

#ifndef NEGAFF_DELTA_HPP
#define NEGAFF_DELTA_HPP

#include <optional>

#include "negaff/compare.hpp"
#include "negaff/series.hpp"

namespace negaff {

/// Truncated formal delta function: sum of (w/z)^n for |n| <= N, with
/// window |n| <= N. Region None.
FracSeries2 delta(int N);

/// w d/dw delta(w/z): coefficient n at (w/z)^n, |n| <= N.
FracSeries2 w_d_delta(int N);

/// (w/z)^s delta(w/z), the delta function supported on the coset s + Z.
FracSeries2 delta_twisted(const Exponent& s, int N);

/// Safe-window rule: only |n| <= N - spread on the delta antidiagonal
/// (measured by the w exponent) is asserted. Empty when N < spread.
WindowPtr safe_window(int N, int spread);

/// -k z w / (z - w)^2 expanded in the given region up to (w/z)^(N+1) or
/// (z/w)^(N+1), written out term by term.
FracSeries2 double_pole(int k, Region region, int N);

/// Checks f(z, w) delta(w/z) == f(z, z) delta(w/z) coefficient-wise.
/// The diagonal f(z, z) is computed from f unless given explicitly.
CheckOutcome substitution_check(const FracSeries2& f, int N,
                                const std::optional<FracSeries2>& diagonal_value = std::nullopt);

/// Region difference of -kzw/(z-w)^2 against -k w d/dw delta on the safe
/// window |n| <= N - 2.
CheckOutcome region_difference_check(int k, int N);

}  // namespace negaff

#endif
