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

#ifndef NEGAFF_PARAFERMION_HPP
#define NEGAFF_PARAFERMION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "negaff/fock.hpp"
#include "negaff/series.hpp"

namespace negaff {

/// A_alpha (charge +alpha) or A*_{-alpha} (charge -alpha).
enum class AType { A, AStar };

int charge(AType a);
std::string atype_name(AType a);

/// <a, b> for the charges of two fields; <alpha, alpha> = 2.
int pairing(AType a, AType b);

enum class PfKind { NO_AA, NO_AAstar, NO_AstarAstar, NO_AstarA, Unit };

std::string pf_kind_name(PfKind k);

struct PfSymbol {
    PfKind kind = PfKind::Unit;
    Var first = Var::Z, second = Var::W;

    std::string label() const;
    friend bool operator==(const PfSymbol& a, const PfSymbol& b) = default;
    friend bool operator<(const PfSymbol& a, const PfSymbol& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    }
};

/// Normal-ordered symbol for first(x) second(y).
PfSymbol no_symbol(AType first, Var x, AType second, Var y);

/// Canonical (z, w) argument order via symmetry of the normal product.
PfSymbol normalize_swap(const PfSymbol& s);

/// Canonical linear combination of symbols with scalar prefactors. Entries
/// sorted by symbol, at most one per symbol.
struct PfNormalForm {
    std::vector<std::pair<PfSymbol, FracSeries2>> entries;
    bool inconclusive = false;

    const FracSeries2* find(PfKind kind) const;
};

/// (x - y)^r expanded with |y| < |x|, where x is the variable of the first
/// field: x = z gives InnerW, x = w gives InnerZ.
FracSeries2 kernel_power(const Rat& r, Region region, int N);

/// (x - y)^{-<a,b>/k}: the dressing kernel of first(x) second(y).
FracSeries2 kernel(AType first, AType second, int k, Region region, int N);
FracSeries2 kernel_inverse(AType first, AType second, int k, Region region, int N);

/// Contraction scalar: -kzw/(z-w)^2 for opposite charges, zero otherwise,
/// expanded in the region of the product order.
FracSeries2 contraction(AType first, AType second, int k, Region region, int N);

/// Decomposes the dressed product first(x) second(y) (x-y)^{-<a,b>/k}
/// into a normal-ordered symbol with the kernel as prefactor plus the
/// contraction. first_var = Z requires InnerW, first_var = W requires
/// InnerZ; throws std::invalid_argument otherwise.
PfNormalForm product_to_normal_form(AType first, Var first_var, AType second, int k, Region region, int N);

/// Symbol-wise a - b on the window; cancelled symbols are dropped. An
/// empty window (nothing authoritative) sets the inconclusive flag.
PfNormalForm nf_subtract(const PfNormalForm& a, const PfNormalForm& b, const Zone& window);

/// Formal radial exchange phase (-1)^{ab/(-k)}: the exponent, and the
/// phase itself when the exponent is an integer.
struct PhaseDescriptor {
    Rat exponent;
    std::optional<int> phase;
};

PhaseDescriptor radial_exchange_phase(AType a, AType b, int k);

/// Deterministic rendering, symbols in the order NO_AA, NO_AAstar,
/// NO_AstarAstar, NO_AstarA, Unit.
std::string pretty(const PfNormalForm& nf);

}  // namespace negaff

#endif
