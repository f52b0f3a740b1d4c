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

#include "negaff/parafermion.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace negaff {

int charge(AType a) { return a == AType::A ? 1 : -1; }

std::string atype_name(AType a) { return a == AType::A ? "A" : "A*"; }

int pairing(AType a, AType b) { return 2 * charge(a) * charge(b); }

std::string pf_kind_name(PfKind k) {
    switch (k) {
        case PfKind::NO_AA: return "NO_AA";
        case PfKind::NO_AAstar: return "NO_AAstar";
        case PfKind::NO_AstarAstar: return "NO_AstarAstar";
        case PfKind::NO_AstarA: return "NO_AstarA";
        case PfKind::Unit: return "Unit";
    }
    return "?";
}

namespace {

const char* var_name(Var v) { return v == Var::Z ? "z" : "w"; }

Var other(Var v) { return v == Var::Z ? Var::W : Var::Z; }

}  // namespace

std::string PfSymbol::label() const {
    if (kind == PfKind::Unit) return "Unit";
    return pf_kind_name(kind) + "(" + var_name(first) + "," + var_name(second) + ")";
}

PfSymbol no_symbol(AType first, Var x, AType second, Var y) {
    PfSymbol s;
    if (first == AType::A)
        s.kind = second == AType::A ? PfKind::NO_AA : PfKind::NO_AAstar;
    else
        s.kind = second == AType::A ? PfKind::NO_AstarA : PfKind::NO_AstarAstar;
    s.first = x;
    s.second = y;
    return s;
}

PfSymbol normalize_swap(const PfSymbol& s) {
    if (s.kind == PfKind::Unit || s.first == Var::Z) return s;
    PfSymbol out = s;
    out.first = Var::Z;
    out.second = Var::W;
    if (s.kind == PfKind::NO_AAstar)
        out.kind = PfKind::NO_AstarA;
    else if (s.kind == PfKind::NO_AstarA)
        out.kind = PfKind::NO_AAstar;
    return out;
}

const FracSeries2* PfNormalForm::find(PfKind kind) const {
    for (const auto& [sym, pref] : entries)
        if (sym.kind == kind) return &pref;
    return nullptr;
}

FracSeries2 kernel_power(const Rat& r, Region region, int N) {
    Exponent e = r.to_exponent();
    auto lead = region == Region::InnerW ? monomial(e, Exponent(0)) : monomial(Exponent(0), e);
    return mul(lead, binom_expand(r, region, N));
}

FracSeries2 kernel(AType first, AType second, int k, Region region, int N) {
    return kernel_power(Rat(-pairing(first, second), k), region, N);
}

FracSeries2 kernel_inverse(AType first, AType second, int k, Region region, int N) {
    return kernel_power(Rat(pairing(first, second), k), region, N);
}

FracSeries2 contraction(AType first, AType second, int k, Region region, int N) {
    if (charge(first) == charge(second)) return FracSeries2({}, Zone::empty(), Window::full(), region);
    // z w / (z - w)^2 is symmetric; only the expansion variable changes.
    auto lead = region == Region::InnerW ? monomial(Exponent(-1), Exponent(1), Rat(-k))
                                         : monomial(Exponent(1), Exponent(-1), Rat(-k));
    return mul(lead, binom_expand(Rat(-2), region, N));
}

PfNormalForm product_to_normal_form(AType first, Var first_var, AType second, int k, Region region, int N) {
    Region expected = first_var == Var::Z ? Region::InnerW : Region::InnerZ;
    if (region != expected)
        throw std::invalid_argument("product_to_normal_form: region " + region_name(region) +
                                    " does not match the operator order");
    PfNormalForm nf;
    nf.entries.emplace_back(normalize_swap(no_symbol(first, first_var, second, other(first_var))),
                            kernel(first, second, k, region, N));
    auto c = contraction(first, second, k, region, N);
    if (!c.empty()) nf.entries.emplace_back(PfSymbol{}, c);
    std::sort(nf.entries.begin(), nf.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return nf;
}

PfNormalForm nf_subtract(const PfNormalForm& a, const PfNormalForm& b, const Zone& window) {
    PfNormalForm out;
    if (window.is_empty()) {
        out.inconclusive = true;
        return out;
    }
    std::map<PfSymbol, std::pair<const FracSeries2*, const FracSeries2*>> by_symbol;
    for (const auto& [s, p] : a.entries) by_symbol[s].first = &p;
    for (const auto& [s, p] : b.entries) by_symbol[s].second = &p;
    const FracSeries2 zero;
    auto w = Window::zone(window);
    for (const auto& [s, pq] : by_symbol) {
        auto d = region_difference(pq.first ? *pq.first : zero, pq.second ? *pq.second : zero).restricted(w);
        if (!d.empty()) out.entries.emplace_back(s, std::move(d));
    }
    out.inconclusive = a.inconclusive || b.inconclusive;
    return out;
}

PhaseDescriptor radial_exchange_phase(AType a, AType b, int k) {
    PhaseDescriptor d;
    d.exponent = Rat(-pairing(a, b), k);
    if (d.exponent.is_integer()) {
        long e = d.exponent.to_exponent().num();
        d.phase = e % 2 == 0 ? 1 : -1;
    }
    return d;
}

std::string pretty(const PfNormalForm& nf) {
    std::ostringstream os;
    if (nf.inconclusive) os << "inconclusive\n";
    if (nf.entries.empty()) os << "0\n";
    for (const auto& [s, p] : nf.entries) {
        os << s.label() << " region=" << region_name(p.region()) << " window=" << p.window()->str() << "\n";
        for (const auto& [pt, c] : p.terms())
            os << "  z^" << pt.first.str() << " w^" << pt.second.str() << " " << c.str() << "\n";
    }
    return os.str();
}

}  // namespace negaff
