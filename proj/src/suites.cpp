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

#include "negaff/suites.hpp"

#include <algorithm>
#include <stdexcept>

#include "negaff/delta.hpp"
#include "negaff/fock.hpp"
#include "negaff/parafermion.hpp"
#include "negaff/realization.hpp"

namespace negaff {

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"heisenberg",  "delta",    "parafermion",
                                                   "realization", "zalgebra", "vacuum"};
    return names;
}

bool is_suite(const std::string& name) {
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

namespace {

VerifyReport report(const std::string& id, int k, CheckOutcome o, int N, int D = 0) {
    o.window.truncation = N;
    o.window.fock_degree = D;
    return make_report(id, k, 0, o);
}

CheckOutcome failed(const std::string& where, const Rat& lhs = Rat(0), const Rat& rhs = Rat(0)) {
    CheckOutcome o;
    o.status = Status::Fail;
    o.window.checked = 1;
    o.mismatch = Mismatch{where, Exponent(0), Exponent(0), lhs, rhs};
    return o;
}

CheckOutcome passed(std::int64_t checked = 1) {
    CheckOutcome o;
    o.status = Status::Pass;
    o.window.checked = checked;
    return o;
}

FracSeries2 swap_variables(const FracSeries2& s) {
    std::map<ExpPair, Rat> t;
    for (const auto& [p, c] : s.terms()) t.emplace(ExpPair(p.second, p.first), c);
    Zone h = s.hull();
    Zone hull;
    hull = hull.with_ez(h.ew_lo(), h.ew_hi()).with_ew(h.ez_lo(), h.ez_hi()).with_t(h.t_lo(), h.t_hi());
    // delta windows are boxes symmetric in the two exponents
    return FracSeries2(std::move(t), hull, s.window(), s.region());
}

}  // namespace

std::vector<VerifyReport> delta_suite(int k, int N, int D) {
    std::vector<VerifyReport> out;
    out.push_back(report("delta.region_difference", k, region_difference_check(k, N), N));

    out.push_back(report("delta.substitution_monomial", k, substitution_check(monomial(Exponent(-1), Exponent(1)), N), N));

    auto linear = finite_series({{ExpPair(Exponent(0), Exponent(0)), Rat(1)}, {ExpPair(Exponent(-1), Exponent(1)), Rat(-1)}});
    out.push_back(report("delta.substitution_linear", k, substitution_check(linear, N, finite_series({})), N));

    // matrix entries of E_+^+(z) E_+^-(w); on the diagonal the pair is the
    // identity, read off from E_+^+(z) E_+^-(z) directly
    {
        FockEngine eng(k, N);
        std::vector<CheckOutcome> parts;
        auto cols = fock_basis(D);
        for (const auto& col : cols) {
            auto two = eng.apply({FockFactor::e(Dir::Plus, 1, Var::Z), FockFactor::e(Dir::Plus, -1, Var::W)}, col);
            auto one = eng.apply({FockFactor::e(Dir::Plus, 1, Var::Z), FockFactor::e(Dir::Plus, -1, Var::Z)}, col);
            for (const auto& row : cols) {
                auto o = substitution_check(column_entry(two, row), N, column_entry(one, row));
                if (o.mismatch) o.mismatch->where = "row " + row.label() + " col " + col.label();
                parts.push_back(o);
            }
        }
        out.push_back(report("delta.substitution_fock", k, combine(parts), N, D));
    }

    {
        std::vector<CheckOutcome> parts;
        auto d = delta(N);
        for (int m = -3; m <= 3; ++m)
            parts.push_back(compare_scalar(mul(monomial(Exponent(-m), Exponent(m)), d), d, nullptr, {}, "shift"));
        out.push_back(report("delta.shift_invariance", k, combine(parts), N));
    }

    out.push_back(report("delta.symmetry", k, compare_scalar(swap_variables(delta(N)), delta(N), nullptr, {}, "swap"), N));
    out.push_back(report("delta.w_d_delta", k, compare_scalar(w_d_delta(N), w_d_w(delta(N)), nullptr, {}, "w d/dw"), N));
    return out;
}

std::vector<VerifyReport> parafermion_suite(int k, int N) {
    std::vector<VerifyReport> out;
    const Zone safe = N >= 2 ? Zone().with_ew(Exponent(-(N - 2)), Exponent(N - 2)) : Zone::empty();

    // Same-charge pairs: kernel^{-1} times the E-exchange factor and the
    // lattice factor gives the same series in both orders.
    {
        std::vector<CheckOutcome> parts;
        for (AType a : {AType::A, AType::AStar}) {
            Rat r(-pairing(a, a), k);
            Exponent e = r.to_exponent();
            auto ab = mul(mul(kernel_inverse(a, a, k, Region::InnerW, N), binom_expand(r, Region::InnerW, N)),
                          monomial(e, Exponent(0)));
            auto ba = mul(mul(kernel_inverse(a, a, k, Region::InnerZ, N), binom_expand(r, Region::InnerZ, N)),
                          monomial(Exponent(0), e));
            PfSymbol sym = no_symbol(a, Var::Z, a, Var::W);
            auto diff = nf_subtract(PfNormalForm{{{sym, ab}}}, PfNormalForm{{{sym, ba}}}, safe);
            if (diff.inconclusive) {
                parts.push_back(CheckOutcome{});
                continue;
            }
            if (!diff.entries.empty()) {
                const auto& [p, c] = *diff.entries.front().second.terms().begin();
                auto o = failed(diff.entries.front().first.label(), c, Rat(0));
                o.mismatch->ez = p.first;
                o.mismatch->ew = p.second;
                parts.push_back(o);
                continue;
            }
            CheckOutcome o = passed(0);
            for (const auto& [p, c] : ab.terms())
                if (safe.contains(p.first, p.second)) o.window.note(p.first, p.second);
            if (o.window.checked == 0) o.status = Status::Inconclusive;
            parts.push_back(o);
        }
        out.push_back(report("parafermion.same_charge_cancellation", k, combine(parts), N));
    }

    {
        std::vector<CheckOutcome> parts;
        for (AType a : {AType::A, AType::AStar})
            for (Region r : {Region::InnerW, Region::InnerZ}) {
                auto c = contraction(a, a, k, r, N);
                parts.push_back(c.empty() ? passed() : failed("contraction of " + atype_name(a) + atype_name(a)));
            }
        out.push_back(report("parafermion.same_charge_contraction", k, combine(parts), N));
    }

    // A(z)A*(w) against A*(w)A(z): same symbol, and the contractions differ
    // by -k w d/dw delta
    {
        std::vector<CheckOutcome> parts;
        auto zw = product_to_normal_form(AType::A, Var::Z, AType::AStar, k, Region::InnerW, N);
        auto wz = product_to_normal_form(AType::AStar, Var::W, AType::A, k, Region::InnerZ, N);
        const auto* u1 = zw.find(PfKind::Unit);
        const auto* u2 = wz.find(PfKind::Unit);
        if (!u1 || !u2 || zw.entries.front().first != wz.entries.front().first) {
            parts.push_back(failed("normal-ordered symbols differ"));
        } else {
            std::vector<ExpPair> probes;
            for (int n = -N; n <= N; ++n) probes.emplace_back(Exponent(-n), Exponent(n));
            parts.push_back(compare_scalar(region_difference(*u1, *u2), scale(w_d_delta(N), Rat(-k)),
                                           Window::zone(safe), probes, "unit difference"));
            parts.push_back(compare_scalar(*u1, double_pole(k, Region::InnerW, N), nullptr, {}, "inner w"));
            parts.push_back(compare_scalar(*u2, double_pole(k, Region::InnerZ, N), nullptr, {}, "inner z"));
        }
        out.push_back(report("parafermion.unit_antisymmetrization", k, combine(parts), N));
    }

    // the phase exponent is the exponent of the kernel, and is a sign
    // exactly when it is an integer
    {
        std::vector<CheckOutcome> parts;
        for (AType a : {AType::A, AType::AStar})
            for (AType b : {AType::A, AType::AStar}) {
                auto ph = radial_exchange_phase(a, b, k);
                auto K = kernel(a, b, k, Region::InnerW, N);
                Rat lead = K.terms().empty() ? Rat(0) : Rat(K.terms().rbegin()->first.first);
                std::string pair = atype_name(a) + "," + atype_name(b);
                if (lead != ph.exponent) {
                    parts.push_back(failed("phase exponent " + pair, ph.exponent, lead));
                } else if (ph.exponent.is_integer() != ph.phase.has_value()) {
                    parts.push_back(failed("phase integrality " + pair));
                } else if (ph.phase && *ph.phase != (ph.exponent.to_exponent().num() % 2 == 0 ? 1 : -1)) {
                    parts.push_back(failed("phase sign " + pair, Rat(*ph.phase), Rat(0)));
                } else {
                    parts.push_back(passed());
                }
            }
        out.push_back(report("parafermion.exchange_phase", k, combine(parts), N));
    }

    // a product in the wrong region is rejected
    {
        bool threw = false;
        try {
            product_to_normal_form(AType::A, Var::Z, AType::AStar, k, Region::InnerZ, N);
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        out.push_back(report("parafermion.region_guard", k, threw ? passed() : failed("mismatched region accepted"), N));
    }
    return out;
}

std::vector<VerifyReport> run_suite(const std::string& suite, int k, const SuiteOptions& o) {
    std::vector<VerifyReport> out;
    if (suite == "heisenberg") {
        auto hh = verify_hh_bracket(k, 4, o.D);
        out.push_back(make_report("heisenberg.hh_bracket", k, 0, hh));
        ExponentialOptions p;
        p.literal_exchange = o.literal_exchange;
        auto r = verify_exponential(k, o.N, o.D, p);
        out.insert(out.end(), r.begin(), r.end());
    } else if (suite == "delta") {
        out = delta_suite(k, o.N, o.D);
    } else if (suite == "parafermion") {
        out = parafermion_suite(k, o.N);
    } else if (suite == "realization") {
        CurrentOptions t;
        t.literal_hy = o.literal_hy;
        out = verify_currents(k, o.N, o.D, o.W, t);
    } else if (suite == "zalgebra") {
        out = verify_z_modes(k, o.N, o.D);
        auto r = verify_z_brackets(k, o.N, o.D, o.W);
        out.insert(out.end(), r.begin(), r.end());
    } else if (suite == "vacuum") {
        out.push_back(vacuum_decompose(k, o.D, o.W));
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    return out;
}

}  // namespace negaff
