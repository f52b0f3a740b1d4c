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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "negaff/parafermion.hpp"
#include "negaff/suites.hpp"

using namespace negaff;

namespace {

// coefficients of (1 - u)^r by c_{j+1} = -c_j (r - j) / (j + 1)
std::vector<mpq_class> binom_oracle(const mpq_class& r, int n) {
    std::vector<mpq_class> c = {1};
    for (int j = 0; j < n; ++j) c.push_back(-c.back() * (r - j) / (j + 1));
    return c;
}

Exponent to_exp(const mpq_class& q) { return Exponent(q.get_num().get_si(), q.get_den().get_si()); }

}  // namespace

TEST_CASE("charges and pairing") {
    CHECK(pairing(AType::A, AType::A) == 2);
    CHECK(pairing(AType::A, AType::AStar) == -2);
    CHECK(pairing(AType::AStar, AType::AStar) == 2);
    CHECK(atype_name(AType::AStar) == "A*");
}

TEST_CASE("normal form prefactor against the binomial oracle") {
    const int N = 5;
    for (int k = 1; k <= 4; ++k)
        for (AType a : {AType::A, AType::AStar})
            for (AType b : {AType::A, AType::AStar}) {
                CAPTURE(k);
                auto nf = product_to_normal_form(a, Var::Z, b, k, Region::InnerW, N);
                REQUIRE(!nf.entries.empty());
                const auto& [sym, K] = nf.entries.front();
                CHECK(sym == no_symbol(a, Var::Z, b, Var::W));
                // prefactor (z - w)^{-<a,b>/k} = z^r (1 - w/z)^r
                mpq_class r(-pairing(a, b), k);
                r.canonicalize();
                auto c = binom_oracle(r, N);
                for (int j = 0; j <= N; ++j)
                    CHECK(K.coeff(to_exp(r) - Exponent(j), Exponent(j)) == Rat(mpq_class(c[j])));
                bool opposite = charge(a) != charge(b);
                CHECK(nf.entries.size() == (opposite ? 2u : 1u));
                if (opposite) {
                    CHECK(nf.entries.back().first.kind == PfKind::Unit);
                    for (int n = 1; n <= N; ++n)
                        CHECK(nf.entries.back().second.coeff(Exponent(-n), Exponent(n)) == Rat(-k * n));
                }
            }
}

TEST_CASE("exact products at k = 2") {
    auto aa = product_to_normal_form(AType::A, Var::Z, AType::A, 2, Region::InnerW, 3);
    REQUIRE(aa.entries.size() == 1);
    CHECK(aa.entries[0].first.label() == "NO_AA(z,w)");
    for (int j = 0; j <= 3; ++j) CHECK(aa.entries[0].second.coeff(Exponent(-1 - j), Exponent(j)) == Rat(1));

    auto as = product_to_normal_form(AType::A, Var::Z, AType::AStar, 2, Region::InnerW, 3);
    REQUIRE(as.entries.size() == 2);
    CHECK(as.entries[0].first.label() == "NO_AAstar(z,w)");
    CHECK(as.entries[0].second.size() == 2);
    CHECK(as.entries[0].second.coeff(Exponent(1), Exponent(0)) == Rat(1));
    CHECK(as.entries[0].second.coeff(Exponent(0), Exponent(1)) == Rat(-1));
    CHECK(as.entries[1].first.label() == "Unit");

    // A*(w) A(z): the symbol is stored as NO_AAstar(z,w), prefactor w - z
    auto sa = product_to_normal_form(AType::AStar, Var::W, AType::A, 2, Region::InnerZ, 3);
    REQUIRE(sa.entries.size() == 2);
    CHECK(sa.entries[0].first.label() == "NO_AAstar(z,w)");
    CHECK(sa.entries[0].second.coeff(Exponent(0), Exponent(1)) == Rat(1));
    CHECK(sa.entries[0].second.coeff(Exponent(1), Exponent(0)) == Rat(-1));
    CHECK(sa.entries[1].second.coeff(Exponent(2), Exponent(-2)) == Rat(-4));

    std::string text = pretty(as);
    CHECK(text.find("NO_AAstar(z,w) region=InnerW") != std::string::npos);
    CHECK(text.find("z^-1 w^1 -2") != std::string::npos);
}

TEST_CASE("region must match the order of the fields") {
    CHECK_THROWS_AS(product_to_normal_form(AType::A, Var::Z, AType::A, 2, Region::InnerZ, 3), std::invalid_argument);
    CHECK_THROWS_AS(product_to_normal_form(AType::A, Var::W, AType::A, 2, Region::InnerW, 3), std::invalid_argument);
}

TEST_CASE("normal-ordering symmetry") {
    CHECK(normalize_swap(no_symbol(AType::A, Var::W, AType::A, Var::Z)).label() == "NO_AA(z,w)");
    CHECK(normalize_swap(no_symbol(AType::AStar, Var::W, AType::A, Var::Z)).label() == "NO_AAstar(z,w)");
    CHECK(normalize_swap(no_symbol(AType::A, Var::W, AType::AStar, Var::Z)).label() == "NO_AstarA(z,w)");
    CHECK(normalize_swap(PfSymbol{}) == PfSymbol{});
}

TEST_CASE("subtraction") {
    auto a = product_to_normal_form(AType::A, Var::Z, AType::AStar, 3, Region::InnerW, 4);
    Zone box = Zone().with_ew(Exponent(-2), Exponent(2));
    CHECK(nf_subtract(a, a, box).entries.empty());
    CHECK_FALSE(nf_subtract(a, a, box).inconclusive);
    CHECK(nf_subtract(a, a, Zone::empty()).inconclusive);
    // the unit parts of the two region expansions differ by -k w d delta
    auto b = product_to_normal_form(AType::AStar, Var::W, AType::A, 3, Region::InnerZ, 4);
    auto d = nf_subtract(a, b, box);
    const FracSeries2* unit = d.find(PfKind::Unit);
    REQUIRE(unit);
    for (int n = -2; n <= 2; ++n) CHECK(unit->coeff(Exponent(-n), Exponent(n)) == Rat(-3 * n));
}

TEST_CASE("exchange phases") {
    for (int k = 1; k <= 4; ++k) {
        CHECK(radial_exchange_phase(AType::A, AType::A, k).exponent == Rat(-2, k));
        CHECK(radial_exchange_phase(AType::A, AType::AStar, k).exponent == Rat(2, k));
    }
    auto p = radial_exchange_phase(AType::A, AType::A, 2);
    CHECK(p.exponent == Rat(-1));
    REQUIRE(p.phase);
    CHECK(*p.phase == -1);
    CHECK(*radial_exchange_phase(AType::A, AType::A, 1).phase == 1);
    CHECK_FALSE(radial_exchange_phase(AType::A, AType::A, 3).phase);
}

TEST_CASE("parafermion suite") {
    for (int k = 1; k <= 4; ++k)
        for (const auto& r : parafermion_suite(k, 6)) {
            CAPTURE(r.id);
            CHECK(r.status == Status::Pass);
        }
}
