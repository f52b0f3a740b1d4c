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

#include <set>

#include "negaff/realization.hpp"

using namespace negaff;

namespace {

BracketOptions opts(int k, bool generalized = false) {
    BracketOptions o;
    o.k = k;
    o.N = 6;
    o.D = 4;
    o.W = 2;
    o.generalized = generalized;
    return o;
}

void require_all_pass(const std::vector<VerifyReport>& reports) {
    CHECK_FALSE(reports.empty());
    for (const auto& r : reports) {
        CAPTURE(r.id);
        CAPTURE(r.sector);
        CHECK(r.status == Status::Pass);
    }
}

}  // namespace

TEST_CASE("current images") {
    for (int k = 1; k <= 4; ++k) {
        auto h = build_current(CurrentKind::H, k);
        CHECK(h.heisenberg);
        CHECK_FALSE(h.field);
        CHECK(h.efactors.empty());

        auto x = build_current(CurrentKind::X, k);
        CHECK(x.shift == 1);
        CHECK(x.field == AType::A);
        CHECK(x.power.a == Exponent(-1, k));
        CHECK(x.efactors.size() == 2);

        auto y = build_current(CurrentKind::Y, k);
        CHECK(y.shift == -1);
        CHECK(y.field == AType::AStar);
        CHECK(y.power.a == Exponent(1, k));
    }
}

TEST_CASE("reduced Z operators carry no exponential factors") {
    for (int k = 1; k <= 4; ++k) {
        auto zp = build_z_operator(1, k);
        CHECK(zp.efactors.size() == 4);  // E_+^- (two factors of X) E_-^-
        auto rp = reduce(zp);
        CHECK(rp.efactors.empty());
        CHECK(rp.field == AType::A);
        CHECK(rp.shift == 1);
        CHECK(rp.power.a == Exponent(-1, k));

        auto rm = reduce(build_z_operator(-1, k));
        CHECK(rm.efactors.empty());
        CHECK(rm.field == AType::AStar);
        CHECK(rm.shift == -1);
        CHECK(rm.power.a == Exponent(1, k));
    }
}

TEST_CASE("same-current brackets vanish") {
    auto r = bracket_currents(build_current(CurrentKind::X, 3), build_current(CurrentKind::X, 3), opts(3));
    for (const auto& s : r.sectors) {
        CHECK(s.leftover.empty());
        CHECK(compare_keyed(residual(s), {}, r.columns, 4, &s.ab).status == Status::Pass);
    }
}

TEST_CASE("delta coefficient of [X, Y] and of the Z bracket is 2n - km") {
    for (int k = 1; k <= 4; ++k) {
        auto xy = bracket_currents(build_current(CurrentKind::X, k), build_current(CurrentKind::Y, k), opts(k));
        auto zd = bracket_currents(build_z_operator(1, k), build_z_operator(-1, k), opts(k, true));
        auto zr = bracket_currents(reduce(build_z_operator(1, k)), reduce(build_z_operator(-1, k)), opts(k, true));
        REQUIRE(xy.sectors.size() == 5);
        for (std::size_t i = 0; i < xy.sectors.size(); ++i) {
            int n = xy.sectors[i].sector;
            CAPTURE(k);
            CAPTURE(n);
            for (const auto* s : {&xy.sectors[i], &zd.sectors[i], &zr.sectors[i]}) {
                CHECK(s->delta_coeff.size() == 13);
                for (const auto& [m, c] : s->delta_coeff) CHECK(c == Rat(2 * n) - Rat(k) * Rat(m));
            }
            CHECK(zd.sectors[i].delta_coeff == zr.sectors[i].delta_coeff);
        }
    }
}

TEST_CASE("current algebra at levels 1 and 2") {
    require_all_pass(verify_currents(1, 6, 4, 2));
    require_all_pass(verify_currents(2, 6, 4, 2));
}

TEST_CASE("printed [H, Y] target fails and nothing else changes") {
    auto good = verify_currents(2, 6, 4, 2);
    CurrentOptions lit;
    lit.literal_hy = true;
    auto bad = verify_currents(2, 6, 4, 2, lit);
    REQUIRE(good.size() == bad.size());
    std::set<std::string> changed;
    for (std::size_t i = 0; i < good.size(); ++i)
        if (good[i].status != bad[i].status) changed.insert(bad[i].id);
    CHECK(changed == std::set<std::string>{"currents.hy"});
    for (const auto& r : bad)
        if (r.id == "currents.hy") {
            CHECK(r.status == Status::Fail);
            REQUIRE(r.mismatch);
        }
}

TEST_CASE("Heisenberg modes commute with Z") { require_all_pass(verify_z_modes(2, 6, 4)); }

TEST_CASE("Z algebra, dressed and reduced") {
    for (int k : {2, 3}) require_all_pass(verify_z_brackets(k, 6, 4, 2));
}

TEST_CASE("vacuum space") {
    for (int k = 1; k <= 4; ++k) CHECK(vacuum_decompose(k, 5, 2).status == Status::Pass);
}
