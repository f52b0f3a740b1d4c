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

#include <random>

#include "negaff/delta.hpp"
#include "negaff/suites.hpp"

using namespace negaff;

namespace {

Exponent E(long n) { return Exponent(n); }

// random Laurent polynomial in z, w with small integer exponents
FracSeries2 random_poly(std::mt19937& rng) {
    std::map<ExpPair, Rat> t;
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < terms; ++i) {
        long a = static_cast<long>(rng() % 5) - 2, b = static_cast<long>(rng() % 5) - 2;
        long c = static_cast<long>(rng() % 7) - 3;
        if (c) t[ExpPair(E(a), E(b))] = t[ExpPair(E(a), E(b))] + Rat(c);
    }
    std::erase_if(t, [](const auto& kv) { return kv.second == Rat(0); });
    return finite_series(t);
}

}  // namespace

TEST_CASE("delta coefficients") {
    auto d = delta(5);
    CHECK(d.coeff(E(-5), E(5)) == Rat(1));
    CHECK(d.coeff(E(-1), E(2)) == Rat(0));
    CHECK(d.coeff(E(0), E(0)) == Rat(1));
    CHECK_THROWS(d.coeff(E(-6), E(6)));
    auto wd = w_d_delta(5);
    CHECK(wd.coeff(E(-3), E(3)) == Rat(3));
    CHECK(wd.coeff(E(0), E(0)) == Rat(0));
    for (int n = -5; n <= 5; ++n) CHECK(wd.coeff(E(-n), E(n)) == w_d_w(d).coeff(E(-n), E(n)));
}

TEST_CASE("twisted delta") {
    // z^{-s} w^{s} delta(w/z) for s = 1/2 sits on ez + ew = 0 shifted by s
    auto d = delta_twisted(Exponent(1, 2), 4);
    CHECK(d.coeff(Exponent(-1, 2) - E(1), Exponent(1, 2) + E(1)) == Rat(1));
}

TEST_CASE("region difference of the double pole") {
    for (int k = 1; k <= 4; ++k)
        for (int N : {4, 8}) {
            auto diff = region_difference(double_pole(k, Region::InnerW, N), double_pole(k, Region::InnerZ, N));
            // both expansions of -kzw/(z-w)^2 carry -k n (w/z)^n, so the
            // difference is -k n on every antidiagonal point
            for (int n = -(N - 2); n <= N - 2; ++n) CHECK(diff.coeff(E(-n), E(n)) == Rat(-k * n));
            CHECK(region_difference_check(k, N).status == Status::Pass);
        }
}

TEST_CASE("substitution examples") {
    CHECK(substitution_check(monomial(E(-1), E(1)), 6).status == Status::Pass);
    auto linear = finite_series({{ExpPair(E(0), E(0)), Rat(1)}, {ExpPair(E(-1), E(1)), Rat(-1)}});
    auto o = substitution_check(linear, 6, finite_series({}));
    CHECK(o.status == Status::Pass);
    CHECK(o.window.checked > 0);
}

TEST_CASE("substitution property on random polynomials") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto f = random_poly(rng);
        auto o = substitution_check(f, 8);
        CHECK(o.status == Status::Pass);
        // a wrong diagonal value is caught whenever it differs
        auto g = diagonal(f);
        auto wrong = add(g, monomial(E(0), E(0)));
        CHECK(substitution_check(f, 8, wrong).status == Status::Fail);
    }
}

TEST_CASE("delta suite") {
    for (int k = 1; k <= 4; ++k)
        for (const auto& r : delta_suite(k, 8, 4)) {
            CAPTURE(r.id);
            CHECK(r.status == Status::Pass);
        }
}
