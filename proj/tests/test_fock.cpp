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

#include <algorithm>
#include <map>
#include <random>

#include "negaff/fock.hpp"

using namespace negaff;

namespace {

// Independent model of the Fock space: a monomial is a sorted list of
// parts n standing for H(-n); operators are sparse rational matrices.
using Parts = std::vector<int>;
using Vec = std::map<Parts, mpq_class>;
using Mat = std::map<Parts, Vec>;  // column -> image

int deg(const Parts& p) {
    int d = 0;
    for (int n : p) d += n;
    return d;
}

void parts_upto(int left, int max_part, Parts& cur, std::vector<Parts>& out) {
    out.push_back(cur);
    for (int n = std::min(left, max_part); n >= 1; --n) {
        cur.push_back(n);
        parts_upto(left - n, n, cur, out);
        cur.pop_back();
    }
}

std::vector<Parts> basis(int D) {
    std::vector<Parts> out;
    Parts cur;
    parts_upto(D, D, cur, out);
    for (auto& p : out) std::sort(p.begin(), p.end(), std::greater<>());
    return out;
}

// H(m) on a monomial; m > 0 removes one part m with weight -2mk per copy
Vec h(int m, int k, const Parts& p) {
    Vec out;
    if (m < 0) {
        Parts q = p;
        q.push_back(-m);
        std::sort(q.begin(), q.end(), std::greater<>());
        out[q] = 1;
    } else if (m > 0) {
        auto mult = std::count(p.begin(), p.end(), m);
        if (mult) {
            Parts q = p;
            q.erase(std::find(q.begin(), q.end(), m));
            out[q] = mpq_class(-2 * m * k * static_cast<long>(mult));
        }
    }
    return out;
}

Mat mat_mul(const Mat& a, const Mat& b, int D) {
    Mat out;
    for (const auto& [col, v] : b)
        for (const auto& [mid, c] : v) {
            auto it = a.find(mid);
            if (it == a.end()) continue;
            for (const auto& [row, d] : it->second)
                if (deg(row) <= D) {
                    out[col][row] += c * d;
                    if (out[col][row] == 0) out[col].erase(row);
                }
        }
    return out;
}

// Coefficient series of exp(A) where A = sum_n A_n z^{sgn n}; computed
// as sum_j A^j / j! with polynomial multiplication in z.
using OpPoly = std::map<int, Mat>;

OpPoly poly_mul(const OpPoly& a, const OpPoly& b, int D, int N) {
    OpPoly out;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) {
            if (std::abs(i + j) > N) continue;
            auto m = mat_mul(x, y, D);
            auto& acc = out[i + j];
            for (const auto& [col, v] : m)
                for (const auto& [row, c] : v) {
                    acc[col][row] += c;
                    if (acc[col][row] == 0) acc[col].erase(row);
                }
        }
    return out;
}

OpPoly exp_oracle(bool raising, int sign, int k, int N, int D) {
    auto B = basis(D);
    OpPoly A;
    for (int n = 1; n <= N; ++n) {
        Mat m;
        for (const auto& col : B) {
            Vec v = h(raising ? -n : n, k, col);
            for (auto& [row, c] : v)
                if (deg(row) <= D) m[col][row] = c * (raising ? -sign : sign) / mpq_class(static_cast<long>(k) * n);
        }
        A[raising ? n : -n] = m;
    }
    OpPoly result, power;
    Mat id;
    for (const auto& col : B) id[col][col] = 1;
    result[0] = id;
    power[0] = id;
    for (int j = 1; j <= N + D; ++j) {
        power = poly_mul(power, A, D, N);
        for (auto& [e, m] : power)
            for (const auto& [col, v] : m)
                for (const auto& [row, c] : v) {
                    result[e][col][row] += c / mpq_class([&] {
                        long f = 1;
                        for (int i = 2; i <= j; ++i) f *= i;
                        return f;
                    }());
                    if (result[e][col][row] == 0) result[e][col].erase(row);
                }
    }
    return result;
}

FockBasisElt elt(const Parts& p) { return FockBasisElt(p); }

}  // namespace

TEST_CASE("partition counts") {
    const long p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56};
    for (int d = 0; d < 12; ++d) CHECK(partition_count(d) == p[d]);
    CHECK(fock_basis(5).size() == 1 + 1 + 2 + 3 + 5 + 7);
}

TEST_CASE("heisenberg action examples") {
    for (int k = 1; k <= 4; ++k) {
        FockVector one(FockBasisElt{});
        FockVector h1(FockBasisElt({1}));
        CHECK(h_act(1, k, h1) == one.scaled(Rat(-2 * k)));
        CHECK(h_act(0, k, h1).is_zero());
        CHECK(h_act(2, k, FockVector(FockBasisElt({1, 1}))).is_zero());
        CHECK(h_act(-2, k, h1) == FockVector(FockBasisElt({2, 1})));
    }
}

TEST_CASE("heisenberg action agrees with the independent model") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 1 + static_cast<int>(rng() % 4);
        int m = static_cast<int>(rng() % 9) - 4;
        auto B = basis(6);
        const Parts& p = B[rng() % B.size()];
        Vec want = h(m, k, p);
        FockVector got = h_act(m, k, FockVector(elt(p)));
        CHECK(got.terms().size() == want.size());
        for (const auto& [q, c] : want) CHECK(got.coeff(elt(q)) == Rat(mpq_class(c)));
    }
}

TEST_CASE("commutator of modes is central") {
    // [H(m), H(n)] v = -2mk delta_{m+n,0} v on random monomials
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        int k = 1 + static_cast<int>(rng() % 4);
        int m = static_cast<int>(rng() % 9) - 4, n = static_cast<int>(rng() % 9) - 4;
        auto B = basis(5);
        FockVector v(elt(B[rng() % B.size()]));
        FockVector lhs = h_act(m, k, h_act(n, k, v)) - h_act(n, k, h_act(m, k, v));
        FockVector rhs = m + n == 0 ? v.scaled(Rat(-2 * m * k)) : FockVector{};
        CHECK(lhs == rhs);
    }
}

TEST_CASE("exponential operators match a truncated matrix exponential") {
    const int N = 4, D = 4;
    for (int k = 1; k <= 3; ++k)
        for (Dir dir : {Dir::Plus, Dir::Minus})
            for (int sign : {1, -1}) {
                CAPTURE(k);
                CAPTURE(sign);
                auto oracle = exp_oracle(dir == Dir::Plus, sign, k, N, D);
                auto ops = e_op(dir, sign, k, N, D);
                for (int e = -N; e <= N; ++e) {
                    Exponent ex(e);
                    if (ex < ops.lo || ops.hi < ex) continue;
                    auto it = ops.coeffs.find(ex);
                    for (const auto& col : basis(D))
                        for (const auto& row : basis(D)) {
                            mpq_class want = 0;
                            if (oracle.count(e) && oracle[e].count(col) && oracle[e][col].count(row))
                                want = oracle[e][col][row];
                            Rat got = it == ops.coeffs.end() ? Rat(0) : it->second.at(elt(row), elt(col));
                            CHECK(got == Rat(want));
                        }
                }
            }
}

TEST_CASE("low coefficients of the raising exponential") {
    for (int k = 1; k <= 4; ++k) {
        FockEngine eng(k, 4);
        CHECK(eng.raising_coeff(1, 0) == FockVector(FockBasisElt{}));
        CHECK(eng.raising_coeff(1, 1) == FockVector(FockBasisElt({1}), Rat(-1, k)));
        FockVector z2(FockBasisElt({2}), Rat(-1, 2L * k));
        z2.add(FockBasisElt({1, 1}), Rat(1, 2L * k * k));
        CHECK(eng.raising_coeff(1, 2) == z2);
    }
}

TEST_CASE("heisenberg bracket and exponential identities") {
    for (int k = 1; k <= 4; ++k) {
        CHECK(verify_hh_bracket(k, 4, 6).status == Status::Pass);
        for (const auto& r : verify_exponential(k, 4, 4)) {
            CAPTURE(r.id);
            CHECK(r.status == Status::Pass);
        }
    }
    for (const auto& r : verify_exponential(1, 0, 0)) CHECK(r.status != Status::Fail);
}

TEST_CASE("printed exchange line is rejected") {
    ExponentialOptions o;
    o.literal_exchange = true;
    bool failed = false;
    for (const auto& r : verify_exponential(2, 4, 4, o)) failed |= r.status == Status::Fail;
    CHECK(failed);
}
