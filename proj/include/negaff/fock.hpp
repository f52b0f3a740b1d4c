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

#ifndef NEGAFF_FOCK_HPP
#define NEGAFF_FOCK_HPP

#include <map>
#include <string>
#include <optional>
#include <vector>

#include "negaff/compare.hpp"
#include "negaff/report.hpp"
#include "negaff/series.hpp"

namespace negaff {

/// Monomial H(-n1) H(-n2) ... 1 with n1 <= n2 <= ..., all ni >= 1.
/// Ordered by degree, then lexicographically.
class FockBasisElt {
public:
    FockBasisElt() = default;
    explicit FockBasisElt(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int degree() const { return degree_; }
    int multiplicity(int n) const;
    bool is_vacuum() const { return parts_.empty(); }

    FockBasisElt times(int n) const;      // multiply by H(-n)
    FockBasisElt without(int n) const;    // remove one H(-n); must be present
    FockBasisElt times(const FockBasisElt& other) const;

    /// "[]" for the vacuum, "[1,1,2]" otherwise.
    std::string label() const;

    friend bool operator==(const FockBasisElt& a, const FockBasisElt& b) { return a.parts_ == b.parts_; }
    friend bool operator<(const FockBasisElt& a, const FockBasisElt& b) {
        if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
    int degree_ = 0;
};

/// Exact sparse vector of the Fock module S(h'^-).
class FockVector {
public:
    using Map = std::map<FockBasisElt, Rat>;

    FockVector() = default;
    explicit FockVector(const FockBasisElt& b, const Rat& c = Rat(1));

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const FockBasisElt& b) const;

    void add(const FockBasisElt& b, const Rat& c);
    void add_scaled(const Rat& s, const FockVector& v);
    FockVector scaled(const Rat& s) const;

    /// Product as polynomials in the H(-n), optionally dropping terms of
    /// degree above max_degree.
    FockVector times(const FockVector& other, std::optional<int> max_degree = std::nullopt) const;
    FockVector truncated(int max_degree) const;

    friend bool operator==(const FockVector& a, const FockVector& b) { return a.terms_ == b.terms_; }
    friend FockVector operator+(const FockVector& a, const FockVector& b);
    friend FockVector operator-(const FockVector& a, const FockVector& b);

private:
    Map terms_;
};

template <>
struct CoeffOps<FockVector> {
    static bool is_zero(const FockVector& c) { return c.is_zero(); }
    static void add_to(FockVector& acc, const FockVector& c) { acc.add_scaled(Rat(1), c); }
    static void add_scaled(FockVector& acc, const Rat& s, const FockVector& c) { acc.add_scaled(s, c); }
    static FockVector scaled(const FockVector& c, const Rat& s) { return c.scaled(s); }
};

/// Series with Fock-vector coefficients: one column of an operator series.
using VecSeries = Series2<FockVector>;

/// All basis elements of degree <= D, in basis order.
std::vector<FockBasisElt> fock_basis(int D);

/// Number of partitions of d.
long partition_count(int d);

/// Action of H(m) at level -k: multiplication for m < 0, zero for m = 0,
/// -2mk times the derivative in H(-m) for m > 0.
FockVector h_act(int m, int k, const FockVector& v);

enum class Var { Z, W };
enum class Dir { Plus, Minus };  // E_+ raises degree, E_- lowers it

/// One factor of a Fock operator word.
struct FockFactor {
    enum class Kind { E, HCurrent, HMode };
    Kind kind = Kind::E;
    Dir dir = Dir::Plus;    // E: direction
    int sign = 1;           // E: superscript sign
    Var var = Var::Z;
    // HCurrent: sum of H(m) x^(-m + offset) over the selected modes.
    bool raising_modes = true;   // m < 0
    bool lowering_modes = true;  // m > 0
    int offset = 0;
    int mode = 0;  // HMode

    static FockFactor e(Dir d, int sign, Var v) {
        FockFactor f;
        f.kind = Kind::E;
        f.dir = d;
        f.sign = sign;
        f.var = v;
        return f;
    }
    static FockFactor current(Var v, bool raising = true, bool lowering = true, int offset = 0) {
        FockFactor f;
        f.kind = Kind::HCurrent;
        f.var = v;
        f.raising_modes = raising;
        f.lowering_modes = lowering;
        f.offset = offset;
        return f;
    }
    static FockFactor h(int m) {
        FockFactor f;
        f.kind = Kind::HMode;
        f.mode = m;
        return f;
    }

    std::string str() const;
};

/// Applies Fock operator words to exact (uncapped) vectors. Raising
/// factors are truncated at order N; lowering factors are exact. Caches
/// coefficient polynomials per instance; not thread-safe.
class FockEngine {
public:
    FockEngine(int k, int N);

    int k() const { return k_; }
    int N() const { return N_; }

    /// Coefficient of z^j in E_+^sign(z), a polynomial in the H(-n).
    const FockVector& raising_coeff(int sign, int j);
    /// Coefficient of z^(-i) in E_-^sign(z) applied to b.
    const std::vector<FockVector>& lowering_action(int sign, const FockBasisElt& b);

    /// Basis element b as a series: the point (0, 0).
    VecSeries column(const FockBasisElt& b) const;

    /// Rows of degree above max_degree are not computed.
    VecSeries apply(const FockFactor& f, const VecSeries& in, std::optional<int> max_degree = std::nullopt);
    /// Applies a word (leftmost factor acts last). With max_degree, rows
    /// of the result up to that degree are exact; higher rows are dropped.
    VecSeries apply(const std::vector<FockFactor>& word, const VecSeries& in,
                    std::optional<int> max_degree = std::nullopt);
    VecSeries apply(const std::vector<FockFactor>& word, const FockBasisElt& b,
                    std::optional<int> max_degree = std::nullopt) {
        return apply(word, column(b), max_degree);
    }

private:
    int k_, N_;
    std::map<int, std::vector<FockVector>> raising_;  // by sign
    std::map<std::pair<int, FockBasisElt>, std::vector<FockVector>> lowering_;
};

/// Matrix on the degree <= D subspace, stored sparsely by (row, col).
struct RatMatrix {
    std::map<std::pair<FockBasisElt, FockBasisElt>, Rat> entries;
    Rat at(const FockBasisElt& row, const FockBasisElt& col) const;
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) { return a.entries == b.entries; }
};

RatMatrix matrix_product(const RatMatrix& a, const RatMatrix& b, int D);
RatMatrix identity_matrix(int D);

/// Single-variable operator series with matrix coefficients on degree <= D.
struct FockOpSeries {
    std::map<Exponent, RatMatrix> coeffs;
    Exponent lo, hi;  // authoritative exponent range
    int D = 0;
};

/// E_dir^sign(z) expanded to order N with coefficients as degree <= D
/// matrices.
FockOpSeries e_op(Dir dir, int sign, int k, int N, int D);

/// Text dump: header plus records "ez_num ez_den 0 1 row col coeff_num coeff_den".
std::string matrix_dump(const FockOpSeries& s);

/// Compares two vector series of the same column on rows of degree <= D.
CheckOutcome compare_columns(const VecSeries& lhs, const VecSeries& rhs, const FockBasisElt& col, int D,
                             const WindowPtr& extra = nullptr, const std::vector<ExpPair>& probes = {});

/// Row `row` of a column series as a scalar series.
FracSeries2 column_entry(const VecSeries& s, const FockBasisElt& row);

/// [H(m), H(n)] == -2mk delta_{m+n,0} on degree <= D for |m|, |n| <= M.
CheckOutcome verify_hh_bracket(int k, int M, int D);

struct ExponentialOptions {
    bool literal_exchange = false;  // E^-_+(w) instead of E^-_-(w) on the exchange right-hand side
};

/// Exponential-operator identities on degree <= D: inverse pairs,
/// commutativity, derivative and exchange lines.
std::vector<VerifyReport> verify_exponential(int k, int N, int D, const ExponentialOptions& opts = {});

}  // namespace negaff

#endif
