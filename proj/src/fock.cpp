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

#include "negaff/fock.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace negaff {

// --- basis ------------------------------------------------------------------

FockBasisElt::FockBasisElt(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end());
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("Fock basis parts must be >= 1");
        degree_ += p;
    }
}

int FockBasisElt::multiplicity(int n) const {
    auto r = std::equal_range(parts_.begin(), parts_.end(), n);
    return static_cast<int>(r.second - r.first);
}

FockBasisElt FockBasisElt::times(int n) const {
    FockBasisElt b = *this;
    b.parts_.insert(std::upper_bound(b.parts_.begin(), b.parts_.end(), n), n);
    b.degree_ += n;
    return b;
}

FockBasisElt FockBasisElt::without(int n) const {
    FockBasisElt b = *this;
    auto it = std::lower_bound(b.parts_.begin(), b.parts_.end(), n);
    if (it == b.parts_.end() || *it != n) throw std::logic_error("FockBasisElt::without: part not present");
    b.parts_.erase(it);
    b.degree_ -= n;
    return b;
}

FockBasisElt FockBasisElt::times(const FockBasisElt& other) const {
    FockBasisElt b;
    b.parts_.resize(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), b.parts_.begin());
    b.degree_ = degree_ + other.degree_;
    return b;
}

std::string FockBasisElt::label() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

// --- vectors ----------------------------------------------------------------

FockVector::FockVector(const FockBasisElt& b, const Rat& c) {
    if (!c.is_zero()) terms_.emplace(b, c);
}

Rat FockVector::coeff(const FockBasisElt& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rat(0) : it->second;
}

void FockVector::add(const FockBasisElt& b, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void FockVector::add_scaled(const Rat& s, const FockVector& v) {
    if (s.is_zero()) return;
    for (const auto& [b, c] : v.terms_) add(b, s * c);
}

FockVector FockVector::scaled(const Rat& s) const {
    FockVector out;
    if (s.is_zero()) return out;
    for (const auto& [b, c] : terms_) out.terms_.emplace(b, c * s);
    return out;
}

FockVector FockVector::times(const FockVector& other, std::optional<int> max_degree) const {
    FockVector out;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : other.terms_) {
            if (max_degree && a.degree() + b.degree() > *max_degree) continue;
            out.add(a.times(b), ca * cb);
        }
    return out;
}

FockVector FockVector::truncated(int max_degree) const {
    FockVector out;
    for (const auto& [b, c] : terms_)
        if (b.degree() <= max_degree) out.terms_.emplace_hint(out.terms_.end(), b, c);
    return out;
}

FockVector operator+(const FockVector& a, const FockVector& b) {
    FockVector out = a;
    out.add_scaled(Rat(1), b);
    return out;
}

FockVector operator-(const FockVector& a, const FockVector& b) {
    FockVector out = a;
    out.add_scaled(Rat(-1), b);
    return out;
}

namespace {

void partitions_of(int d, int max_part, std::vector<int>& cur, std::vector<FockBasisElt>& out) {
    if (d == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(d, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(d - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<FockBasisElt> fock_basis(int D) {
    std::vector<FockBasisElt> out;
    std::vector<int> cur;
    for (int d = 0; d <= D; ++d) partitions_of(d, d, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

long partition_count(int d) {
    if (d < 0) return 0;
    std::vector<long> p(d + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= d; ++part)
        for (int s = part; s <= d; ++s) p[s] += p[s - part];
    return p[d];
}

FockVector h_act(int m, int k, const FockVector& v) {
    FockVector out;
    if (m == 0) return out;
    if (m < 0) {
        for (const auto& [b, c] : v.terms()) out.add(b.times(-m), c);
        return out;
    }
    Rat scale(-2L * m * k);
    for (const auto& [b, c] : v.terms()) {
        int mult = b.multiplicity(m);
        if (mult) out.add(b.without(m), scale * Rat(mult) * c);
    }
    return out;
}

// --- factors ----------------------------------------------------------------

std::string FockFactor::str() const {
    std::string v = var == Var::Z ? "z" : "w";
    switch (kind) {
    case Kind::E:
        return std::string("E") + (dir == Dir::Plus ? "+" : "-") + "^" + (sign > 0 ? "+" : "-") + "(" + v + ")";
    case Kind::HCurrent:
        if (raising_modes && lowering_modes && offset == 0) return "H(" + v + ")";
        return std::string("H") + (raising_modes ? "r" : "") + (lowering_modes ? "l" : "") + "[" +
               std::to_string(offset) + "](" + v + ")";
    case Kind::HMode:
        return "H[" + std::to_string(mode) + "]";
    }
    return "";
}

FockEngine::FockEngine(int k, int N) : k_(k), N_(N) {
    if (k < 1) throw std::invalid_argument("level k must be >= 1");
    if (N < 0) throw std::invalid_argument("truncation must be >= 0");
}

const FockVector& FockEngine::raising_coeff(int sign, int j) {
    auto& P = raising_[sign];
    if (P.empty()) P.emplace_back(FockBasisElt());
    while (static_cast<int>(P.size()) <= j) {
        int n = static_cast<int>(P.size());
        FockVector acc;
        for (int m = 1; m <= n; ++m) acc.add_scaled(Rat(1), h_act(-m, k_, P[n - m]));
        P.push_back(acc.scaled(Rat(-sign, static_cast<long>(k_) * n)));
    }
    return P[j];
}

const std::vector<FockVector>& FockEngine::lowering_action(int sign, const FockBasisElt& b) {
    auto key = std::make_pair(sign, b);
    auto it = lowering_.find(key);
    if (it != lowering_.end()) return it->second;
    std::vector<FockVector> R;
    R.emplace_back(b);
    for (int i = 1; i <= b.degree(); ++i) {
        FockVector acc;
        for (int n = 1; n <= i; ++n) acc.add_scaled(Rat(1), h_act(n, k_, R[i - n]));
        R.push_back(acc.scaled(Rat(sign, static_cast<long>(k_) * i)));
    }
    return lowering_.emplace(key, std::move(R)).first->second;
}

VecSeries FockEngine::column(const FockBasisElt& b) const {
    VecSeries::Map t;
    t.emplace(ExpPair(Exponent(0), Exponent(0)), FockVector(b));
    return VecSeries(std::move(t), Zone::point(Exponent(0), Exponent(0)), Window::full(), std::nullopt,
                     Exponent(-b.degree()));
}

namespace {

ExpPair along(Var v, const Exponent& e) {
    return v == Var::Z ? ExpPair(e, Exponent(0)) : ExpPair(Exponent(0), e);
}

// Zone {lo <= e <= hi} along the factor variable, zero in the other.
Zone line_zone(Var v, Bound lo, Bound hi) {
    Zone z;
    if (v == Var::Z) return z.with_ez(lo, hi).with_ew(Exponent(0), Exponent(0));
    return z.with_ew(lo, hi).with_ez(Exponent(0), Exponent(0));
}

}  // namespace

VecSeries FockEngine::apply(const FockFactor& f, const VecSeries& in, std::optional<int> max_degree) {
    Zone op_hull;
    WindowPtr op_window = Window::full();
    switch (f.kind) {
    case FockFactor::Kind::E:
        if (f.dir == Dir::Plus) {
            op_hull = line_zone(f.var, Exponent(0), std::nullopt);
            op_window = Window::zone(line_zone(f.var, std::nullopt, Exponent(N_)));
        } else {
            op_hull = line_zone(f.var, std::nullopt, Exponent(0));
        }
        break;
    case FockFactor::Kind::HCurrent: {
        Bound lo = f.lowering_modes ? Bound() : Bound(Exponent(1 + f.offset));
        Bound hi = f.raising_modes ? Bound() : Bound(Exponent(f.offset - 1));
        op_hull = line_zone(f.var, lo, hi);
        if (f.raising_modes) op_window = Window::zone(line_zone(f.var, std::nullopt, Exponent(N_ + f.offset)));
        break;
    }
    case FockFactor::Kind::HMode:
        op_hull = Zone::point(Exponent(0), Exponent(0));
        break;
    }
    Zone hull = in.hull().plus(op_hull);
    if (in.grade()) hull = hull.with_t(*in.grade(), std::nullopt);
    WindowPtr window = Window::product(in.window(), in.hull(), op_window, op_hull);
    VecSeries probe({}, hull, window, in.region(), in.grade());

    std::map<ExpPair, bool> known_cache;
    auto known = [&](const ExpPair& p) {
        auto it = known_cache.find(p);
        if (it == known_cache.end()) it = known_cache.emplace(p, probe.known(p)).first;
        return it->second;
    };
    VecSeries::Map out;
    auto emit = [&](const ExpPair& a, const Exponent& e, const Rat& c, const FockVector& full) {
        if (full.is_zero()) return;
        const FockVector& v = max_degree ? full.truncated(*max_degree) : full;
        if (v.is_zero()) return;
        ExpPair d = along(f.var, e);
        ExpPair p(a.first + d.first, a.second + d.second);
        if (!known(p)) return;
        out[p].add_scaled(c, v);
    };

    for (const auto& [a, vec] : in.terms()) {
        switch (f.kind) {
        case FockFactor::Kind::E:
            if (f.dir == Dir::Plus) {
                for (int j = 0; j <= N_; ++j) {
                    ExpPair d = along(f.var, Exponent(j));
                    if (!known(ExpPair(a.first + d.first, a.second + d.second))) continue;
                    if (max_degree && j > *max_degree) break;
                    emit(a, Exponent(j), Rat(1), raising_coeff(f.sign, j).times(vec, max_degree));
                }
            } else {
                for (const auto& [b, c] : vec.terms()) {
                    const auto& R = lowering_action(f.sign, b);
                    for (std::size_t i = 0; i < R.size(); ++i) emit(a, Exponent(-static_cast<long>(i)), c, R[i]);
                }
            }
            break;
        case FockFactor::Kind::HCurrent:
            if (f.raising_modes)
                for (int m = -1; m >= -N_; --m) emit(a, Exponent(-m + f.offset), Rat(1), h_act(m, k_, vec));
            if (f.lowering_modes) {
                int top = 0;
                for (const auto& [b, c] : vec.terms()) top = std::max(top, b.degree());
                for (int m = 1; m <= top; ++m) emit(a, Exponent(-m + f.offset), Rat(1), h_act(m, k_, vec));
            }
            break;
        case FockFactor::Kind::HMode:
            emit(a, Exponent(0), Rat(1), h_act(f.mode, k_, vec));
            break;
        }
    }
    // t - deg moves by the mode for H(m) and by the offset for a current
    std::optional<Exponent> grade = in.grade();
    if (grade && f.kind == FockFactor::Kind::HMode) grade = *grade + Exponent(f.mode);
    if (grade && f.kind == FockFactor::Kind::HCurrent) grade = *grade + Exponent(f.offset);
    return VecSeries(std::move(out), hull, window, in.region(), grade);
}

VecSeries FockEngine::apply(const std::vector<FockFactor>& word, const VecSeries& in, std::optional<int> max_degree) {
    // cap[i]: rows of factor i's output that can still reach max_degree,
    // given how far the factors to its left can lower the degree
    std::vector<std::optional<int>> cap(word.size());
    int budget = 0;
    bool bounded = true;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (max_degree && bounded) cap[i] = *max_degree + budget;
        const auto& f = word[i];
        if ((f.kind == FockFactor::Kind::E && f.dir == Dir::Minus) ||
            (f.kind == FockFactor::Kind::HCurrent && f.lowering_modes))
            bounded = false;
        else if (f.kind == FockFactor::Kind::HMode && f.mode > 0)
            budget += f.mode;
    }
    VecSeries cur = in;
    for (std::size_t i = word.size(); i-- > 0;) cur = apply(word[i], cur, cap[i]);
    return cur;
}

// --- matrices ---------------------------------------------------------------

Rat RatMatrix::at(const FockBasisElt& row, const FockBasisElt& col) const {
    auto it = entries.find({row, col});
    return it == entries.end() ? Rat(0) : it->second;
}

RatMatrix matrix_product(const RatMatrix& a, const RatMatrix& b, int D) {
    std::map<FockBasisElt, std::vector<std::pair<FockBasisElt, Rat>>> b_by_row;
    for (const auto& [rc, v] : b.entries) b_by_row[rc.first].emplace_back(rc.second, v);
    RatMatrix out;
    for (const auto& [rc, v] : a.entries) {
        if (rc.first.degree() > D) continue;
        auto it = b_by_row.find(rc.second);
        if (it == b_by_row.end()) continue;
        for (const auto& [col, w] : it->second) {
            if (col.degree() > D) continue;
            auto& e = out.entries[{rc.first, col}];
            e += v * w;
        }
    }
    for (auto it = out.entries.begin(); it != out.entries.end();) {
        if (it->second.is_zero())
            it = out.entries.erase(it);
        else
            ++it;
    }
    return out;
}

RatMatrix identity_matrix(int D) {
    RatMatrix m;
    for (const auto& b : fock_basis(D)) m.entries.emplace(std::make_pair(b, b), Rat(1));
    return m;
}

FockOpSeries e_op(Dir dir, int sign, int k, int N, int D) {
    FockEngine eng(k, N);
    FockOpSeries out;
    out.D = D;
    out.lo = dir == Dir::Plus ? Exponent(0) : Exponent(-N);
    out.hi = dir == Dir::Plus ? Exponent(N) : Exponent(0);
    for (int j = 0; j <= N; ++j) out.coeffs[dir == Dir::Plus ? Exponent(j) : Exponent(-j)];
    for (const auto& col : fock_basis(D)) {
        if (dir == Dir::Plus) {
            for (int j = 0; j <= N; ++j) {
                FockVector v = eng.raising_coeff(sign, j).times(FockVector(col));
                for (const auto& [row, c] : v.terms())
                    if (row.degree() <= D) out.coeffs[Exponent(j)].entries.emplace(std::make_pair(row, col), c);
            }
        } else {
            const auto& R = eng.lowering_action(sign, col);
            for (std::size_t i = 0; i < R.size() && static_cast<int>(i) <= N; ++i)
                for (const auto& [row, c] : R[i].terms())
                    out.coeffs[Exponent(-static_cast<long>(i))].entries.emplace(std::make_pair(row, col), c);
        }
    }
    return out;
}

std::string matrix_dump(const FockOpSeries& s) {
    std::ostringstream out;
    out << "negaff-matrix-series 1\n";
    out << "region None\n";
    out << "window (zone " << s.lo.str() << " " << s.hi.str() << " 0 0 " << s.lo.str() << " " << s.hi.str() << ")\n";
    out << "fock-degree " << s.D << "\n";
    std::size_t n = 0;
    for (const auto& [e, m] : s.coeffs) n += m.entries.size();
    out << "terms " << n << "\n";
    for (const auto& [e, m] : s.coeffs)
        for (const auto& [rc, c] : m.entries)
            out << e.num() << " " << e.den() << " 0 1 " << rc.first.label() << " " << rc.second.label() << " "
                << c.num_str() << " " << c.den_str() << "\n";
    return out.str();
}

// --- comparisons ------------------------------------------------------------

CheckOutcome compare_columns(const VecSeries& lhs, const VecSeries& rhs, const FockBasisElt& col, int D,
                             const WindowPtr& extra, const std::vector<ExpPair>& probes) {
    return compare_series(
        lhs, rhs, extra,
        [&](const FockVector& l, const FockVector& r, Mismatch& m) {
            auto li = l.terms().begin();
            auto ri = r.terms().begin();
            while (li != l.terms().end() || ri != r.terms().end()) {
                const FockBasisElt* row;
                Rat lv(0), rv(0);
                if (ri == r.terms().end() || (li != l.terms().end() && li->first < ri->first)) {
                    row = &li->first;
                    lv = li->second;
                    ++li;
                } else if (li == l.terms().end() || ri->first < li->first) {
                    row = &ri->first;
                    rv = ri->second;
                    ++ri;
                } else {
                    row = &li->first;
                    lv = li->second;
                    rv = ri->second;
                    ++li;
                    ++ri;
                }
                if (row->degree() > D || lv == rv) continue;
                m.where = "row " + row->label() + " col " + col.label();
                m.lhs = lv;
                m.rhs = rv;
                return true;
            }
            return false;
        },
        probes);
}

FracSeries2 column_entry(const VecSeries& s, const FockBasisElt& row) {
    std::map<ExpPair, Rat> t;
    for (const auto& [p, v] : s.terms()) {
        Rat c = v.coeff(row);
        if (!c.is_zero()) t.emplace(p, c);
    }
    Zone hull = s.hull();
    if (s.grade()) {
        Exponent deg = Exponent(row.degree()) + *s.grade();
        hull = hull.with_t(deg, deg);
    }
    return FracSeries2(std::move(t), hull, s.window(), s.region());
}

CheckOutcome verify_hh_bracket(int k, int M, int D) {
    CheckOutcome out;
    out.status = Status::Pass;
    for (const auto& b : fock_basis(D)) {
        FockVector v(b);
        for (int m = -M; m <= M; ++m)
            for (int n = -M; n <= M; ++n) {
                FockVector lhs = h_act(m, k, h_act(n, k, v)) - h_act(n, k, h_act(m, k, v));
                FockVector rhs = m + n == 0 ? v.scaled(Rat(-2L * m * k)) : FockVector();
                out.window.note(Exponent(m), Exponent(n));
                if (out.status == Status::Fail || lhs == rhs) continue;
                out.status = Status::Fail;
                Mismatch mm;
                mm.ez = Exponent(m);
                mm.ew = Exponent(n);
                for (const auto& row : fock_basis(D + 2 * M)) {
                    if (lhs.coeff(row) != rhs.coeff(row)) {
                        mm.where = "row " + row.label() + " col " + b.label();
                        mm.lhs = lhs.coeff(row);
                        mm.rhs = rhs.coeff(row);
                        break;
                    }
                }
                out.mismatch = mm;
            }
    }
    out.window.truncation = M;
    out.window.fock_degree = D;
    return out;
}

// --- Prop. 3.1 ---------------------------------------------------------------

namespace {

using Word = std::vector<FockFactor>;

FockFactor E(Dir d, int s, Var v) { return FockFactor::e(d, s, v); }

struct ExponentialRunner {
    FockEngine eng;
    int k, N, D;
    std::vector<FockBasisElt> cols;

    ExponentialRunner(int k_, int N_, int D_) : eng(k_, N_), k(k_), N(N_), D(D_), cols(fock_basis(D_)) {}

    // lhs(col) == rhs(col) for every column of degree <= D
    CheckOutcome check(const std::function<VecSeries(const FockBasisElt&)>& lhs,
                       const std::function<VecSeries(const FockBasisElt&)>& rhs) {
        std::vector<CheckOutcome> parts;
        for (const auto& c : cols) parts.push_back(compare_columns(lhs(c), rhs(c), c, D));
        auto out = combine(parts);
        out.window.truncation = N;
        out.window.fock_degree = D;
        return out;
    }

    CheckOutcome words_equal(const Word& a, const Word& b, RegionTag region = std::nullopt,
                             const std::optional<FracSeries2>& rhs_scalar = std::nullopt) {
        return check([&](const FockBasisElt& c) { return eng.apply(a, c, D).with_region(region); },
                     [&](const FockBasisElt& c) {
                         auto v = eng.apply(b, c, D).with_region(region);
                         return rhs_scalar ? mul(*rhs_scalar, v) : v;
                     });
    }
};

}  // namespace

std::vector<VerifyReport> verify_exponential(int k, int N, int D, const ExponentialOptions& opts) {
    ExponentialRunner r(k, N, D);
    std::vector<VerifyReport> out;
    auto emit = [&](const std::string& id, const std::vector<CheckOutcome>& parts) {
        auto o = combine(parts);
        o.window.truncation = N;
        o.window.fock_degree = D;
        out.push_back(make_report(id, k, 0, o));
    };
    const Var z = Var::Z, w = Var::W;

    // E^+_d(z) E^-_d(z) = E^-_d(z) E^+_d(z) = 1
    for (Dir d : {Dir::Plus, Dir::Minus}) {
        std::vector<CheckOutcome> parts;
        auto id = [&](const FockBasisElt& c) { return r.eng.column(c); };
        for (int s : {1, -1})
            parts.push_back(r.check([&](const FockBasisElt& c) { return r.eng.apply({E(d, s, z), E(d, -s, z)}, c, D); }, id));
        emit(d == Dir::Plus ? "exponential.inverse_plus" : "exponential.inverse_minus", parts);
    }

    // same-variable commutativity of the raising operators
    {
        std::vector<CheckOutcome> parts;
        for (int s : {1, -1})
            for (int t : {1, -1}) parts.push_back(r.words_equal({E(Dir::Plus, s, z), E(Dir::Plus, t, z)}, {E(Dir::Plus, t, z), E(Dir::Plus, s, z)}));
        emit("exponential.same_var_commute", parts);
    }

    // d/dz (E_+^s E_-^s) = -s/k [H_<0(z) E_+^s E_-^s + E_+^s E_-^s H_>0(z)],
    // with H_<0(z) = sum_{n<0} H(n) z^{-n-1} and H_>0(z) likewise.
    for (int s : {1, -1}) {
        Word pair = {E(Dir::Plus, s, z), E(Dir::Minus, s, z)};
        Word left = {FockFactor::current(z, true, false, -1), E(Dir::Plus, s, z), E(Dir::Minus, s, z)};
        Word right = {E(Dir::Plus, s, z), E(Dir::Minus, s, z), FockFactor::current(z, false, true, -1)};
        auto o = r.check([&](const FockBasisElt& c) { return d_dz(r.eng.apply(pair, c, D)); },
                         [&](const FockBasisElt& c) {
                             auto v = add(r.eng.apply(left, c, D), r.eng.apply(right, c, D));
                             return scale(v, Rat(-s, k));
                         });
        emit(s > 0 ? "exponential.derivative_plus" : "exponential.derivative_minus", {o});
    }

    // two-variable commutativity, same direction and sign
    {
        std::vector<CheckOutcome> parts;
        for (Dir d : {Dir::Plus, Dir::Minus})
            for (int s : {1, -1}) parts.push_back(r.words_equal({E(d, s, z), E(d, s, w)}, {E(d, s, w), E(d, s, z)}));
        emit("exponential.two_var_commute", parts);
    }

    // E^+_d(z) E^-_d(w) = E^-_d(w) E^+_d(z)
    {
        std::vector<CheckOutcome> parts;
        for (Dir d : {Dir::Plus, Dir::Minus})
            parts.push_back(r.words_equal({E(d, 1, z), E(d, -1, w)}, {E(d, -1, w), E(d, 1, z)}));
        emit("exponential.mixed_sign_commute", parts);
    }

    auto opposite = binom_expand(Rat(-2, k), Region::InnerZ, N);
    auto same = binom_expand(Rat(2, k), Region::InnerZ, N);

    // E^s_+(z) E^-s_-(w) = E^-s_-(w) E^s_+(z) (1 - z/w)^(-2/k)
    {
        std::vector<CheckOutcome> parts;
        for (int s : {1, -1})
            parts.push_back(r.words_equal({E(Dir::Plus, s, z), E(Dir::Minus, -s, w)},
                                          {E(Dir::Minus, -s, w), E(Dir::Plus, s, z)}, Region::InnerZ, opposite));
        emit("exponential.exchange_opposite", parts);
    }

    // E^s_+(z) E^s_-(w) = E^s_-(w) E^s_+(z) (1 - z/w)^(2/k)
    {
        std::vector<CheckOutcome> parts;
        for (int s : {1, -1})
            parts.push_back(r.words_equal({E(Dir::Plus, s, z), E(Dir::Minus, s, w)},
                                          {E(Dir::Minus, s, w), E(Dir::Plus, s, z)}, Region::InnerZ, same));
        emit("exponential.exchange_same", parts);
    }

    // Exchange of E^+_+(z) with E^-_-(w). The literal variant puts
    // E^-_+(w) on the right-hand side, which must fail.
    {
        FockFactor right = opts.literal_exchange ? E(Dir::Plus, -1, w) : E(Dir::Minus, -1, w);
        auto o = r.words_equal({E(Dir::Plus, 1, z), E(Dir::Minus, -1, w)}, {right, E(Dir::Plus, 1, z)},
                               Region::InnerZ, opposite);
        emit("exponential.exchange_line", {o});
    }
    return out;
}

}  // namespace negaff
