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

#include "negaff/realization.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <tuple>

#include "negaff/delta.hpp"

namespace negaff {

namespace {

using Word = std::vector<FockFactor>;

const char* var_name(Var v) { return v == Var::Z ? "z" : "w"; }

std::string word_key(const Word& w) {
    std::string s;
    for (const auto& f : w) s += f.str() + " ";
    return s;
}

Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Region region_of(Var first) { return first == Var::Z ? Region::InnerW : Region::InnerZ; }

FracSeries2 one() { return monomial(Exponent(0), Exponent(0)); }

std::string field_label(AType a, Var v) { return atype_name(a) + "(" + var_name(v) + ")"; }

FockFactor E(Dir d, int s, Var v = Var::Z) { return FockFactor::e(d, s, v); }

struct Placed {
    const CurrentExpr* e;
    Var v;
};

Word placed_word(const Placed& p) {
    Word w = p.e->efactors;
    for (auto& f : w) f.var = p.v;
    return w;
}

// E-word moved to E_+ ... E_- order, with exchange scalars, inverse pairs
// cancelled.
struct Canonical {
    Word word;
    FracSeries2 scalar;
    std::vector<std::string> problems;
};

Canonical canonicalize(const Word& w, int k, int N) {
    Canonical c;
    c.scalar = one();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].kind != FockFactor::Kind::E) {
            c.problems.push_back("non-exponential factor " + w[i].str());
            continue;
        }
        if (w[i].dir != Dir::Minus) continue;
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[j].kind != FockFactor::Kind::E || w[j].dir != Dir::Plus) continue;
            if (w[i].var == w[j].var) {
                c.problems.push_back("E_- left of E_+ in one variable: " + word_key(w));
                continue;
            }
            // E_-^s(x) E_+^t(y) = E_+^t(y) E_-^s(x) (1 - y/x)^(-2st/k)
            c.scalar = mul(c.scalar, binom_expand(Rat(-2L * w[i].sign * w[j].sign, k), region_of(w[i].var), N));
        }
    }
    std::map<std::tuple<int, int, int>, int> count;  // (dir, var, sign)
    for (const auto& f : w)
        if (f.kind == FockFactor::Kind::E) ++count[{f.dir == Dir::Plus ? 0 : 1, f.var == Var::Z ? 0 : 1, f.sign > 0 ? 0 : 1}];
    for (int d = 0; d < 2; ++d)
        for (int v = 0; v < 2; ++v) {
            int p = count[{d, v, 0}], m = count[{d, v, 1}];
            int cancel = std::min(p, m);
            Dir dir = d == 0 ? Dir::Plus : Dir::Minus;
            Var var = v == 0 ? Var::Z : Var::W;
            for (int i = 0; i < p - cancel; ++i) c.word.push_back(E(dir, 1, var));
            for (int i = 0; i < m - cancel; ++i) c.word.push_back(E(dir, -1, var));
        }
    return c;
}

using Keyed = std::map<OpKey, VecSeries>;

class Evaluator {
public:
    explicit Evaluator(const BracketOptions& o)
        : o_(o), eng_(o.k, o.N), cols_(fock_basis(o.D)), x_(build_current(CurrentKind::X, o.k)),
          y_(build_current(CurrentKind::Y, o.k)) {}

    const std::vector<FockBasisElt>& cols() const { return cols_; }

    const VecSeries& fock(const Word& w, std::size_t c) {
        auto key = std::make_pair(word_key(w), c);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, eng_.apply(w, cols_[c], o_.D)).first;
        return it->second;
    }

    // Raw field product first(x) second(y) = K^{-1} (N + C): one label per
    // symbol with its scalar coefficient.
    std::vector<std::pair<std::string, FracSeries2>> field_terms(const Placed& first, const Placed& second) {
        auto f1 = first.e->field, f2 = second.e->field;
        std::vector<std::pair<std::string, FracSeries2>> out;
        if (f1 && f2) {
            Region r = region_of(first.v);
            auto nf = product_to_normal_form(*f1, first.v, *f2, o_.k, r, o_.N);
            auto kinv = kernel_inverse(*f1, *f2, o_.k, r, o_.N);
            for (const auto& [sym, pref] : nf.entries) {
                if (sym.kind == PfKind::Unit)
                    out.emplace_back("1", mul(kinv, pref));
                else
                    out.emplace_back(sym.label(), kinv);
            }
        } else if (f1) {
            out.emplace_back(field_label(*f1, first.v), one());
        } else if (f2) {
            out.emplace_back(field_label(*f2, second.v), one());
        } else {
            out.emplace_back("1", one());
        }
        return out;
    }

    FracSeries2 generalized(const Placed& first, const Placed& second) const {
        if (!o_.generalized || !first.e->field || !second.e->field) return one();
        return binom_expand(Rat(-pairing(*first.e->field, *second.e->field), o_.k), region_of(first.v), o_.N);
    }

    // Lattice part by acting on e^{n alpha} one operator at a time.
    std::pair<int, FracSeries2> lattice_acting(const Placed& first, const Placed& second, int n) const {
        LatticeVector v = lattice_basis(n);
        Exponent ez(0), ew(0);
        for (const Placed* p : {&second, &first}) {
            int cur = v.begin()->first;
            Exponent e = Exponent(2) * p->e->power.a * Exponent(cur);
            (p->v == Var::Z ? ez : ew) = (p->v == Var::Z ? ez : ew) + e;
            v = shift(p->e->shift, v);
        }
        return {v.begin()->first, monomial(ez, ew)};
    }

    // Lattice part by moving the sector power of the first operator past
    // the shift of the second.
    std::pair<int, FracSeries2> lattice_commuted(const Placed& first, const Placed& second, int n) const {
        Exponent e2 = sector_exponent(second.e->power, n);
        Exponent e1 = sector_exponent(first.e->power, n) + commute_z_past_e(first.e->power, second.e->shift);
        Exponent ez(0), ew(0);
        (second.v == Var::Z ? ez : ew) = e2;
        (first.v == Var::Z ? ez : ew) = (first.v == Var::Z ? ez : ew) + e1;
        return {n + first.e->shift + second.e->shift, monomial(ez, ew)};
    }

    std::vector<std::pair<Word, Rat>> fock_terms(const Placed& p, int sector_in) const {
        if (p.e->heisenberg) return {{{FockFactor::current(p.v)}, Rat(1)}, {{}, Rat(2L * sector_in)}};
        return {{placed_word(p), Rat(1)}};
    }

    Keyed product(const Placed& first, const Placed& second, int n, std::size_t c) {
        auto [out_sector, lat] = lattice_acting(first, second, n);
        int mid = n + second.e->shift;
        std::optional<VecSeries> F;
        for (const auto& [w2, c2] : fock_terms(second, n))
            for (const auto& [w1, c1] : fock_terms(first, mid)) {
                Rat s = c1 * c2;
                if (s.is_zero()) continue;
                auto t = scale(fock(concat(w1, w2), c), s);
                F = F ? add(*F, t) : t;
            }
        auto base = mul(lat, generalized(first, second));
        Keyed out;
        for (const auto& [label, p] : field_terms(first, second))
            out.emplace(OpKey{label, out_sector}, mul(mul(base, p), *F));
        return out;
    }

    std::pair<OpKey, VecSeries> single(const Placed& p, int n, std::size_t c) {
        if (p.e->heisenberg) throw std::invalid_argument("single: Heisenberg current");
        Exponent e = sector_exponent(p.e->power, n);
        auto lat = p.v == Var::Z ? monomial(e, Exponent(0)) : monomial(Exponent(0), e);
        OpKey key{p.e->field ? field_label(*p.e->field, p.v) : "1", n + p.e->shift};
        return {key, mul(lat, fock(placed_word(p), c))};
    }

    Keyed canonical(const Placed& a, const Placed& b, int n, std::size_t c, std::set<std::string>& leftover) {
        if (a.e->heisenberg && b.e->heisenberg) return modes_hh(n, c);
        if (a.e->heisenberg) return leibniz(b, n, c);
        if (b.e->heisenberg) throw std::invalid_argument("bracket_currents: H must be the first current");

        auto ca = canonicalize(concat(placed_word(a), placed_word(b)), o_.k, o_.N);
        auto cb = canonicalize(concat(placed_word(b), placed_word(a)), o_.k, o_.N);
        leftover.insert(ca.problems.begin(), ca.problems.end());
        leftover.insert(cb.problems.begin(), cb.problems.end());
        if (word_key(ca.word) != word_key(cb.word))
            leftover.insert("E-words differ after reordering: " + word_key(ca.word) + "| " + word_key(cb.word));

        auto [out_sector, lat_ab] = lattice_commuted(a, b, n);
        auto lat_ba = lattice_commuted(b, a, n).second;
        auto pre_ab = mul(mul(ca.scalar, lat_ab), generalized(a, b));
        auto pre_ba = mul(mul(cb.scalar, lat_ba), generalized(b, a));
        std::map<std::string, std::pair<std::optional<FracSeries2>, std::optional<FracSeries2>>> coeffs;
        for (const auto& [label, p] : field_terms(a, b)) coeffs[label].first = mul(pre_ab, p);
        for (const auto& [label, p] : field_terms(b, a)) coeffs[label].second = mul(pre_ba, p);

        Keyed out;
        const FracSeries2 zero;
        const auto& G = fock(ca.word, c);
        for (const auto& [label, pq] : coeffs) {
            bool symbol = label != "1";
            if (symbol && (!pq.first || !pq.second)) leftover.insert("symbol " + label + " appears in one order only");
            auto diff = region_difference(pq.first ? *pq.first : zero, pq.second ? *pq.second : zero);
            if (symbol && !diff.empty()) leftover.insert("symbol " + label + " survives");
            out.emplace(OpKey{label, out_sector}, mul(diff, G));
        }
        return out;
    }

    // [H(z), b(w)] from the mode rules [H(m), E_+^t(w)] = 2t w^m E_+^t(w)
    // for m > 0, [H(m), E_-^s(w)] = 2s w^m E_-^s(w) for m < 0, and
    // [H(0), e^{m alpha}] = 2m e^{m alpha}.
    Keyed leibniz(const Placed& b, int n, std::size_t c) {
        std::map<ExpPair, Rat> r;
        for (int m = -o_.N; m <= o_.N; ++m) {
            Rat cm(0);
            if (m == 0) {
                cm = Rat(2L * b.e->shift);
            } else {
                for (const auto& f : b.e->efactors)
                    if ((f.dir == Dir::Plus && m > 0) || (f.dir == Dir::Minus && m < 0)) cm += Rat(2L * f.sign);
            }
            if (!cm.is_zero()) r.emplace(ExpPair(Exponent(-m), Exponent(m)), cm);
        }
        Exponent N(o_.N);
        FracSeries2 R(std::move(r), Zone().with_t(Exponent(0), Exponent(0)),
                      Window::zone(Zone().with_ez(-N, N).with_ew(-N, N)));
        auto [key, s] = single(b, n, c);
        Keyed out;
        out.emplace(key, mul(R, s));
        return out;
    }

    // [H(z), H(w)] mode by mode: sum of [H(m), H(p)] z^-m w^-p, |m|, |p| <= N.
    Keyed modes_hh(int n, std::size_t c) {
        VecSeries::Map t;
        FockVector v(cols_[c]);
        for (int m = -o_.N; m <= o_.N; ++m)
            for (int p = -o_.N; p <= o_.N; ++p) {
                FockVector x = h_act(m, o_.k, h_act(p, o_.k, v)) - h_act(p, o_.k, h_act(m, o_.k, v));
                if (!x.is_zero()) t.emplace(ExpPair(Exponent(-m), Exponent(-p)), x);
            }
        Exponent N(o_.N);
        Keyed out;
        out.emplace(OpKey{"1", n}, VecSeries(std::move(t), Zone(), Window::zone(Zone().with_ez(-N, N).with_ew(-N, N))));
        return out;
    }

    Keyed target(const Placed& a, const Placed& b, int n, std::size_t c) {
        Keyed out;
        CurrentKind ka = a.e->kind, kb = b.e->kind;
        auto column = eng_.column(cols_[c]);
        bool xy = ka == CurrentKind::X && kb == CurrentKind::Y;
        bool zz = ka == CurrentKind::ZPlus && kb == CurrentKind::ZMinus;
        if (xy || zz) {
            // H(w) delta_s - k w d/dw delta_s with H(0) = 2n, where
            // delta_s = (w/z)^(2n/k) delta(w/z) carries the sector power
            auto ds = delta_twisted(Exponent(2L * n, o_.k), o_.N);
            auto lin = sub(scale(ds, Rat(2L * n)), scale(w_d_w(ds), Rat(o_.k)));
            auto v = mul(lin, column);
            // the dressing cancels the Fock part of H in the Z bracket
            if (xy) v = add(mul(ds, fock({FockFactor::current(Var::W)}, c)), v);
            out.emplace(OpKey{"1", n}, v);
        } else if (ka == CurrentKind::H && kb == CurrentKind::H) {
            out.emplace(OpKey{"1", n}, mul(scale(w_d_delta(o_.N), Rat(-2L * o_.k)), column));
        } else if (ka == CurrentKind::H && (kb == CurrentKind::X || kb == CurrentKind::Y)) {
            bool use_x = kb == CurrentKind::X || o_.literal_hy;
            Placed p{use_x ? &x_ : &y_, Var::W};
            auto [key, s] = single(p, n, c);
            out.emplace(key, mul(scale(delta(o_.N), Rat(kb == CurrentKind::X ? 2 : -2)), s));
        }
        return out;
    }

private:
    BracketOptions o_;
    FockEngine eng_;
    std::vector<FockBasisElt> cols_;
    CurrentExpr x_, y_;
    std::map<std::pair<std::string, std::size_t>, VecSeries> cache_;
};

void put(KeyedColumns& kc, const OpKey& key, std::size_t c, std::size_t ncols, VecSeries s) {
    auto it = kc.try_emplace(key, ColumnSet(ncols)).first;
    it->second[c] = std::move(s);
}

KeyedColumns add_keyed(const KeyedColumns& a, const KeyedColumns& b) {
    KeyedColumns out = a;
    for (const auto& [key, cs] : b) {
        auto [it, inserted] = out.try_emplace(key, cs);
        if (inserted) continue;
        for (std::size_t c = 0; c < cs.size(); ++c) it->second[c] = add(it->second[c], cs[c]);
    }
    return out;
}

// Union of stored points, used only as comparison probes.
KeyedColumns support(const KeyedColumns& a, const KeyedColumns& b) {
    KeyedColumns out;
    for (const auto* src : {&a, &b})
        for (const auto& [key, cs] : *src) {
            auto [it, inserted] = out.try_emplace(key, ColumnSet(cs.size()));
            for (std::size_t c = 0; c < cs.size(); ++c) {
                VecSeries::Map t = it->second[c].terms();
                for (const auto& [p, v] : cs[c].terms()) t.emplace(p, v);
                it->second[c] = VecSeries(std::move(t), Zone(), Window::full());
            }
        }
    return out;
}

}  // namespace

std::string OpKey::str() const { return field + "@" + std::to_string(sector); }

CurrentExpr build_current(CurrentKind which, int k) {
    CurrentExpr e;
    e.kind = which;
    switch (which) {
    case CurrentKind::X:
        e.name = "X";
        e.efactors = {E(Dir::Plus, 1), E(Dir::Minus, 1)};
        e.field = AType::A;
        e.shift = 1;
        e.power.a = Exponent(-1, k);
        break;
    case CurrentKind::Y:
        e.name = "Y";
        e.efactors = {E(Dir::Plus, -1), E(Dir::Minus, -1)};
        e.field = AType::AStar;
        e.shift = -1;
        e.power.a = Exponent(1, k);
        break;
    case CurrentKind::H:
        e.name = "H";
        e.heisenberg = true;
        break;
    case CurrentKind::ZPlus:
        return build_z_operator(1, k);
    case CurrentKind::ZMinus:
        return build_z_operator(-1, k);
    }
    return e;
}

CurrentExpr build_z_operator(int sign, int k) {
    CurrentExpr e = build_current(sign > 0 ? CurrentKind::X : CurrentKind::Y, k);
    e.kind = sign > 0 ? CurrentKind::ZPlus : CurrentKind::ZMinus;
    e.name = sign > 0 ? "Z+" : "Z-";
    // Z+ = E_+^-(z) X(z) E_-^-(z), Z- = E_+^+(z) Y(z) E_-^+(z)
    e.efactors.insert(e.efactors.begin(), E(Dir::Plus, -sign));
    e.efactors.push_back(E(Dir::Minus, -sign));
    return e;
}

CurrentExpr reduce(const CurrentExpr& e) {
    CurrentExpr out = e;
    std::vector<FockFactor> w;
    for (const auto& f : e.efactors) {
        if (!w.empty() && w.back().kind == FockFactor::Kind::E && f.kind == FockFactor::Kind::E &&
            w.back().dir == f.dir && w.back().var == f.var && w.back().sign == -f.sign) {
            w.pop_back();
            continue;
        }
        w.push_back(f);
    }
    out.efactors = std::move(w);
    return out;
}

BracketResult bracket_currents(const CurrentExpr& a, const CurrentExpr& b, const BracketOptions& opts) {
    if (opts.W < 0) throw std::invalid_argument("bracket_currents: negative sector range");
    Evaluator ev(opts);
    Placed pa{&a, Var::Z}, pb{&b, Var::W};
    BracketResult res;
    res.columns = ev.cols();
    const std::size_t nc = res.columns.size();
    for (int n = -opts.W; n <= opts.W; ++n) {
        SectorBracket sb;
        sb.sector = n;
        std::set<std::string> leftover;
        for (std::size_t c = 0; c < nc; ++c) {
            for (auto& [key, s] : ev.product(pa, pb, n, c)) put(sb.ab, key, c, nc, std::move(s));
            for (auto& [key, s] : ev.product(pb, pa, n, c)) put(sb.ba, key, c, nc, std::move(s));
            for (auto& [key, s] : ev.canonical(pa, pb, n, c, leftover)) put(sb.canonical, key, c, nc, std::move(s));
            for (auto& [key, s] : ev.target(pa, pb, n, c)) put(sb.target, key, c, nc, std::move(s));
        }
        sb.leftover.assign(leftover.begin(), leftover.end());
        auto it = sb.canonical.find(OpKey{"1", n});
        if (it != sb.canonical.end()) {
            const VecSeries& s = it->second[0];  // vacuum column
            Exponent shift(2L * n, opts.k);
            for (int M = -opts.N; M <= opts.N; ++M) {
                ExpPair p(-shift - Exponent(M), shift + Exponent(M));
                if (!s.known(p)) continue;
                auto t = s.terms().find(p);
                sb.delta_coeff[p.second] = t == s.terms().end() ? Rat(0) : t->second.coeff(FockBasisElt());
            }
        }
        res.sectors.push_back(std::move(sb));
    }
    return res;
}

KeyedColumns residual(const SectorBracket& s) {
    KeyedColumns out = s.canonical;
    for (const auto& [key, cs] : s.target) {
        auto [it, inserted] = out.try_emplace(key, ColumnSet(cs.size()));
        for (std::size_t c = 0; c < cs.size(); ++c) it->second[c] = sub(it->second[c], cs[c]);
    }
    return out;
}

CheckOutcome compare_keyed(const KeyedColumns& lhs, const KeyedColumns& rhs, const std::vector<FockBasisElt>& cols,
                           int D, const KeyedColumns* probe_source) {
    std::set<OpKey> keys;
    for (const auto& [k, v] : lhs) keys.insert(k);
    for (const auto& [k, v] : rhs) keys.insert(k);
    std::vector<CheckOutcome> parts;
    const VecSeries zero;
    for (const auto& key : keys) {
        auto li = lhs.find(key);
        auto ri = rhs.find(key);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::vector<ExpPair> probes;
            if (probe_source) {
                auto pi = probe_source->find(key);
                if (pi != probe_source->end())
                    for (const auto& [p, v] : pi->second[c].terms()) probes.push_back(p);
            }
            auto o = compare_columns(li == lhs.end() ? zero : li->second[c], ri == rhs.end() ? zero : ri->second[c],
                                     cols[c], D, nullptr, probes);
            if (o.mismatch) o.mismatch->where = key.str() + " " + o.mismatch->where;
            parts.push_back(std::move(o));
        }
    }
    return combine(parts);
}

namespace {

CheckOutcome leftover_outcome(const SectorBracket& sb) {
    CheckOutcome o;
    o.status = Status::Pass;
    o.window.checked = 1;
    if (!sb.leftover.empty()) {
        o.status = Status::Fail;
        Mismatch m;
        m.where = "leftover: " + sb.leftover.front();
        o.mismatch = m;
    }
    return o;
}

// Both routes against the target, plus structural cancellation.
CheckOutcome sector_outcome(const SectorBracket& sb, const std::vector<FockBasisElt>& cols, int D) {
    KeyedColumns both = support(sb.ab, sb.ba);
    std::vector<CheckOutcome> parts;
    parts.push_back(leftover_outcome(sb));
    parts.push_back(compare_keyed(sb.canonical, sb.target, cols, D, &both));
    parts.push_back(compare_keyed(sb.ab, add_keyed(sb.ba, sb.target), cols, D, &both));
    return combine(parts);
}

VerifyReport finish(const std::string& id, int k, int sector, CheckOutcome o, int N, int D, int W) {
    o.window.truncation = N;
    o.window.fock_degree = D;
    auto r = make_report(id, k, sector, o);
    r.sector_range = W;
    return r;
}

}  // namespace

std::vector<VerifyReport> verify_currents(int k, int N, int D, int W, const CurrentOptions& opts) {
    struct Pair {
        const char* id;
        CurrentKind a, b;
    };
    const Pair pairs[] = {{"xx", CurrentKind::X, CurrentKind::X}, {"yy", CurrentKind::Y, CurrentKind::Y},
                          {"xy", CurrentKind::X, CurrentKind::Y}, {"hx", CurrentKind::H, CurrentKind::X},
                          {"hy", CurrentKind::H, CurrentKind::Y}, {"hh", CurrentKind::H, CurrentKind::H}};
    BracketOptions o;
    o.k = k;
    o.N = N;
    o.D = D;
    o.W = W;
    o.literal_hy = opts.literal_hy;
    std::vector<VerifyReport> out;
    for (const auto& p : pairs) {
        auto res = bracket_currents(build_current(p.a, k), build_current(p.b, k), o);
        for (const auto& sb : res.sectors)
            out.push_back(finish(std::string("currents.") + p.id, k, sb.sector, sector_outcome(sb, res.columns, D), N, D, W));
    }
    return out;
}

std::vector<VerifyReport> verify_z_brackets(int k, int N, int D, int W) {
    struct Pair {
        const char* id;
        int a, b;
    };
    const Pair pairs[] = {{"zplus_zplus", 1, 1}, {"zminus_zminus", -1, -1}, {"zplus_zminus", 1, -1}};
    BracketOptions o;
    o.k = k;
    o.N = N;
    o.D = D;
    o.W = W;
    o.generalized = true;
    std::vector<VerifyReport> out;
    std::map<int, std::vector<CheckOutcome>> agreement;
    for (const auto& p : pairs) {
        auto za = build_z_operator(p.a, k), zb = build_z_operator(p.b, k);
        auto dressed = bracket_currents(za, zb, o);
        auto reduced = bracket_currents(reduce(za), reduce(zb), o);
        for (std::size_t i = 0; i < dressed.sectors.size(); ++i) {
            const auto& ds = dressed.sectors[i];
            const auto& rs = reduced.sectors[i];
            out.push_back(finish(std::string("zdressed.") + p.id, k, ds.sector, sector_outcome(ds, dressed.columns, D), N, D, W));
            out.push_back(finish(std::string("zreduced.") + p.id, k, rs.sector, sector_outcome(rs, reduced.columns, D), N, D, W));

            auto& parts = agreement[ds.sector];
            KeyedColumns both = support(rs.ab, rs.ba);
            parts.push_back(compare_keyed(ds.canonical, rs.canonical, dressed.columns, D, &both));
            parts.push_back(compare_keyed(ds.ab, rs.ab, dressed.columns, D, &both));
            parts.push_back(compare_keyed(ds.ba, rs.ba, dressed.columns, D, &both));
            CheckOutcome dc;
            dc.status = Status::Pass;
            std::set<Exponent> ms;
            for (const auto& [m, c] : ds.delta_coeff) ms.insert(m);
            for (const auto& [m, c] : rs.delta_coeff) ms.insert(m);
            for (const auto& m : ms) {
                auto a = ds.delta_coeff.find(m);
                auto b = rs.delta_coeff.find(m);
                if (a == ds.delta_coeff.end() || b == rs.delta_coeff.end()) continue;
                dc.window.note(-m, m);
                if (a->second != b->second && !dc.mismatch) {
                    dc.status = Status::Fail;
                    dc.mismatch = Mismatch{"delta coefficient", -m, m, a->second, b->second};
                }
            }
            if (p.a != p.b) {
                if (dc.window.checked == 0) dc.status = Status::Inconclusive;
                parts.push_back(dc);
            }
        }
    }
    for (const auto& [n, parts] : agreement)
        out.push_back(finish("zreduced.dressed_agreement", k, n, combine(parts), N, D, W));
    std::stable_sort(out.begin(), out.end(), [](const VerifyReport& a, const VerifyReport& b) {
        return std::tie(a.id, a.sector) < std::tie(b.id, b.sector);
    });
    return out;
}

std::vector<VerifyReport> verify_z_modes(int k, int N, int D) {
    // H(n) moves a degree-D column to degree D + |n|; raising factors must
    // reach that order for the coefficients at w^n to be authoritative.
    FockEngine eng(k, 2 * N + D);
    auto cols = fock_basis(D);
    const Var w = Var::W;
    std::vector<VerifyReport> out;
    auto emit = [&](const std::string& id, const std::vector<CheckOutcome>& parts) {
        out.push_back(finish("zmodes." + id, k, 0, combine(parts), N, D, 0));
    };
    std::vector<int> modes;
    for (int n = -N; n <= N; ++n)
        if (n != 0) modes.push_back(n);

    // [H(n), word] = c(n) w^n word, checked as H(n) word == word H(n) + c(n) w^n word
    auto rule_check = [&](const Word& word, const std::function<int(int)>& coeff) {
        std::vector<CheckOutcome> parts;
        for (int n : modes)
            for (const auto& col : cols) {
                auto plain = eng.apply(word, col, D);
                auto lhs = eng.apply(concat({FockFactor::h(n)}, word), col, D);
                auto rhs = eng.apply(concat(word, {FockFactor::h(n)}), col, D);
                int c = coeff(n);
                if (c != 0) rhs = add(rhs, mul(monomial(Exponent(0), Exponent(n), Rat(c)), plain));
                std::vector<ExpPair> probes;
                for (const auto& [p, v] : plain.terms()) probes.push_back(p);
                auto o = compare_columns(lhs, rhs, col, D, nullptr, probes);
                if (o.mismatch) o.mismatch->where = "n=" + std::to_string(n) + " " + o.mismatch->where;
                parts.push_back(std::move(o));
            }
        return parts;
    };

    auto r_eplus_minus = [](int n) { return n > 0 ? -2 : 0; };
    auto r_eminus_minus = [](int n) { return n < 0 ? -2 : 0; };
    auto r_eplus_plus = [](int n) { return n > 0 ? 2 : 0; };
    auto r_eminus_plus = [](int n) { return n < 0 ? 2 : 0; };
    auto r_x = [](int) { return 2; };
    auto r_y = [](int) { return -2; };
    auto zero = [](int) { return 0; };

    auto x = build_current(CurrentKind::X, k), y = build_current(CurrentKind::Y, k);
    auto zp = build_z_operator(1, k), zm = build_z_operator(-1, k);
    auto at_w = [&](const CurrentExpr& e) { return placed_word({&e, w}); };

    emit("h_eplus_minus", rule_check({E(Dir::Plus, -1, w)}, r_eplus_minus));
    emit("h_eminus_minus", rule_check({E(Dir::Minus, -1, w)}, r_eminus_minus));
    emit("h_eplus_plus", rule_check({E(Dir::Plus, 1, w)}, r_eplus_plus));
    emit("h_eminus_plus", rule_check({E(Dir::Minus, 1, w)}, r_eminus_plus));
    emit("h_x", rule_check(at_w(x), r_x));
    emit("h_y", rule_check(at_w(y), r_y));
    emit("h_zplus", rule_check(at_w(zp), zero));
    emit("h_zminus", rule_check(at_w(zm), zero));

    // Leibniz: the three rule coefficients for each Z sum to zero
    {
        CheckOutcome o;
        o.status = Status::Pass;
        for (int n : modes) {
            int plus = r_eplus_minus(n) + r_x(n) + r_eminus_minus(n);
            int minus = r_eplus_plus(n) + r_y(n) + r_eminus_plus(n);
            o.window.note(Exponent(n), Exponent(0));
            for (int s : {plus, minus})
                if (s != 0 && !o.mismatch) {
                    o.status = Status::Fail;
                    o.mismatch = Mismatch{"leibniz sum", Exponent(n), Exponent(0), Rat(s), Rat(0)};
                }
        }
        emit("leibniz_sum", {o});
    }

    // [E(z), Z(w)] = 0
    {
        std::vector<CheckOutcome> parts;
        for (const auto* z : {&zp, &zm})
            for (Dir d : {Dir::Plus, Dir::Minus})
                for (int s : {1, -1}) {
                    Word zw = at_w(*z);
                    Word e = {E(d, s, Var::Z)};
                    for (const auto& col : cols) {
                        auto lhs = eng.apply(concat(e, zw), col, D);
                        auto rhs = eng.apply(concat(zw, e), col, D);
                        parts.push_back(compare_columns(lhs, rhs, col, D));
                    }
                }
        emit("e_z", parts);
    }
    return out;
}

namespace {

std::size_t rat_rank(std::vector<std::vector<Rat>> m) {
    std::size_t rank = 0;
    if (m.empty()) return 0;
    std::size_t ncols = m[0].size();
    for (std::size_t c = 0; c < ncols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            Rat f = m[r][c] / m[rank][c];
            for (std::size_t j = c; j < ncols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

VerifyReport vacuum_decompose(int k, int D, int W) {
    if (D < 0 || W < 0) throw std::invalid_argument("vacuum_decompose: negative bound");
    const int S = 2 * W + 1;
    auto basis = fock_basis(D);
    std::vector<long> dim_v(D + 1), dim_omega(D + 1);
    CheckOutcome o;
    o.status = Status::Pass;
    auto fail = [&](const std::string& where, int d, long lhs, long rhs) {
        if (o.mismatch) return;
        o.status = Status::Fail;
        o.mismatch = Mismatch{where, Exponent(d), Exponent(0), Rat(lhs), Rat(rhs)};
    };
    for (int d = 0; d <= D; ++d) {
        // V_d = (Fock degree d) x sector markers; columns indexed by (b, sector)
        std::vector<std::pair<FockBasisElt, int>> vcols;
        for (const auto& b : basis)
            if (b.degree() == d)
                for (int s = -W; s <= W; ++s) vcols.emplace_back(b, s);
        std::map<std::tuple<int, FockBasisElt, int>, std::size_t> row_index;
        std::vector<std::vector<std::pair<std::size_t, Rat>>> images(vcols.size());
        for (std::size_t c = 0; c < vcols.size(); ++c)
            for (int n = 1; n <= d; ++n) {
                FockVector image = h_act(n, k, FockVector(vcols[c].first));
                for (const auto& [row, coeff] : image.terms()) {
                    auto key = std::make_tuple(n, row, vcols[c].second);
                    auto it = row_index.try_emplace(key, row_index.size()).first;
                    images[c].emplace_back(it->second, coeff);
                }
            }
        std::vector<std::vector<Rat>> m(row_index.size(), std::vector<Rat>(vcols.size()));
        for (std::size_t c = 0; c < vcols.size(); ++c)
            for (const auto& [r, coeff] : images[c]) m[r][c] = coeff;
        long kernel = static_cast<long>(vcols.size() - rat_rank(std::move(m)));
        dim_v[d] = static_cast<long>(vcols.size());
        dim_omega[d] = kernel;
        o.window.note(Exponent(d), Exponent(0));
        // the kernel is the vacuum tensored with the markers
        if (kernel != (d == 0 ? S : 0)) fail("dim Omega_" + std::to_string(d), d, kernel, d == 0 ? S : 0);
    }
    for (int d = 0; d <= D; ++d) {
        long conv = 0;
        for (int j = 0; j <= d; ++j) conv += partition_count(j) * dim_omega[d - j];
        if (conv != dim_v[d]) fail("dim V_" + std::to_string(d), d, dim_v[d], conv);
    }
    o.window.fock_degree = D;
    auto r = make_report("vacuum.decomposition", k, 0, o);
    r.sector_range = W;
    return r;
}

}  // namespace negaff
