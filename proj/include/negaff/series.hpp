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

#ifndef NEGAFF_SERIES_HPP
#define NEGAFF_SERIES_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "negaff/exponent.hpp"
#include "negaff/rat.hpp"
#include "negaff/zone.hpp"

namespace negaff {

/// Expansion direction of a two-variable series: InnerW means |w| < |z|
/// (powers of w/z), InnerZ means |z| < |w| (powers of z/w).
enum class Region { InnerW, InnerZ };

/// nullopt stands for "no region": the series is a finite sum or does not
/// depend on an expansion choice.
using RegionTag = std::optional<Region>;

std::string region_name(RegionTag r);
RegionTag parse_region(std::string_view s);

/// Thrown by coeff() for points outside the authoritative window.
class OutOfWindow : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Thrown when combining series expanded in different regions.
class RegionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Result region of combining a and b; throws RegionMismatch on conflict.
RegionTag merge_regions(RegionTag a, RegionTag b);

/// Coefficient arithmetic used by Series2. Specialized for each
/// coefficient type.
template <class C>
struct CoeffOps;

template <>
struct CoeffOps<Rat> {
    static bool is_zero(const Rat& c) { return c.is_zero(); }
    static void add_to(Rat& acc, const Rat& c) { acc += c; }
    static void add_scaled(Rat& acc, const Rat& s, const Rat& c) { acc += s * c; }
    static Rat scaled(const Rat& c, const Rat& s) { return c * s; }
};

/// Sparse Laurent series in z, w with exact rational exponents.
///
/// Besides the stored terms a series records
///  - hull: a zone outside of which every coefficient is exactly zero,
///  - window: where coefficients inside the hull are authoritative,
///  - region: the expansion region, if any,
///  - grade: for vector-valued series, t - deg(coefficient) where
///    t = ez + ew; lets operators reason about degree lower bounds.
/// Stored points are always inside hull and window.
template <class C>
class Series2 {
public:
    using Coeff = C;
    using Map = std::map<ExpPair, C>;

    /// The zero series, exact everywhere.
    Series2() : hull_(Zone::empty()), window_(Window::full()) {}

    Series2(Map terms, Zone hull, WindowPtr window, RegionTag region = std::nullopt,
            std::optional<Exponent> grade = std::nullopt)
        : terms_(std::move(terms)), hull_(std::move(hull)), window_(std::move(window)), region_(region),
          grade_(grade) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (CoeffOps<C>::is_zero(it->second))
                it = terms_.erase(it);
            else
                ++it;
        }
    }

    const Map& terms() const { return terms_; }
    const Zone& hull() const { return hull_; }
    const WindowPtr& window() const { return window_; }
    RegionTag region() const { return region_; }
    const std::optional<Exponent>& grade() const { return grade_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Whether the coefficient at (ez, ew) is authoritative.
    bool known(const Exponent& ez, const Exponent& ew) const {
        return window_->covers(Zone::point(ez, ew).intersect(hull_));
    }
    bool known(const ExpPair& p) const { return known(p.first, p.second); }
    /// Whether every coefficient in z is authoritative.
    bool known_zone(const Zone& z) const { return window_->covers(z.intersect(hull_)); }

    /// Exact coefficient; throws OutOfWindow outside the window.
    C coeff(const Exponent& ez, const Exponent& ew) const {
        if (!known(ez, ew))
            throw OutOfWindow("coefficient at (" + ez.str() + ", " + ew.str() + ") is outside the window");
        auto it = terms_.find(ExpPair(ez, ew));
        return it == terms_.end() ? C() : it->second;
    }

    Series2 with_region(RegionTag r) const {
        Series2 s = *this;
        s.region_ = r;
        return s;
    }

    Series2 with_grade(std::optional<Exponent> g) const {
        Series2 s = *this;
        s.grade_ = g;
        return s;
    }

    /// Narrow the window; terms that are no longer authoritative are dropped.
    Series2 restricted(const WindowPtr& extra) const {
        Series2 s = *this;
        s.window_ = Window::meet(window_, extra);
        for (auto it = s.terms_.begin(); it != s.terms_.end();) {
            if (!s.known(it->first))
                it = s.terms_.erase(it);
            else
                ++it;
        }
        return s;
    }

private:
    Map terms_;
    Zone hull_;
    WindowPtr window_;
    RegionTag region_;
    std::optional<Exponent> grade_;
};

using FracSeries2 = Series2<Rat>;

/// Single-variable series are two-variable series in z with ew = 0.
using FracSeries1 = Series2<Rat>;

/// t = ez + ew if the zone lies on one antidiagonal.
std::optional<Exponent> homogeneous_degree(const Zone& z);

/// Generalized binomial coefficient C(r, j).
Rat binomial(const Rat& r, int j);

/// (1 - x)^r expanded to order N with x = w/z (InnerW) or z/w (InnerZ).
FracSeries2 binom_expand(const Rat& r, Region direction, int N);

/// c z^ez w^ew, exact.
FracSeries2 monomial(const Exponent& ez, const Exponent& ew, const Rat& c = Rat(1));

/// Finite exact series from explicit terms.
FracSeries2 finite_series(const std::map<ExpPair, Rat>& terms, RegionTag region = std::nullopt);

/// Product of a scalar series with a series of any coefficient type.
///
/// Window rule: a point P is authoritative when every decomposition
/// P = A + B with A in hull(a), B in hull(b) has A in window(a) and B in
/// window(b); the test is performed lazily by Window::product. Only
/// authoritative points are generated.
template <class C>
Series2<C> mul(const FracSeries2& a, const Series2<C>& b) {
    RegionTag region = merge_regions(a.region(), b.region());
    Zone hull = a.hull().plus(b.hull());
    WindowPtr window = Window::product(a.window(), a.hull(), b.window(), b.hull());
    std::optional<Exponent> grade;
    if (b.grade()) {
        if (auto t = homogeneous_degree(a.hull())) grade = *b.grade() + *t;
    }
    Series2<C> probe({}, hull, window, region, grade);
    std::map<ExpPair, bool> known_cache;
    typename Series2<C>::Map out;
    for (const auto& [pa, ca] : a.terms()) {
        for (const auto& [pb, cb] : b.terms()) {
            ExpPair p(pa.first + pb.first, pa.second + pb.second);
            auto k = known_cache.find(p);
            if (k == known_cache.end()) k = known_cache.emplace(p, probe.known(p)).first;
            if (!k->second) continue;
            auto [it, inserted] = out.try_emplace(p);
            CoeffOps<C>::add_scaled(it->second, ca, cb);
        }
    }
    return Series2<C>(std::move(out), hull, window, region, grade);
}

namespace detail {

template <class C>
Series2<C> combine(const Series2<C>& a, const Series2<C>& b, const Rat& sb, RegionTag region) {
    Zone hull = a.hull().join(b.hull());
    WindowPtr window = Window::sum(a.window(), a.hull(), b.window(), b.hull());
    std::optional<Exponent> grade = a.grade() ? a.grade() : b.grade();
    if (a.grade() && b.grade() && *a.grade() != *b.grade()) grade.reset();
    Series2<C> probe({}, hull, window, region, grade);
    typename Series2<C>::Map out;
    for (const auto& [p, c] : a.terms())
        if (probe.known(p)) out.emplace(p, c);
    for (const auto& [p, c] : b.terms()) {
        if (!probe.known(p)) continue;
        auto [it, inserted] = out.try_emplace(p);
        CoeffOps<C>::add_scaled(it->second, sb, c);
    }
    return Series2<C>(std::move(out), hull, window, region, grade);
}

}  // namespace detail

template <class C>
Series2<C> add(const Series2<C>& a, const Series2<C>& b) {
    return detail::combine(a, b, Rat(1), merge_regions(a.region(), b.region()));
}

template <class C>
Series2<C> sub(const Series2<C>& a, const Series2<C>& b) {
    return detail::combine(a, b, Rat(-1), merge_regions(a.region(), b.region()));
}

/// a - b for series expanded in different regions; the result carries no
/// region tag. This is how delta-function terms arise.
template <class C>
Series2<C> region_difference(const Series2<C>& a, const Series2<C>& b) {
    return detail::combine(a, b, Rat(-1), std::nullopt);
}

template <class C>
Series2<C> scale(const Series2<C>& a, const Rat& s) {
    typename Series2<C>::Map out;
    if (!s.is_zero())
        for (const auto& [p, c] : a.terms()) out.emplace(p, CoeffOps<C>::scaled(c, s));
    return Series2<C>(std::move(out), a.hull(), a.window(), a.region(), a.grade());
}

/// w d/dw applied term-wise.
template <class C>
Series2<C> w_d_w(const Series2<C>& a) {
    typename Series2<C>::Map out;
    for (const auto& [p, c] : a.terms()) out.emplace(p, CoeffOps<C>::scaled(c, Rat(p.second)));
    return Series2<C>(std::move(out), a.hull(), a.window(), a.region(), a.grade());
}

/// d/dz applied term-wise.
template <class C>
Series2<C> d_dz(const Series2<C>& a) {
    typename Series2<C>::Map out;
    const Exponent one(1);
    for (const auto& [p, c] : a.terms())
        out.emplace(ExpPair(p.first - one, p.second), CoeffOps<C>::scaled(c, Rat(p.first)));
    std::optional<Exponent> grade;
    if (a.grade()) grade = *a.grade() - one;
    return Series2<C>(std::move(out), a.hull().translate(-one, Exponent(0)),
                      Window::shift(a.window(), -one, Exponent(0)), a.region(), grade);
}

/// f(z, z) as a series in z (ew = 0). Requires every antidiagonal of the
/// hull to be fully authoritative; throws OutOfWindow otherwise.
FracSeries2 diagonal(const FracSeries2& f);

/// Text serialization: header lines (region, window, hull) followed by one
/// record "ez_num ez_den ew_num ew_den coeff_num coeff_den" per term in
/// ascending exponent order.
std::string to_text(const FracSeries2& s);
FracSeries2 from_text(std::string_view text);

}  // namespace negaff

#endif
