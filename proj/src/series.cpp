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

#include "negaff/series.hpp"

#include <sstream>

namespace negaff {

std::string region_name(RegionTag r) {
    if (!r) return "None";
    return *r == Region::InnerW ? "InnerW" : "InnerZ";
}

RegionTag parse_region(std::string_view s) {
    if (s == "None") return std::nullopt;
    if (s == "InnerW") return Region::InnerW;
    if (s == "InnerZ") return Region::InnerZ;
    throw std::invalid_argument("unknown region: " + std::string(s));
}

RegionTag merge_regions(RegionTag a, RegionTag b) {
    if (!a) return b;
    if (!b) return a;
    if (*a != *b) throw RegionMismatch("cannot combine " + region_name(a) + " and " + region_name(b) + " series");
    return a;
}

std::optional<Exponent> homogeneous_degree(const Zone& z) {
    if (z.is_empty()) return std::nullopt;
    auto lo = z.t_lo();
    auto hi = z.t_hi();
    if (lo && hi && *lo == *hi) return lo;
    return std::nullopt;
}

Rat binomial(const Rat& r, int j) {
    if (j < 0) return Rat(0);
    Rat c(1);
    for (int i = 0; i < j; ++i) c = c * (r - Rat(i)) / Rat(i + 1);
    return c;
}

FracSeries2 binom_expand(const Rat& r, Region direction, int N) {
    if (N < 0) throw std::invalid_argument("binom_expand: negative order");
    std::map<ExpPair, Rat> terms;
    Rat c(1);
    for (int j = 0; j <= N; ++j) {
        if (j > 0) c = c * (r - Rat(j - 1)) / Rat(j) * Rat(-1);
        ExpPair p = direction == Region::InnerW ? ExpPair(Exponent(-j), Exponent(j)) : ExpPair(Exponent(j), Exponent(-j));
        if (!c.is_zero()) terms.emplace(p, c);
    }
    // The expansion variable x = w/z (or z/w) has exponent e >= 0 on the
    // antidiagonal t = 0; a nonnegative integer r terminates at e = r.
    Bound top;
    if (r.is_integer() && r.sign() >= 0) top = r.to_exponent();
    Zone hull = Zone().with_t(Exponent(0), Exponent(0));
    WindowPtr window;
    bool exact = top && *top <= Exponent(N);
    if (direction == Region::InnerW) {
        hull = hull.with_ew(Exponent(0), top);
        window = exact ? Window::full() : Window::zone(Zone().with_ew(std::nullopt, Exponent(N)));
    } else {
        hull = hull.with_ez(Exponent(0), top);
        window = exact ? Window::full() : Window::zone(Zone().with_ez(std::nullopt, Exponent(N)));
    }
    return FracSeries2(std::move(terms), hull, window, direction);
}

FracSeries2 monomial(const Exponent& ez, const Exponent& ew, const Rat& c) {
    std::map<ExpPair, Rat> terms;
    terms.emplace(ExpPair(ez, ew), c);
    return FracSeries2(std::move(terms), Zone::point(ez, ew), Window::full());
}

FracSeries2 finite_series(const std::map<ExpPair, Rat>& terms, RegionTag region) {
    Zone hull = Zone::empty();
    for (const auto& [p, c] : terms)
        if (!c.is_zero()) hull = hull.join(Zone::point(p.first, p.second));
    return FracSeries2(terms, hull, Window::full(), region);
}

FracSeries2 diagonal(const FracSeries2& f) {
    if (!f.known_zone(f.hull())) throw OutOfWindow("diagonal restriction needs a fully authoritative series");
    std::map<ExpPair, Rat> terms;
    for (const auto& [p, c] : f.terms()) terms[ExpPair(p.first + p.second, Exponent(0))] += c;
    Zone hull = Zone().with_ew(Exponent(0), Exponent(0));
    if (f.hull().is_empty())
        hull = Zone::empty();
    else
        hull = hull.with_ez(f.hull().t_lo(), f.hull().t_hi());
    return FracSeries2(std::move(terms), hull, Window::full(), std::nullopt);
}

std::string to_text(const FracSeries2& s) {
    std::ostringstream out;
    out << "negaff-series 1\n";
    out << "region " << region_name(s.region()) << "\n";
    out << "window " << s.window()->str() << "\n";
    out << "hull " << s.hull().str() << "\n";
    out << "terms " << s.size() << "\n";
    for (const auto& [p, c] : s.terms()) {
        out << p.first.num() << " " << p.first.den() << " " << p.second.num() << " " << p.second.den() << " "
            << c.num_str() << " " << c.den_str() << "\n";
    }
    return out.str();
}

namespace {

std::string expect_field(std::istringstream& in, const std::string& key) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("series text: missing " + key);
    if (line.rfind(key + " ", 0) != 0) throw std::invalid_argument("series text: expected " + key);
    return line.substr(key.size() + 1);
}

}  // namespace

FracSeries2 from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "negaff-series 1") throw std::invalid_argument("series text: bad magic");
    RegionTag region = parse_region(expect_field(in, "region"));
    WindowPtr window = Window::parse(expect_field(in, "window"));
    Zone hull = parse_zone(expect_field(in, "hull"));
    std::size_t count = std::stoul(expect_field(in, "terms"));
    std::map<ExpPair, Rat> terms;
    for (std::size_t i = 0; i < count; ++i) {
        long long a, b, c, d;
        std::string cn, cd;
        if (!(in >> a >> b >> c >> d >> cn >> cd)) throw std::invalid_argument("series text: truncated record");
        ExpPair p(Exponent(a, b), Exponent(c, d));
        Rat v = Rat::parse(cn + "/" + cd);
        if (!terms.emplace(p, v).second) throw std::invalid_argument("series text: duplicate record");
    }
    return FracSeries2(std::move(terms), hull, window, region);
}

}  // namespace negaff
