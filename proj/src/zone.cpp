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

#include "negaff/zone.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace negaff {

namespace {

Bound add(const Bound& a, const Bound& b) {
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

Bound min_bound(const Bound& a, const Bound& b) {
    if (!a) return b;
    if (!b) return a;
    return *a < *b ? a : b;
}

std::string bound_str(const Bound& b, bool lower) {
    if (!b) return lower ? "-inf" : "inf";
    return b->str();
}

}  // namespace

void Zone::set(int i, int j, const Bound& c) { d_[i][j] = min_bound(d_[i][j], c); }

void Zone::close() {
    if (empty_) return;
    for (int m = 0; m < 3; ++m)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) d_[i][j] = min_bound(d_[i][j], add(d_[i][m], d_[m][j]));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            Bound cyc = add(d_[i][j], d_[j][i]);
            if (cyc && *cyc < Exponent(0)) {
                empty_ = true;
                return;
            }
        }
}

Zone Zone::point(const Exponent& ez, const Exponent& ew) {
    return Zone().with_ez(ez, ez).with_ew(ew, ew);
}

Zone Zone::empty() {
    Zone z;
    z.empty_ = true;
    return z;
}

Zone Zone::with_ez(Bound lo, Bound hi) const {
    Zone z = *this;
    if (hi) z.set(0, 1, hi);
    if (lo) z.set(1, 0, -*lo);
    z.close();
    return z;
}

Zone Zone::with_ew(Bound lo, Bound hi) const {
    Zone z = *this;
    if (hi) z.set(2, 0, hi);
    if (lo) z.set(0, 2, -*lo);
    z.close();
    return z;
}

Zone Zone::with_t(Bound lo, Bound hi) const {
    Zone z = *this;
    if (hi) z.set(2, 1, hi);
    if (lo) z.set(1, 2, -*lo);
    z.close();
    return z;
}

bool Zone::contains(const Exponent& ez, const Exponent& ew) const {
    return point(ez, ew).subset_of(*this);
}

bool Zone::subset_of(const Zone& other) const {
    if (empty_) return true;
    if (other.empty_) return false;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j || !other.d_[i][j]) continue;
            if (!d_[i][j] || *d_[i][j] > *other.d_[i][j]) return false;
        }
    return true;
}

Zone Zone::intersect(const Zone& other) const {
    if (empty_ || other.empty_) return empty();
    Zone z = *this;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) z.set(i, j, other.d_[i][j]);
    z.close();
    return z;
}

Zone Zone::join(const Zone& other) const {
    if (empty_) return other;
    if (other.empty_) return *this;
    Zone z;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j || !d_[i][j] || !other.d_[i][j]) continue;
            z.d_[i][j] = *d_[i][j] < *other.d_[i][j] ? other.d_[i][j] : d_[i][j];
        }
    z.close();
    return z;
}

Zone Zone::plus(const Zone& other) const {
    if (empty_ || other.empty_) return empty();
    Zone z;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) z.d_[i][j] = add(d_[i][j], other.d_[i][j]);
    z.close();
    return z;
}

Zone Zone::negate() const {
    if (empty_) return empty();
    Zone z;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) z.d_[j][i] = d_[i][j];
    return z;
}

Zone Zone::translate(const Exponent& dz, const Exponent& dw) const {
    if (empty_) return empty();
    const Exponent shift[3] = {Exponent(0), dz, -dw};
    Zone z = *this;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && z.d_[i][j]) z.d_[i][j] = *z.d_[i][j] + shift[j] - shift[i];
    return z;
}

std::string Zone::str() const {
    if (empty_) return "(zone empty)";
    return "(zone " + bound_str(ez_lo(), true) + " " + bound_str(ez_hi(), false) + " " +
           bound_str(ew_lo(), true) + " " + bound_str(ew_hi(), false) + " " + bound_str(t_lo(), true) +
           " " + bound_str(t_hi(), false) + ")";
}

bool operator==(const Zone& a, const Zone& b) {
    if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
    return a.d_ == b.d_;
}

// ---------------------------------------------------------------------------

WindowPtr Window::full() {
    static const WindowPtr f = std::make_shared<Window>(Kind::Full);
    return f;
}

WindowPtr Window::zone(const negaff::Zone& z) {
    auto w = std::make_shared<Window>(Kind::Zone);
    w->za_ = z;
    return w;
}

WindowPtr Window::product(WindowPtr wa, const negaff::Zone& sa, WindowPtr wb, const negaff::Zone& sb) {
    if (wa->is_full() && wb->is_full()) return full();
    auto w = std::make_shared<Window>(Kind::Product);
    w->wa_ = std::move(wa);
    w->za_ = sa;
    w->wb_ = std::move(wb);
    w->zb_ = sb;
    return w;
}

WindowPtr Window::sum(WindowPtr wa, const negaff::Zone& sa, WindowPtr wb, const negaff::Zone& sb) {
    if (wa->is_full() && wb->is_full()) return full();
    auto w = std::make_shared<Window>(Kind::Sum);
    w->wa_ = std::move(wa);
    w->za_ = sa;
    w->wb_ = std::move(wb);
    w->zb_ = sb;
    return w;
}

WindowPtr Window::shift(WindowPtr inner, const Exponent& dz, const Exponent& dw) {
    if (inner->is_full()) return full();
    auto w = std::make_shared<Window>(Kind::Shift);
    w->wa_ = std::move(inner);
    w->dz_ = dz;
    w->dw_ = dw;
    return w;
}

WindowPtr Window::meet(WindowPtr a, WindowPtr b) {
    if (a->is_full()) return b;
    if (b->is_full()) return a;
    auto w = std::make_shared<Window>(Kind::Meet);
    w->wa_ = std::move(a);
    w->wb_ = std::move(b);
    return w;
}

bool Window::covers(const negaff::Zone& z) const {
    if (z.is_empty()) return true;
    switch (kind_) {
    case Kind::Full:
        return true;
    case Kind::Zone:
        return z.subset_of(za_);
    case Kind::Product: {
        // Points of z split as a + b with a in sa, b in sb.
        if (!wa_->is_full() && !wa_->covers(za_.intersect(z.plus(zb_.negate())))) return false;
        if (!wb_->is_full() && !wb_->covers(zb_.intersect(z.plus(za_.negate())))) return false;
        return true;
    }
    case Kind::Sum:
        return wa_->covers(z.intersect(za_)) && wb_->covers(z.intersect(zb_));
    case Kind::Shift:
        return wa_->covers(z.translate(-dz_, -dw_));
    case Kind::Meet:
        return wa_->covers(z) && wb_->covers(z);
    }
    return false;
}

std::string Window::str() const {
    switch (kind_) {
    case Kind::Full:
        return "full";
    case Kind::Zone:
        return za_.str();
    case Kind::Product:
        return "(product " + wa_->str() + " " + za_.str() + " " + wb_->str() + " " + zb_.str() + ")";
    case Kind::Sum:
        return "(sum " + wa_->str() + " " + za_.str() + " " + wb_->str() + " " + zb_.str() + ")";
    case Kind::Shift:
        return "(shift " + wa_->str() + " " + dz_.str() + " " + dw_.str() + ")";
    case Kind::Meet:
        return "(meet " + wa_->str() + " " + wb_->str() + ")";
    }
    return "";
}

// --- parsing ---------------------------------------------------------------

namespace {

struct Sexp {
    std::string atom;
    std::vector<Sexp> items;
    bool is_list = false;
};

class SexpReader {
public:
    explicit SexpReader(std::string_view s) : s_(s) {}

    Sexp read() {
        skip();
        if (pos_ >= s_.size()) throw std::invalid_argument("unexpected end of window text");
        Sexp out;
        if (s_[pos_] == '(') {
            ++pos_;
            out.is_list = true;
            for (;;) {
                skip();
                if (pos_ >= s_.size()) throw std::invalid_argument("unterminated list in window text");
                if (s_[pos_] == ')') {
                    ++pos_;
                    break;
                }
                out.items.push_back(read());
            }
            return out;
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] != '(' && s_[pos_] != ')' &&
               !std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        out.atom = std::string(s_.substr(start, pos_ - start));
        return out;
    }

    void expect_end() {
        skip();
        if (pos_ != s_.size()) throw std::invalid_argument("trailing characters in window text");
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    std::string_view s_;
    std::size_t pos_ = 0;
};

Exponent parse_exponent(const std::string& a) {
    auto slash = a.find('/');
    try {
        if (slash == std::string::npos) return Exponent(std::stoll(a));
        return Exponent(std::stoll(a.substr(0, slash)), std::stoll(a.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw std::invalid_argument("malformed exponent: " + a);
    }
}

Bound parse_bound(const Sexp& e) {
    if (e.is_list) throw std::invalid_argument("bound must be an atom");
    if (e.atom == "inf" || e.atom == "-inf") return std::nullopt;
    return parse_exponent(e.atom);
}

Zone zone_from(const Sexp& e) {
    if (!e.is_list || e.items.empty() || e.items[0].atom != "zone")
        throw std::invalid_argument("expected (zone ...)");
    if (e.items.size() == 2 && e.items[1].atom == "empty") return Zone::empty();
    if (e.items.size() != 7) throw std::invalid_argument("zone needs six bounds");
    return Zone()
        .with_ez(parse_bound(e.items[1]), parse_bound(e.items[2]))
        .with_ew(parse_bound(e.items[3]), parse_bound(e.items[4]))
        .with_t(parse_bound(e.items[5]), parse_bound(e.items[6]));
}

WindowPtr window_from(const Sexp& e) {
    if (!e.is_list) {
        if (e.atom == "full") return Window::full();
        throw std::invalid_argument("unknown window atom: " + e.atom);
    }
    if (e.items.empty()) throw std::invalid_argument("empty window list");
    const std::string& head = e.items[0].atom;
    if (head == "zone") return Window::zone(zone_from(e));
    if ((head == "product" || head == "sum") && e.items.size() == 5) {
        auto wa = window_from(e.items[1]);
        auto sa = zone_from(e.items[2]);
        auto wb = window_from(e.items[3]);
        auto sb = zone_from(e.items[4]);
        return head == "product" ? Window::product(wa, sa, wb, sb) : Window::sum(wa, sa, wb, sb);
    }
    if (head == "shift" && e.items.size() == 4)
        return Window::shift(window_from(e.items[1]), parse_exponent(e.items[2].atom),
                             parse_exponent(e.items[3].atom));
    if (head == "meet" && e.items.size() == 3) return Window::meet(window_from(e.items[1]), window_from(e.items[2]));
    throw std::invalid_argument("malformed window node: " + head);
}

}  // namespace

WindowPtr Window::parse(std::string_view text) {
    SexpReader r(text);
    auto w = window_from(r.read());
    r.expect_end();
    return w;
}

Zone parse_zone(std::string_view text) {
    SexpReader r(text);
    auto z = zone_from(r.read());
    r.expect_end();
    return z;
}

}  // namespace negaff
