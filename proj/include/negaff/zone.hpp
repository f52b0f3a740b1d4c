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

#ifndef NEGAFF_ZONE_HPP
#define NEGAFF_ZONE_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "negaff/exponent.hpp"

namespace negaff {

/// Upper bound on a linear form; nullopt is +infinity.
using Bound = std::optional<Exponent>;

/// Convex region of the (ez, ew) exponent plane cut out by bounds on
/// ez, ew and t = ez + ew. Stored as a difference-bound matrix over the
/// nodes {0, ez, -ew}, which makes closure (tightening) exact.
class Zone {
public:
    /// The whole plane.
    Zone() = default;

    static Zone point(const Exponent& ez, const Exponent& ew);
    static Zone empty();

    /// Intersect with lo <= form <= hi for the given form.
    Zone with_ez(Bound lo, Bound hi) const;
    Zone with_ew(Bound lo, Bound hi) const;
    Zone with_t(Bound lo, Bound hi) const;

    bool is_empty() const { return empty_; }

    Bound ez_lo() const { return neg(d_[1][0]); }
    Bound ez_hi() const { return d_[0][1]; }
    Bound ew_lo() const { return neg(d_[0][2]); }
    Bound ew_hi() const { return d_[2][0]; }
    Bound t_lo() const { return neg(d_[1][2]); }
    Bound t_hi() const { return d_[2][1]; }

    bool contains(const Exponent& ez, const Exponent& ew) const;
    /// Exact containment test (both zones are kept closed).
    bool subset_of(const Zone& other) const;

    Zone intersect(const Zone& other) const;
    /// Smallest zone containing both.
    Zone join(const Zone& other) const;
    /// Minkowski sum.
    Zone plus(const Zone& other) const;
    /// Point reflection through the origin.
    Zone negate() const;
    Zone translate(const Exponent& dz, const Exponent& dw) const;

    /// "(zone ez_lo ez_hi ew_lo ew_hi t_lo t_hi)" with -inf/inf for open ends.
    std::string str() const;

    friend bool operator==(const Zone& a, const Zone& b);

private:
    static Bound neg(const Bound& b) {
        if (!b) return std::nullopt;
        return -*b;
    }
    void set(int i, int j, const Bound& c);
    void close();

    // d_[i][j] bounds v_j - v_i with v_0 = 0, v_1 = ez, v_2 = -ew.
    std::array<std::array<Bound, 3>, 3> d_{};
    bool empty_ = false;

};

/// Lazily evaluated description of where a series' coefficients are
/// authoritative. Queries go through covers(); all nodes are immutable.
class Window;
using WindowPtr = std::shared_ptr<const Window>;

class Window {
public:
    enum class Kind { Full, Zone, Product, Sum, Shift, Meet };

    static WindowPtr full();
    static WindowPtr zone(const negaff::Zone& z);
    /// Window of a product of series with windows wa, wb and hulls sa, sb:
    /// a point is known when every split of it over the two hulls lands in
    /// known territory on both sides.
    static WindowPtr product(WindowPtr wa, const negaff::Zone& sa, WindowPtr wb, const negaff::Zone& sb);
    /// Window of a sum: known where both summands are known (or vanish).
    static WindowPtr sum(WindowPtr wa, const negaff::Zone& sa, WindowPtr wb, const negaff::Zone& sb);
    static WindowPtr shift(WindowPtr w, const Exponent& dz, const Exponent& dw);
    static WindowPtr meet(WindowPtr a, WindowPtr b);

    Kind kind() const { return kind_; }
    bool is_full() const { return kind_ == Kind::Full; }

    /// True if every point of the zone is authoritative.
    bool covers(const negaff::Zone& z) const;

    /// S-expression form, parseable by parse().
    std::string str() const;
    static WindowPtr parse(std::string_view text);

    Window(Kind kind) : kind_(kind) {}  // NOLINT

private:
    Kind kind_;
    negaff::Zone za_, zb_;
    WindowPtr wa_, wb_;
    Exponent dz_, dw_;
};

/// Parse the Zone::str() form.
Zone parse_zone(std::string_view text);

}  // namespace negaff

#endif
