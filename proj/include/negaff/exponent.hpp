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

#ifndef NEGAFF_EXPONENT_HPP
#define NEGAFF_EXPONENT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

namespace negaff {

/// Exact power of a formal variable. Exponents in this engine are small
/// rationals with denominators dividing k (or 2n/k sector shifts), so they
/// are kept as reduced int64 fractions; any overflow throws.
class Exponent {
public:
    constexpr Exponent() = default;
    Exponent(std::int64_t n);  // NOLINT(google-explicit-constructor)
    Exponent(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    /// Largest integer <= value.
    std::int64_t floor() const;
    /// Smallest integer >= value.
    std::int64_t ceil() const;

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    Exponent operator-() const;
    friend Exponent operator+(const Exponent& a, const Exponent& b);
    friend Exponent operator-(const Exponent& a, const Exponent& b);
    friend Exponent operator*(const Exponent& a, const Exponent& b);
    friend Exponent operator/(const Exponent& a, const Exponent& b);
    Exponent& operator+=(const Exponent& o) { return *this = *this + o; }
    Exponent& operator-=(const Exponent& o) { return *this = *this - o; }

    friend bool operator==(const Exponent& a, const Exponent& b) = default;
    friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Whether the reduced denominator of `e` divides `k`.
bool denominator_divides(const Exponent& e, std::int64_t k);

/// (z-exponent, w-exponent) of a two-variable monomial.
using ExpPair = std::pair<Exponent, Exponent>;

}  // namespace negaff

#endif
