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

#include "negaff/exponent.hpp"

#include <numeric>
#include <stdexcept>

namespace negaff {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
    return r;
}

}  // namespace

Exponent::Exponent(std::int64_t n) : num_(n), den_(1) {}

Exponent::Exponent(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("exponent with zero denominator");
    if (den < 0) {
        num = checked_mul(num, -1);
        den = checked_mul(den, -1);
    }
    std::int64_t g = std::gcd(num, den);
    if (g == 0) g = 1;
    num_ = num / g;
    den_ = den / g;
}

std::int64_t Exponent::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Exponent::ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

std::string Exponent::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Exponent Exponent::operator-() const { return Exponent(checked_mul(num_, -1), den_); }

Exponent operator+(const Exponent& a, const Exponent& b) {
    if (a.den_ == b.den_) return Exponent(checked_add(a.num_, b.num_), a.den_);
    std::int64_t g = std::gcd(a.den_, b.den_);
    std::int64_t den = checked_mul(a.den_ / g, b.den_);
    std::int64_t num = checked_add(checked_mul(a.num_, b.den_ / g), checked_mul(b.num_, a.den_ / g));
    return Exponent(num, den);
}

Exponent operator-(const Exponent& a, const Exponent& b) { return a + (-b); }

Exponent operator*(const Exponent& a, const Exponent& b) {
    return Exponent(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
}

Exponent operator/(const Exponent& a, const Exponent& b) {
    if (b.num_ == 0) throw std::domain_error("exponent division by zero");
    return Exponent(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool denominator_divides(const Exponent& e, std::int64_t k) { return k % e.den() == 0; }

}  // namespace negaff
