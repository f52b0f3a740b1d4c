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

#include "negaff/rat.hpp"

#include <limits>
#include <stdexcept>

namespace negaff {

Rat::Rat(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational");
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
    if (v.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(v);
}

std::string Rat::str() const {
    if (is_integer()) return num_str();
    return fraction();
}

Exponent Rat::to_exponent() const {
    const mpz_class& n = v_.get_num();
    const mpz_class& d = v_.get_den();
    if (!n.fits_slong_p() || !d.fits_slong_p()) throw std::overflow_error("rational too large for exponent");
    return Exponent(n.get_si(), d.get_si());
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return Rat(mpq_class(a.v_ / b.v_));
}

}  // namespace negaff
