/*
   Copyright 2026 The pcurv Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "pcurv/ratfunc.hpp"

namespace pcurv {

RatFunc RatFuncField::make(Poly num, Poly den) const {
    polys_.normalize(num);
    polys_.normalize(den);
    if (den.empty()) raise(ErrorCode::DivisionByZero, "rational function with zero denominator");
    if (num.empty()) return zero();
    Poly g = polys_.gcd(num, den);
    if (polys_.deg(g) > 0) {
        num = polys_.quo(num, g);
        den = polys_.quo(den, g);
    }
    const Elem c = base().inv(den.back());
    return {polys_.scale(num, c), polys_.scale(den, c)};
}

RatFunc RatFuncField::add(const RatFunc& f, const RatFunc& g) const {
    if (f.num.empty()) return g;
    if (g.num.empty()) return f;
    if (polys_.equal(f.den, g.den)) return make(polys_.add(f.num, g.num), f.den);
    // Only the gcd of the denominators can cancel.
    Poly d = polys_.gcd(f.den, g.den);
    Poly fd = polys_.quo(f.den, d), gd = polys_.quo(g.den, d);
    Poly num = polys_.add(polys_.mul(f.num, gd), polys_.mul(g.num, fd));
    return make(std::move(num), polys_.mul(polys_.mul(fd, gd), d));
}

RatFunc RatFuncField::mul(const RatFunc& f, const RatFunc& g) const {
    if (f.num.empty() || g.num.empty()) return zero();
    if (polys_.is_one(f.den) && polys_.is_one(g.den)) return {polys_.mul(f.num, g.num), polys_.one()};
    // Cross-cancel first so the result is already in lowest terms.
    Poly g1 = polys_.gcd(f.num, g.den), g2 = polys_.gcd(g.num, f.den);
    Poly num = polys_.mul(polys_.quo(f.num, g1), polys_.quo(g.num, g2));
    Poly den = polys_.mul(polys_.quo(f.den, g2), polys_.quo(g.den, g1));
    const Elem c = base().inv(den.back());
    return {polys_.scale(num, c), polys_.scale(den, c)};
}

RatFunc RatFuncField::inv(const RatFunc& f) const {
    if (f.num.empty()) raise(ErrorCode::DivisionByZero, "inverse of the zero rational function");
    const Elem c = base().inv(f.num.back());
    return {polys_.scale(f.den, c), polys_.scale(f.num, c)};
}

RatFunc RatFuncField::derivative(const RatFunc& f) const {
    if (polys_.is_one(f.den)) return {polys_.derivative(f.num), polys_.one()};
    Poly num = polys_.sub(polys_.mul(polys_.derivative(f.num), f.den), polys_.mul(f.num, polys_.derivative(f.den)));
    return make(std::move(num), polys_.mul(f.den, f.den));
}

std::string RatFuncField::to_string(const RatFunc& f) const {
    const std::string n = polys_.to_string(f.num);
    if (polys_.is_one(f.den)) return n;
    const std::string d = polys_.to_string(f.den);
    auto wrap = [](const std::string& s) { return s.find(' ') != std::string::npos ? "(" + s + ")" : s; };
    return wrap(n) + "/" + wrap(d);
}

}  // namespace pcurv
