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

// Rational functions over F_q, kept in lowest terms with a monic denominator
// so that equality is structural.

#ifndef PCURV_RATFUNC_HPP
#define PCURV_RATFUNC_HPP

#include <string>

#include "pcurv/field.hpp"
#include "pcurv/poly.hpp"

namespace pcurv {

struct RatFunc {
    Poly num;
    Poly den;
};

class RatFuncField {
public:
    using value_type = RatFunc;

    explicit RatFuncField(Field k, std::string var = "x") : polys_(std::move(k), std::move(var)) {}

    const FPoly& polys() const { return polys_; }
    const Field& base() const { return polys_.ring(); }

    RatFunc zero() const { return {{}, polys_.one()}; }
    RatFunc one() const { return {polys_.one(), polys_.one()}; }
    RatFunc from_int(std::int64_t c) const { return {polys_.from_int(c), polys_.one()}; }
    RatFunc from_poly(Poly f) const { return {std::move(f), polys_.one()}; }
    RatFunc make(Poly num, Poly den) const;  // throws DivisionByZero on den = 0

    RatFunc add(const RatFunc& f, const RatFunc& g) const;
    RatFunc sub(const RatFunc& f, const RatFunc& g) const { return add(f, neg(g)); }
    RatFunc neg(const RatFunc& f) const { return {polys_.neg(f.num), f.den}; }
    RatFunc mul(const RatFunc& f, const RatFunc& g) const;
    RatFunc inv(const RatFunc& f) const;
    RatFunc div(const RatFunc& f, const RatFunc& g) const { return mul(f, inv(g)); }
    RatFunc derivative(const RatFunc& f) const;

    bool is_zero(const RatFunc& f) const { return f.num.empty(); }
    bool equal(const RatFunc& f, const RatFunc& g) const {
        return polys_.equal(f.num, g.num) && polys_.equal(f.den, g.den);
    }
    bool is_polynomial(const RatFunc& f) const { return polys_.is_one(f.den); }

    std::string to_string(const RatFunc& f) const;

private:
    FPoly polys_;
};

}  // namespace pcurv

#endif
