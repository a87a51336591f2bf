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

#include "pcurv/bivar.hpp"

#include <algorithm>

#include "pcurv/interp.hpp"
#include "pcurv/ratfunc.hpp"

namespace pcurv {

long InvFactorsBivar::x_degree() const {
    long d = -1;
    for (const auto& f : factors)
        for (const auto& c : f) d = std::max(d, static_cast<long>(c.size()) - 1);
    return d;
}

std::vector<std::string> InvFactorsBivar::render() const {
    BivarRing R = bivar_ring(k);
    std::vector<std::string> out;
    for (const auto& f : factors) out.push_back(R.to_string(f));
    return out;
}

Poly specialize_x(const Field& l, const Field& k, const BivarPoly& f, const Elem& x) {
    Poly out;
    for (const auto& c : f) out.push_back(eval_in_extension(l, k, c, x));
    FPoly(l).normalize(out);
    return out;
}

bool is_valid_chain(const InvFactorsBivar& f) {
    // Work in F_q(X)[T]: map each coefficient to a rational function.
    RatFuncField K(f.k, "X");
    PolyRing<RatFuncField> R(K, "T");
    std::vector<PolyRing<RatFuncField>::value_type> lifted;
    for (const auto& g : f.factors) {
        if (g.empty() || !FPoly(f.k).is_one(g.back())) return false;
        PolyRing<RatFuncField>::value_type h;
        for (const auto& c : g) h.push_back(K.from_poly(c));
        lifted.push_back(std::move(h));
    }
    for (std::size_t i = 0; i + 1 < lifted.size(); ++i)
        if (!R.divides(lifted[i], lifted[i + 1])) return false;
    return true;
}

}  // namespace pcurv
