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

// Polynomials in F_q[X][T], stored as T-coefficient vectors of X-polynomials,
// and the invariant-factor lists built from them. X stands for x^p.

#ifndef PCURV_BIVAR_HPP
#define PCURV_BIVAR_HPP

#include <string>
#include <vector>

#include "pcurv/field.hpp"
#include "pcurv/poly.hpp"

namespace pcurv {

using BivarRing = PolyRing<FPoly>;
using BivarPoly = BivarRing::value_type;

inline BivarRing bivar_ring(const Field& k) { return BivarRing(FPoly(k, "X"), "T"); }

struct InvFactorsBivar {
    Field k;
    std::vector<BivarPoly> factors;  // I_1 | I_2 | ... | I_n, monic in T

    std::size_t size() const { return factors.size(); }
    // Largest X-degree over all coefficients.
    long x_degree() const;
    std::vector<std::string> render() const;
    bool operator==(const InvFactorsBivar& o) const { return k == o.k && factors == o.factors; }
};

// Substitutes X = x for an element of an extension l of k.
Poly specialize_x(const Field& l, const Field& k, const BivarPoly& f, const Elem& x);

// Divisibility chain in F_q(X)[T] and monicity in T.
bool is_valid_chain(const InvFactorsBivar& f);

}  // namespace pcurv

#endif
