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

// Reconstruction of F_q[X] polynomials from values: CRT over coprime moduli
// and recovery from a single value in an extension via a power basis.

#ifndef PCURV_INTERP_HPP
#define PCURV_INTERP_HPP

#include <utility>
#include <vector>

#include "pcurv/field.hpp"
#include "pcurv/matrix.hpp"
#include "pcurv/poly.hpp"

namespace pcurv {

// Unique c with deg c <= bound and c = value mod modulus for every pair.
Poly interpolate_crt(const Field& k, const std::vector<std::pair<Poly, Poly>>& residues, std::size_t bound);

// Change of basis from l = k[u]/S (l.base() == k) to the power basis
// 1, g, ..., g^(n-1) of a generator g.
class PowerBasis {
public:
    PowerBasis(const Field& l, const Elem& g);  // throws NotAGenerator

    const Field& extension() const { return l_; }
    const Elem& generator() const { return g_; }

    // The c in k[X] of degree <= bound with c(g) = v.
    Poly lift(const Elem& v, std::size_t bound) const;  // throws NoSolutionWithinBound

private:
    Field l_;
    Field k_;
    Elem g_;
    MatrixOver<Field> inverse_;
};

Poly lift_from_extension_value(const Field& l, const Elem& v, const Elem& a_power, std::size_t bound);

// Evaluation of a k[X] polynomial at an element of an extension of k.
Elem eval_in_extension(const Field& l, const Field& k, const Poly& c, const Elem& x);

}  // namespace pcurv

#endif
