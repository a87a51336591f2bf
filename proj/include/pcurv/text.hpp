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

// Text formats: differential operators such as "(x^2+1)*Dx - 3*x",
// polynomials in x, and invariant factors in X and T. The generator of
// F_q over F_p is written w.

#ifndef PCURV_TEXT_HPP
#define PCURV_TEXT_HPP

#include <cstdint>
#include <string>

#include "pcurv/bivar.hpp"
#include "pcurv/diffop.hpp"
#include "pcurv/field.hpp"

namespace pcurv {

// F_p for ext = 1, else the degree-ext extension from find_irreducible.
// Throws NotPrime or InvalidArgument.
Field base_field_for(std::uint64_t p, std::size_t ext);

// Expressions built from integers, x, Dx, w with + - * ^ and parentheses,
// multiplied out in the Weyl algebra (Dx x = x Dx + 1). Throws SyntaxError
// with the offending position, or ZeroOperator.
DiffOperator parse_operator(const std::string& text, const Field& k);

// Same grammar without Dx.
Poly parse_poly(const std::string& text, const Field& k);

// Polynomials in X and T.
BivarPoly parse_bivar(const std::string& text, const Field& k);

std::string render_poly(const Field& k, const Poly& f);
std::string render_operator(const DiffOperator& L);
std::string render_bivar(const Field& k, const BivarPoly& f);

}  // namespace pcurv

#endif
