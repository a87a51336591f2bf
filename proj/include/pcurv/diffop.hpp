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

// Differential operators L = sum a_i(x) Dx^i and systems Y' = (1/f_A) A~ Y
// over F_q[x], the naive p-curvature recurrence, and the Euler-operator
// rewriting used by the local evaluation.

#ifndef PCURV_DIFFOP_HPP
#define PCURV_DIFFOP_HPP

#include <variant>
#include <vector>

#include "pcurv/bivar.hpp"
#include "pcurv/field.hpp"
#include "pcurv/matrix.hpp"
#include "pcurv/poly.hpp"
#include "pcurv/ratfunc.hpp"

namespace pcurv {

struct DiffOperator {
    Field k;
    std::vector<Poly> coeffs;  // a_0 .. a_r, a_r != 0

    std::size_t order() const { return coeffs.size() - 1; }
    std::size_t degree() const;  // max deg a_i
    const Poly& leading() const { return coeffs.back(); }
};

struct DiffSystem {
    Field k;
    Poly f_A;
    MatrixOver<FPoly> A_tilde;
    std::size_t d = 0;  // bound on all degrees

    std::size_t order() const { return A_tilde.rows; }
};

using Problem = std::variant<DiffOperator, DiffSystem>;

// Validates shapes and trims; throws ZeroLeadingCoefficient or ZeroOperator.
DiffOperator make_operator(const Field& k, std::vector<Poly> coeffs);
// d defaults to the maximal degree when smaller than it.
DiffSystem make_system(const Field& k, Poly f_A, MatrixOver<FPoly> A_tilde, std::size_t d = 0);

const Field& base_field(const Problem& pb);
std::size_t order(const Problem& pb);
std::size_t degree(const Problem& pb);
// Denominator of the system matrix: f_A, or a_r for an operator.
const Poly& denominator(const Problem& pb);

// Wronskian companion system: f_A = a_r, a_r on the superdiagonal of A~ and
// last row -a_0, ..., -a_{r-1}.
DiffSystem companion_of_operator(const DiffOperator& L);
DiffSystem as_system(const Problem& pb);

// A_p by p - 1 steps of A_1 = -A, A_{i+1} = A_i' - A A_i over F_q(x).
MatrixOver<RatFuncField> naive_p_curvature(const DiffSystem& sys);

// Polynomials in T over F_q(x).
using RatFuncPoly = PolyRing<RatFuncField>::value_type;

// Invariant factors of f^p A_p over F_q(x), f the monic denominator.
std::vector<RatFuncPoly> naive_invariant_factors_in_x(const Problem& pb);

// Invariant factors of f^p A_p with f the monic denominator, rewritten in
// X = x^p. Throws NotInXp if an exponent is not a multiple of p.
InvFactorsBivar naive_invariant_factors(const Problem& pb);

// b_0, ..., b_{d+r} with L Dx^d = sum b_i(theta) Dx^i, theta = (x - a) Dx,
// polynomials over l. Throws LeadingCoeffVanishes when a_r(a) = 0.
std::vector<Poly> theta_rewrite(const DiffOperator& L, const Field& l, const Elem& a);

// Coefficients of a polynomial over k, embedded into an extension l.
Poly embed_poly(const Field& l, const Field& k, const Poly& f);

}  // namespace pcurv

#endif
