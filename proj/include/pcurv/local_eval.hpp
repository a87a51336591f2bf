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

// Local evaluation of the p-curvature at a point a of an extension l of F_q:
// the recurrence matrix B(u) for the power-series solution at a, its matrix
// factorial B(p-1)...B(0) by baby steps and giant steps, and the invariant
// factors read off the bottom-right block.

#ifndef PCURV_LOCAL_EVAL_HPP
#define PCURV_LOCAL_EVAL_HPP

#include <optional>
#include <vector>

#include "pcurv/diffop.hpp"
#include "pcurv/field.hpp"
#include "pcurv/matrix.hpp"
#include "pcurv/poly.hpp"

namespace pcurv {

struct RecMatrix {
    enum class Shape { BlockCompanionSystem, CompanionOperator, General };

    Field l;
    Shape shape = Shape::General;
    MatrixOver<FPoly> B;  // entries in l[u]

    std::size_t size() const { return B.rows; }
    std::size_t degree() const;
};

// Size (d+1)r: identity blocks on the block superdiagonal, last block row
// B_d .. B_0. Throws PoleAtPoint or CharTooSmall.
RecMatrix build_B_system(const DiffSystem& sys, const Field& l, const Elem& a);

// Size d+r: ones on the superdiagonal, last row -b_i(u)/a_r(a).
// Throws LeadingCoeffVanishes or CharTooSmall.
RecMatrix build_B_operator(const DiffOperator& L, const Field& l, const Elem& a);

RecMatrix build_B(const Problem& pb, const Field& l, const Elem& a);

MatrixOver<Field> eval_rec(const RecMatrix& B, u64 n);

// C(i s) for i < blocks, where C(u) = B(u+s-1) ... B(u).
// By shifts: samples of partial block products, doubled along the bits of s.
// nullopt when a shift denominator vanishes mod p (small p against s).
std::optional<std::vector<MatrixOver<Field>>> block_values_by_shifts(const RecMatrix& B, u64 s, u64 blocks);
// By the product tree for C and a remainder tree over the points i s.
std::vector<MatrixOver<Field>> block_values_by_tree(const RecMatrix& B, u64 s, u64 blocks);

// B(count-1) ... B(0) from the block values with s ~ sqrt(count / deg B),
// then pointwise trailing factors.
MatrixOver<Field> matrix_factorial(const RecMatrix& B, u64 count);
MatrixOver<Field> matrix_factorial_naive(const RecMatrix& B, u64 count);

// Y^(p)(0) for the fundamental solution at a, i.e. the bottom-right r x r
// block of the factorial with p factors.
MatrixOver<Field> local_p_derivative(const Problem& pb, const Field& l, const Elem& a);

// Invariant factors of A_p(a) over l, in the variable T.
std::vector<Poly> invariant_factors_at(const Problem& pb, const Field& l, const Elem& a);

// Invariant factors of c A_p(a) with c = f(a)^p for the monic denominator f,
// i.e. of the polynomial matrix f^p A_p evaluated at a.
std::vector<Poly> scaled_invariant_factors_at(const Problem& pb, const Field& l, const Elem& a);

// P(T) -> c^deg(P) P(T/c), the factors of cM from those of M.
Poly scale_factor(const Field& l, const Poly& P, const Elem& c);

}  // namespace pcurv

#endif
