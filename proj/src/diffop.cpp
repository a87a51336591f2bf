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

#include "pcurv/diffop.hpp"

#include <algorithm>
#include <string>

#include "pcurv/interp.hpp"
#include "pcurv/linalg.hpp"

namespace pcurv {

std::size_t DiffOperator::degree() const {
    std::size_t d = 0;
    for (const auto& a : coeffs)
        if (!a.empty()) d = std::max(d, a.size() - 1);
    return d;
}

DiffOperator make_operator(const Field& k, std::vector<Poly> coeffs) {
    FPoly R(k);
    for (auto& c : coeffs) R.normalize(c);
    while (!coeffs.empty() && coeffs.back().empty()) coeffs.pop_back();
    if (coeffs.empty()) raise(ErrorCode::ZeroOperator, "the zero operator has no p-curvature");
    if (coeffs.size() < 2) raise(ErrorCode::ZeroLeadingCoefficient, "operator must have order at least 1");
    return DiffOperator{k, std::move(coeffs)};
}

DiffSystem make_system(const Field& k, Poly f_A, MatrixOver<FPoly> A_tilde, std::size_t d) {
    FPoly R(k);
    R.normalize(f_A);
    if (f_A.empty()) raise(ErrorCode::DivisionByZero, "system denominator f_A is zero");
    if (!A_tilde.square() || A_tilde.rows == 0) raise(ErrorCode::NotSquare, "system matrix must be square and nonempty");
    std::size_t deg = f_A.size() - 1;
    for (auto& e : A_tilde.a) {
        R.normalize(e);
        if (!e.empty()) deg = std::max(deg, e.size() - 1);
    }
    return DiffSystem{k, std::move(f_A), std::move(A_tilde), std::max(d, deg)};
}

const Field& base_field(const Problem& pb) {
    return std::visit([](const auto& x) -> const Field& { return x.k; }, pb);
}

std::size_t order(const Problem& pb) {
    return std::visit([](const auto& x) { return x.order(); }, pb);
}

std::size_t degree(const Problem& pb) {
    if (auto* L = std::get_if<DiffOperator>(&pb)) return L->degree();
    return std::get<DiffSystem>(pb).d;
}

const Poly& denominator(const Problem& pb) {
    if (auto* L = std::get_if<DiffOperator>(&pb)) return L->leading();
    return std::get<DiffSystem>(pb).f_A;
}

DiffSystem companion_of_operator(const DiffOperator& L) {
    if (L.coeffs.empty() || L.leading().empty()) raise(ErrorCode::ZeroLeadingCoefficient, "leading coefficient is zero");
    const std::size_t r = L.order();
    FPoly R(L.k);
    MatrixOver<FPoly> At(r, r, R.zero());
    for (std::size_t i = 0; i + 1 < r; ++i) At(i, i + 1) = L.leading();
    for (std::size_t j = 0; j < r; ++j) At(r - 1, j) = R.neg(L.coeffs[j]);
    return make_system(L.k, L.leading(), std::move(At), L.degree());
}

DiffSystem as_system(const Problem& pb) {
    if (auto* L = std::get_if<DiffOperator>(&pb)) return companion_of_operator(*L);
    return std::get<DiffSystem>(pb);
}

MatrixOver<RatFuncField> naive_p_curvature(const DiffSystem& sys) {
    RatFuncField K(sys.k);
    const std::size_t r = sys.order();
    MatrixOver<RatFuncField> A(r, r, K.zero());
    for (std::size_t i = 0; i < A.a.size(); ++i) A.a[i] = K.make(sys.A_tilde.a[i], sys.f_A);
    MatrixOver<RatFuncField> Ai = mat_neg(K, A);
    const u64 p = sys.k.characteristic();
    for (u64 i = 1; i < p; ++i) {
        MatrixOver<RatFuncField> d = Ai;
        for (auto& e : d.a) e = K.derivative(e);
        Ai = mat_sub(K, d, mat_mul(K, A, Ai));
    }
    return Ai;
}

std::vector<RatFuncPoly> naive_invariant_factors_in_x(const Problem& pb) {
    const DiffSystem sys = as_system(pb);
    RatFuncField K(sys.k);
    FPoly R(sys.k);
    MatrixOver<RatFuncField> Ap = naive_p_curvature(sys);
    const RatFunc scale = K.from_poly(R.pow(R.monic(sys.f_A), sys.k.characteristic()));
    return invariant_factors(K, mat_scale(K, Ap, scale));
}

InvFactorsBivar naive_invariant_factors(const Problem& pb) {
    const Field& k = base_field(pb);
    const u64 p = k.characteristic();
    RatFuncField K(k);
    InvFactorsBivar out{k, {}};
    for (const auto& g : naive_invariant_factors_in_x(pb)) {
        BivarPoly h;
        for (const auto& c : g) {
            if (!K.is_polynomial(c))
                raise(ErrorCode::NotInXp, "invariant factor coefficient is not a polynomial in x");
            Poly x_poly;
            for (std::size_t e = 0; e < c.num.size(); ++e) {
                if (k.is_zero(c.num[e])) continue;
                if (e % p != 0)
                    raise(ErrorCode::NotInXp, "x-exponent " + std::to_string(e) + " is not a multiple of p");
                if (x_poly.size() <= e / p) x_poly.resize(e / p + 1, k.zero());
                x_poly[e / p] = c.num[e];
            }
            h.push_back(std::move(x_poly));
        }
        out.factors.push_back(std::move(h));
    }
    return out;
}

Poly embed_poly(const Field& l, const Field& k, const Poly& f) {
    Poly out;
    out.reserve(f.size());
    for (const auto& c : f) out.push_back(l.embed(k, c));
    return out;
}

std::vector<Poly> theta_rewrite(const DiffOperator& L, const Field& l, const Elem& a) {
    FPoly Rl(l, "theta");
    const std::size_t d = L.degree(), r = L.order();
    const Elem lead_at_a = Rl.eval(embed_poly(l, L.k, L.leading()), a);
    if (l.is_zero(lead_at_a)) raise(ErrorCode::LeadingCoeffVanishes, "leading coefficient vanishes at the point");

    // falling[k] = theta (theta - 1) ... (theta - k + 1), which equals t^k Dx^k.
    std::vector<Poly> falling{Rl.one()};
    for (std::size_t k = 1; k <= d; ++k)
        falling.push_back(Rl.mul(falling.back(), Poly{l.from_int(-static_cast<std::int64_t>(k - 1)), l.one()}));

    std::vector<Poly> b(d + r + 1);
    for (std::size_t j = 0; j <= r; ++j) {
        // a_j(t + a) = sum_k c_jk t^k, and t^k Dx^(j+d) = falling[k] Dx^(j+d-k).
        Poly shifted = Rl.taylor_shift(embed_poly(l, L.k, L.coeffs[j]), a);
        for (std::size_t k = 0; k < shifted.size(); ++k)
            b[j + d - k] = Rl.add(b[j + d - k], Rl.scale(falling[k], shifted[k]));
    }
    return b;
}

}  // namespace pcurv
