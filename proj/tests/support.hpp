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

// Random inputs and independent reference computations shared by the tests
// and the acceptance driver.

#ifndef PCURV_TESTS_SUPPORT_HPP
#define PCURV_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "pcurv/diffop.hpp"
#include "pcurv/ff.hpp"
#include "pcurv/field.hpp"
#include "pcurv/interp.hpp"
#include "pcurv/linalg.hpp"
#include "pcurv/poly.hpp"

namespace pcurv::testing {

inline Poly poly_of(const Field& k, std::vector<std::int64_t> c) {
    Poly f;
    for (auto x : c) f.push_back(k.from_int(x));
    FPoly(k).normalize(f);
    return f;
}

inline Poly random_poly(const Field& k, std::size_t deg, std::mt19937_64& rng) {
    Poly f;
    for (std::size_t i = 0; i <= deg; ++i) f.push_back(k.random(rng));
    FPoly(k).normalize(f);
    return f;
}

inline Poly random_nonzero_poly(const Field& k, std::size_t deg, std::mt19937_64& rng) {
    for (;;) {
        Poly f = random_poly(k, deg, rng);
        if (!f.empty()) return f;
    }
}

// Degrees are drawn uniformly up to the bound so that low-degree and
// sparse inputs also occur.
inline DiffOperator random_operator(const Field& k, std::size_t d, std::size_t r, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> deg(0, d);
    std::vector<Poly> c;
    for (std::size_t i = 0; i < r; ++i) c.push_back(random_poly(k, deg(rng), rng));
    c.push_back(random_nonzero_poly(k, deg(rng), rng));
    return make_operator(k, std::move(c));
}

inline DiffSystem random_system(const Field& k, std::size_t d, std::size_t r, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> deg(0, d);
    MatrixOver<FPoly> A(r, r, Poly{});
    for (auto& e : A.a) e = random_poly(k, deg(rng), rng);
    return make_system(k, random_nonzero_poly(k, deg(rng), rng), std::move(A), d);
}

// A point of l that is not a pole of the input.
inline Elem random_good_point(const Problem& pb, const Field& l, std::mt19937_64& rng) {
    const Field& k = base_field(pb);
    const Poly f = embed_poly(l, k, denominator(pb));
    for (;;) {
        Elem a = l.random(rng);
        if (!l.is_zero(FPoly(l).eval(f, a))) return a;
    }
}

// Invariant factors of the naive p-curvature evaluated entrywise at a.
inline std::vector<Poly> naive_invariant_factors_at(const Problem& pb, const Field& l, const Elem& a) {
    const Field& k = base_field(pb);
    const auto Ap = naive_p_curvature(as_system(pb));
    FPoly R(l);
    MatrixOver<Field> M(Ap.rows, Ap.cols, l.zero());
    for (std::size_t i = 0; i < Ap.a.size(); ++i) {
        const Elem num = R.eval(embed_poly(l, k, Ap.a[i].num), a);
        const Elem den = R.eval(embed_poly(l, k, Ap.a[i].den), a);
        M.a[i] = l.div(num, den);
    }
    return invariant_factors(l, M);
}

}  // namespace pcurv::testing

#endif
