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

#include <random>

#include "doctest.h"
#include "pcurv/diffop.hpp"
#include "support.hpp"

using namespace pcurv;
using pcurv::testing::poly_of;

namespace {

std::vector<std::string> naive_rendered(const DiffOperator& L) { return naive_invariant_factors(L).render(); }

}  // namespace

TEST_CASE("operator construction") {
    Field k = Field::prime(5);
    auto L = make_operator(k, {poly_of(k, {1}), poly_of(k, {0, 0, 1}), {}});
    CHECK(L.order() == 1);
    CHECK(L.degree() == 2);
    CHECK_THROWS_AS(make_operator(k, {{}, {}}), Error);
    CHECK_THROWS_AS(make_operator(k, {}), Error);
}

TEST_CASE("naive p-curvature on first-order micro examples") {
    Field k = Field::prime(3);
    // Dx - x: A_3 = -x^3.
    CHECK(naive_rendered(make_operator(k, {poly_of(k, {0, -1}), poly_of(k, {1})})) ==
          std::vector<std::string>{"T + X"});
    CHECK(naive_rendered(make_operator(k, {poly_of(k, {-1}), poly_of(k, {1})})) ==
          std::vector<std::string>{"T + 1"});
    CHECK(naive_rendered(make_operator(k, {{}, poly_of(k, {1})})) == std::vector<std::string>{"T"});
    auto Ap = naive_p_curvature(as_system(make_operator(k, {poly_of(k, {0, -1}), poly_of(k, {1})})));
    RatFuncField K(k);
    CHECK(K.to_string(Ap(0, 0)) == "2*x^3");
}

TEST_CASE("companion system of an operator") {
    Field k = Field::prime(7);
    auto L = make_operator(k, {poly_of(k, {1, 2}), poly_of(k, {3}), poly_of(k, {0, 1})});
    auto S = companion_of_operator(L);
    CHECK(S.f_A == L.leading());
    CHECK(S.A_tilde(0, 1) == L.leading());
    CHECK(S.A_tilde(1, 0) == FPoly(k).neg(L.coeffs[0]));
    CHECK(S.A_tilde(1, 1) == FPoly(k).neg(L.coeffs[1]));
    CHECK(S.A_tilde(0, 0).empty());
}

TEST_CASE("p-curvature of a rational solution system vanishes") {
    // y' = (1/x) y has the polynomial solution y = x.
    Field k = Field::prime(5);
    MatrixOver<FPoly> A(1, 1, poly_of(k, {1}));
    auto f = naive_invariant_factors(make_system(k, poly_of(k, {0, 1}), A));
    CHECK(f.render() == std::vector<std::string>{"T"});
}

TEST_CASE("naive factors lie in F_q[X,T] and form a chain") {
    std::mt19937_64 rng(2026);
    for (u64 p : {5, 7}) {
        Field k = Field::prime(p);
        for (int t = 0; t < 15; ++t) {
            const std::size_t r = 1 + rng() % 3;
            Problem pb = (t % 2) ? Problem(testing::random_operator(k, 2, r, rng))
                                 : Problem(testing::random_system(k, 2, r, rng));
            const InvFactorsBivar f = naive_invariant_factors(pb);
            CHECK(f.size() == r);
            CHECK(is_valid_chain(f));
            std::size_t tdeg = 0;
            for (const auto& g : f.factors) tdeg += g.size() - 1;
            CHECK(tdeg == r);
        }
    }
}

TEST_CASE("operator and companion system agree under the naive oracle") {
    std::mt19937_64 rng(9);
    Field k = Field::prime(5);
    for (int t = 0; t < 10; ++t) {
        auto L = testing::random_operator(k, 2, 2, rng);
        CHECK(naive_invariant_factors(L) == naive_invariant_factors(companion_of_operator(L)));
    }
}

TEST_CASE("Euler-operator rewriting acts correctly on powers of x - a") {
    // L Dx^d (x-a)^n expanded in powers of x - a must match
    // sum_i b_i(theta) Dx^i (x-a)^n = sum_i n^(i) b_i(n - i) (x-a)^(n-i).
    std::mt19937_64 rng(3);
    Field k = Field::prime(11);
    Field l = extension_of_degree(k, 2);
    FPoly R(l);
    for (int t = 0; t < 10; ++t) {
        auto L = testing::random_operator(k, 3, 2, rng);
        const std::size_t d = L.degree(), r = L.order();
        Elem a = testing::random_good_point(L, l, rng);
        auto b = theta_rewrite(L, l, a);
        REQUIRE(b.size() == d + r + 1);
        std::vector<Poly> shifted;
        for (const auto& c : L.coeffs) shifted.push_back(R.taylor_shift(embed_poly(l, k, c), a));
        auto falling = [&](u64 n, std::size_t i) {
            Elem acc = l.one();
            for (std::size_t j = 0; j < i; ++j) acc = l.mul(acc, l.from_int(static_cast<std::int64_t>(n) - j));
            return acc;
        };
        for (u64 n = 0; n < 11; ++n) {
            for (std::size_t i = 0; i <= d + r; ++i) {
                Elem lhs = l.zero();
                for (std::size_t kk = 0; kk <= r; ++kk)
                    for (std::size_t j = 0; j < shifted[kk].size(); ++j)
                        if (d + kk >= j && d + kk - j == i)
                            lhs = l.add(lhs, l.mul(shifted[kk][j], falling(n, d + kk)));
                Elem rhs = l.mul(falling(n, i), R.eval(b[i], l.from_int(static_cast<std::int64_t>(n) - i)));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("Euler-operator rewriting rejects a vanishing leading coefficient") {
    Field k = Field::prime(5);
    auto L = make_operator(k, {poly_of(k, {1}), poly_of(k, {0, 1})});
    CHECK_THROWS_AS(theta_rewrite(L, k, k.zero()), Error);
}
