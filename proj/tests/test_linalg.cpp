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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "pcurv/linalg.hpp"
#include "support.hpp"

using namespace pcurv;
using pcurv::testing::poly_of;

namespace {

Poly T_pow(const Field& k, std::size_t e) {
    Poly f(e + 1, k.zero());
    f[e] = k.one();
    return f;
}

// Conjugates M by a random invertible matrix, hiding its block structure.
MatrixOver<Field> scramble(const Field& k, const MatrixOver<Field>& M, std::mt19937_64& rng) {
    for (;;) {
        MatrixOver<Field> P(M.rows, M.cols, k.zero());
        for (auto& e : P.a) e = k.random(rng);
        MatrixOver<Field> Pinv;
        if (!mat_inverse(k, P, Pinv)) continue;
        return mat_mul(k, mat_mul(k, P, M), Pinv);
    }
}

}  // namespace

TEST_CASE("invariant factors of simple matrices") {
    Field k = Field::prime(5);
    FPoly R(k, "T");
    auto zero = zero_matrix(k, 3, 3);
    auto f = invariant_factors(k, zero);
    REQUIRE(f.size() == 3);
    for (const auto& g : f) CHECK(R.to_string(g) == "T");

    auto id = identity_matrix(k, 2);
    f = invariant_factors(k, id);
    CHECK(R.to_string(f[0]) == "T + 4");
    CHECK(R.to_string(f[1]) == "T + 4");

    // A 2x2 Jordan block at 0: one cyclic factor.
    MatrixOver<Field> J(2, 2, k.zero());
    J(0, 1) = k.one();
    f = invariant_factors(k, J);
    CHECK(R.is_one(f[0]));
    CHECK(R.to_string(f[1]) == "T^2");
}

TEST_CASE("Smith form recovers hidden block-companion factors") {
    Field k = Field::prime(7);
    FPoly R(k, "T");
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        // Build a chain I_1 | I_2 | I_3 from random monic pieces.
        std::vector<Poly> chain;
        Poly acc = R.one();
        for (int j = 0; j < 3; ++j) {
            Poly piece = R.monic(testing::random_nonzero_poly(k, std::uniform_int_distribution<int>(0, 2)(rng), rng));
            if (j == 0 && piece.size() == 1) piece = poly_of(k, {static_cast<std::int64_t>(rng() % 7), 1});
            acc = R.mul(acc, piece);
            chain.push_back(acc);
        }
        auto M = scramble(k, block_companion(k, chain), rng);
        auto got = invariant_factors(k, M);
        // Trivial factors are padded at the front.
        std::vector<Poly> expect(got.size() - chain.size(), R.one());
        expect.insert(expect.end(), chain.begin(), chain.end());
        CHECK(got == expect);
    }
}

TEST_CASE("companion layout and errors") {
    Field k = Field::prime(5);
    auto C = companion(k, poly_of(k, {1, 2, 1}));
    CHECK(C(1, 0) == k.one());
    CHECK(C(0, 1) == k.from_int(-1));
    CHECK(C(1, 1) == k.from_int(-2));
    CHECK_THROWS_AS(companion(k, poly_of(k, {1, 2})), Error);
    CHECK_THROWS_AS(companion(k, poly_of(k, {1})), Error);
}

TEST_CASE("kernel dimensions follow min(e, v) over the factors") {
    Field k = Field::prime(3);
    FPoly R(k, "T");
    std::mt19937_64 rng(5);
    const Poly P = poly_of(k, {1, 1});  // T + 1
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::size_t> v(3);
        std::size_t acc = 0;
        std::vector<Poly> chain;
        for (auto& x : v) {
            acc += std::uniform_int_distribution<std::size_t>(0, 2)(rng);
            x = acc;
            // (T + 1)^v times a factor coprime to T + 1.
            chain.push_back(R.mul(R.pow(P, x), poly_of(k, {0, 1})));
        }
        auto M = scramble(k, block_companion(k, chain), rng);
        for (std::size_t e = 1; e <= 4; ++e) {
            std::size_t expect = 0;
            for (auto x : v) expect += std::min(e, x);
            CHECK(kernel_dim_of_power(k, M, P, e) == expect);
        }
    }
}

TEST_CASE("rank profile of nilpotent companions") {
    Field k = Field::prime(5);
    CHECK(rank_profile(k, block_companion(k, std::vector<Poly>{T_pow(k, 1), T_pow(k, 2)})) ==
          std::vector<std::size_t>{3, 1, 0});
    CHECK(rank_profile(k, zero_matrix(k, 3, 3)) == std::vector<std::size_t>{3, 0});
    CHECK(rank_profile(k, block_companion(k, std::vector<Poly>{T_pow(k, 3)})) ==
          std::vector<std::size_t>{3, 2, 1, 0});
}
