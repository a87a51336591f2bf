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
#include "hurwitz.hpp"
#include "pcurv/local_eval.hpp"
#include "support.hpp"

using namespace pcurv;
using pcurv::testing::poly_of;

namespace {

RecMatrix one_by_one(const Field& l, Poly f) {
    return RecMatrix{l, RecMatrix::Shape::General, MatrixOver<FPoly>(1, 1, std::move(f))};
}

RecMatrix random_rec(const Field& l, std::size_t n, std::size_t deg, std::mt19937_64& rng) {
    RecMatrix B{l, RecMatrix::Shape::General, MatrixOver<FPoly>(n, n, Poly{})};
    for (auto& e : B.B.a) e = testing::random_poly(l, deg, rng);
    return B;
}

}  // namespace

TEST_CASE("Wilson's theorem through the matrix factorial") {
    for (u64 p : {5ull, 7ull, 101ull, 997ull, 10007ull}) {
        Field k = Field::prime(p);
        auto B = one_by_one(k, poly_of(k, {1, 1}));
        auto F = matrix_factorial(B, p - 1);
        CHECK(F(0, 0) == k.from_int(-1));
        if (p <= 997) CHECK(F.a == matrix_factorial_naive(B, p - 1).a);
    }
}

TEST_CASE("a constant recurrence gives a matrix power") {
    Field k = Field::prime(5);
    std::mt19937_64 rng(1);
    auto B = random_rec(k, 3, 0, rng);
    MatrixOver<Field> M(3, 3, k.zero());
    for (std::size_t i = 0; i < 9; ++i) M.a[i] = B.B.a[i].empty() ? k.zero() : B.B.a[i][0];
    CHECK(matrix_factorial(B, 8).a == mat_pow(k, M, 8).a);
}

TEST_CASE("factorial equals the sequential product") {
    std::mt19937_64 rng(17);
    Field k11 = Field::prime(11);
    Field l = extension_of_degree(k11, 3);
    Field k101 = Field::prime(101);
    Field l2 = extension_of_degree(extension_of_degree(Field::prime(7), 2), 2);
    for (int t = 0; t < 30; ++t) {
        const Field& f = t % 3 == 0 ? k11 : (t % 3 == 1 ? l : l2);
        auto B = random_rec(f, 1 + rng() % 3, rng() % 3, rng);
        const u64 count = rng() % 200;
        CHECK(matrix_factorial(B, count).a == matrix_factorial_naive(B, count).a);
    }
    auto B = random_rec(k101, 3, 2, rng);
    for (u64 count : {0, 1, 2, 99, 100, 101})
        CHECK(matrix_factorial(B, count).a == matrix_factorial_naive(B, count).a);
}

TEST_CASE("block values by shifts and by trees agree with sequential products") {
    std::mt19937_64 rng(23);
    Field k1009 = Field::prime(1009);
    Field l = extension_of_degree(Field::prime(211), 2);
    Field tower = extension_of_degree(extension_of_degree(Field::prime(101), 2), 2);
    int shifted_runs = 0;
    for (int t = 0; t < 24; ++t) {
        const Field& f = t % 3 == 0 ? k1009 : (t % 3 == 1 ? l : tower);
        auto B = random_rec(f, 1 + rng() % 3, rng() % 4, rng);
        const u64 s = 1 + rng() % 12;
        const u64 blocks = 1 + rng() % (std::max<std::size_t>(1, B.degree()) * s);
        std::vector<MatrixOver<Field>> want;
        for (u64 i = 0; i < blocks; ++i) {
            MatrixOver<Field> acc = identity_matrix(f, B.size());
            for (u64 j = 0; j < s; ++j) acc = mat_mul(f, eval_rec(B, i * s + j), acc);
            want.push_back(acc);
        }
        auto tree = block_values_by_tree(B, s, blocks);
        for (u64 i = 0; i < blocks; ++i) CHECK(tree[i].a == want[i].a);
        if (auto shifted = block_values_by_shifts(B, s, blocks)) {
            ++shifted_runs;
            for (u64 i = 0; i < blocks; ++i) CHECK((*shifted)[i].a == want[i].a);
        }
    }
    CHECK(shifted_runs >= 20);
}

TEST_CASE("factorial by shifts matches the sequential product for larger counts") {
    std::mt19937_64 rng(29);
    Field k = Field::prime(10007);
    Field l = extension_of_degree(Field::prime(1009), 2);
    for (int t = 0; t < 6; ++t) {
        const Field& f = t % 2 ? l : k;
        auto B = random_rec(f, 1 + rng() % 3, 1 + rng() % 3, rng);
        const u64 count = 500 + rng() % 2500;
        CHECK(matrix_factorial(B, count).a == matrix_factorial_naive(B, count).a);
    }
}

TEST_CASE("local evaluation on micro examples") {
    Field k5 = Field::prime(5);
    auto D = make_operator(k5, {{}, poly_of(k5, {1})});
    auto f = invariant_factors_at(D, k5, k5.from_int(2));
    REQUIRE(f.size() == 1);
    CHECK(FPoly(k5, "T").to_string(f[0]) == "T");

    Field k3 = Field::prime(3);
    auto L = make_operator(k3, {poly_of(k3, {0, -1}), poly_of(k3, {1})});
    f = invariant_factors_at(L, k3, k3.one());
    CHECK(FPoly(k3, "T").to_string(f[0]) == "T + 1");
}

TEST_CASE("local factors match the naive p-curvature at random points") {
    std::mt19937_64 rng(404);
    for (u64 p : {5, 7}) {
        Field k = Field::prime(p);
        for (int t = 0; t < 12; ++t) {
            const std::size_t r = 1 + rng() % 3;
            Problem pb = (t % 2) ? Problem(testing::random_operator(k, 3, r, rng))
                                 : Problem(testing::random_system(k, 3, r, rng));
            Field l = extension_of_degree(k, 1 + rng() % 3);
            Elem a = testing::random_good_point(pb, l, rng);
            CHECK(invariant_factors_at(pb, l, a) == testing::naive_invariant_factors_at(pb, l, a));
        }
    }
}

TEST_CASE("operator and companion system agree pointwise") {
    std::mt19937_64 rng(8);
    Field k = Field::prime(7);
    Field l = extension_of_degree(k, 2);
    for (int t = 0; t < 10; ++t) {
        auto L = testing::random_operator(k, 2, 1 + rng() % 3, rng);
        Elem a = testing::random_good_point(L, l, rng);
        CHECK(invariant_factors_at(L, l, a) == invariant_factors_at(companion_of_operator(L), l, a));
    }
}

TEST_CASE("errors at poles and small characteristic") {
    Field k = Field::prime(3);
    auto L = make_operator(k, {poly_of(k, {1}), poly_of(k, {0, 1})});
    CHECK_THROWS_AS(invariant_factors_at(L, k, k.zero()), Error);
    CHECK_THROWS_AS(invariant_factors_at(as_system(L), k, k.zero()), Error);
    auto L3 = make_operator(k, {poly_of(k, {1}), {}, {}, poly_of(k, {1})});
    CHECK_THROWS_AS(invariant_factors_at(L3, k, k.one()), Error);
}

TEST_CASE("scaling of invariant factors") {
    Field k = Field::prime(7);
    FPoly R(k, "T");
    // Factors of 3M from those of M = diag(1, 2): T - 3, T - 6.
    auto P = scale_factor(k, poly_of(k, {-1, 1}), k.from_int(3));
    CHECK(P == poly_of(k, {-3, 1}));
    P = scale_factor(k, poly_of(k, {2, 0, 1}), k.from_int(3));
    CHECK(P == poly_of(k, {18, 0, 1}));
}

TEST_CASE("Hurwitz truncation satisfies Leibniz") {
    std::mt19937_64 rng(12);
    Field l = extension_of_degree(Field::prime(5), 2);
    testing::HurwitzTruncation H(l, 13);  // beyond p, where Lucas matters
    for (int t = 0; t < 20; ++t) {
        auto f = H.zero(), g = H.zero();
        for (auto& c : f) c = l.random(rng);
        for (auto& c : g) c = l.random(rng);
        auto lhs = H.derivative(H.mul(f, g));
        auto rhs = H.add(H.mul(H.derivative(f), g), H.mul(f, H.derivative(g)));
        // The truncated derivative loses the top coefficient.
        lhs.pop_back();
        rhs.pop_back();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("the recurrence builds the fundamental solution at a") {
    // Bottom-right blocks of the partial factorials are the Hurwitz
    // coefficients of Y with f_A Y' = A~ Y and Y(0) = I.
    std::mt19937_64 rng(31);
    for (u64 p : {7, 11}) {
        Field k = Field::prime(p);
        Field l = extension_of_degree(k, 2);
        testing::HurwitzTruncation H(l, p);
        for (int t = 0; t < 5; ++t) {
            const std::size_t r = 1 + rng() % 3;
            auto sys = testing::random_system(k, 2, r, rng);
            Elem a = testing::random_good_point(sys, l, rng);
            auto B = build_B_system(sys, l, a);
            const std::size_t n = B.size();
            testing::HurwitzTruncation::SeriesMatrix Y(r, r, H.zero()), Yd(r, r, H.zero()), At(r, r, H.zero());
            for (std::size_t m = 0; m < p; ++m) {
                auto F = matrix_factorial_naive(B, m);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j) Y(i, j)[m] = F(n - r + i, n - r + j);
            }
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) {
                    CHECK(Y(i, j)[0] == (i == j ? l.one() : l.zero()));
                    Yd(i, j) = H.derivative(Y(i, j));
                    At(i, j) = H.from_poly(embed_poly(l, k, sys.A_tilde(i, j)), a);
                }
            const auto fA = H.from_poly(embed_poly(l, k, sys.f_A), a);
            const auto rhs = H.mat_mul(At, Y);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) {
                    auto lhs = H.mul(fA, Yd(i, j));
                    auto want = rhs(i, j);
                    lhs.pop_back();
                    want.pop_back();
                    CHECK(lhs == want);
                }
        }
    }
}
