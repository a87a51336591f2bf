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
#include "pcurv/error.hpp"
#include "pcurv/fp.hpp"

using namespace pcurv;
using namespace pcurv::fp;

namespace {

Vec random_vec(std::mt19937_64& rng, std::size_t n, u64 p) {
    std::uniform_int_distribution<u64> d(0, p - 1);
    Vec v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

bool trial_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Plain double loop with a reduction after every step.
Vec naive_product(const Modulus& m, const Vec& a, const Vec& b) {
    Vec out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = m.add(out[i + j], m.mul(a[i], b[j]));
    return out;
}

}  // namespace

TEST_CASE("modular multiplication agrees with 128-bit reduction near 2^50") {
    std::mt19937_64 rng(1);
    const u64 p = (u64{1} << 50) - 27;  // prime
    REQUIRE(is_prime(p));
    Modulus m(p);
    for (int i = 0; i < 10000; ++i) {
        u64 a = rng() % p, b = rng() % p;
        CHECK(m.mul(a, b) == static_cast<u64>(static_cast<u128>(a) * b % p));
    }
    CHECK(m.mul(m.inv(123456789), 123456789) == 1);
    CHECK(m.from_signed(-1) == p - 1);
    CHECK_THROWS_AS(m.inv(0), Error);
}

TEST_CASE("is_prime matches trial division below 20000") {
    for (u64 n = 0; n < 20000; ++n) CHECK(is_prime(n) == trial_prime(n));
    CHECK(is_prime(10007));
    CHECK(is_prime(40009));
    CHECK_FALSE(is_prime(4));
}

TEST_CASE("multiplication kernels agree with the naive product") {
    std::mt19937_64 rng(2);
    for (u64 p : {u64{5}, u64{40009}, u64{2147483647}, (u64{1} << 50) - 27}) {
        Modulus m(p);
        for (auto [na, nb] : {std::pair{1, 1}, {7, 30}, {40, 40}, {100, 37}, {300, 301}, {1000, 5}}) {
            Vec a = random_vec(rng, na, p), b = random_vec(rng, nb, p);
            Vec ref = naive_product(m, a, b);
            CHECK(mul_schoolbook(m, a, b) == ref);
            CHECK(mul_karatsuba(m, a, b) == ref);
            CHECK(mul_ntt(m, a, b) == ref);
            CHECK(mul(m, a, b) == ref);
        }
    }
}

TEST_CASE("series inverse and division") {
    std::mt19937_64 rng(3);
    Modulus m(998244353);
    Vec a = random_vec(rng, 500, m.value());
    a[0] = 7;
    Vec g = inverse_series(m, a, 400);
    Vec prod = mul(m, a, g);
    CHECK(prod[0] == 1);
    for (std::size_t i = 1; i < 400; ++i) CHECK(prod[i] == 0);

    for (auto [na, nb] : {std::pair{10, 3}, {500, 200}, {1000, 120}, {50, 60}}) {
        Vec f = random_vec(rng, na, m.value()), h = random_vec(rng, nb, m.value());
        h.back() = 1 + h.back() % (m.value() - 1);
        auto [q, r] = divrem(m, f, h);
        CHECK(r.size() < h.size());
        Vec back = mul(m, q, h);
        back.resize(std::max(back.size(), r.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) back[i] = m.add(back[i], r[i]);
        trim(back);
        Vec ft = f;
        trim(ft);
        CHECK(back == ft);
    }
    CHECK_THROWS_AS(divrem(m, Vec{1, 2}, Vec{0, 0}), Error);
}

TEST_CASE("multipoint evaluation agrees with Horner") {
    std::mt19937_64 rng(4);
    Modulus m(40009);
    Vec f = random_vec(rng, 777, m.value());
    Vec pts(300);
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = (i * 133) % m.value();
    Vec got = multipoint_eval(m, f, pts);
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(got[i] == eval(m, f, pts[i]));
    SubproductTree tree(m, pts);
    CHECK(tree.root().size() == pts.size() + 1);
    CHECK(eval(m, tree.root(), pts[17]) == 0);
}

TEST_CASE("matrix polynomial product agrees with entrywise products") {
    std::mt19937_64 rng(5);
    for (u64 p : {u64{7}, u64{40009}, (u64{1} << 50) - 27}) {
        Modulus m(p);
        for (std::size_t len : {5, 60, 130}) {
            std::vector<Vec> A(2 * 3), B(3 * 2);
            for (auto& x : A) x = random_vec(rng, len, p);
            for (auto& y : B) y = random_vec(rng, len + 7, p);
            A[4].clear();
            auto C = matrix_poly_mul(m, 2, 3, 2, A, B);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) {
                    Vec want;
                    for (std::size_t k = 0; k < 3; ++k) {
                        Vec prod = mul_schoolbook(m, A[i * 3 + k], B[k * 2 + j]);
                        if (want.size() < prod.size()) want.resize(prod.size(), 0);
                        for (std::size_t t = 0; t < prod.size(); ++t) want[t] = m.add(want[t], prod[t]);
                    }
                    trim(want);
                    CHECK(C[i * 2 + j] == want);
                }
        }
    }
}

TEST_CASE("sample shifts agree with Horner on the shifted points") {
    std::mt19937_64 rng(6);
    for (u64 p : {u64{101}, u64{40009}}) {
        Modulus m(p);
        for (std::size_t D : {0, 3, 70}) {
            if (2 * D + 2 >= p) continue;
            std::vector<Vec> polys{random_vec(rng, D + 1, p), random_vec(rng, D + 1, p), Vec(D + 1, 0)};
            std::vector<Vec> seqs;
            for (const auto& f : polys) {
                Vec v(D + 1);
                for (std::size_t i = 0; i <= D; ++i) v[i] = eval(m, f, i);
                seqs.push_back(v);
            }
            for (u64 a : {u64(D + 1), p - 2 * D - 1, u64(3 * D + 5) % p}) {
                auto shifted = seqs;
                REQUIRE(shift_samples(m, shifted, a));
                for (std::size_t e = 0; e < polys.size(); ++e)
                    for (std::size_t k = 0; k <= D; ++k) CHECK(shifted[e][k] == eval(m, polys[e], m.reduce(a + k)));
            }
        }
    }
    // a = 2 with D = 4 meets a + k - j = 0.
    Modulus m(101);
    std::vector<Vec> seqs{Vec{1, 2, 3, 4, 5}};
    CHECK_FALSE(shift_samples(m, seqs, 2));
    CHECK(seqs.front() == Vec{1, 2, 3, 4, 5});
}
