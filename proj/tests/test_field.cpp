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

#include <map>
#include <random>

#include "doctest.h"
#include "pcurv/ff.hpp"
#include "pcurv/field.hpp"
#include "pcurv/poly.hpp"
#include "pcurv/ratfunc.hpp"

using namespace pcurv;

namespace {

Poly P(const Field& k, std::vector<std::int64_t> c) {
    Poly f;
    for (auto x : c) f.push_back(k.from_int(x));
    FPoly(k).normalize(f);
    return f;
}

Field f4() {
    Field f2 = Field::prime(2);
    return f2.extend(P(f2, {1, 1, 1}));
}

// Schoolbook product over the coefficient field, for cross-checking the
// packed multiplication paths.
Poly schoolbook(const Field& k, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, k.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = k.add(out[i + j], k.mul(a[i], b[j]));
    FPoly(k).normalize(out);
    return out;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    Field f5 = Field::prime(5);
    CHECK(f5.mul(f5.from_int(3), f5.from_int(4)) == f5.from_int(2));
    CHECK_THROWS_AS(f5.inv(f5.zero()), Error);
    CHECK_THROWS_AS(Field::prime(9), Error);
}

TEST_CASE("F_4 arithmetic") {
    Field k = f4();
    Elem w = k.gen();
    CHECK(k.mul(w, k.add(w, k.one())) == k.one());
    CHECK(k.mul(k.inv(w), w) == k.one());
    CHECK(k.to_string(k.add(w, k.one())) == "w + 1");
}

TEST_CASE("field axioms and Fermat on a three-level tower") {
    Field f3 = Field::prime(3);
    Field f9 = f3.extend(P(f3, {1, 0, 1}));
    Field l = f9.extend(find_irreducible(f9, 3));
    REQUIRE(l.degree() == 6);
    std::mt19937_64 rng(7);
    const u64 order = 729;
    for (int i = 0; i < 50; ++i) {
        Elem a = l.random(rng), b = l.random(rng), c = l.random(rng);
        CHECK(l.mul(a, b) == l.mul(b, a));
        CHECK(l.mul(l.mul(a, b), c) == l.mul(a, l.mul(b, c)));
        CHECK(l.mul(a, l.add(b, c)) == l.add(l.mul(a, b), l.mul(a, c)));
        if (!l.is_zero(a)) {
            CHECK(l.mul(a, l.inv(a)) == l.one());
            CHECK(l.pow(a, order - 1) == l.one());
        }
    }
    Elem w = l.embed(f9, f9.gen());
    CHECK(l.project(f9, l.mul(w, w)) == f9.from_int(-1));
    CHECK_THROWS_AS(l.project(f9, l.gen()), Error);
}

TEST_CASE("find_irreducible follows the fixed enumeration") {
    Field f2 = Field::prime(2), f3 = Field::prime(3), f5 = Field::prime(5);
    CHECK(find_irreducible(f2, 3) == P(f2, {1, 1, 0, 1}));
    CHECK(find_irreducible(f5, 1) == P(f5, {0, 1}));
    CHECK(find_irreducible(f3, 2) == P(f3, {1, 0, 1}));
    // Every output divides u^(q^n) - u and passes the gcd test.
    for (std::size_t n = 1; n <= 12; ++n) {
        Poly s = find_irreducible(f3, n);
        CHECK(s.size() == n + 1);
        CHECK(is_irreducible(f3, s));
        FPoly R(f3, "u");
        Poly h = R.var();
        for (std::size_t i = 0; i < n; ++i) h = R.powmod(h, 3, s);
        CHECK(R.equal(h, R.rem(R.var(), s)));
    }
}

TEST_CASE("minimal polynomials and conjugacy") {
    Field k = f4();
    Field f2 = k.base();
    Elem w = k.gen();
    Poly u2u1 = P(f2, {1, 1, 1});
    CHECK(minimal_polynomial(k, k.zero(), f2) == P(f2, {0, 1}));
    CHECK(minimal_polynomial(k, w, f2) == u2u1);
    CHECK(minimal_polynomial(k, k.mul(w, w), f2) == u2u1);
    CHECK(are_conjugate(k, w, k.mul(w, w), f2));
    CHECK(are_conjugate(k, w, w, f2));
    CHECK_FALSE(are_conjugate(k, w, k.one(), f2));

    Field f5 = Field::prime(5);
    Field l = extension_of_degree(f5, 6);
    std::mt19937_64 rng(5);
    FPoly R(l, "u");
    for (int i = 0; i < 20; ++i) {
        Elem a = l.random(rng);
        Poly mp = minimal_polynomial(l, a, f5);
        CHECK(6 % (mp.size() - 1) == 0);
        Poly lifted;
        for (const auto& c : mp) lifted.push_back(l.embed(f5, c));
        CHECK(l.is_zero(R.eval(lifted, a)));
        CHECK(degree_over(l, a, f5) == mp.size() - 1);
    }
}

TEST_CASE("random_generator is uniform over generators") {
    Field f3 = Field::prime(3);
    Field f9 = f3.extend(find_irreducible(f3, 2));
    std::mt19937_64 rng(11);
    std::map<Elem, int> counts;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) counts[random_generator(f9, f3, rng)]++;
    // Generators of F_9 over F_3 are the 6 elements outside F_3.
    CHECK(counts.size() == 6);
    const double mean = draws / 6.0, sigma = std::sqrt(draws * (1.0 / 6) * (5.0 / 6));
    for (const auto& [e, c] : counts) {
        CHECK_FALSE(f9.lies_in(f3, e));
        CHECK(std::abs(c - mean) <= 5 * sigma);
    }
    Field k = f4();
    Elem g = random_generator(k, k.base(), rng);
    CHECK((g == k.gen() || g == k.add(k.gen(), k.one())));
}

TEST_CASE("polynomial basics") {
    Field f5 = Field::prime(5), f3 = Field::prime(3), f7 = Field::prime(7);
    FPoly R5(f5), R3(f3), R7(f7);
    CHECK(R5.gcd(P(f5, {-1, 0, 1}), P(f5, {-1, 1})) == P(f5, {-1, 1}));
    CHECK(R3.derivative(P(f3, {0, 1, 0, 1})) == P(f3, {1}));
    CHECK(R7.eval(P(f7, {1, 0, 1}), f7.from_int(3)) == f7.from_int(3));
    CHECK(R5.to_string(P(f5, {1, 2, 0, 1})) == "x^3 + 2*x + 1");
    CHECK(R5.to_string(P(f5, {-1, 1})) == "x + 4");
}

TEST_CASE("quorem, gcd, Leibniz and Taylor shift on random inputs") {
    std::mt19937_64 rng(9);
    Field f7 = Field::prime(7);
    Field l = extension_of_degree(f7, 5);
    for (const Field& k : {f7, l}) {
        FPoly R(k);
        auto rnd = [&](std::size_t n) {
            Poly f(n);
            for (auto& c : f) c = k.random(rng);
            R.normalize(f);
            return f;
        };
        for (int i = 0; i < 20; ++i) {
            Poly f = rnd(1 + rng() % 40), g = rnd(1 + rng() % 20);
            if (g.empty()) continue;
            auto [q, r] = R.divrem(f, g);
            CHECK(R.deg(r) < R.deg(g));
            CHECK(R.equal(R.add(R.mul(q, g), r), f));
            CHECK(R.equal(R.mul(f, g), schoolbook(k, f, g)));
            Poly h = R.gcd(f, g);
            if (!h.empty()) {
                CHECK(R.divides(h, f));
                CHECK(R.divides(h, g));
            }
            auto x = R.xgcd(f, g);
            CHECK(R.equal(R.add(R.mul(x.s, f), R.mul(x.t, g)), x.g));
            CHECK(R.equal(R.derivative(R.mul(f, g)),
                          R.add(R.mul(R.derivative(f), g), R.mul(f, R.derivative(g)))));
            Elem c = k.random(rng);
            CHECK(R.equal(R.taylor_shift(f, c), R.compose(f, Poly{c, k.one()})));
        }
        // Long operands exercise Kronecker packing and Karatsuba.
        Poly a = rnd(90), b = rnd(70);
        CHECK(R.equal(R.mul(a, b), schoolbook(k, a, b)));
    }
}

TEST_CASE("rational functions") {
    Field f5 = Field::prime(5), f3 = Field::prime(3);
    RatFuncField K(f5);
    RatFunc x = K.from_poly(P(f5, {0, 1}));
    RatFunc inv_x = K.inv(x);
    CHECK(K.equal(K.derivative(inv_x), K.make(P(f5, {-1}), P(f5, {0, 0, 1}))));
    RatFunc a = K.make(P(f5, {0, 1}), P(f5, {1, 1}));
    RatFunc b = K.make(P(f5, {1, 1}), P(f5, {0, 1}));
    CHECK(K.equal(K.mul(a, b), K.one()));
    RatFuncField K3(f3);
    RatFunc c = K3.make(P(f3, {0, 0, 0, 1}), P(f3, {1, 1}));
    CHECK(K3.equal(K3.derivative(c), K3.make(P(f3, {0, 0, 0, -1}), P(f3, {1, 2, 1}))));
    CHECK(K3.equal(K3.add(c, K3.neg(c)), K3.zero()));
    CHECK(K.to_string(a) == "x/(x + 1)");
    CHECK_THROWS_AS(K.inv(K.zero()), Error);
}
