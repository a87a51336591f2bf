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
#include "pcurv/nilprofile.hpp"
#include "support.hpp"

using namespace pcurv;

namespace {

using Seq = std::vector<std::size_t>;

std::size_t binom(std::size_t a, std::size_t b) {
    if (b > a) return 0;
    std::size_t c = 1;
    for (std::size_t i = 0; i < b; ++i) c = c * (a - i) / (i + 1);
    return c;
}

bool valid(const Seq& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i + 1] > v[i]) return false;
    for (std::size_t i = 0; i + 2 < v.size(); ++i)
        if (v[i] - v[i + 1] < v[i + 1] - v[i + 2]) return false;
    return true;
}

// Tries every base sequence with entries <= total.
bool brute_force_feasible(const Seq& R, std::size_t total, std::size_t top, std::size_t n_max) {
    const std::size_t L = R.size();
    for (std::size_t n = 2; n <= n_max; ++n) {
        Seq b(L, 0);
        for (;;) {
            bool ok = valid(b);
            Seq sym;
            for (std::size_t m = 0; m < L && ok; ++m) {
                const std::size_t x = binom(n - 1 + b[m], n);
                sym.push_back(x);
                ok = m == 0 ? x == total - top : (x <= R[m] && R[m] - x <= top);
            }
            if (ok && valid(sym)) return true;
            std::size_t i = 0;
            while (i < L && b[i] == total) b[i++] = 0;
            if (i == L) break;
            ++b[i];
        }
    }
    return false;
}

Seq random_profile(std::size_t total, std::mt19937_64& rng) {
    // Jordan type: a random partition of total.
    Seq parts;
    std::size_t left = total;
    while (left > 0) {
        const std::size_t x = 1 + rng() % left;
        parts.push_back(x);
        left -= x;
    }
    return profile_from_valuations(parts).ranks;
}

}  // namespace

TEST_CASE("profiles from invariant factors") {
    CHECK(profile_from_valuations({1, 1}).ranks == Seq{2, 0});
    CHECK(profile_from_valuations({0, 1, 2}).ranks == Seq{3, 1, 0});
    Field k = Field::prime(5);
    FPoly R(k, "T");
    std::vector<Poly> f{R.one(), testing::poly_of(k, {0, 1}), testing::poly_of(k, {0, 0, 1})};
    CHECK(profile_from_invariant_factors(k, f).ranks == Seq{3, 1, 0});
}

TEST_CASE("profiles agree with ranks of block companion powers") {
    std::mt19937_64 rng(61);
    Field k = Field::prime(7);
    FPoly R(k, "T");
    for (int t = 0; t < 30; ++t) {
        // Chain T^v_j * (T + 1)^w_j with nondecreasing v_j and w_j.
        Seq v(3), w(3);
        std::size_t av = 0, aw = 0;
        for (int j = 0; j < 3; ++j) {
            av += rng() % 3;
            aw += rng() % 2;
            v[j] = av;
            w[j] = aw;
        }
        std::vector<Poly> chain;
        for (int j = 0; j < 3; ++j)
            chain.push_back(R.mul(R.pow(testing::poly_of(k, {0, 1}), v[j]), R.pow(testing::poly_of(k, {1, 1}), w[j])));
        auto M = block_companion(k, chain);
        if (M.rows == 0) continue;
        auto full = rank_profile(k, M);
        const std::size_t unit = M.rows - (v[0] + v[1] + v[2]);
        Seq nil;
        for (auto x : full) nil.push_back(x - unit);
        auto got = profile_from_invariant_factors(k, chain).ranks;
        // rank_profile stops at the first repeat; the nilpotent profile ends at 0.
        CHECK(got == nil);
    }
}

TEST_CASE("symmetric power ranks") {
    CHECK(sym_power_rank(2, 5) == 15);
    CHECK(sym_power_rank(2, 0) == 0);
    CHECK(sym_power_rank(3, 2) == 4);
    CHECK(sym_power_rank(2, 6) == 21);
    for (std::size_t n = 2; n < 6; ++n)
        for (std::size_t b = 0; b < 10; ++b) CHECK(sym_power_rank(n, b) < sym_power_rank(n, b + 1));
}

TEST_CASE("published rank table is infeasible") {
    auto res = feasibility_check({{23, 17, 11, 6, 3, 0}}, {23, 2});
    CHECK_FALSE(res.feasible);
    const auto lines = res.render();
    const auto has = [&](const std::string& s) {
        return std::any_of(lines.begin(), lines.end(), [&](const auto& l) { return l.find(s) != std::string::npos; });
    };
    CHECK(has("n=2: forced base profile (6,5,4,3,2,0) rejected: differences (1,1,1,1,2) increase at m=4"));
    // The numeric constraints leave exactly one base profile over all n.
    std::size_t forced = 0;
    for (const auto& tr : res.trace) forced += tr.forced.size();
    CHECK(forced == 1);
    CHECK(lines.back() == "infeasible");
}

TEST_CASE("small feasible instance") {
    auto res = feasibility_check({{3, 0}}, {3, 2, 2, 2});
    CHECK(res.feasible);
    CHECK(res.n == 2);
    CHECK(res.base_profile == Seq{1, 0});
}

TEST_CASE("feasibility matches brute force") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 60; ++t) {
        const std::size_t total = 2 + rng() % 6, top = rng() % 3;
        if (top >= total) continue;
        const Seq R = random_profile(total, rng);
        const std::size_t n_max = std::max<std::size_t>(2, total - top);
        auto res = feasibility_check({R}, {total, top, 2, n_max});
        CHECK(res.feasible == brute_force_feasible(R, total, top, n_max));
    }
    // All-zero nilpotent profiles (k, 0).
    for (std::size_t total = 2; total < 9; ++total) {
        auto res = feasibility_check({{total, 0}}, {total, 2});
        CHECK(res.feasible == brute_force_feasible({total, 0}, total, 2, std::max<std::size_t>(2, total - 2)));
    }
}

TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(feasibility_check({{5, 3, 0}}, {5, 2}), Error);
    CHECK_THROWS_AS(feasibility_check({{4, 2, 0}}, {5, 2}), Error);
}
