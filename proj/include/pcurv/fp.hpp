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

// Word-size arithmetic in F_p and dense polynomial kernels over F_p.
//
// Polynomials are plain coefficient vectors (index = degree). The kernels do
// not strip trailing zeros unless stated; callers normalize with trim().

#ifndef PCURV_FP_HPP
#define PCURV_FP_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace pcurv::fp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Vec = std::vector<u64>;

// Largest supported modulus. Products fit in 128 bits with room for long
// accumulations in the schoolbook kernel.
inline constexpr u64 kMaxModulus = u64{1} << 50;

bool is_prime(u64 n);

class Modulus {
public:
    explicit Modulus(u64 p);

    u64 value() const noexcept { return p_; }

    u64 reduce(u64 a) const noexcept {
        // Barrett: the quotient estimate undershoots by at most one.
        u64 r = a - static_cast<u64>((static_cast<u128>(a) * barrett_) >> 64) * p_;
        return r >= p_ ? r - p_ : r;
    }
    u64 reduce128(u128 a) const noexcept {
        const u64 hi = static_cast<u64>(a >> 64);
        if (hi == 0) return reduce(static_cast<u64>(a));
        if (!small_) return static_cast<u64>(a % p_);
        return add(mul(reduce(hi), two64_), reduce(static_cast<u64>(a)));
    }
    u64 from_signed(std::int64_t a) const noexcept;

    u64 add(u64 a, u64 b) const noexcept {
        u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }

    u64 mul(u64 a, u64 b) const noexcept {
        if (small_) return reduce(a * b);
        // Quotient estimate through extended precision; off by at most one.
        u64 q = static_cast<u64>(static_cast<long double>(a) * b * pinv_);
        auto r = static_cast<std::int64_t>(a * b - q * p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        if (r >= static_cast<std::int64_t>(p_)) r -= static_cast<std::int64_t>(p_);
        return static_cast<u64>(r);
    }

    u64 pow(u64 a, u64 e) const noexcept;
    u64 inv(u64 a) const;  // throws DivisionByZero on 0

    bool operator==(const Modulus& o) const noexcept { return p_ == o.p_; }

private:
    u64 p_;
    long double pinv_;
    bool small_;
    u64 barrett_;  // floor((2^64 - 1) / p)
    u64 two64_;    // 2^64 mod p
};

void trim(Vec& a);

Vec mul_schoolbook(const Modulus& m, std::span<const u64> a, std::span<const u64> b);
Vec mul_karatsuba(const Modulus& m, std::span<const u64> a, std::span<const u64> b);
Vec mul_ntt(const Modulus& m, std::span<const u64> a, std::span<const u64> b);

// C = A * B for row-major polynomial matrices (rows x inner) and (inner x cols);
// empty entries are zero. Large entries share one transform per prime.
std::vector<Vec> matrix_poly_mul(const Modulus& m, std::size_t rows, std::size_t inner, std::size_t cols,
                                 std::span<const Vec> A, std::span<const Vec> B);

// Coefficients D..2D of a_e * b for every a_e of length D + 1, with b of
// length 2D + 1. Shares the transform of b across all a_e.
std::vector<Vec> middle_products(const Modulus& m, std::span<const Vec> as, std::span<const u64> b);

// Dispatches on size: schoolbook, Karatsuba, then multi-prime NTT.
Vec mul(const Modulus& m, std::span<const u64> a, std::span<const u64> b);

// First n terms of 1/a; requires a[0] != 0.
Vec inverse_series(const Modulus& m, std::span<const u64> a, std::size_t n);

// Quotient and remainder, both trimmed. b must be nonzero after trimming.
std::pair<Vec, Vec> divrem(const Modulus& m, std::span<const u64> a, std::span<const u64> b);
Vec rem(const Modulus& m, std::span<const u64> a, std::span<const u64> b);

u64 eval(const Modulus& m, std::span<const u64> f, u64 x);

// Inverses of every entry by one field inversion; false if some entry is zero.
bool batch_inverse(const Modulus& m, Vec& xs);

// Each sequence holds P(0), ..., P(D) for a polynomial P of degree <= D, all of
// one length. Replaces them with P(a), ..., P(a + D). Returns false, leaving
// the input unchanged, when D >= p or some a + k - j with 0 <= j, k <= D is 0.
bool shift_samples(const Modulus& m, std::vector<Vec>& seqs, u64 a);

// Balanced product tree of the linear factors (X - x_i).
class SubproductTree {
public:
    SubproductTree(const Modulus& m, std::span<const u64> points);

    const Vec& root() const { return levels_.back().front(); }
    std::size_t size() const { return points_.size(); }

    // Values f(x_i) for every point, in input order.
    Vec evaluate(std::span<const u64> f) const;

private:
    void descend(std::span<const u64> f, std::size_t level, std::size_t index, Vec& out) const;

    Modulus mod_;
    Vec points_;
    // levels_[0] holds the leaves; each higher level pairs adjacent nodes.
    // Node i of level l covers points [i * 2^l, (i + 1) * 2^l).
    std::vector<std::vector<Vec>> levels_;
    // Inverse of the reversed node modulo x^(node size); empty below the Newton cutoff.
    std::vector<std::vector<Vec>> rev_inverses_;
};

Vec multipoint_eval(const Modulus& m, std::span<const u64> f, std::span<const u64> points);

}  // namespace pcurv::fp

#endif
