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

#include "pcurv/fp.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <memory>

#include "pcurv/error.hpp"

namespace pcurv::fp {

namespace {

constexpr std::size_t kKaratsubaThreshold = 32;
constexpr std::size_t kNttThreshold = 256;
constexpr std::size_t kNewtonThreshold = 96;
// Transform reuse pays off earlier than for a single product.
constexpr std::size_t kMatrixNttThreshold = 48;

u64 mulmod128(u64 a, u64 b, u64 n) { return static_cast<u64>(static_cast<u128>(a) * b % n); }

u64 powmod128(u64 a, u64 e, u64 n) {
    u64 r = 1 % n;
    a %= n;
    while (e) {
        if (e & 1) r = mulmod128(r, a, n);
        a = mulmod128(a, a, n);
        e >>= 1;
    }
    return r;
}

// NTT-friendly primes below 2^31 with their primitive roots.
struct NttPrime {
    u64 p;
    u64 g;
    int two_adicity;
};

constexpr std::array<NttPrime, 6> kNttPrimes = {{
    {2013265921, 31, 27},
    {469762049, 3, 26},
    {754974721, 11, 24},
    {998244353, 3, 23},
    {167772161, 3, 25},
    {1004535809, 3, 21},
}};

using u32 = std::uint32_t;

// Twiddles w^k for k < n/2 with Shoup companions floor(w * 2^32 / P).
struct Twiddles {
    std::vector<u32> w, w_shoup;
};

Twiddles make_twiddles(u64 P, u64 root, std::size_t half) {
    Twiddles t;
    t.w.resize(half);
    t.w_shoup.resize(half);
    u64 cur = 1;
    for (std::size_t k = 0; k < half; ++k) {
        t.w[k] = static_cast<u32>(cur);
        t.w_shoup[k] = static_cast<u32>((cur << 32) / P);
        cur = cur * root % P;
    }
    return t;
}

// a * w mod P in [0, P), given ws = floor(w * 2^32 / P) and P < 2^31.
inline u32 shoup_mul(u32 a, u32 w, u32 ws, u32 P) {
    const u32 q = static_cast<u32>((static_cast<u64>(a) * ws) >> 32);
    u32 r = static_cast<u32>(static_cast<u64>(a) * w - static_cast<u64>(q) * P);
    return r >= P ? r - P : r;
}

// Forward and inverse twiddles for prime i and length 2^lg, built once per thread.
const std::pair<Twiddles, Twiddles>& cached_twiddles(std::size_t i, std::size_t lg) {
    thread_local std::array<std::vector<std::unique_ptr<std::pair<Twiddles, Twiddles>>>, kNttPrimes.size()> cache;
    auto& row = cache[i];
    if (row.size() <= lg) row.resize(lg + 1);
    if (!row[lg]) {
        const u64 P = kNttPrimes[i].p;
        const Modulus Pm(P);
        const std::size_t n = std::size_t{1} << lg;
        const u64 root = Pm.pow(kNttPrimes[i].g, (P - 1) / n);
        const std::size_t half = std::max<std::size_t>(1, n / 2);
        row[lg] = std::make_unique<std::pair<Twiddles, Twiddles>>(make_twiddles(P, root, half),
                                                                  make_twiddles(P, Pm.inv(root), half));
    }
    return *row[lg];
}

// Iterative radix-2 transform; tw holds the twiddles of the full length n.
// The AVX2 clone roughly halves the butterfly cost where available.
#if defined(__x86_64__) && defined(__GNUC__) && !defined(__clang__)
__attribute__((target_clones("avx2", "default")))
#endif
void ntt(std::vector<u32>& a, u32 P, const Twiddles& tw) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2, step = n / len;
        if (half <= 8) {
            // Short butterflies: hold the twiddle fixed and sweep the blocks.
            for (std::size_t k = 0; k < half; ++k) {
                const u32 w = tw.w[k * step], ws = tw.w_shoup[k * step];
                for (std::size_t i = k; i < n; i += len) {
                    const u32 u = a[i];
                    const u32 v = shoup_mul(a[i + half], w, ws, P);
                    const u32 sum = u + v;
                    a[i] = sum >= P ? sum - P : sum;
                    a[i + half] = u >= v ? u - v : u + P - v;
                }
            }
            continue;
        }
        for (std::size_t i = 0; i < n; i += len) {
            u32* lo = a.data() + i;
            u32* hi = lo + half;
            for (std::size_t k = 0; k < half; ++k) {
                const u32 u = lo[k];
                const u32 v = shoup_mul(hi[k], tw.w[k * step], tw.w_shoup[k * step], P);
                const u32 sum = u + v;
                lo[k] = sum >= P ? sum - P : sum;
                hi[k] = u >= v ? u - v : u + P - v;
            }
        }
    }
}

// Karatsuba on equal-length inputs (n >= 1); result has length 2n - 1.
void karatsuba_rec(const Modulus& m, const u64* a, const u64* b, std::size_t n, u64* out) {
    if (n < kKaratsubaThreshold) {
        Vec r = mul_schoolbook(m, std::span(a, n), std::span(b, n));
        std::copy(r.begin(), r.end(), out);
        return;
    }
    const std::size_t lo = n / 2;
    const std::size_t hi = n - lo;
    Vec z0(2 * lo - 1), z2(2 * hi - 1), z1(2 * hi - 1);
    karatsuba_rec(m, a, b, lo, z0.data());
    karatsuba_rec(m, a + lo, b + lo, hi, z2.data());
    Vec sa(hi), sb(hi);
    for (std::size_t i = 0; i < hi; ++i) {
        sa[i] = i < lo ? m.add(a[i], a[lo + i]) : a[lo + i];
        sb[i] = i < lo ? m.add(b[i], b[lo + i]) : b[lo + i];
    }
    karatsuba_rec(m, sa.data(), sb.data(), hi, z1.data());
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = m.sub(z1[i], z0[i]);
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = m.sub(z1[i], z2[i]);
    std::fill(out, out + 2 * n - 1, 0);
    for (std::size_t i = 0; i < z0.size(); ++i) out[i] = z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i) out[2 * lo + i] = m.add(out[2 * lo + i], z2[i]);
    for (std::size_t i = 0; i < z1.size(); ++i) out[lo + i] = m.add(out[lo + i], z1[i]);
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod128(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod128(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Modulus::Modulus(u64 p)
    : p_(p), pinv_(1.0L / static_cast<long double>(p)), small_(p < (u64{1} << 32)) {
    if (p < 2 || p >= kMaxModulus) raise(ErrorCode::InvalidArgument, "modulus out of supported range");
    barrett_ = ~u64{0} / p;
    two64_ = static_cast<u64>((static_cast<u128>(1) << 64) % p);
}

u64 Modulus::from_signed(std::int64_t a) const noexcept {
    if (a >= 0) return static_cast<u64>(a) % p_;
    u64 r = static_cast<u64>(-(a + 1)) % p_;  // avoids overflow at INT64_MIN
    return sub(p_ - 1, r);
}

u64 Modulus::pow(u64 a, u64 e) const noexcept {
    u64 r = 1 % p_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

u64 Modulus::inv(u64 a) const {
    a %= p_;
    if (a == 0) raise(ErrorCode::DivisionByZero, "inverse of zero in F_p");
    // Extended Euclid over signed 128-bit to stay exact for 50-bit moduli.
    __int128 t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
        __int128 q = r / nr;
        std::swap(t, nt);
        nt -= q * t;
        std::swap(r, nr);
        nr -= q * r;
    }
    if (t < 0) t += p_;
    return static_cast<u64>(t);
}

void trim(Vec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec mul_schoolbook(const Modulus& m, std::span<const u64> a, std::span<const u64> b) {
    if (a.empty() || b.empty()) return {};
    std::vector<u128> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        const u128 ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += ai * b[j];
    }
    Vec out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out[i] = m.reduce128(acc[i]);
    return out;
}

Vec mul_karatsuba(const Modulus& m, std::span<const u64> a, std::span<const u64> b) {
    if (a.empty() || b.empty()) return {};
    if (a.size() < b.size()) std::swap(a, b);
    const std::size_t n = b.size();
    Vec out(a.size() + b.size() - 1, 0);
    // Split the longer operand into n-sized slices.
    Vec chunk(n), prod(2 * n - 1);
    for (std::size_t off = 0; off < a.size(); off += n) {
        std::size_t len = std::min(n, a.size() - off);
        std::fill(chunk.begin(), chunk.end(), 0);
        std::copy(a.begin() + off, a.begin() + off + len, chunk.begin());
        karatsuba_rec(m, chunk.data(), b.data(), n, prod.data());
        std::size_t useful = std::min(prod.size(), out.size() - off);
        for (std::size_t i = 0; i < useful; ++i) out[off + i] = m.add(out[off + i], prod[i]);
    }
    return out;
}

namespace {

std::size_t ntt_length(std::size_t out_len) {
    std::size_t n = 1;
    while (n < out_len) n <<= 1;
    return n;
}

// Primes needed so their product exceeds every integer coefficient, which is
// below terms * (p-1)^2; also checks each prime supports length n.
std::size_t ntt_prime_count(const Modulus& m, std::size_t terms, std::size_t n) {
    const long double p1 = static_cast<long double>(m.value() - 1);
    const long double bound_bits =
        std::log2(static_cast<long double>(std::max<std::size_t>(1, terms))) + 2 * std::log2(std::max(p1, 1.0L)) + 1;
    std::size_t count = 0;
    long double bits = 0;
    while (bits <= bound_bits) {
        if (count == kNttPrimes.size()) raise(ErrorCode::InvalidArgument, "NTT prime budget exceeded");
        bits += std::log2(static_cast<long double>(kNttPrimes[count].p));
        ++count;
    }
    for (std::size_t i = 0; i < count; ++i) {
        if ((std::size_t{1} << kNttPrimes[i].two_adicity) < n)
            raise(ErrorCode::InvalidArgument, "polynomial too long for NTT");
    }
    return count;
}

std::vector<u32> forward(std::span<const u64> a, std::size_t prime, std::size_t n) {
    const Modulus Pm(kNttPrimes[prime].p);
    std::vector<u32> fa(n, 0);
    for (std::size_t k = 0; k < a.size(); ++k) fa[k] = static_cast<u32>(Pm.reduce(a[k]));
    ntt(fa, static_cast<u32>(Pm.value()), cached_twiddles(prime, static_cast<std::size_t>(std::countr_zero(n))).first);
    return fa;
}

// Inverse transform, scaled by 1/n and truncated to out_len.
void backward(std::vector<u32>& fa, std::size_t prime, std::size_t out_len) {
    const std::size_t n = fa.size();
    const u64 P = kNttPrimes[prime].p;
    const Modulus Pm(P);
    ntt(fa, static_cast<u32>(P), cached_twiddles(prime, static_cast<std::size_t>(std::countr_zero(n))).second);
    const u32 ninv = static_cast<u32>(Pm.inv(n % P));
    const u32 ninv_shoup = static_cast<u32>((static_cast<u64>(ninv) << 32) / P);
    fa.resize(out_len);
    for (auto& x : fa) x = shoup_mul(x, ninv, ninv_shoup, static_cast<u32>(P));
}

// Garner mixed-radix reconstruction of residues[0..count), then reduction modulo p.
Vec garner(const Modulus& m, const std::vector<const std::vector<u32>*>& residues, std::size_t out_len) {
    const std::size_t count = residues.size();
    std::vector<Modulus> pm;
    for (std::size_t i = 0; i < count; ++i) pm.emplace_back(kNttPrimes[i].p);
    std::vector<std::vector<u64>> inv_table(count, std::vector<u64>(count, 0));
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < i; ++j) inv_table[i][j] = pm[i].inv(pm[i].reduce(kNttPrimes[j].p));
    std::vector<u64> radix_mod_p(count);
    radix_mod_p[0] = 1 % m.value();
    for (std::size_t i = 1; i < count; ++i)
        radix_mod_p[i] = m.mul(radix_mod_p[i - 1], m.reduce(kNttPrimes[i - 1].p));

    Vec out(out_len);
    std::vector<u64> digit(count);
    for (std::size_t k = 0; k < out_len; ++k) {
        for (std::size_t i = 0; i < count; ++i) {
            const Modulus& Pi = pm[i];
            u64 x = (*residues[i])[k];
            for (std::size_t j = 0; j < i; ++j) x = Pi.mul(Pi.sub(x, Pi.reduce(digit[j])), inv_table[i][j]);
            digit[i] = x;
        }
        u64 acc = 0;
        for (std::size_t i = 0; i < count; ++i) acc = m.add(acc, m.mul(m.reduce(digit[i]), radix_mod_p[i]));
        out[k] = acc;
    }
    return out;
}

}  // namespace

Vec mul_ntt(const Modulus& m, std::span<const u64> a, std::span<const u64> b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t out_len = a.size() + b.size() - 1;
    const std::size_t n = ntt_length(out_len);
    const std::size_t count = ntt_prime_count(m, std::min(a.size(), b.size()), n);

    std::vector<std::vector<u32>> residues(count);
    std::vector<const std::vector<u32>*> views;
    for (std::size_t i = 0; i < count; ++i) {
        const Modulus Pm(kNttPrimes[i].p);
        std::vector<u32> fa = forward(a, i, n);
        const std::vector<u32> fb = forward(b, i, n);
        for (std::size_t k = 0; k < n; ++k) fa[k] = static_cast<u32>(Pm.mul(fa[k], fb[k]));
        backward(fa, i, out_len);
        residues[i] = std::move(fa);
        views.push_back(&residues[i]);
    }
    return garner(m, views, out_len);
}

std::vector<Vec> matrix_poly_mul(const Modulus& m, std::size_t rows, std::size_t inner, std::size_t cols,
                                 std::span<const Vec> A, std::span<const Vec> B) {
    std::size_t la = 0, lb = 0;
    for (const auto& x : A) la = std::max(la, x.size());
    for (const auto& y : B) lb = std::max(lb, y.size());
    std::vector<Vec> C(rows * cols);
    if (la == 0 || lb == 0) return C;

    if (std::min(la, lb) < kMatrixNttThreshold) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                Vec acc;
                for (std::size_t k = 0; k < inner; ++k) {
                    const Vec& x = A[i * inner + k];
                    const Vec& y = B[k * cols + j];
                    if (x.empty() || y.empty()) continue;
                    Vec prod = mul(m, x, y);
                    if (acc.size() < prod.size()) acc.resize(prod.size(), 0);
                    for (std::size_t t = 0; t < prod.size(); ++t) acc[t] = m.add(acc[t], prod[t]);
                }
                trim(acc);
                C[i * cols + j] = std::move(acc);
            }
        return C;
    }

    // Each entry is transformed once per prime; products accumulate pointwise.
    const std::size_t out_len = la + lb - 1;
    const std::size_t n = ntt_length(out_len);
    const std::size_t count = ntt_prime_count(m, inner * std::min(la, lb), n);
    std::vector<std::vector<std::vector<u32>>> acc(count, std::vector<std::vector<u32>>(rows * cols));
    for (std::size_t pr = 0; pr < count; ++pr) {
        const Modulus Pm(kNttPrimes[pr].p);
        std::vector<std::vector<u32>> fa(A.size()), fb(B.size());
        for (std::size_t e = 0; e < A.size(); ++e)
            if (!A[e].empty()) fa[e] = forward(A[e], pr, n);
        for (std::size_t e = 0; e < B.size(); ++e)
            if (!B[e].empty()) fb[e] = forward(B[e], pr, n);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                std::vector<u32>& out = acc[pr][i * cols + j];
                for (std::size_t k = 0; k < inner; ++k) {
                    const auto& x = fa[i * inner + k];
                    const auto& y = fb[k * cols + j];
                    if (x.empty() || y.empty()) continue;
                    if (out.empty()) out.assign(n, 0);
                    for (std::size_t t = 0; t < n; ++t)
                        out[t] = static_cast<u32>(Pm.add(out[t], Pm.mul(x[t], y[t])));
                }
                if (!out.empty()) backward(out, pr, out_len);
            }
    }
    for (std::size_t e = 0; e < rows * cols; ++e) {
        if (acc[0][e].empty()) continue;
        std::vector<const std::vector<u32>*> views;
        for (std::size_t pr = 0; pr < count; ++pr) views.push_back(&acc[pr][e]);
        C[e] = garner(m, views, out_len);
        trim(C[e]);
    }
    return C;
}

std::vector<Vec> middle_products(const Modulus& m, std::span<const Vec> as, std::span<const u64> b) {
    std::vector<Vec> out(as.size());
    if (as.empty()) return out;
    const std::size_t D = as.front().size() - 1;
    if (b.size() != 2 * D + 1) raise(ErrorCode::InvalidArgument, "middle product needs |b| = 2|a| - 1");
    if (D + 1 < kMatrixNttThreshold) {
        for (std::size_t e = 0; e < as.size(); ++e) {
            out[e].assign(D + 1, 0);
            for (std::size_t k = 0; k <= D; ++k) {
                u128 acc = 0;
                for (std::size_t j = 0; j <= D; ++j) acc += static_cast<u128>(as[e][j]) * b[k + D - j];
                out[e][k] = m.reduce128(acc);
            }
        }
        return out;
    }
    // Cyclic length n >= 2D + 1: wrapped terms of the full product (degree 3D)
    // land below index D and leave D..2D intact.
    const std::size_t n = ntt_length(2 * D + 1);
    const std::size_t count = ntt_prime_count(m, D + 1, n);
    std::vector<std::vector<std::vector<u32>>> res(count, std::vector<std::vector<u32>>(as.size()));
    for (std::size_t pr = 0; pr < count; ++pr) {
        const Modulus Pm(kNttPrimes[pr].p);
        const std::vector<u32> fb = forward(b, pr, n);
        for (std::size_t e = 0; e < as.size(); ++e) {
            std::vector<u32> fa = forward(as[e], pr, n);
            for (std::size_t t = 0; t < n; ++t) fa[t] = static_cast<u32>(Pm.mul(fa[t], fb[t]));
            backward(fa, pr, 2 * D + 1);
            fa.erase(fa.begin(), fa.begin() + static_cast<std::ptrdiff_t>(D));
            res[pr][e] = std::move(fa);
        }
    }
    for (std::size_t e = 0; e < as.size(); ++e) {
        std::vector<const std::vector<u32>*> views;
        for (std::size_t pr = 0; pr < count; ++pr) views.push_back(&res[pr][e]);
        out[e] = garner(m, views, D + 1);
    }
    return out;
}

Vec mul(const Modulus& m, std::span<const u64> a, std::span<const u64> b) {
    const std::size_t small = std::min(a.size(), b.size());
    if (small == 0) return {};
    if (small < kKaratsubaThreshold) return mul_schoolbook(m, a, b);
    if (small < kNttThreshold) return mul_karatsuba(m, a, b);
    return mul_ntt(m, a, b);
}

Vec inverse_series(const Modulus& m, std::span<const u64> a, std::size_t n) {
    if (a.empty() || a[0] == 0) raise(ErrorCode::DivisionByZero, "series inverse needs a unit constant term");
    Vec g{m.inv(a[0])};
    std::size_t len = 1;
    while (len < n) {
        len = std::min(2 * len, n);
        std::span<const u64> head = a.subspan(0, std::min(a.size(), len));
        Vec ag = mul(m, head, g);
        ag.resize(len, 0);
        // g <- g * (2 - a g)
        for (auto& x : ag) x = m.neg(x);
        ag[0] = m.add(ag[0], 2 % m.value());
        Vec next = mul(m, g, ag);
        next.resize(len, 0);
        g = std::move(next);
    }
    g.resize(n, 0);
    return g;
}

std::pair<Vec, Vec> divrem(const Modulus& m, std::span<const u64> a_in, std::span<const u64> b_in) {
    Vec a(a_in.begin(), a_in.end());
    Vec b(b_in.begin(), b_in.end());
    trim(a);
    trim(b);
    if (b.empty()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (a.size() < b.size()) return {Vec{}, a};
    const std::size_t qlen = a.size() - b.size() + 1;

    if (b.size() < kNewtonThreshold || qlen < kNewtonThreshold) {
        Vec q(qlen, 0);
        const u64 lead_inv = m.inv(b.back());
        for (std::size_t i = a.size(); i-- >= b.size();) {
            u64 c = m.mul(a[i], lead_inv);
            q[i - b.size() + 1] = c;
            if (c == 0) continue;
            const std::size_t shift = i - b.size() + 1;
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = m.sub(a[shift + j], m.mul(c, b[j]));
        }
        a.resize(b.size() - 1);
        trim(a);
        trim(q);
        return {q, a};
    }

    Vec ra(a.rbegin(), a.rend());
    Vec rb(b.rbegin(), b.rend());
    Vec inv = inverse_series(m, rb, qlen);
    ra.resize(qlen);
    Vec rq = mul(m, ra, inv);
    rq.resize(qlen, 0);
    Vec q(rq.rbegin(), rq.rend());
    Vec qb = mul(m, q, b);
    Vec r(b.size() - 1);
    for (std::size_t i = 0; i + 1 < b.size(); ++i) r[i] = m.sub(a[i], i < qb.size() ? qb[i] : 0);
    trim(q);
    trim(r);
    return {q, r};
}

Vec rem(const Modulus& m, std::span<const u64> a, std::span<const u64> b) { return divrem(m, a, b).second; }

u64 eval(const Modulus& m, std::span<const u64> f, u64 x) {
    u64 acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = m.add(m.mul(acc, x), f[i]);
    return acc;
}

SubproductTree::SubproductTree(const Modulus& m, std::span<const u64> points)
    : mod_(m), points_(points.begin(), points.end()) {
    std::vector<Vec> leaves;
    leaves.reserve(points_.size());
    for (u64 x : points_) leaves.push_back(Vec{m.neg(m.reduce(x)), 1});
    if (leaves.empty()) leaves.push_back(Vec{1});
    levels_.push_back(std::move(leaves));
    while (levels_.back().size() > 1) {
        const auto& below = levels_.back();
        std::vector<Vec> next;
        next.reserve((below.size() + 1) / 2);
        for (std::size_t i = 0; i < below.size(); i += 2) {
            if (i + 1 < below.size())
                next.push_back(mul(m, below[i], below[i + 1]));
            else
                next.push_back(below[i]);
        }
        levels_.push_back(std::move(next));
    }
    rev_inverses_.resize(levels_.size());
    for (std::size_t l = 1; l < levels_.size(); ++l) {
        rev_inverses_[l].resize(levels_[l].size());
        for (std::size_t i = 0; i < levels_[l].size(); ++i) {
            const Vec& g = levels_[l][i];
            if (g.size() < kNewtonThreshold) continue;
            Vec rg(g.rbegin(), g.rend());
            rev_inverses_[l][i] = inverse_series(m, rg, g.size());
        }
    }
}

Vec SubproductTree::evaluate(std::span<const u64> f) const {
    Vec out(points_.size(), 0);
    if (points_.empty()) return out;
    descend(f, levels_.size() - 1, 0, out);
    return out;
}

void SubproductTree::descend(std::span<const u64> f, std::size_t level, std::size_t index, Vec& out) const {
    const std::size_t first = index << level;
    const std::size_t count = std::min(std::size_t{1} << level, points_.size() - first);
    const Vec& g = levels_[level][index];
    const Vec& ginv = rev_inverses_[level][index];
    Vec r;
    if (f.size() < g.size()) {
        r.assign(f.begin(), f.end());
    } else if (!ginv.empty() && f.size() - g.size() + 1 <= ginv.size()) {
        // Remainder via the cached inverse: two products, no Newton iteration.
        const std::size_t qlen = f.size() - g.size() + 1;
        Vec rf(f.rbegin(), f.rbegin() + qlen);
        Vec rq = mul(mod_, rf, std::span<const u64>(ginv).subspan(0, qlen));
        rq.resize(qlen, 0);
        Vec q(rq.rbegin(), rq.rend());
        Vec qg = mul(mod_, q, g);
        r.resize(g.size() - 1);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_.sub(f[i], i < qg.size() ? qg[i] : 0);
    } else {
        r = rem(mod_, f, g);
    }
    if (count <= 8 || level == 0) {
        for (std::size_t i = 0; i < count; ++i) out[first + i] = eval(mod_, r, points_[first + i]);
        return;
    }
    descend(r, level - 1, 2 * index, out);
    if (2 * index + 1 < levels_[level - 1].size()) descend(r, level - 1, 2 * index + 1, out);
}

bool batch_inverse(const Modulus& m, Vec& xs) {
    if (xs.empty()) return true;
    Vec prefix(xs.size());
    u64 acc = 1 % m.value();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] == 0) return false;
        prefix[i] = acc;
        acc = m.mul(acc, xs[i]);
    }
    u64 inv = m.inv(acc);
    for (std::size_t i = xs.size(); i-- > 0;) {
        const u64 x = xs[i];
        xs[i] = m.mul(inv, prefix[i]);
        inv = m.mul(inv, x);
    }
    return true;
}

bool shift_samples(const Modulus& m, std::vector<Vec>& seqs, u64 a) {
    if (seqs.empty() || seqs.front().empty()) return true;
    const std::size_t D = seqs.front().size() - 1;
    if (D >= m.value()) return false;
    a = m.reduce(a);
    // Lagrange form: P(a + k) = prod_i (a + k - i) * sum_j h_j w_j / (a + k - j)
    // with w_j = (-1)^(D-j) / (j! (D-j)!). The sum is a convolution with L_t = 1 / (a - D + t).
    Vec L(2 * D + 1);
    for (std::size_t t = 0; t <= 2 * D; ++t) L[t] = m.add(m.sub(a, m.reduce(D)), m.reduce(t));
    Vec Linv = L;
    if (!batch_inverse(m, Linv)) return false;

    Vec fact(D + 1);
    fact[0] = 1 % m.value();
    for (std::size_t j = 1; j <= D; ++j) fact[j] = m.mul(fact[j - 1], m.reduce(j));
    Vec w(D + 1);
    for (std::size_t j = 0; j <= D; ++j) w[j] = m.mul(fact[j], fact[D - j]);
    batch_inverse(m, w);
    for (std::size_t j = 0; j <= D; ++j)
        if ((D - j) % 2 == 1) w[j] = m.neg(w[j]);

    // Zero sequences stay zero; only the others enter the convolution.
    std::vector<std::size_t> live;
    std::vector<Vec> weighted;
    for (std::size_t e = 0; e < seqs.size(); ++e) {
        if (std::all_of(seqs[e].begin(), seqs[e].end(), [](u64 x) { return x == 0; })) continue;
        live.push_back(e);
        Vec& v = weighted.emplace_back(D + 1);
        for (std::size_t j = 0; j <= D; ++j) v[j] = m.mul(seqs[e][j], w[j]);
    }
    const std::vector<Vec> conv = middle_products(m, weighted, Linv);

    // delta_k = prod_{i=0}^{D} (a + k - i) = L_k * ... * L_{k+D}.
    u64 delta = 1 % m.value();
    for (std::size_t t = 0; t <= D; ++t) delta = m.mul(delta, L[t]);
    for (std::size_t k = 0; k <= D; ++k) {
        for (std::size_t idx = 0; idx < live.size(); ++idx) seqs[live[idx]][k] = m.mul(delta, conv[idx][k]);
        if (k < D) delta = m.mul(m.mul(delta, Linv[k]), L[k + D + 1]);
    }
    return true;
}

Vec multipoint_eval(const Modulus& m, std::span<const u64> f, std::span<const u64> points) {
    if (points.size() <= 8 || f.size() <= 8) {
        Vec out(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) out[i] = eval(m, f, points[i]);
        return out;
    }
    return SubproductTree(m, points).evaluate(f);
}

}  // namespace pcurv::fp
