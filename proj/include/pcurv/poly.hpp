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

// Dense univariate polynomials over a coefficient domain.
//
// A domain supplies value_type and zero/one/from_int/add/sub/neg/mul/is_zero/
// equal/to_string; fields additionally supply inv. PolyRing<R> is itself such
// a domain, so rings nest (F_q[X][T], matrices over K[T], ...).
//
// Values are coefficient vectors, index = degree, with no trailing zeros.

#ifndef PCURV_POLY_HPP
#define PCURV_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "pcurv/error.hpp"
#include "pcurv/field.hpp"

namespace pcurv {

template <class R>
class PolyRing {
public:
    using coeff_type = typename R::value_type;
    using value_type = std::vector<coeff_type>;

    explicit PolyRing(R ring, std::string var = "x") : r_(std::move(ring)), var_(std::move(var)) {}

    const R& ring() const { return r_; }
    const std::string& var_name() const { return var_; }

    value_type zero() const { return {}; }
    value_type one() const { return {r_.one()}; }
    value_type from_int(std::int64_t c) const { return constant(r_.from_int(c)); }
    value_type constant(const coeff_type& c) const {
        if (r_.is_zero(c)) return {};
        return {c};
    }
    value_type var() const { return {r_.zero(), r_.one()}; }
    value_type monomial(const coeff_type& c, std::size_t k) const {
        if (r_.is_zero(c)) return {};
        value_type f(k + 1, r_.zero());
        f[k] = c;
        return f;
    }

    void normalize(value_type& f) const {
        while (!f.empty() && r_.is_zero(f.back())) f.pop_back();
    }

    // -1 for the zero polynomial.
    long deg(const value_type& f) const { return static_cast<long>(f.size()) - 1; }
    const coeff_type& lead(const value_type& f) const { return f.back(); }
    coeff_type coeff(const value_type& f, std::size_t i) const { return i < f.size() ? f[i] : r_.zero(); }

    bool is_zero(const value_type& f) const { return f.empty(); }
    bool equal(const value_type& f, const value_type& g) const {
        if (f.size() != g.size()) return false;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (!r_.equal(f[i], g[i])) return false;
        return true;
    }
    bool is_one(const value_type& f) const { return f.size() == 1 && r_.equal(f[0], r_.one()); }

    value_type add(const value_type& f, const value_type& g) const {
        value_type out(std::max(f.size(), g.size()), r_.zero());
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (i < f.size() && i < g.size())
                out[i] = r_.add(f[i], g[i]);
            else
                out[i] = i < f.size() ? f[i] : g[i];
        }
        normalize(out);
        return out;
    }

    value_type sub(const value_type& f, const value_type& g) const {
        value_type out(std::max(f.size(), g.size()), r_.zero());
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (i < f.size() && i < g.size())
                out[i] = r_.sub(f[i], g[i]);
            else
                out[i] = i < f.size() ? f[i] : r_.neg(g[i]);
        }
        normalize(out);
        return out;
    }

    value_type neg(const value_type& f) const {
        value_type out(f.size(), r_.zero());
        for (std::size_t i = 0; i < f.size(); ++i) out[i] = r_.neg(f[i]);
        return out;
    }

    value_type scale(const value_type& f, const coeff_type& c) const {
        value_type out(f.size(), r_.zero());
        for (std::size_t i = 0; i < f.size(); ++i) out[i] = r_.mul(f[i], c);
        normalize(out);
        return out;
    }

    value_type shift(const value_type& f, std::size_t k) const {
        if (f.empty()) return {};
        value_type out(f.size() + k, r_.zero());
        std::copy(f.begin(), f.end(), out.begin() + static_cast<std::ptrdiff_t>(k));
        return out;
    }

    value_type truncate(value_type f, std::size_t n) const {
        if (f.size() > n) f.resize(n);
        normalize(f);
        return f;
    }

    value_type mul(const value_type& f, const value_type& g) const {
        if (f.empty() || g.empty()) return {};
        value_type out;
        if constexpr (std::is_same_v<R, Field>) {
            out = mul_field(f, g);
        } else {
            out = karatsuba(f.data(), f.size(), g.data(), g.size());
        }
        normalize(out);
        return out;
    }

    value_type pow(value_type f, std::uint64_t e) const {
        value_type r = one();
        while (e) {
            if (e & 1) r = mul(r, f);
            e >>= 1;
            if (e) f = mul(f, f);
        }
        return r;
    }

    // Field-coefficient operations below.

    value_type monic(const value_type& f) const {
        if (f.empty()) return f;
        return scale(f, r_.inv(f.back()));
    }

    std::pair<value_type, value_type> divrem(const value_type& f, const value_type& g) const {
        if (g.empty()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
        if (f.size() < g.size()) return {value_type{}, f};
        if constexpr (std::is_same_v<R, Field>) {
            if (r_.is_prime_field()) return divrem_prime(f, g);
        }
        value_type a = f;
        const std::size_t gn = g.size();
        value_type q(f.size() - gn + 1, r_.zero());
        const coeff_type li = r_.inv(g.back());
        for (std::size_t i = a.size(); i-- >= gn;) {
            if (r_.is_zero(a[i])) continue;
            const coeff_type c = r_.mul(a[i], li);
            const std::size_t s = i - gn + 1;
            q[s] = c;
            for (std::size_t j = 0; j < gn; ++j) a[s + j] = r_.sub(a[s + j], r_.mul(c, g[j]));
        }
        a.resize(gn - 1);
        normalize(a);
        normalize(q);
        return {q, a};
    }

    value_type quo(const value_type& f, const value_type& g) const { return divrem(f, g).first; }
    value_type rem(const value_type& f, const value_type& g) const { return divrem(f, g).second; }

    bool divides(const value_type& g, const value_type& f) const {
        if (g.empty()) return f.empty();
        return rem(f, g).empty();
    }

    // Monic gcd; gcd(0, 0) = 0.
    value_type gcd(value_type f, value_type g) const {
        while (!g.empty()) {
            value_type r = rem(f, g);
            f = std::move(g);
            g = std::move(r);
        }
        return monic(f);
    }

    // Returns (g, s, t) with s f + t g0 = g, g monic.
    struct Xgcd {
        value_type g, s, t;
    };
    Xgcd xgcd(const value_type& f, const value_type& g) const {
        value_type r0 = f, r1 = g, s0 = one(), s1 = {}, t0 = {}, t1 = one();
        while (!r1.empty()) {
            auto [q, r] = divrem(r0, r1);
            value_type s2 = sub(s0, mul(q, s1));
            value_type t2 = sub(t0, mul(q, t1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r0.empty()) return {r0, s0, t0};
        const coeff_type c = r_.inv(r0.back());
        return {scale(r0, c), scale(s0, c), scale(t0, c)};
    }

    value_type mulmod(const value_type& f, const value_type& g, const value_type& m) const {
        return rem(mul(f, g), m);
    }

    value_type powmod(value_type f, std::uint64_t e, const value_type& m) const {
        value_type r = rem(one(), m);
        f = rem(f, m);
        while (e) {
            if (e & 1) r = mulmod(r, f, m);
            e >>= 1;
            if (e) f = mulmod(f, f, m);
        }
        return r;
    }

    value_type derivative(const value_type& f) const {
        if (f.size() <= 1) return {};
        value_type out(f.size() - 1, r_.zero());
        for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = r_.mul(f[i], r_.from_int(static_cast<std::int64_t>(i)));
        normalize(out);
        return out;
    }

    coeff_type eval(const value_type& f, const coeff_type& x) const {
        coeff_type acc = r_.zero();
        for (std::size_t i = f.size(); i-- > 0;) acc = r_.add(r_.mul(acc, x), f[i]);
        return acc;
    }

    // g(f) where g has coefficients in the same ring.
    value_type compose(const value_type& g, const value_type& f) const {
        value_type acc;
        for (std::size_t i = g.size(); i-- > 0;) acc = add(mul(acc, f), constant(g[i]));
        return acc;
    }

    // f(x + c), by splitting f = lo + x^h hi and recursing on both halves.
    value_type taylor_shift(const value_type& f, const coeff_type& c) const {
        if (f.size() <= 1) return f;
        std::vector<value_type> powers{value_type{c, r_.one()}};  // (x+c)^(2^k)
        normalize(powers[0]);
        while ((std::size_t{1} << powers.size()) < f.size()) powers.push_back(mul(powers.back(), powers.back()));
        return shift_rec(f, 0, f.size(), powers);
    }

    std::string to_string(const value_type& f) const {
        if (f.empty()) return "0";
        std::string out;
        for (std::size_t i = f.size(); i-- > 0;) {
            if (r_.is_zero(f[i])) continue;
            std::string cs = r_.to_string(f[i]);
            std::string term;
            if (i == 0) {
                term = cs;
            } else {
                std::string mono = var_;
                if (i > 1) mono += "^" + std::to_string(i);
                if (r_.equal(f[i], r_.one()))
                    term = mono;
                else if (cs.find(' ') != std::string::npos)
                    term = "(" + cs + ")*" + mono;
                else
                    term = cs + "*" + mono;
            }
            if (!out.empty()) out += " + ";
            out += term;
        }
        return out;
    }

private:
    value_type shift_rec(const value_type& f, std::size_t lo, std::size_t hi,
                         const std::vector<value_type>& powers) const {
        if (hi - lo == 1) return constant(f[lo]);
        std::size_t k = 0;
        while ((std::size_t{2} << k) < hi - lo) ++k;
        const std::size_t mid = lo + (std::size_t{1} << k);
        value_type low = shift_rec(f, lo, mid, powers);
        if (mid >= hi) return low;
        value_type high = shift_rec(f, mid, hi, powers);
        return add(low, mul(high, powers[k]));
    }

    value_type schoolbook(const coeff_type* a, std::size_t na, const coeff_type* b, std::size_t nb) const {
        value_type out(na + nb - 1, r_.zero());
        for (std::size_t i = 0; i < na; ++i) {
            if (r_.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < nb; ++j) {
                if (r_.is_zero(b[j])) continue;
                out[i + j] = r_.add(out[i + j], r_.mul(a[i], b[j]));
            }
        }
        return out;
    }

    // Untrimmed product of length na + nb - 1.
    value_type karatsuba(const coeff_type* a, std::size_t na, const coeff_type* b, std::size_t nb) const {
        if (na < 16 || nb < 16) return schoolbook(a, na, b, nb);
        if (na != nb) {
            // Slice the longer operand into pieces the size of the shorter one.
            if (na < nb) {
                std::swap(a, b);
                std::swap(na, nb);
            }
            value_type out(na + nb - 1, r_.zero());
            for (std::size_t off = 0; off < na; off += nb) {
                const std::size_t len = std::min(nb, na - off);
                value_type part = karatsuba(a + off, len, b, nb);
                for (std::size_t i = 0; i < part.size(); ++i) out[off + i] = r_.add(out[off + i], part[i]);
            }
            return out;
        }
        const std::size_t n = na, lo = n / 2, hi = n - lo;
        value_type z0 = karatsuba(a, lo, b, lo);
        value_type z2 = karatsuba(a + lo, hi, b + lo, hi);
        value_type sa(hi, r_.zero()), sb(hi, r_.zero());
        for (std::size_t i = 0; i < hi; ++i) {
            sa[i] = i < lo ? r_.add(a[i], a[lo + i]) : a[lo + i];
            sb[i] = i < lo ? r_.add(b[i], b[lo + i]) : b[lo + i];
        }
        value_type z1 = karatsuba(sa.data(), hi, sb.data(), hi);
        for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = r_.sub(z1[i], z0[i]);
        for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = r_.sub(z1[i], z2[i]);
        value_type out(2 * n - 1, r_.zero());
        for (std::size_t i = 0; i < z0.size(); ++i) out[i] = z0[i];
        for (std::size_t i = 0; i < z2.size(); ++i) out[2 * lo + i] = r_.add(out[2 * lo + i], z2[i]);
        for (std::size_t i = 0; i < z1.size(); ++i) out[lo + i] = r_.add(out[lo + i], z1[i]);
        return out;
    }

    value_type mul_field(const value_type& f, const value_type& g) const
        requires std::is_same_v<R, Field>
    {
        const fp::Modulus& md = r_.modulus();
        if (r_.is_prime_field()) {
            fp::Vec a(f.size()), b(g.size());
            for (std::size_t i = 0; i < f.size(); ++i) a[i] = f[i][0];
            for (std::size_t i = 0; i < g.size(); ++i) b[i] = g[i][0];
            fp::Vec c = fp::mul(md, a, b);
            value_type out(c.size());
            for (std::size_t i = 0; i < c.size(); ++i) out[i] = Elem{c[i]};
            return out;
        }
        if (r_.depth() == 1 && std::min(f.size(), g.size()) >= 4) {
            // Kronecker substitution: slot width 2m-1 holds a product of two
            // reduced coefficients without overlap.
            const std::size_t m = r_.degree(), w = 2 * m - 1;
            fp::Vec a(f.size() * w, 0), b(g.size() * w, 0);
            for (std::size_t i = 0; i < f.size(); ++i) std::copy(f[i].begin(), f[i].end(), a.begin() + i * w);
            for (std::size_t i = 0; i < g.size(); ++i) std::copy(g[i].begin(), g[i].end(), b.begin() + i * w);
            fp::Vec c = fp::mul(md, a, b);
            value_type out(f.size() + g.size() - 1);
            for (std::size_t i = 0; i < out.size(); ++i) {
                const std::size_t from = i * w, to = std::min(c.size(), from + w);
                fp::Vec slot(from < to ? c.begin() + from : c.end(), from < to ? c.begin() + to : c.end());
                out[i] = r_.reduce_flat(std::move(slot));
            }
            return out;
        }
        return karatsuba(f.data(), f.size(), g.data(), g.size());
    }

    std::pair<value_type, value_type> divrem_prime(const value_type& f, const value_type& g) const
        requires std::is_same_v<R, Field>
    {
        fp::Vec a(f.size()), b(g.size());
        for (std::size_t i = 0; i < f.size(); ++i) a[i] = f[i][0];
        for (std::size_t i = 0; i < g.size(); ++i) b[i] = g[i][0];
        auto [q, r] = fp::divrem(r_.modulus(), a, b);
        value_type qq(q.size()), rr(r.size());
        for (std::size_t i = 0; i < q.size(); ++i) qq[i] = Elem{q[i]};
        for (std::size_t i = 0; i < r.size(); ++i) rr[i] = Elem{r[i]};
        return {qq, rr};
    }

    R r_;
    std::string var_;
};

using FPoly = PolyRing<Field>;
using Poly = FPoly::value_type;

// Polynomials over F_q as flat vectors over F_p, valid only for prime fields.
inline fp::Vec to_flat(const Poly& f) {
    fp::Vec v(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) v[i] = f[i][0];
    return v;
}

}  // namespace pcurv

#endif
