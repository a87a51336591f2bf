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

#include "pcurv/ff.hpp"

#include <mutex>
#include <tuple>

namespace pcurv {

namespace {

// x -> x^|k| in k[u]/(f).
Poly frobenius_mod(const FPoly& ring, const Poly& h, const Poly& f) {
    const Field& k = ring.ring();
    Poly r = h;
    for (std::size_t i = 0; i < k.degree(); ++i) r = ring.powmod(r, k.characteristic(), f);
    return r;
}

struct IrreducibleCache {
    std::mutex mu;
    std::vector<std::tuple<Field, std::size_t, Poly>> entries;
};

IrreducibleCache& cache() {
    static IrreducibleCache c;
    return c;
}

}  // namespace

bool is_irreducible(const Field& k, const Poly& f) {
    FPoly ring(k, "u");
    const long n = ring.deg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    const Poly u = ring.var();
    Poly h = u;
    for (long i = 1; 2 * i <= n; ++i) {
        h = frobenius_mod(ring, h, f);
        if (ring.deg(ring.gcd(ring.sub(h, u), f)) > 0) return false;
    }
    return true;
}

Poly find_irreducible(const Field& k, std::size_t degree) {
    if (degree == 0) raise(ErrorCode::InvalidArgument, "irreducible polynomial degree must be positive");
    {
        std::lock_guard<std::mutex> lock(cache().mu);
        for (const auto& [field, deg, poly] : cache().entries)
            if (deg == degree && field == k) return poly;
    }
    const std::size_t m = k.degree();
    const u64 p = k.characteristic();
    std::vector<u64> digits(degree * m, 0);
    Poly f(degree + 1, k.zero());
    f[degree] = k.one();
    for (;;) {
        for (std::size_t i = 0; i < degree; ++i)
            f[i] = Elem(digits.begin() + static_cast<std::ptrdiff_t>(i * m),
                        digits.begin() + static_cast<std::ptrdiff_t>((i + 1) * m));
        if (is_irreducible(k, f)) break;
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
        // Irreducibles of every degree exist, so the counter never wraps.
    }
    std::lock_guard<std::mutex> lock(cache().mu);
    cache().entries.emplace_back(k, degree, f);
    return f;
}

Field extension_of_degree(const Field& k, std::size_t degree) { return k.extend(find_irreducible(k, degree)); }

std::size_t degree_over(const Field& top, const Elem& a, const Field& base) {
    std::size_t count = 1;
    for (Elem c = top.frobenius_over(base, a); c != a; c = top.frobenius_over(base, c)) ++count;
    return count;
}

Poly minimal_polynomial(const Field& top, const Elem& a, const Field& base) {
    if (!top.contains(base) || a.size() != top.degree())
        raise(ErrorCode::FieldMismatch, "minimal polynomial over a non-subfield");
    FPoly ring(top, "u");
    Poly prod = ring.one();
    Elem c = a;
    do {
        prod = ring.mul(prod, Poly{top.neg(c), top.one()});
        c = top.frobenius_over(base, c);
    } while (c != a);
    Poly out(prod.size());
    for (std::size_t i = 0; i < prod.size(); ++i) out[i] = top.project(base, prod[i]);
    return out;
}

bool are_conjugate(const Field& top, const Elem& a, const Elem& b, const Field& base) {
    if (a.size() != top.degree() || b.size() != top.degree()) raise(ErrorCode::FieldMismatch, "elements outside the field");
    return minimal_polynomial(top, a, base) == minimal_polynomial(top, b, base);
}

Elem random_generator(const Field& top, const Field& base, std::mt19937_64& rng) {
    if (!top.contains(base)) raise(ErrorCode::FieldMismatch, "generator base is not a subfield");
    const std::size_t want = top.degree() / base.degree();
    for (;;) {
        Elem a = top.random(rng);
        if (degree_over(top, a, base) == want) return a;
    }
}

}  // namespace pcurv
