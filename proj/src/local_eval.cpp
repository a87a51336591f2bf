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

#include "pcurv/local_eval.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <memory>
#include <optional>
#include <string>

#include "pcurv/linalg.hpp"

namespace pcurv {

namespace {

// Polynomial matrix over l in coordinate layout: coefficient t of an entry
// occupies [t*m, (t+1)*m) of its vector, m = [l : F_p]. Empty means zero.
struct Packed {
    std::size_t n = 0;
    std::vector<fp::Vec> e;

    fp::Vec& at(std::size_t i, std::size_t j) { return e[i * n + j]; }
    const fp::Vec& at(std::size_t i, std::size_t j) const { return e[i * n + j]; }
};

void trim_blocks(fp::Vec& v, std::size_t m) {
    while (!v.empty() && std::all_of(v.end() - static_cast<std::ptrdiff_t>(m), v.end(), [](u64 x) { return x == 0; }))
        v.resize(v.size() - m);
}

fp::Vec to_coords(const Poly& f) {
    fp::Vec v;
    for (const auto& c : f) v.insert(v.end(), c.begin(), c.end());
    return v;
}

Poly from_coords(const fp::Vec& v, std::size_t m) {
    Poly f(v.size() / m);
    for (std::size_t t = 0; t < f.size(); ++t)
        f[t].assign(v.begin() + static_cast<std::ptrdiff_t>(t * m), v.begin() + static_cast<std::ptrdiff_t>((t + 1) * m));
    return f;
}

// f(u + j) for an F_p shift j.
fp::Vec shift_coords(const fp::Modulus& md, const fp::Vec& f, std::size_t m, u64 j) {
    const std::size_t len = f.size() / m;
    fp::Vec res;
    for (std::size_t t = len; t-- > 0;) {
        // res <- res * (u + j) + f_t
        fp::Vec next(res.size() + m, 0);
        for (std::size_t i = 0; i < res.size(); ++i) {
            next[i + m] = md.add(next[i + m], res[i]);
            next[i] = md.add(next[i], md.mul(res[i], j));
        }
        for (std::size_t c = 0; c < m; ++c) next[c] = md.add(next[c], f[t * m + c]);
        res = std::move(next);
    }
    trim_blocks(res, m);
    return res;
}

Elem eval_coords(const fp::Modulus& md, const fp::Vec& f, std::size_t m, u64 x) {
    Elem acc(m, 0);
    for (std::size_t t = f.size() / m; t-- > 0;)
        for (std::size_t c = 0; c < m; ++c) acc[c] = md.add(md.mul(acc[c], x), f[t * m + c]);
    return acc;
}

Packed shifted(const RecMatrix& B, u64 j) {
    const fp::Modulus& md = B.l.modulus();
    const std::size_t m = B.l.degree();
    Packed out{B.size(), std::vector<fp::Vec>(B.size() * B.size())};
    for (std::size_t i = 0; i < out.e.size(); ++i)
        if (!B.B.a[i].empty()) out.e[i] = shift_coords(md, to_coords(B.B.a[i]), m, j);
    return out;
}

// Entrywise products accumulate before any reduction modulo the defining
// polynomial of l: Kronecker slots of width 2m-1 hold unreduced products.
Packed packed_mul(const Field& l, const Packed& A, const Packed& B) {
    const std::size_t n = A.n, m = l.degree();
    const fp::Modulus& md = l.modulus();
    Packed C{n, std::vector<fp::Vec>(n * n)};

    if (l.depth() >= 2) {
        FPoly R(l);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Poly acc;
                for (std::size_t k = 0; k < n; ++k) {
                    if (A.at(i, k).empty() || B.at(k, j).empty()) continue;
                    acc = R.add(acc, R.mul(from_coords(A.at(i, k), m), from_coords(B.at(k, j), m)));
                }
                C.at(i, j) = to_coords(acc);
            }
        return C;
    }

    const std::size_t w = m == 1 ? 1 : 2 * m - 1;
    auto pack = [&](const fp::Vec& v) {
        if (w == 1) return v;
        const std::size_t len = v.size() / m;
        fp::Vec out(len * w, 0);
        for (std::size_t t = 0; t < len; ++t)
            std::copy(v.begin() + static_cast<std::ptrdiff_t>(t * m), v.begin() + static_cast<std::ptrdiff_t>((t + 1) * m),
                      out.begin() + static_cast<std::ptrdiff_t>(t * w));
        return out;
    };
    std::vector<fp::Vec> pa(n * n), pb(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
        if (!A.e[i].empty()) pa[i] = pack(A.e[i]);
        if (!B.e[i].empty()) pb[i] = pack(B.e[i]);
    }
    std::vector<fp::Vec> prods = fp::matrix_poly_mul(md, n, n, n, pa, pb);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            fp::Vec& acc = prods[i * n + j];
            if (acc.empty()) continue;
            if (w == 1) {
                fp::trim(acc);
                C.at(i, j) = std::move(acc);
                continue;
            }
            const std::size_t slots = (acc.size() + w - 1) / w;
            fp::Vec out(slots * m, 0);
            for (std::size_t t = 0; t < slots; ++t) {
                const std::size_t from = t * w, to = std::min(acc.size(), from + w);
                Elem c = l.reduce_flat(fp::Vec(acc.begin() + static_cast<std::ptrdiff_t>(from),
                                               acc.begin() + static_cast<std::ptrdiff_t>(to)));
                std::copy(c.begin(), c.end(), out.begin() + static_cast<std::ptrdiff_t>(t * m));
            }
            trim_blocks(out, m);
            C.at(i, j) = std::move(out);
        }
    return C;
}

// B(u + hi - 1) ... B(u + lo).
Packed product_tree(const RecMatrix& B, u64 lo, u64 hi) {
    if (hi - lo == 1) return shifted(B, lo % B.l.characteristic());
    const u64 mid = lo + (hi - lo) / 2;
    return packed_mul(B.l, product_tree(B, mid, hi), product_tree(B, lo, mid));
}

Poly falling_factorial(const FPoly& R, std::size_t i) {
    const Field& l = R.ring();
    Poly f = R.one();
    for (std::size_t k = 0; k < i; ++k) f = R.mul(f, Poly{l.from_int(-static_cast<std::int64_t>(k)), l.one()});
    return f;
}

void check_characteristic(const Field& l, std::size_t r) {
    if (l.characteristic() <= r)
        raise(ErrorCode::CharTooSmall, "characteristic " + std::to_string(l.characteristic()) +
                                           " must exceed the order " + std::to_string(r));
}

// Sample matrices stored coordinatewise: seq[e * m + c][i] is coordinate c of
// entry e of sample i.
using Samples = std::vector<fp::Vec>;

// Z(i) = X(i) Y(i) for every sample i.
Samples sample_products(const Field& l, std::size_t n, const Samples& X, const Samples& Y) {
    const fp::Modulus& md = l.modulus();
    const std::size_t m = l.degree(), count = X.front().size();
    Samples Z(n * n * m, fp::Vec(count, 0));
    if (m == 1) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                fp::Vec& z = Z[r * n + c];
                for (std::size_t i = 0; i < count; ++i) {
                    fp::u128 acc = 0;
                    for (std::size_t k = 0; k < n; ++k) acc += static_cast<fp::u128>(X[r * n + k][i]) * Y[k * n + c][i];
                    z[i] = md.reduce128(acc);
                }
            }
        return Z;
    }
    Elem x(m), y(m);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                Elem acc = l.zero();
                for (std::size_t k = 0; k < n; ++k) {
                    for (std::size_t t = 0; t < m; ++t) {
                        x[t] = X[(r * n + k) * m + t][i];
                        y[t] = Y[(k * n + c) * m + t][i];
                    }
                    acc = l.add(acc, l.mul(x, y));
                }
                for (std::size_t t = 0; t < m; ++t) Z[(r * n + c) * m + t][i] = acc[t];
            }
    return Z;
}

}  // namespace

std::size_t RecMatrix::degree() const {
    std::size_t d = 0;
    for (const auto& e : B.a)
        if (!e.empty()) d = std::max(d, e.size() - 1);
    return d;
}

RecMatrix build_B_system(const DiffSystem& sys, const Field& l, const Elem& a) {
    const std::size_t r = sys.order(), d = sys.d;
    check_characteristic(l, r);
    FPoly R(l, "u");
    Poly f = R.taylor_shift(embed_poly(l, sys.k, sys.f_A), a);
    if (f.empty() || l.is_zero(f[0])) raise(ErrorCode::PoleAtPoint, "f_A vanishes at the evaluation point");
    const Elem f0_inv = l.inv(f[0]);
    // Taylor coefficients at a of every entry of A~.
    std::vector<Poly> At(sys.A_tilde.a.size());
    for (std::size_t i = 0; i < At.size(); ++i) At[i] = R.taylor_shift(embed_poly(l, sys.k, sys.A_tilde.a[i]), a);

    RecMatrix out{l, RecMatrix::Shape::BlockCompanionSystem, MatrixOver<FPoly>((d + 1) * r, (d + 1) * r, R.zero())};
    for (std::size_t b = 0; b < d; ++b)
        for (std::size_t i = 0; i < r; ++i) out.B(b * r + i, (b + 1) * r + i) = R.one();
    for (std::size_t i = 0; i <= d; ++i) {
        // f_0 B_i = u^(i) (A~_i - (u - i) f_{i+1} I).
        const Poly ff = R.scale(falling_factorial(R, i), f0_inv);
        const Elem fn = R.coeff(f, i + 1);
        const Poly diag_term = R.scale(Poly{l.from_int(-static_cast<std::int64_t>(i)), l.one()}, fn);
        const std::size_t col = (d - i) * r;
        for (std::size_t x = 0; x < r; ++x)
            for (std::size_t y = 0; y < r; ++y) {
                Poly e = R.constant(R.coeff(At[x * r + y], i));
                if (x == y) e = R.sub(e, diag_term);
                out.B(d * r + x, col + y) = R.mul(ff, e);
            }
    }
    return out;
}

RecMatrix build_B_operator(const DiffOperator& L, const Field& l, const Elem& a) {
    const std::size_t r = L.order(), d = L.degree(), n = d + r;
    check_characteristic(l, r);
    FPoly R(l, "u");
    std::vector<Poly> b = theta_rewrite(L, l, a);
    const Elem lead_inv = l.inv(R.coeff(b[n], 0));
    RecMatrix out{l, RecMatrix::Shape::CompanionOperator, MatrixOver<FPoly>(n, n, R.zero())};
    for (std::size_t i = 0; i + 1 < n; ++i) out.B(i, i + 1) = R.one();
    for (std::size_t i = 0; i < n; ++i) out.B(n - 1, i) = R.scale(b[i], l.neg(lead_inv));
    return out;
}

RecMatrix build_B(const Problem& pb, const Field& l, const Elem& a) {
    if (auto* L = std::get_if<DiffOperator>(&pb)) return build_B_operator(*L, l, a);
    return build_B_system(std::get<DiffSystem>(pb), l, a);
}

MatrixOver<Field> eval_rec(const RecMatrix& B, u64 n) {
    const Field& l = B.l;
    const std::size_t m = l.degree();
    const u64 x = l.modulus().reduce(n);
    MatrixOver<Field> out(B.size(), B.size(), l.zero());
    for (std::size_t i = 0; i < B.B.a.size(); ++i)
        if (!B.B.a[i].empty()) out.a[i] = eval_coords(l.modulus(), to_coords(B.B.a[i]), m, x);
    return out;
}

// Values C(i s) for i < blocks, where C(u) = B(u + s - 1) ... B(u). Keeps the
// samples M_d(i s), i = 0..delta d, of M_d(u) = B(u + d - 1) ... B(u) and grows d
// along the bits of s: M_2d(u) = M_d(u + d) M_d(u) and M_(d+1)(u) = B(u + d) M_d(u).
// Sample shifts need nonzero denominators; nullopt asks for the tree route.
std::optional<std::vector<MatrixOver<Field>>> block_values_by_shifts(const RecMatrix& B, u64 s, u64 blocks) {
    const Field& l = B.l;
    const fp::Modulus& md = l.modulus();
    const std::size_t n = B.size(), m = l.degree();
    const std::size_t delta = std::max<std::size_t>(1, B.degree());
    if (s >= md.value() || static_cast<u64>(delta) * s + 1 < blocks) return std::nullopt;
    const u64 s_inv = md.inv(md.reduce(s));

    std::vector<fp::Vec> coords(n * n);
    for (std::size_t i = 0; i < n * n; ++i)
        if (!B.B.a[i].empty()) coords[i] = to_coords(B.B.a[i]);
    // B(i s + shift) for i < count.
    auto eval_B = [&](std::size_t count, u64 shift) {
        Samples V(n * n * m, fp::Vec(count, 0));
        for (std::size_t i = 0; i < count; ++i) {
            const u64 x = md.add(md.mul(md.reduce(i), md.reduce(s)), shift);
            for (std::size_t e = 0; e < n * n; ++e) {
                if (coords[e].empty()) continue;
                const Elem v = eval_coords(md, coords[e], m, x);
                for (std::size_t c = 0; c < m; ++c) V[e * m + c][i] = v[c];
            }
        }
        return V;
    };
    auto concat = [](Samples a, const Samples& b, std::size_t take) {
        for (std::size_t e = 0; e < a.size(); ++e) a[e].insert(a[e].end(), b[e].begin(), b[e].begin() + static_cast<std::ptrdiff_t>(take));
        return a;
    };

    Samples vals = eval_B(delta + 1, 0);
    u64 d = 1;
    for (int bit = std::bit_width(s) - 2; bit >= 0; --bit) {
        const std::size_t D = vals.front().size() - 1;
        Samples hi = vals;
        if (!fp::shift_samples(md, hi, D + 1)) return std::nullopt;
        // Shifting i by d / s moves u = i s to i s + d.
        const u64 a = md.mul(md.reduce(d), s_inv);
        Samples lo_d = vals, hi_d = hi;
        if (!fp::shift_samples(md, lo_d, a) || !fp::shift_samples(md, hi_d, a)) return std::nullopt;
        vals = sample_products(l, n, concat(std::move(lo_d), hi_d, D), concat(std::move(vals), hi, D));
        d *= 2;
        if ((s >> bit) & 1) {
            const std::size_t D2 = vals.front().size() - 1;
            Samples ext = vals;
            if (!fp::shift_samples(md, ext, D2 + 1)) return std::nullopt;
            vals = concat(std::move(vals), ext, delta);
            vals = sample_products(l, n, eval_B(vals.front().size(), md.reduce(d)), vals);
            d += 1;
        }
    }

    std::vector<MatrixOver<Field>> out(blocks, MatrixOver<Field>(n, n, l.zero()));
    for (std::size_t i = 0; i < blocks; ++i)
        for (std::size_t e = 0; e < n * n; ++e)
            for (std::size_t c = 0; c < m; ++c) out[i].a[e][c] = vals[e * m + c][i];
    return out;
}

std::vector<MatrixOver<Field>> block_values_by_tree(const RecMatrix& B, u64 s, u64 blocks) {
    const Field& l = B.l;
    const fp::Modulus& md = l.modulus();
    const std::size_t n = B.size(), m = l.degree();
    const Packed C = product_tree(B, 0, s);
    fp::Vec points(blocks);
    for (u64 t = 0; t < blocks; ++t) points[t] = md.mul(md.reduce(t), md.reduce(s));
    std::vector<MatrixOver<Field>> values(blocks, MatrixOver<Field>(n, n, l.zero()));
    const bool use_tree = blocks > 8;
    std::unique_ptr<fp::SubproductTree> tree;
    if (use_tree) tree = std::make_unique<fp::SubproductTree>(md, points);
    for (std::size_t idx = 0; idx < n * n; ++idx) {
        const fp::Vec& entry = C.e[idx];
        if (entry.empty()) continue;
        const std::size_t len = entry.size() / m;
        for (std::size_t c = 0; c < m; ++c) {
            fp::Vec coord(len);
            for (std::size_t t = 0; t < len; ++t) coord[t] = entry[t * m + c];
            fp::Vec vals = use_tree ? tree->evaluate(coord) : fp::multipoint_eval(md, coord, points);
            for (u64 t = 0; t < blocks; ++t) values[t].a[idx][c] = vals[t];
        }
    }
    return values;
}

MatrixOver<Field> matrix_factorial_naive(const RecMatrix& B, u64 count) {
    MatrixOver<Field> acc = identity_matrix(B.l, B.size());
    for (u64 n = 0; n < count; ++n) acc = mat_mul(B.l, eval_rec(B, n), acc);
    return acc;
}

MatrixOver<Field> matrix_factorial(const RecMatrix& B, u64 count) {
    const Field& l = B.l;
    const std::size_t n = B.size();
    // Block length s balances deg(product) = delta * s against count / s evaluation points.
    const long double delta = static_cast<long double>(std::max<std::size_t>(1, B.degree()));
    const u64 s = std::max<u64>(1, static_cast<u64>(std::ceil(std::sqrt(static_cast<long double>(count) / delta))));
    const u64 blocks = count / s;

    MatrixOver<Field> acc = identity_matrix(l, n);
    if (blocks > 0) {
        std::optional<std::vector<MatrixOver<Field>>> shifted_values = block_values_by_shifts(B, s, blocks);
        std::vector<MatrixOver<Field>> values =
            shifted_values ? std::move(*shifted_values) : block_values_by_tree(B, s, blocks);
        for (u64 t = 0; t < blocks; ++t) acc = mat_mul(l, values[t], acc);
    }
    for (u64 k = blocks * s; k < count; ++k) acc = mat_mul(l, eval_rec(B, k), acc);
    return acc;
}

MatrixOver<Field> local_p_derivative(const Problem& pb, const Field& l, const Elem& a) {
    const RecMatrix B = build_B(pb, l, a);
    const std::size_t r = order(pb), n = B.size();
    MatrixOver<Field> F = matrix_factorial(B, l.characteristic());
    MatrixOver<Field> Y(r, r, l.zero());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) Y(i, j) = F(n - r + i, n - r + j);
    return Y;
}

std::vector<Poly> invariant_factors_at(const Problem& pb, const Field& l, const Elem& a) {
    return invariant_factors(l, mat_neg(l, local_p_derivative(pb, l, a)));
}

Poly scale_factor(const Field& l, const Poly& P, const Elem& c) {
    // Coefficient of T^i picks up c^(deg P - i).
    Poly out(P.size());
    Elem pw = l.one();
    for (std::size_t i = P.size(); i-- > 0;) {
        out[i] = l.mul(P[i], pw);
        pw = l.mul(pw, c);
    }
    return out;
}

std::vector<Poly> scaled_invariant_factors_at(const Problem& pb, const Field& l, const Elem& a) {
    const Field& k = base_field(pb);
    const Poly f = FPoly(k).monic(denominator(pb));
    const Elem c = l.pow(FPoly(l).eval(embed_poly(l, k, f), a), l.characteristic());
    std::vector<Poly> out = invariant_factors_at(pb, l, a);
    for (auto& g : out) g = scale_factor(l, g, c);
    return out;
}

}  // namespace pcurv
