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

#include "pcurv/field.hpp"

#include <algorithm>
#include <cmath>

#include "pcurv/error.hpp"

namespace pcurv {

struct Field::Data {
    u64 p;
    fp::Modulus mod;
    std::shared_ptr<const Data> parent;  // null for F_p
    std::size_t rel_deg = 1;
    std::size_t dim = 1;
    std::size_t depth = 0;
    std::vector<Elem> modulus;  // monic, over parent
    fp::Vec flat_modulus;       // same, when the parent is F_p

    explicit Data(u64 p_) : p(p_), mod(p_) {}
};

namespace {

using Data = Field::Data;

std::vector<Elem> split(const Data& d, const Elem& a) {
    const std::size_t m = d.parent->dim;
    std::vector<Elem> out(d.rel_deg);
    for (std::size_t i = 0; i < d.rel_deg; ++i) out[i].assign(a.begin() + i * m, a.begin() + (i + 1) * m);
    return out;
}

Elem join(const Data& d, const std::vector<Elem>& parts) {
    Elem out(d.dim, 0);
    const std::size_t m = d.parent->dim;
    for (std::size_t i = 0; i < parts.size() && i < d.rel_deg; ++i)
        std::copy(parts[i].begin(), parts[i].end(), out.begin() + i * m);
    return out;
}

bool all_zero(const Elem& a) {
    return std::all_of(a.begin(), a.end(), [](u64 x) { return x == 0; });
}

// Reduces r in place modulo the monic flat modulus of degree k.
void reduce_flat_impl(const fp::Modulus& md, fp::Vec& r, const fp::Vec& modulus, std::size_t k) {
    for (std::size_t i = r.size(); i-- > k;) {
        const u64 c = r[i];
        if (c == 0) continue;
        const std::size_t shift = i - k;
        for (std::size_t j = 0; j < k; ++j) r[shift + j] = md.sub(r[shift + j], md.mul(c, modulus[j]));
        r[i] = 0;
    }
    r.resize(k, 0);
}

Elem mul_rec(const Data& d, const Elem& a, const Elem& b);
Elem inv_rec(const Data& d, const Elem& a);

Elem add_rec(const Data& d, const Elem& a, const Elem& b) {
    Elem out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = d.mod.add(a[i], b[i]);
    return out;
}

Elem sub_rec(const Data& d, const Elem& a, const Elem& b) {
    Elem out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = d.mod.sub(a[i], b[i]);
    return out;
}

// Polynomials over a parent level, coefficients as Elems, trimmed.
using PPoly = std::vector<Elem>;

void ptrim(PPoly& f) {
    while (!f.empty() && all_zero(f.back())) f.pop_back();
}

PPoly pmul(const Data& par, const PPoly& a, const PPoly& b) {
    if (a.empty() || b.empty()) return {};
    PPoly out(a.size() + b.size() - 1, Elem(par.dim, 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (all_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add_rec(par, out[i + j], mul_rec(par, a[i], b[j]));
    }
    return out;
}

void preduce(const Data& d, PPoly& r) {
    const Data& par = *d.parent;
    const std::size_t k = d.rel_deg;
    for (std::size_t i = r.size(); i-- > k;) {
        if (all_zero(r[i])) continue;
        const Elem c = r[i];
        const std::size_t shift = i - k;
        for (std::size_t j = 0; j < k; ++j) r[shift + j] = sub_rec(par, r[shift + j], mul_rec(par, c, d.modulus[j]));
        r[i] = Elem(par.dim, 0);
    }
    r.resize(std::min(r.size(), k));
}

std::pair<PPoly, PPoly> pdivrem(const Data& par, PPoly a, const PPoly& b) {
    const std::size_t bn = b.size();
    if (a.size() < bn) return {PPoly{}, a};
    PPoly q(a.size() - bn + 1, Elem(par.dim, 0));
    const Elem lead_inv = inv_rec(par, b.back());
    for (std::size_t i = a.size(); i-- >= bn;) {
        if (all_zero(a[i])) continue;
        const Elem c = mul_rec(par, a[i], lead_inv);
        const std::size_t shift = i - bn + 1;
        q[shift] = c;
        for (std::size_t j = 0; j < bn; ++j) a[shift + j] = sub_rec(par, a[shift + j], mul_rec(par, c, b[j]));
    }
    a.resize(bn - 1);
    ptrim(a);
    ptrim(q);
    return {q, a};
}

PPoly psub(const Data& par, const PPoly& a, const PPoly& b) {
    PPoly out(std::max(a.size(), b.size()), Elem(par.dim, 0));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] = a[i];
        if (i < b.size()) out[i] = sub_rec(par, out[i], b[i]);
    }
    ptrim(out);
    return out;
}

Elem mul_rec(const Data& d, const Elem& a, const Elem& b) {
    if (d.depth == 0) return Elem{d.mod.mul(a[0], b[0])};
    if (d.parent->depth == 0) {
        fp::Vec r = fp::mul(d.mod, a, b);
        reduce_flat_impl(d.mod, r, d.flat_modulus, d.rel_deg);
        return r;
    }
    PPoly r = pmul(*d.parent, split(d, a), split(d, b));
    preduce(d, r);
    return join(d, r);
}

// Inverse in F_p[u]/(m) by the extended Euclidean algorithm on flat vectors.
fp::Vec inv_flat(const fp::Modulus& md, const fp::Vec& a_in, const fp::Vec& modulus) {
    fp::Vec r0 = modulus, r1 = a_in;
    fp::trim(r0);
    fp::trim(r1);
    fp::Vec s0, s1{1};
    while (!r1.empty()) {
        auto [q, r] = fp::divrem(md, r0, r1);
        fp::Vec qs = fp::mul(md, q, s1);
        fp::Vec s2(std::max(s0.size(), qs.size()), 0);
        for (std::size_t i = 0; i < s2.size(); ++i)
            s2[i] = md.sub(i < s0.size() ? s0[i] : 0, i < qs.size() ? qs[i] : 0);
        fp::trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant since the modulus is irreducible.
    if (r0.size() != 1) raise(ErrorCode::DivisionByZero, "element not invertible modulo the defining polynomial");
    const u64 c = md.inv(r0[0]);
    for (auto& x : s0) x = md.mul(x, c);
    return s0;
}

Elem inv_rec(const Data& d, const Elem& a) {
    if (all_zero(a)) raise(ErrorCode::DivisionByZero, "inverse of zero field element");
    if (d.depth == 0) return Elem{d.mod.inv(a[0])};
    if (d.parent->depth == 0) {
        fp::Vec s = inv_flat(d.mod, a, d.flat_modulus);
        s.resize(d.rel_deg, 0);
        return s;
    }
    const Data& par = *d.parent;
    PPoly r0 = d.modulus, r1 = split(d, a);
    ptrim(r1);
    PPoly s0, s1{[&] {
        Elem one(par.dim, 0);
        one[0] = 1;
        return one;
    }()};
    while (!r1.empty()) {
        auto [q, r] = pdivrem(par, r0, r1);
        PPoly s2 = psub(par, s0, pmul(par, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) raise(ErrorCode::DivisionByZero, "element not invertible modulo the defining polynomial");
    const Elem c = inv_rec(par, r0[0]);
    for (auto& x : s0) x = mul_rec(par, x, c);
    return join(d, s0);
}

const char* level_name(std::size_t depth) {
    static const char* names[] = {"", "w", "u", "v", "z"};
    return depth < 5 ? names[depth] : "z";
}

std::string render(const Data& d, const Elem& a) {
    if (d.depth == 0) return std::to_string(a[0]);
    const Data& par = *d.parent;
    const std::size_t m = par.dim;
    std::string out;
    for (std::size_t i = d.rel_deg; i-- > 0;) {
        Elem c(a.begin() + i * m, a.begin() + (i + 1) * m);
        if (all_zero(c)) continue;
        std::string cs = render(par, c);
        const bool is_one = c[0] == 1 && std::all_of(c.begin() + 1, c.end(), [](u64 x) { return x == 0; });
        std::string term;
        if (i == 0) {
            term = cs;
        } else {
            std::string mono = level_name(d.depth);
            if (i > 1) mono += "^" + std::to_string(i);
            if (is_one)
                term = mono;
            else if (cs.find(' ') != std::string::npos)
                term = "(" + cs + ")*" + mono;
            else
                term = cs + "*" + mono;
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out.empty() ? "0" : out;
}

bool same_tower(const std::shared_ptr<const Data>& a, const std::shared_ptr<const Data>& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->p != b->p || a->depth != b->depth || a->modulus != b->modulus) return false;
    return same_tower(a->parent, b->parent);
}

}  // namespace

Field Field::prime(u64 p) {
    if (p >= fp::kMaxModulus || !fp::is_prime(p)) raise(ErrorCode::NotPrime, std::to_string(p) + " is not a supported prime");
    return Field(std::make_shared<const Data>(p));
}

Field Field::extend(std::vector<Elem> modulus) const {
    while (!modulus.empty() && all_zero(modulus.back())) modulus.pop_back();
    if (modulus.size() < 2) raise(ErrorCode::InvalidArgument, "extension modulus must have degree at least 1");
    for (const auto& c : modulus)
        if (c.size() != degree()) raise(ErrorCode::FieldMismatch, "modulus coefficient outside the base field");
    if (modulus.back() != one()) raise(ErrorCode::NotMonic, "extension modulus must be monic");
    auto d = std::make_shared<Data>(d_->p);
    d->parent = d_;
    d->rel_deg = modulus.size() - 1;
    d->dim = d_->dim * d->rel_deg;
    d->depth = d_->depth + 1;
    if (d_->depth == 0) {
        d->flat_modulus.resize(modulus.size());
        for (std::size_t i = 0; i < modulus.size(); ++i) d->flat_modulus[i] = modulus[i][0];
    }
    d->modulus = std::move(modulus);
    return Field(std::move(d));
}

u64 Field::characteristic() const { return d_->p; }
const fp::Modulus& Field::modulus() const { return d_->mod; }
std::size_t Field::degree() const { return d_->dim; }
std::size_t Field::relative_degree() const { return d_->rel_deg; }
std::size_t Field::depth() const { return d_->depth; }

Field Field::base() const {
    if (!d_->parent) raise(ErrorCode::InvalidArgument, "prime field has no base level");
    return Field(d_->parent);
}

const std::vector<Elem>& Field::defining_polynomial() const { return d_->modulus; }

bool Field::contains(const Field& sub) const {
    for (auto cur = d_; cur; cur = cur->parent)
        if (same_tower(cur, sub.d_)) return true;
    return false;
}

long double Field::log2_size() const {
    return static_cast<long double>(d_->dim) * std::log2(static_cast<long double>(d_->p));
}

Elem Field::one() const {
    Elem e(degree(), 0);
    e[0] = 1;
    return e;
}

Elem Field::from_int(std::int64_t c) const {
    Elem e(degree(), 0);
    e[0] = d_->mod.from_signed(c);
    return e;
}

Elem Field::from_prime(u64 c) const {
    Elem e(degree(), 0);
    e[0] = d_->mod.reduce(c);
    return e;
}

Elem Field::gen() const {
    Elem e(degree(), 0);
    if (d_->depth == 0) raise(ErrorCode::InvalidArgument, "prime field has no adjoined generator");
    if (d_->rel_deg == 1) {
        // u is the root of a linear modulus u + c, i.e. -c.
        return neg(embed(base(), d_->modulus[0]));
    }
    e[d_->parent->dim] = 1;
    return e;
}

Elem Field::reduce_flat(fp::Vec v) const {
    if (d_->depth != 1) raise(ErrorCode::InvalidArgument, "flat reduction needs a prime parent");
    reduce_flat_impl(d_->mod, v, d_->flat_modulus, d_->rel_deg);
    return v;
}

Elem Field::add(const Elem& a, const Elem& b) const { return add_rec(*d_, a, b); }
Elem Field::sub(const Elem& a, const Elem& b) const { return sub_rec(*d_, a, b); }

Elem Field::neg(const Elem& a) const {
    Elem out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = d_->mod.neg(a[i]);
    return out;
}

Elem Field::mul(const Elem& a, const Elem& b) const { return mul_rec(*d_, a, b); }

Elem Field::scale(const Elem& a, u64 c) const {
    Elem out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = d_->mod.mul(a[i], c);
    return out;
}

Elem Field::inv(const Elem& a) const { return inv_rec(*d_, a); }

Elem Field::pow(const Elem& a, u64 e) const {
    Elem r = one(), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        e >>= 1;
        if (e) b = mul(b, b);
    }
    return r;
}

Elem Field::frobenius_over(const Field& sub, const Elem& a) const {
    if (!contains(sub)) raise(ErrorCode::FieldMismatch, "frobenius base is not a subfield");
    Elem r = a;
    for (std::size_t i = 0; i < sub.degree(); ++i) r = frobenius(r);
    return r;
}

bool Field::is_zero(const Elem& a) const { return all_zero(a); }

bool Field::to_prime(const Elem& a, u64& out) const {
    if (!std::all_of(a.begin() + 1, a.end(), [](u64 x) { return x == 0; })) return false;
    out = a[0];
    return true;
}

Elem Field::embed(const Field& sub, const Elem& a) const {
    if (!contains(sub) || a.size() != sub.degree()) raise(ErrorCode::FieldMismatch, "embedding from a non-subfield");
    Elem out(degree(), 0);
    std::copy(a.begin(), a.end(), out.begin());
    return out;
}

bool Field::lies_in(const Field& sub, const Elem& a) const {
    if (!contains(sub)) raise(ErrorCode::FieldMismatch, "not a subfield");
    return std::all_of(a.begin() + static_cast<std::ptrdiff_t>(sub.degree()), a.end(), [](u64 x) { return x == 0; });
}

Elem Field::project(const Field& sub, const Elem& a) const {
    if (!lies_in(sub, a)) raise(ErrorCode::FieldMismatch, "element does not lie in the requested subfield");
    return Elem(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(sub.degree()));
}

Elem Field::random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<u64> dist(0, d_->p - 1);
    Elem e(degree());
    for (auto& x : e) x = dist(rng);
    return e;
}

std::string Field::to_string(const Elem& a) const { return render(*d_, a); }

bool Field::operator==(const Field& o) const { return same_tower(d_, o.d_); }

}  // namespace pcurv
