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

#include "pcurv/interp.hpp"

#include <string>

namespace pcurv {

Poly interpolate_crt(const Field& k, const std::vector<std::pair<Poly, Poly>>& residues, std::size_t bound) {
    FPoly R(k, "X");
    std::size_t total = 0;
    for (const auto& [m, v] : residues) {
        if (m.empty()) raise(ErrorCode::DivisionByZero, "zero CRT modulus");
        total += m.size() - 1;
    }
    if (total <= bound)
        raise(ErrorCode::InsufficientModuli,
              "moduli degrees sum to " + std::to_string(total) + ", need more than " + std::to_string(bound));
    Poly modulus = R.one();
    Poly acc;
    for (const auto& [m, v] : residues) {
        // Fold one congruence into (acc mod modulus).
        auto x = R.xgcd(modulus, m);
        if (R.deg(x.g) != 0) raise(ErrorCode::ModuliNotCoprime, "CRT moduli are not pairwise coprime");
        // acc + modulus * ((v - acc) * modulus^{-1} mod m)
        Poly t = R.rem(R.mul(R.sub(R.rem(v, m), R.rem(acc, m)), x.s), m);
        acc = R.add(acc, R.mul(modulus, t));
        modulus = R.mul(modulus, m);
    }
    acc = R.rem(acc, modulus);
    if (R.deg(acc) > static_cast<long>(bound))
        raise(ErrorCode::NoSolutionWithinBound, "CRT solution exceeds the degree bound");
    return acc;
}

namespace {

std::vector<Elem> coordinates(const Field& l, const Field& k, const Elem& v) {
    const std::size_t m = k.degree(), n = l.relative_degree();
    std::vector<Elem> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i].assign(v.begin() + static_cast<std::ptrdiff_t>(i * m), v.begin() + static_cast<std::ptrdiff_t>((i + 1) * m));
    return out;
}

}  // namespace

PowerBasis::PowerBasis(const Field& l, const Elem& g) : l_(l), k_(l.base()), g_(g) {
    const std::size_t n = l.relative_degree();
    MatrixOver<Field> m(n, n, k_.zero());
    Elem pw = l.one();
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Elem> c = coordinates(l, k_, pw);
        for (std::size_t i = 0; i < n; ++i) m(i, j) = c[i];
        pw = l.mul(pw, g);
    }
    if (!mat_inverse(k_, m, inverse_)) raise(ErrorCode::NotAGenerator, "element does not generate the extension");
}

Poly PowerBasis::lift(const Elem& v, std::size_t bound) const {
    Poly c = mat_vec(k_, inverse_, coordinates(l_, k_, v));
    FPoly(k_).normalize(c);
    if (static_cast<long>(c.size()) - 1 > static_cast<long>(bound))
        raise(ErrorCode::NoSolutionWithinBound,
              "lifted polynomial has degree " + std::to_string(c.size() - 1) + " > " + std::to_string(bound));
    return c;
}

Poly lift_from_extension_value(const Field& l, const Elem& v, const Elem& a_power, std::size_t bound) {
    return PowerBasis(l, a_power).lift(v, bound);
}

Elem eval_in_extension(const Field& l, const Field& k, const Poly& c, const Elem& x) {
    Elem acc = l.zero();
    for (std::size_t i = c.size(); i-- > 0;) acc = l.add(l.mul(acc, x), l.embed(k, c[i]));
    return acc;
}

}  // namespace pcurv
