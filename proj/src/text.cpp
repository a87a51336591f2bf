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

#include "pcurv/text.hpp"

#include <cctype>
#include <limits>

#include "pcurv/error.hpp"
#include "pcurv/ff.hpp"

namespace pcurv {

namespace {

// Integer literals of any length, reduced digit by digit.
Elem residue_of(const Field& k, const std::string& digits) {
    const fp::Modulus& md = k.modulus();
    u64 v = 0;
    for (char c : digits) v = md.add(md.mul(v, 10 % md.value()), md.reduce(static_cast<u64>(c - '0')));
    return k.from_prime(v);
}

// C(n, r) mod p by Lucas' theorem.
u64 binomial_mod(const fp::Modulus& md, u64 n, u64 r) {
    const u64 p = md.value();
    u64 out = 1;
    while (r > 0) {
        const u64 a = n % p, b = r % p;
        if (b > a) return 0;
        u64 num = 1, den = 1;
        for (u64 i = 0; i < b; ++i) {
            num = md.mul(num, a - i);
            den = md.mul(den, i + 1);
        }
        out = md.mul(out, md.mul(num, md.inv(den)));
        n /= p;
        r /= p;
    }
    return out;
}

// Sum of a_i(x) Dx^i, coefficients to the left.
class WeylAlgebra {
public:
    using value_type = std::vector<Poly>;

    explicit WeylAlgebra(Field k) : k_(std::move(k)), R_(k_) {}

    value_type from_int(std::int64_t c) const { return normalize({R_.from_int(c)}); }
    value_type from_elem(const Elem& c) const { return normalize({R_.constant(c)}); }
    value_type from_residue(const std::string& d) const { return from_elem(residue_of(k_, d)); }
    value_type x() const { return {R_.var()}; }
    value_type dx() const { return {Poly{}, R_.one()}; }

    value_type add(const value_type& a, const value_type& b) const {
        value_type out(std::max(a.size(), b.size()));
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = R_.add(i < a.size() ? a[i] : Poly{}, i < b.size() ? b[i] : Poly{});
        return normalize(std::move(out));
    }

    value_type neg(const value_type& a) const {
        value_type out;
        for (const auto& c : a) out.push_back(R_.neg(c));
        return out;
    }

    // a_i Dx^i b_j Dx^j = a_i sum_k C(i,k) b_j^(k) Dx^(i-k+j).
    value_type mul(const value_type& a, const value_type& b) const {
        if (a.empty() || b.empty()) return {};
        value_type out(a.size() + b.size() - 1);
        const fp::Modulus& md = k_.modulus();
        for (std::size_t j = 0; j < b.size(); ++j) {
            Poly deriv = b[j];
            for (std::size_t kk = 0; kk < a.size() && !deriv.empty(); ++kk) {
                for (std::size_t i = kk; i < a.size(); ++i) {
                    if (a[i].empty()) continue;
                    const u64 binom = binomial_mod(md, i, kk);
                    if (binom == 0) continue;
                    const std::size_t t = i - kk + j;
                    out[t] = R_.add(out[t], R_.scale(R_.mul(a[i], deriv), k_.from_prime(binom)));
                }
                deriv = R_.derivative(deriv);
            }
        }
        return normalize(std::move(out));
    }

private:
    value_type normalize(value_type v) const {
        for (auto& c : v) R_.normalize(c);
        while (!v.empty() && v.back().empty()) v.pop_back();
        return v;
    }

    Field k_;
    FPoly R_;
};

struct Token {
    enum Kind { Number, Ident, Op, End } kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Number, s.substr(i, j - i), i});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Token::Ident, s.substr(i, j - i), i});
            i = j;
        } else if (std::string("+-*^()").find(c) != std::string::npos) {
            out.push_back({Token::Op, std::string(1, c), i});
            ++i;
        } else {
            raise(ErrorCode::SyntaxError, "syntax error at position " + std::to_string(i) + ": unexpected '" +
                                              std::string(1, c) + "'");
        }
    }
    out.push_back({Token::End, "", s.size()});
    return out;
}

[[noreturn]] void syntax_error(const Token& t, const std::string& what) {
    raise(ErrorCode::SyntaxError, "syntax error at position " + std::to_string(t.pos) + ": " + what);
}

// Recursive descent over an algebra A supplying from_int, add, neg, mul and
// a lookup for identifiers:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' number]
//   atom   := number | ident | '(' expr ')'
template <class A, class Lookup>
class Parser {
public:
    using V = typename A::value_type;

    Parser(const A& alg, Lookup lookup, const std::string& text)
        : alg_(alg), lookup_(std::move(lookup)), toks_(tokenize(text)) {}

    V parse() {
        if (toks_.front().kind == Token::End) syntax_error(toks_.front(), "empty expression");
        V v = expr();
        if (peek().kind != Token::End) syntax_error(peek(), "unexpected '" + peek().text + "'");
        return v;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    bool is_op(const char* op) const { return peek().kind == Token::Op && peek().text == op; }

    V expr() {
        bool negate = false;
        if (is_op("+") || is_op("-")) negate = toks_[i_++].text == "-";
        V acc = term();
        if (negate) acc = alg_.neg(acc);
        while (is_op("+") || is_op("-")) {
            const bool minus = toks_[i_++].text == "-";
            V t = term();
            acc = alg_.add(acc, minus ? alg_.neg(t) : t);
        }
        return acc;
    }

    V term() {
        V acc = factor();
        while (is_op("*")) {
            ++i_;
            acc = alg_.mul(acc, factor());
        }
        return acc;
    }

    V factor() {
        V base = atom();
        if (!is_op("^")) return base;
        ++i_;
        const Token& t = peek();
        if (t.kind != Token::Number) syntax_error(t, "expected an exponent");
        const std::uint64_t e = number(t);
        ++i_;
        V acc = alg_.from_int(1);
        for (std::uint64_t bit = std::uint64_t{1} << 23; bit > 0; bit >>= 1) {
            acc = alg_.mul(acc, acc);
            if (e & bit) acc = alg_.mul(acc, base);
        }
        return acc;
    }

    V atom() {
        const Token& t = peek();
        switch (t.kind) {
        case Token::Number: {
            ++i_;
            return alg_.from_residue(t.text);
        }
        case Token::Ident: {
            ++i_;
            return lookup_(t);
        }
        case Token::Op:
            if (t.text == "(") {
                ++i_;
                V v = expr();
                if (!is_op(")")) syntax_error(peek(), "expected ')'");
                ++i_;
                return v;
            }
            syntax_error(t, "unexpected '" + t.text + "'");
        case Token::End:
            syntax_error(t, "unexpected end of input");
        }
        syntax_error(t, "unexpected token");
    }

    static std::uint64_t number(const Token& t) {
        if (t.text.size() > 7) syntax_error(t, "exponent too large");
        return std::stoull(t.text);
    }

    const A& alg_;
    Lookup lookup_;
    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

struct BivarWithLiterals {
    using value_type = BivarPoly;
    Field k;
    BivarRing R;
    value_type from_int(std::int64_t c) const { return R.from_int(c); }
    value_type from_residue(const std::string& d) const {
        return R.constant(FPoly(k, "X").constant(residue_of(k, d)));
    }
    value_type add(const value_type& a, const value_type& b) const { return R.add(a, b); }
    value_type neg(const value_type& a) const { return R.neg(a); }
    value_type mul(const value_type& a, const value_type& b) const { return R.mul(a, b); }
};

void check_generator(const Field& k, const Token& t) {
    if (k.is_prime_field()) syntax_error(t, "'w' needs an extension field (ext > 1)");
}

}  // namespace

Field base_field_for(std::uint64_t p, std::size_t ext) {
    if (ext == 0) raise(ErrorCode::InvalidArgument, "extension degree must be positive");
    Field k = Field::prime(p);
    return ext == 1 ? k : extension_of_degree(k, ext);
}

DiffOperator parse_operator(const std::string& text, const Field& k) {
    WeylAlgebra alg(k);
    auto lookup = [&](const Token& t) -> WeylAlgebra::value_type {
        if (t.text == "x") return alg.x();
        if (t.text == "Dx") return alg.dx();
        if (t.text == "w") {
            check_generator(k, t);
            return alg.from_elem(k.gen());
        }
        syntax_error(t, "unknown identifier '" + t.text + "'");
    };
    auto coeffs = Parser<WeylAlgebra, decltype(lookup)>(alg, lookup, text).parse();
    if (coeffs.empty()) raise(ErrorCode::ZeroOperator, "the operator is zero");
    return make_operator(k, std::move(coeffs));
}

Poly parse_poly(const std::string& text, const Field& k) {
    WeylAlgebra alg(k);
    auto lookup = [&](const Token& t) -> WeylAlgebra::value_type {
        if (t.text == "x") return alg.x();
        if (t.text == "w") {
            check_generator(k, t);
            return alg.from_elem(k.gen());
        }
        syntax_error(t, "unknown identifier '" + t.text + "'");
    };
    auto coeffs = Parser<WeylAlgebra, decltype(lookup)>(alg, lookup, text).parse();
    return coeffs.empty() ? Poly{} : coeffs[0];
}

BivarPoly parse_bivar(const std::string& text, const Field& k) {
    BivarWithLiterals alg{k, bivar_ring(k)};
    FPoly RX(k, "X");
    auto lookup = [&](const Token& t) -> BivarPoly {
        if (t.text == "T") return alg.R.var();
        if (t.text == "X") return alg.R.constant(RX.var());
        if (t.text == "w") {
            check_generator(k, t);
            return alg.R.constant(RX.constant(k.gen()));
        }
        syntax_error(t, "unknown identifier '" + t.text + "'");
    };
    return Parser<BivarWithLiterals, decltype(lookup)>(alg, lookup, text).parse();
}

std::string render_poly(const Field& k, const Poly& f) { return FPoly(k).to_string(f); }

std::string render_operator(const DiffOperator& L) {
    std::string out;
    for (std::size_t i = L.coeffs.size(); i-- > 0;) {
        const Poly& c = L.coeffs[i];
        if (c.empty()) continue;
        std::string cs = render_poly(L.k, c), term;
        if (i == 0) {
            term = cs;
        } else {
            const std::string mono = i == 1 ? "Dx" : "Dx^" + std::to_string(i);
            if (FPoly(L.k).is_one(c))
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

std::string render_bivar(const Field& k, const BivarPoly& f) { return bivar_ring(k).to_string(f); }

}  // namespace pcurv
