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

// Finite-field towers F_p -> F_q -> l, each level a simple extension of the
// one below by a monic irreducible polynomial.
//
// An element is a flat coordinate vector over F_p in the nested power basis:
// at a level of relative degree k over a parent of absolute degree m, slot
// [i*m, (i+1)*m) holds the parent-coordinates of the coefficient of u^i.
// Consequently a subfield element embeds by copying into the leading slots.

#ifndef PCURV_FIELD_HPP
#define PCURV_FIELD_HPP

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "pcurv/fp.hpp"

namespace pcurv {

using fp::u64;
using Elem = std::vector<u64>;

class Field {
public:
    using value_type = Elem;

    // Throws NotPrime unless p is an odd prime below 2^50. p = 2 is accepted
    // for field-level use since small examples live over F_2.
    static Field prime(u64 p);

    // Extension by a monic polynomial over *this, given low degree first.
    // Irreducibility is the caller's responsibility.
    Field extend(std::vector<Elem> modulus) const;

    u64 characteristic() const;
    const fp::Modulus& modulus() const;
    std::size_t degree() const;           // over F_p
    std::size_t relative_degree() const;  // over the parent level
    std::size_t depth() const;            // 0 for F_p
    bool is_prime_field() const { return depth() == 0; }
    Field base() const;                   // parent level; requires depth() > 0
    const std::vector<Elem>& defining_polynomial() const;

    // True when sub is *this or one of its ancestors.
    bool contains(const Field& sub) const;

    // log2 of the cardinality; exact sizes overflow quickly.
    long double log2_size() const;

    Elem zero() const { return Elem(degree(), 0); }
    Elem one() const;
    Elem from_int(std::int64_t c) const;
    Elem from_prime(u64 c) const;  // c reduced mod p
    Elem gen() const;              // class of u at this level
    // Class of a polynomial in u over F_p; requires the parent to be F_p.
    Elem reduce_flat(fp::Vec v) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scale(const Elem& a, u64 c) const;
    Elem inv(const Elem& a) const;  // throws DivisionByZero
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem pow(const Elem& a, u64 e) const;
    Elem frobenius(const Elem& a) const { return pow(a, characteristic()); }
    // a^(|sub|), the Frobenius generator relative to the subfield.
    Elem frobenius_over(const Field& sub, const Elem& a) const;

    bool is_zero(const Elem& a) const;
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    // Only elements of the prime field have a value; others return false.
    bool to_prime(const Elem& a, u64& out) const;

    Elem embed(const Field& sub, const Elem& a) const;
    Elem project(const Field& sub, const Elem& a) const;  // throws FieldMismatch
    bool lies_in(const Field& sub, const Elem& a) const;

    Elem random(std::mt19937_64& rng) const;

    // Power-basis rendering with generator names w, u, v, ... by level.
    std::string to_string(const Elem& a) const;

    // Structural equality of the whole tower.
    bool operator==(const Field& o) const;
    bool operator!=(const Field& o) const { return !(*this == o); }

    struct Data;

private:
    explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

}  // namespace pcurv

#endif
