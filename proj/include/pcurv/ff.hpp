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

// Frobenius and conjugacy utilities over field towers.

#ifndef PCURV_FF_HPP
#define PCURV_FF_HPP

#include <random>

#include "pcurv/field.hpp"
#include "pcurv/poly.hpp"

namespace pcurv {

// First monic irreducible polynomial of the given degree over k in the
// order that counts coefficient vectors as base-|k| integers, constant term
// fastest. Results are memoized.
Poly find_irreducible(const Field& k, std::size_t degree);

// k[u]/S for S = find_irreducible(k, degree).
Field extension_of_degree(const Field& k, std::size_t degree);

// Ben-Or irreducibility test: gcd(f, u^(|k|^i) - u) = 1 for i <= deg f / 2.
bool is_irreducible(const Field& k, const Poly& f);

// Minimal polynomial over `base` of a in the field `top`; the result has
// coefficients in base.
Poly minimal_polynomial(const Field& top, const Elem& a, const Field& base);

// Number of distinct conjugates of a over base, i.e. the degree of a.
std::size_t degree_over(const Field& top, const Elem& a, const Field& base);

bool are_conjugate(const Field& top, const Elem& a, const Elem& b, const Field& base);

// Uniform element a of top with base[a] = top, by rejection sampling.
Elem random_generator(const Field& top, const Field& base, std::mt19937_64& rng);

}  // namespace pcurv

#endif
