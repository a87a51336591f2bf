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

// Similarity invariants of matrices over a field: invariant factors through
// the Smith form of T*I - M over K[T], companion matrices, kernel dimensions
// and rank profiles of powers.

#ifndef PCURV_LINALG_HPP
#define PCURV_LINALG_HPP

#include <vector>

#include "pcurv/matrix.hpp"
#include "pcurv/poly.hpp"

namespace pcurv {

template <class K>
using TPoly = typename PolyRing<K>::value_type;

// Smith normal form diagonal of a square matrix over K[T], monic, in
// divisibility order. Zero diagonal entries are reported as zero.
template <class K>
std::vector<TPoly<K>> smith_diagonal(const PolyRing<K>& R, MatrixOver<PolyRing<K>> A) {
    if (!A.square()) raise(ErrorCode::NotSquare, "Smith form of a non-square matrix");
    const std::size_t n = A.rows;
    std::vector<TPoly<K>> diag(n);
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Pivot: minimal degree, then lowest row, then lowest column.
            long best = -1;
            std::size_t bi = t, bj = t;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (R.is_zero(A(i, j))) continue;
                    const long d = R.deg(A(i, j));
                    if (best < 0 || d < best) {
                        best = d;
                        bi = i;
                        bj = j;
                    }
                }
            if (best < 0) break;  // remaining block is zero
            if (bi != t)
                for (std::size_t j = 0; j < n; ++j) std::swap(A(t, j), A(bi, j));
            if (bj != t)
                for (std::size_t i = 0; i < n; ++i) std::swap(A(i, t), A(i, bj));

            bool cleared = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (R.is_zero(A(i, t))) continue;
                auto [q, r] = R.divrem(A(i, t), A(t, t));
                for (std::size_t j = t; j < n; ++j)
                    if (!R.is_zero(A(t, j))) A(i, j) = R.sub(A(i, j), R.mul(q, A(t, j)));
                if (!r.empty()) cleared = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (R.is_zero(A(t, j))) continue;
                auto [q, r] = R.divrem(A(t, j), A(t, t));
                for (std::size_t i = t; i < n; ++i)
                    if (!R.is_zero(A(i, t))) A(i, j) = R.sub(A(i, j), R.mul(q, A(i, t)));
                if (!r.empty()) cleared = false;
            }
            if (!cleared) continue;

            // The pivot must divide the whole remaining block.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < n && divides_all; ++i)
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (R.is_zero(A(i, j)) || R.divides(A(t, t), A(i, j))) continue;
                    for (std::size_t c = t; c < n; ++c) A(t, c) = R.add(A(t, c), A(i, c));
                    divides_all = false;
                    break;
                }
            if (divides_all) break;
        }
        diag[t] = R.monic(A(t, t));
    }
    return diag;
}

// Characteristic matrix T*I - M over K[T].
template <class K>
MatrixOver<PolyRing<K>> characteristic_matrix(const PolyRing<K>& R, const MatrixOver<K>& M) {
    MatrixOver<PolyRing<K>> A(M.rows, M.cols, R.zero());
    const K& k = R.ring();
    for (std::size_t i = 0; i < M.rows; ++i)
        for (std::size_t j = 0; j < M.cols; ++j) {
            TPoly<K> e = R.constant(k.neg(M(i, j)));
            if (i == j) e = R.add(e, R.var());
            A(i, j) = std::move(e);
        }
    return A;
}

// The n invariant factors I_1 | ... | I_n, trailing 1s included.
template <class K>
std::vector<TPoly<K>> invariant_factors(const K& k, const MatrixOver<K>& M) {
    if (!M.square()) raise(ErrorCode::NotSquare, "invariant factors of a non-square matrix");
    PolyRing<K> R(k, "T");
    return smith_diagonal(R, characteristic_matrix(R, M));
}

// Companion matrix: ones on the subdiagonal, last column -P_0 .. -P_{d-1}.
template <class K>
MatrixOver<K> companion(const K& k, const TPoly<K>& P) {
    if (P.size() < 2) raise(ErrorCode::InvalidArgument, "companion of a constant polynomial");
    if (!k.equal(P.back(), k.one())) raise(ErrorCode::NotMonic, "companion of a non-monic polynomial");
    const std::size_t d = P.size() - 1;
    MatrixOver<K> m(d, d, k.zero());
    for (std::size_t i = 0; i + 1 < d; ++i) m(i + 1, i) = k.one();
    for (std::size_t i = 0; i < d; ++i) m(i, d - 1) = k.neg(P[i]);
    return m;
}

// Block diagonal of the companions of the non-constant factors.
template <class K>
MatrixOver<K> block_companion(const K& k, const std::vector<TPoly<K>>& factors) {
    std::size_t n = 0;
    for (const auto& f : factors)
        if (f.size() >= 2) n += f.size() - 1;
    MatrixOver<K> m(n, n, k.zero());
    std::size_t off = 0;
    for (const auto& f : factors) {
        if (f.size() < 2) continue;
        MatrixOver<K> c = companion(k, f);
        for (std::size_t i = 0; i < c.rows; ++i)
            for (std::size_t j = 0; j < c.cols; ++j) m(off + i, off + j) = c(i, j);
        off += c.rows;
    }
    return m;
}

// P(M) by Horner's rule.
template <class K>
MatrixOver<K> eval_at_matrix(const K& k, const TPoly<K>& P, const MatrixOver<K>& M) {
    MatrixOver<K> acc = zero_matrix(k, M.rows, M.cols);
    for (std::size_t i = P.size(); i-- > 0;) {
        acc = mat_mul(k, acc, M);
        for (std::size_t d = 0; d < M.rows; ++d) acc(d, d) = k.add(acc(d, d), P[i]);
    }
    return acc;
}

// dim ker P(M)^e.
template <class K>
std::size_t kernel_dim_of_power(const K& k, const MatrixOver<K>& M, const TPoly<K>& P, std::size_t e) {
    if (!M.square()) raise(ErrorCode::NotSquare, "kernel of a non-square matrix");
    if (P.empty()) raise(ErrorCode::InvalidArgument, "kernel of the zero polynomial");
    if (e == 0) return 0;
    MatrixOver<K> pm = mat_pow(k, eval_at_matrix(k, P, M), e);
    return M.rows - mat_rank(k, pm);
}

// rank(M^m) for m = 0, 1, ... up to the first repeated value.
template <class K>
std::vector<std::size_t> rank_profile(const K& k, const MatrixOver<K>& M) {
    if (!M.square()) raise(ErrorCode::NotSquare, "rank profile of a non-square matrix");
    std::vector<std::size_t> ranks{M.rows};
    MatrixOver<K> power = identity_matrix(k, M.rows);
    for (;;) {
        power = mat_mul(k, power, M);
        const std::size_t r = mat_rank(k, power);
        if (r == ranks.back()) break;
        ranks.push_back(r);
    }
    return ranks;
}

}  // namespace pcurv

#endif
