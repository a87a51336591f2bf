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

// Dense matrices over a domain (see poly.hpp for the domain interface).

#ifndef PCURV_MATRIX_HPP
#define PCURV_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "pcurv/error.hpp"

namespace pcurv {

template <class T>
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> a;  // row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, const T& fill) : rows(r), cols(c), a(r * c, fill) {}

    T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    bool square() const { return rows == cols; }
};

template <class D>
using MatrixOver = Matrix<typename D::value_type>;

template <class D>
MatrixOver<D> zero_matrix(const D& dom, std::size_t r, std::size_t c) {
    return MatrixOver<D>(r, c, dom.zero());
}

template <class D>
MatrixOver<D> identity_matrix(const D& dom, std::size_t n) {
    MatrixOver<D> m(n, n, dom.zero());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = dom.one();
    return m;
}

template <class D>
MatrixOver<D> mat_mul(const D& dom, const MatrixOver<D>& x, const MatrixOver<D>& y) {
    if (x.cols != y.rows) raise(ErrorCode::DimensionMismatch, "matrix product dimension mismatch");
    MatrixOver<D> out(x.rows, y.cols, dom.zero());
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (dom.is_zero(x(i, k))) continue;
            for (std::size_t j = 0; j < y.cols; ++j) {
                if (dom.is_zero(y(k, j))) continue;
                out(i, j) = dom.add(out(i, j), dom.mul(x(i, k), y(k, j)));
            }
        }
    return out;
}

template <class D>
MatrixOver<D> mat_add(const D& dom, const MatrixOver<D>& x, const MatrixOver<D>& y) {
    if (x.rows != y.rows || x.cols != y.cols) raise(ErrorCode::DimensionMismatch, "matrix sum dimension mismatch");
    MatrixOver<D> out = x;
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = dom.add(x.a[i], y.a[i]);
    return out;
}

template <class D>
MatrixOver<D> mat_sub(const D& dom, const MatrixOver<D>& x, const MatrixOver<D>& y) {
    if (x.rows != y.rows || x.cols != y.cols) raise(ErrorCode::DimensionMismatch, "matrix difference dimension mismatch");
    MatrixOver<D> out = x;
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = dom.sub(x.a[i], y.a[i]);
    return out;
}

template <class D>
MatrixOver<D> mat_neg(const D& dom, MatrixOver<D> x) {
    for (auto& e : x.a) e = dom.neg(e);
    return x;
}

template <class D>
MatrixOver<D> mat_scale(const D& dom, MatrixOver<D> x, const typename D::value_type& c) {
    for (auto& e : x.a) e = dom.mul(e, c);
    return x;
}

template <class D>
bool mat_equal(const D& dom, const MatrixOver<D>& x, const MatrixOver<D>& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (std::size_t i = 0; i < x.a.size(); ++i)
        if (!dom.equal(x.a[i], y.a[i])) return false;
    return true;
}

template <class D>
bool mat_is_zero(const D& dom, const MatrixOver<D>& x) {
    for (const auto& e : x.a)
        if (!dom.is_zero(e)) return false;
    return true;
}

template <class D>
MatrixOver<D> mat_pow(const D& dom, MatrixOver<D> x, std::uint64_t e) {
    if (!x.square()) raise(ErrorCode::NotSquare, "power of a non-square matrix");
    MatrixOver<D> r = identity_matrix(dom, x.rows);
    while (e) {
        if (e & 1) r = mat_mul(dom, r, x);
        e >>= 1;
        if (e) x = mat_mul(dom, x, x);
    }
    return r;
}

// Row echelon form in place over a field; returns the rank.
template <class D>
std::size_t row_reduce(const D& dom, MatrixOver<D>& m) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        std::size_t piv = rank;
        while (piv < m.rows && dom.is_zero(m(piv, c))) ++piv;
        if (piv == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(rank, j), m(piv, j));
        const auto inv = dom.inv(m(rank, c));
        for (std::size_t j = c; j < m.cols; ++j) m(rank, j) = dom.mul(m(rank, j), inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == rank || dom.is_zero(m(i, c))) continue;
            const auto f = m(i, c);
            for (std::size_t j = c; j < m.cols; ++j) m(i, j) = dom.sub(m(i, j), dom.mul(f, m(rank, j)));
        }
        ++rank;
    }
    return rank;
}

template <class D>
std::size_t mat_rank(const D& dom, MatrixOver<D> m) {
    return row_reduce(dom, m);
}

// Inverse over a field; returns false when singular.
template <class D>
bool mat_inverse(const D& dom, const MatrixOver<D>& m, MatrixOver<D>& out) {
    if (!m.square()) raise(ErrorCode::NotSquare, "inverse of a non-square matrix");
    const std::size_t n = m.rows;
    MatrixOver<D> aug(n, 2 * n, dom.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = dom.one();
    }
    if (row_reduce(dom, aug) < n) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (!dom.equal(aug(i, i), dom.one())) return false;
    out = MatrixOver<D>(n, n, dom.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return true;
}

template <class D>
std::vector<typename D::value_type> mat_vec(const D& dom, const MatrixOver<D>& m,
                                            const std::vector<typename D::value_type>& v) {
    if (m.cols != v.size()) raise(ErrorCode::DimensionMismatch, "matrix-vector dimension mismatch");
    std::vector<typename D::value_type> out(m.rows, dom.zero());
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (!dom.is_zero(v[j])) out[i] = dom.add(out[i], dom.mul(m(i, j), v[j]));
    return out;
}

// Entrywise map to another coefficient type.
template <class T, class F>
auto mat_map(const Matrix<T>& m, F&& f) {
    using U = decltype(f(m.a[0]));
    Matrix<U> out;
    out.rows = m.rows;
    out.cols = m.cols;
    out.a.reserve(m.a.size());
    for (const auto& e : m.a) out.a.push_back(f(e));
    return out;
}

}  // namespace pcurv

#endif
