#pragma once

/*
 * Smith normal form over K[x] (K a field) and the similarity test it buys:
 * two square matrices over K are conjugate over K — equivalently over any
 * field extension — exactly when xI - A and xI - B have the same invariant
 * factors. Working with the full chain of invariant factors sidesteps
 * Jordan forms and never needs eigenvalues to live in K.
 */

#include <algorithm>
#include <vector>

#include "matrix.hpp"
#include "polynomial.hpp"

namespace mdlie {

// diagonal of the Smith normal form, each entry monic (zeros stay zero),
// d_1 | d_2 | ... ; length = min(rows, cols)
template <typename K>
std::vector<Poly<K>> smith_diagonal(Matrix<Poly<K>> m) {
    const std::size_t rows = m.rows(), cols = m.cols(), n = std::min(rows, cols);
    for (std::size_t t = 0; t < n; ++t) {
        // pull a minimal-degree nonzero entry of the trailing block into (t,t)
        bool found = false;
        std::size_t bi = t, bj = t;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (!m(i, j).is_zero_poly() &&
                    (!found || m(i, j).degree() < m(bi, bj).degree())) {
                    bi = i;
                    bj = j;
                    found = true;
                }
        if (!found) break;
        m.swap_rows(t, bi);
        m.swap_cols(t, bj);

        for (;;) {
            bool again = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m(i, t).is_zero_poly()) continue;
                Poly<K> q, r;
                poly_divmod(m(i, t), m(t, t), q, r);
                for (std::size_t j = t; j < cols; ++j) m(i, j) = m(i, j) - q * m(t, j);
                if (!r.is_zero_poly()) {
                    m.swap_rows(t, i);  // strictly smaller pivot degree
                    again = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m(t, j).is_zero_poly()) continue;
                Poly<K> q, r;
                poly_divmod(m(t, j), m(t, t), q, r);
                for (std::size_t i = t; i < rows; ++i) m(i, j) = m(i, j) - q * m(i, t);
                if (!r.is_zero_poly()) {
                    m.swap_cols(t, j);
                    again = true;
                }
            }
            if (again) continue;

            // pivot must divide the rest of the block; if not, fold the
            // offending row in and keep reducing (degree drops each pass)
            bool divides_all = true;
            for (std::size_t i = t + 1; i < rows && divides_all; ++i)
                for (std::size_t j = t + 1; j < cols && divides_all; ++j)
                    if (!poly_mod(m(i, j), m(t, t)).is_zero_poly()) {
                        for (std::size_t jj = t; jj < cols; ++jj)
                            m(t, jj) = m(t, jj) + m(i, jj);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
    }

    std::vector<Poly<K>> diag;
    diag.reserve(n);
    for (std::size_t t = 0; t < n; ++t) diag.push_back(m(t, t).monic());
    return diag;
}

template <typename K>
Matrix<Poly<K>> characteristic_matrix(const Matrix<K>& a) {
    if (a.rows() != a.cols()) throw SizeMismatch("characteristic matrix needs a square input");
    Matrix<Poly<K>> xm(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            xm(i, j) = Poly<K>(K(0) - a(i, j));
            if (i == j) xm(i, j) = xm(i, j) + Poly<K>::x();
        }
    return xm;
}

// monic invariant factors of xI - A, ascending divisibility order (leading 1s kept)
template <typename K>
std::vector<Poly<K>> invariant_factors(const Matrix<K>& a) {
    return smith_diagonal(characteristic_matrix(a));
}

template <typename K>
Poly<K> char_poly(const Matrix<K>& a) {
    return bareiss_det(characteristic_matrix(a)).monic();
}

// conjugacy over K; the invariant-factor criterion is insensitive to field
// extension, so this simultaneously answers similarity over the reals
template <typename K>
bool similar_over_field(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols())
        throw SizeMismatch("similarity needs square matrices");
    if (a.rows() != b.rows()) return false;
    return invariant_factors(a) == invariant_factors(b);
}

}  // namespace mdlie
