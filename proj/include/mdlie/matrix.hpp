#pragma once

/*
 * Dense matrices over an exact ring or field.
 *
 * Rank and determinant use fraction-free (Bareiss) elimination: every
 * division performed is exact in the coefficient ring, so the same code
 * serves Q, polynomial rings and quotient fields. Pivots are always the
 * first nonzero candidate in column order, which makes every result
 * deterministic.
 */

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace mdlie {

// default hooks; coefficient types with no operator overloads of their own
// can specialize these
template <typename T>
inline T exact_div(const T& a, const T& b) {
    return a / b;
}

template <typename T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix r = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = r.data_[k] + o.data_[k];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix r = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = r.data_[k] - o.data_[k];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw SizeMismatch("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (is_zero(a)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) = r(i, j) + a * o(k, j);
            }
        return r;
    }

    Matrix scaled(const T& c) const {
        Matrix r = *this;
        for (auto& v : r.data_) v = v * c;
        return r;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> c(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void set_column(std::size_t j, const std::vector<T>& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    bool is_zero_matrix() const {
        for (const auto& v : data_)
            if (!is_zero(v)) return false;
        return true;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

  private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatch("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;

// Fraction-free elimination. After step k each entry is a (k+1)-minor of the
// input, so the division by the previous pivot is exact in the ring.
template <typename T>
std::size_t bareiss_rank(Matrix<T> m) {
    std::size_t rank = 0;
    T prev(1);
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(rank, pivot);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            for (std::size_t j = col + 1; j < m.cols(); ++j)
                m(i, j) = exact_div(m(rank, col) * m(i, j) - m(i, col) * m(rank, j), prev);
            m(i, col) = T(0);
        }
        prev = m(rank, col);
        ++rank;
    }
    return rank;
}

template <typename T>
T bareiss_det(Matrix<T> m) {
    if (m.rows() != m.cols()) throw SizeMismatch("determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return T(1);
    T prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && is_zero(m(pivot, k))) ++pivot;
        if (pivot == n) return T(0);
        if (pivot != k) {
            m.swap_rows(k, pivot);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return negate ? T(0) - d : d;
}

// Gauss-Jordan over a field.
template <typename T>
Matrix<T> inverse(const Matrix<T>& a) {
    if (a.rows() != a.cols()) throw SizeMismatch("inverse of non-square matrix");
    std::size_t n = a.rows();
    Matrix<T> m = a, inv = Matrix<T>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && is_zero(m(pivot, col))) ++pivot;
        if (pivot == n) throw SingularMatrix("matrix is singular");
        m.swap_rows(col, pivot);
        inv.swap_rows(col, pivot);
        T p = m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) = m(col, j) / p;
            inv(col, j) = inv(col, j) / p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || is_zero(m(i, col))) continue;
            T f = m(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = m(i, j) - f * m(col, j);
                inv(i, j) = inv(i, j) - f * inv(col, j);
            }
        }
    }
    return inv;
}

// Reduced row echelon form over a field; returns pivot columns.
template <typename T>
std::vector<std::size_t> rref_in_place(Matrix<T>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(row, pivot);
        T p = m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) / p;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m(i, col))) continue;
            T f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Reduced column echelon basis of the column span. Canonical: two column
// spans are equal iff their reduced bases are identical matrices.
template <typename T>
Matrix<T> column_span_basis(const Matrix<T>& m) {
    Matrix<T> t = m.transposed();
    std::vector<std::size_t> pivots = rref_in_place(t);
    Matrix<T> out(m.rows(), pivots.size());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t i = 0; i < m.rows(); ++i) out(i, r) = t(r, i);
    return out;
}

// Basis of { x : m x = 0 }, returned in reduced column form.
template <typename T>
Matrix<T> kernel_basis(const Matrix<T>& m) {
    Matrix<T> r = m;
    std::vector<std::size_t> pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix<T> out(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        out(fc, k) = T(1);
        for (std::size_t p = 0; p < pivots.size(); ++p)
            out(pivots[p], k) = T(0) - r(p, fc);
    }
    return column_span_basis(out);
}

// Least solution of a x = b over a field, or empty if inconsistent.
template <typename T>
bool solve_linear(const Matrix<T>& a, const std::vector<T>& b, std::vector<T>& x) {
    if (a.rows() != b.size()) throw SizeMismatch("solve_linear shape mismatch");
    Matrix<T> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = rref_in_place(aug);
    for (std::size_t p = 0; p < pivots.size(); ++p)
        if (pivots[p] == a.cols()) return false;  // row (0 .. 0 | 1)
    x.assign(a.cols(), T(0));
    for (std::size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = aug(p, a.cols());
    return true;
}

template <typename T>
std::vector<T> mat_vec(const Matrix<T>& a, const std::vector<T>& v) {
    if (a.cols() != v.size()) throw SizeMismatch("matrix-vector shape mismatch");
    std::vector<T> out(a.rows(), T(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] = out[i] + a(i, j) * v[j];
    return out;
}

}  // namespace mdlie
