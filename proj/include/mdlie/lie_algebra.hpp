#pragma once

/*
 * A finite-dimensional Lie algebra presented by rational structure constants
 * on a fixed basis. The bracket table is stored fully antisymmetrically, so
 * [e_i, e_j] is a plain lookup for any order of i, j.
 *
 * Subspaces (derived ideal, second derived ideal, center) are returned as
 * column bases in reduced column-echelon form, which is canonical: two
 * subspaces are equal exactly when the returned matrices are identical.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace mdlie {

class LieAlgebra {
  public:
    explicit LieAlgebra(std::size_t n, std::string name = "")
        : name_(std::move(name)), table_(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0)))) {
        if (n == 0) throw PreconditionError("a Lie algebra needs dimension at least 1");
        labels_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) labels_.push_back("e" + std::to_string(i + 1));
    }

    std::size_t dim() const { return table_.size(); }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> l) {
        if (l.size() != dim()) throw SizeMismatch("label count must match dimension");
        labels_ = std::move(l);
    }

    // [e_i, e_j] = coeffs, 0-based; the mirrored entry is kept in sync
    void set_bracket(std::size_t i, std::size_t j, const std::vector<Rational>& coeffs) {
        check_index(i);
        check_index(j);
        if (i == j) throw PreconditionError("bracket of a basis vector with itself is zero");
        if (coeffs.size() != dim()) throw SizeMismatch("bracket coefficient count must match dimension");
        table_[i][j] = coeffs;
        table_[j][i] = negated(coeffs);
    }

    void add_to_bracket(std::size_t i, std::size_t j, std::size_t l, const Rational& c) {
        check_index(i);
        check_index(j);
        check_index(l);
        if (i == j) throw PreconditionError("bracket of a basis vector with itself is zero");
        table_[i][j][l] += c;
        table_[j][i][l] -= c;
    }

    const std::vector<Rational>& bracket_basis(std::size_t i, std::size_t j) const {
        check_index(i);
        check_index(j);
        return table_[i][j];
    }

    std::vector<Rational> bracket(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
        const std::size_t n = dim();
        if (u.size() != n || v.size() != n) throw SizeMismatch("bracket operands must match dimension");
        std::vector<Rational> out(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (is_zero(u[i])) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || is_zero(v[j])) continue;
                const Rational uv = u[i] * v[j];
                for (std::size_t l = 0; l < n; ++l) out[l] += uv * table_[i][j][l];
            }
        }
        return out;
    }

    // throws JacobiViolation at the first bad triple (reported 1-based)
    void validate() const {
        const std::size_t n = dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    std::vector<Rational> s = bracket(table_[i][j], unit(k));
                    accumulate(s, bracket(table_[j][k], unit(i)));
                    accumulate(s, bracket(table_[k][i], unit(j)));
                    for (const Rational& c : s)
                        if (!is_zero(c)) throw JacobiViolation(static_cast<int>(i) + 1, static_cast<int>(j) + 1, static_cast<int>(k) + 1);
                }
    }

    // matrix of ad_v: column j holds [v, e_j]
    RatMatrix adjoint_matrix(const std::vector<Rational>& v) const {
        const std::size_t n = dim();
        if (v.size() != n) throw SizeMismatch("adjoint operand must match dimension");
        RatMatrix m(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> col(n, Rational(0));
            for (std::size_t i = 0; i < n; ++i) {
                if (i == j || is_zero(v[i])) continue;
                for (std::size_t l = 0; l < n; ++l) col[l] += v[i] * table_[i][j][l];
            }
            m.set_column(j, col);
        }
        return m;
    }

    // matrix of ad_v restricted to the subspace spanned by the columns of
    // basis (columns independent); coordinates are taken in that basis
    RatMatrix adjoint_matrix(const std::vector<Rational>& v, const RatMatrix& basis) const {
        const std::size_t n = dim();
        if (v.size() != n || basis.rows() != n) throw SizeMismatch("adjoint operand must match dimension");
        const std::size_t k = basis.cols();
        RatMatrix m(k, k);
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<Rational> img = bracket(v, basis.column(j));
            std::vector<Rational> coords;
            if (!solve_linear(basis, img, coords))
                throw NotInvariant("the subspace is not stable under the adjoint action");
            m.set_column(j, coords);
        }
        return m;
    }

    RatMatrix derived_ideal() const {
        const std::size_t n = dim();
        RatMatrix gen(n, n * (n - 1) / 2);
        std::size_t c = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) gen.set_column(c++, table_[i][j]);
        return column_span_basis(gen);
    }

    RatMatrix second_derived() const { return derived_of_span(derived_ideal()); }

    // span of all brackets between columns of the given subspace basis
    RatMatrix derived_of_span(const RatMatrix& basis) const {
        const std::size_t k = basis.cols();
        if (k < 2) return RatMatrix(dim(), 0);
        RatMatrix gen(dim(), k * (k - 1) / 2);
        std::size_t c = 0;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                gen.set_column(c++, bracket(basis.column(a), basis.column(b)));
        return column_span_basis(gen);
    }

    RatMatrix center() const {
        const std::size_t n = dim();
        // v is central iff for every j, l:  sum_i v_i c_{ij}^l = 0
        RatMatrix k(n * n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t i = 0; i < n; ++i) k(j * n + l, i) = table_[i][j][l];
        return kernel_basis(k);
    }

    bool is_commutative() const {
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = i + 1; j < dim(); ++j)
                for (const Rational& c : table_[i][j])
                    if (!is_zero(c)) return false;
        return true;
    }

    bool spans_commute(const RatMatrix& basis) const {
        for (std::size_t a = 0; a < basis.cols(); ++a)
            for (std::size_t b = a + 1; b < basis.cols(); ++b)
                for (const Rational& c : bracket(basis.column(a), basis.column(b)))
                    if (!is_zero(c)) return false;
        return true;
    }

    // transport to the basis given by the columns of m (new vectors in old
    // coordinates); m must be invertible
    LieAlgebra apply_basis_change(const RatMatrix& m) const {
        const std::size_t n = dim();
        if (m.rows() != n || m.cols() != n) throw SizeMismatch("basis change must be square of matching size");
        RatMatrix minv = inverse(m);
        LieAlgebra out(n, name_);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                std::vector<Rational> old = bracket(m.column(a), m.column(b));
                out.set_bracket(a, b, mat_vec(minv, old));
            }
        return out;
    }

    friend LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
        LieAlgebra out(a.dim() + b.dim());
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = i + 1; j < a.dim(); ++j) {
                std::vector<Rational> c(out.dim(), Rational(0));
                for (std::size_t l = 0; l < a.dim(); ++l) c[l] = a.table_[i][j][l];
                out.set_bracket(i, j, c);
            }
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = i + 1; j < b.dim(); ++j) {
                std::vector<Rational> c(out.dim(), Rational(0));
                for (std::size_t l = 0; l < b.dim(); ++l) c[a.dim() + l] = b.table_[i][j][l];
                out.set_bracket(a.dim() + i, a.dim() + j, c);
            }
        return out;
    }

    bool same_constants(const LieAlgebra& o) const { return table_ == o.table_; }

  private:
    void check_index(std::size_t i) const {
        if (i >= dim()) throw IndexOutOfRange("basis index out of range");
    }

    std::vector<Rational> unit(std::size_t i) const {
        std::vector<Rational> v(dim(), Rational(0));
        v[i] = Rational(1);
        return v;
    }

    static std::vector<Rational> negated(const std::vector<Rational>& v) {
        std::vector<Rational> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
        return out;
    }

    static void accumulate(std::vector<Rational>& acc, const std::vector<Rational>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) acc[i] += v[i];
    }

    std::string name_;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::vector<Rational>>> table_;
};

}  // namespace mdlie
