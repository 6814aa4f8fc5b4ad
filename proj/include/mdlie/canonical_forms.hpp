#pragma once

/*
 * Canonical forms for skew-symmetric rational matrices under congruence, and
 * the scaled-similarity decision  c·A = C·B·C⁻¹  for invertible rational
 * matrices.
 *
 * Skew congruence works entirely over the rationals: a symplectic-style
 * Gram-Schmidt pass produces an invertible witness C with CᵀAC equal to a
 * block diagonal of unit blocks [[0,1],[-1,0]] followed by zeros. Over the
 * reals the congruence class of a skew form is determined by its rank, so
 * two forms are equivalent up to a nonzero scale exactly when the ranks
 * agree.
 *
 * The scaled-similarity decision enumerates every real scalar candidate from
 * the determinant constraint c^k = det(B)/det(A); rational candidates are
 * checked by invariant factors over Q, irrational ones over the quotient
 * field Q[t]/(m) of their minimal polynomial, which certifies the relation
 * for every real root of m at once.
 */

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "algebraic.hpp"
#include "errors.hpp"
#include "factor.hpp"
#include "matrix.hpp"
#include "quotient.hpp"
#include "smith.hpp"

namespace mdlie {

inline void require_skew(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw NotSkew("matrix is not square");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j)
            if (a(i, j) != -a(j, i)) throw NotSkew("matrix is not skew-symmetric");
}

inline Rational pfaffian4(const RatMatrix& a) {
    require_skew(a);
    if (a.rows() != 4) throw SizeMismatch("pfaffian4 needs a 4x4 matrix");
    return a(0, 1) * a(2, 3) - a(0, 2) * a(1, 3) + a(0, 3) * a(1, 2);
}

struct SkewNormalForm {
    RatMatrix witness;  // invertible C with CᵀAC = normal
    RatMatrix normal;   // diag([[0,1],[-1,0]], ..., 0, ..., 0)
    std::size_t rank = 0;
};

namespace detail {

inline Rational skew_pair(const RatMatrix& a, const std::vector<Rational>& u,
                          const std::vector<Rational>& v) {
    Rational s(0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (is_zero(u[i])) continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!is_zero(v[j])) s += u[i] * a(i, j) * v[j];
    }
    return s;
}

}  // namespace detail

inline SkewNormalForm skew_congruence_normal_form(const RatMatrix& a) {
    require_skew(a);
    const std::size_t n = a.rows();
    std::vector<std::vector<Rational>> pool;
    pool.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> e(n, Rational(0));
        e[i] = Rational(1);
        pool.push_back(std::move(e));
    }

    std::vector<std::vector<Rational>> paired;
    for (;;) {
        // first pair of remaining vectors that the form does not annihilate
        std::size_t p = pool.size(), q = pool.size();
        Rational val(0);
        for (std::size_t i = 0; i < pool.size() && p == pool.size(); ++i)
            for (std::size_t j = i + 1; j < pool.size(); ++j) {
                val = detail::skew_pair(a, pool[i], pool[j]);
                if (!is_zero(val)) {
                    p = i;
                    q = j;
                    break;
                }
            }
        if (p == pool.size()) break;

        std::vector<Rational> u = pool[p];
        std::vector<Rational> w = pool[q];
        for (auto& c : w) c /= val;  // now a(u, w) = 1
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(q));
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(p));
        for (auto& x : pool) {
            const Rational cu = detail::skew_pair(a, u, x);
            const Rational cw = detail::skew_pair(a, w, x);
            for (std::size_t i = 0; i < n; ++i) x[i] += cw * u[i] - cu * w[i];
        }
        paired.push_back(std::move(u));
        paired.push_back(std::move(w));
    }

    SkewNormalForm out;
    out.rank = paired.size();
    out.witness = RatMatrix(n, n);
    std::size_t col = 0;
    for (const auto& v : paired) out.witness.set_column(col++, v);
    for (const auto& v : pool) out.witness.set_column(col++, v);
    out.normal = RatMatrix(n, n);
    for (std::size_t b = 0; b < out.rank / 2; ++b) {
        out.normal(2 * b, 2 * b + 1) = Rational(1);
        out.normal(2 * b + 1, 2 * b) = Rational(-1);
    }
    return out;
}

struct SkewCongruence {
    bool equivalent = false;
    Rational scale;      // always 1 on success
    RatMatrix witness;   // scale·A = CᵀBC
};

inline SkewCongruence skew_scaled_congruence_equiv(const RatMatrix& a, const RatMatrix& b) {
    require_skew(a);
    require_skew(b);
    if (a.rows() != b.rows()) throw SizeMismatch("skew forms must have equal size");
    SkewNormalForm na = skew_congruence_normal_form(a);
    SkewNormalForm nb = skew_congruence_normal_form(b);
    SkewCongruence out;
    if (na.rank != nb.rank) return out;
    out.equivalent = true;
    out.scale = Rational(1);
    // CᵀBC = A for C = C_B · C_A⁻¹, since both witnesses reach the same normal form
    out.witness = nb.witness * inverse(na.witness);
    return out;
}

struct ScaledSimilarity {
    bool related = false;
    bool scalar_rational = false;
    Rational scalar;                            // set when scalar_rational
    RatPoly scalar_min_poly;                    // irreducible, degree >= 2, otherwise
    std::optional<AlgebraicScalar> scalar_root; // concrete real value of the scalar
};

namespace detail {

inline bool similar_scaled_by_generator(const RatMatrix& a, const RatMatrix& b,
                                        const RatPoly& modulus) {
    auto ctx = std::make_shared<QuotientCtx>(modulus);
    QElem t = QElem::generator(ctx);
    const std::size_t k = a.rows();
    Matrix<QElem> qa(k, k), qb(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            qa(i, j) = QElem(a(i, j)) * t;
            qb(i, j) = QElem(b(i, j));
        }
    return similar_over_field(qa, qb);
}

}  // namespace detail

inline ScaledSimilarity proportional_similarity(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw SizeMismatch("scaled similarity needs square matrices of equal size");
    const long k = static_cast<long>(a.rows());
    const Rational det_a = bareiss_det(a);
    const Rational det_b = bareiss_det(b);
    if (is_zero(det_a) || is_zero(det_b))
        throw SingularMatrix("scaled similarity is decided for invertible matrices only");

    ScaledSimilarity out;
    std::optional<Rational> best_rational;      // passing rational scalar, positive preferred
    std::optional<RatPoly> best_irrational;     // passing irreducible modulus, smallest degree

    for (const BinomialFactor& f : binomial_factor(k, det_b / det_a)) {
        if (!f.has_real_root) continue;
        if (f.factor.degree() == 1) {
            const Rational c = -f.factor.coeff(0) / f.factor.coeff(1);
            if (similar_over_field(a.scaled(c), b)) {
                if (!best_rational || (best_rational->sign() < 0 && c.sign() > 0)) best_rational = c;
            }
        } else if (!best_rational && !best_irrational) {
            if (detail::similar_scaled_by_generator(a, b, f.factor)) best_irrational = f.factor;
        }
    }

    if (best_rational) {
        out.related = true;
        out.scalar_rational = true;
        out.scalar = *best_rational;
        out.scalar_root = AlgebraicScalar(*best_rational);
    } else if (best_irrational) {
        out.related = true;
        out.scalar_min_poly = *best_irrational;
        out.scalar_root = preferred_real_root(*best_irrational);
    }
    return out;
}

}  // namespace mdlie
