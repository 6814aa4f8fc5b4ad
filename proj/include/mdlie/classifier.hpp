#pragma once

/*
 * Constructive classification of solvable algebras with a 1-dimensional
 * derived ideal (with an exact change-of-basis witness), the builder that
 * turns an invertible matrix into an algebra with a commutative
 * 1-codimensional derived ideal, the isomorphism decision for that class,
 * and the family matchers for the dimension-4 and dimension-5 tables.
 *
 * Family parameters are exact: rational where possible, otherwise real
 * algebraic numbers of degree 2 given by an integer minimal polynomial and
 * an isolating interval. Eigenvalue data that would force parameters of
 * higher algebraic degree yields Unclassified rather than an approximation.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "algebraic.hpp"
#include "canonical_forms.hpp"
#include "errors.hpp"
#include "factor.hpp"
#include "lie_algebra.hpp"
#include "matrix.hpp"
#include "smith.hpp"

namespace mdlie {

enum class ClassTag {
    Abelian,
    AffPlusAbelian,         // [e_{n-1}, e_n] = e_n, everything else zero
    HeisenbergPlusAbelian,  // [e_{2i-1}, e_{2i}] = e_{2m+1}, abelian tail
    MD43Family,             // dim 4, commutative 1-codimensional derived ideal
    MD44Family,             // dim 4, derived ideal isomorphic to h_3
    MD54Family,             // dim 5, commutative 1-codimensional derived ideal
    Unclassified,
};

using ParamValue = std::variant<Rational, AlgebraicScalar>;

inline std::string param_to_string(const ParamValue& v) {
    if (std::holds_alternative<Rational>(v)) return format_rational(std::get<Rational>(v));
    return std::get<AlgebraicScalar>(v).to_string();
}

struct ClassLabel {
    ClassTag tag = ClassTag::Unclassified;
    std::size_t n = 0;   // dimension (Abelian / AffPlusAbelian)
    std::size_t m = 0;   // Heisenberg block count
    std::size_t k = 0;   // abelian tail size, n = 2m + 1 + k
    std::string family;  // "1.1".."1.4", "2.1"/"2.2", "4.1".."4.14"
    std::vector<std::pair<std::string, ParamValue>> params;
    std::string note;    // detail for Unclassified

    std::string to_string() const {
        switch (tag) {
            case ClassTag::Abelian:
                return "Abelian{n=" + std::to_string(n) + "}";
            case ClassTag::AffPlusAbelian:
                return "AffPlusAbelian{n=" + std::to_string(n) + "}";
            case ClassTag::HeisenbergPlusAbelian:
                return "HeisenbergPlusAbelian{m=" + std::to_string(m) + ", k=" + std::to_string(k) + "}";
            case ClassTag::MD43Family:
            case ClassTag::MD44Family:
            case ClassTag::MD54Family: {
                std::string s = tag == ClassTag::MD43Family   ? "MD43Family{"
                                : tag == ClassTag::MD44Family ? "MD44Family{"
                                                              : "MD54Family{";
                s += family;
                for (const auto& [name, value] : params) s += ", " + name + " = " + param_to_string(value);
                return s + "}";
            }
            case ClassTag::Unclassified:
                return note.empty() ? "Unclassified" : "Unclassified (" + note + ")";
        }
        return "Unclassified";
    }
};

inline bool same_param(const ParamValue& a, const ParamValue& b) {
    const bool ra = std::holds_alternative<Rational>(a), rb = std::holds_alternative<Rational>(b);
    if (ra && rb) return std::get<Rational>(a) == std::get<Rational>(b);
    AlgebraicScalar x = ra ? AlgebraicScalar(std::get<Rational>(a)) : std::get<AlgebraicScalar>(a);
    AlgebraicScalar y = rb ? AlgebraicScalar(std::get<Rational>(b)) : std::get<AlgebraicScalar>(b);
    return AlgebraicScalar::compare(x, y) == 0;
}

inline bool same_label(const ClassLabel& a, const ClassLabel& b) {
    if (a.tag != b.tag || a.n != b.n || a.m != b.m || a.k != b.k || a.family != b.family) return false;
    if (a.params.size() != b.params.size()) return false;
    for (std::size_t i = 0; i < a.params.size(); ++i) {
        if (a.params[i].first != b.params[i].first) return false;
        if (!same_param(a.params[i].second, b.params[i].second)) return false;
    }
    return true;
}

struct ClassificationResult {
    ClassLabel label;
    RatMatrix witness;    // columns: canonical basis vectors in input coordinates
    bool checked = false; // transported constants equal the canonical constants
};

// ---------------------------------------------------------------------------
// canonical representatives

inline LieAlgebra canonical_abelian(std::size_t n) { return LieAlgebra(n); }

// aff block in the last two coordinates: [e_{n-1}, e_n] = e_n
inline LieAlgebra canonical_aff_plus_abelian(std::size_t n) {
    if (n < 2) throw PreconditionError("needs dimension >= 2");
    LieAlgebra g(n);
    g.add_to_bracket(n - 2, n - 1, n - 1, Rational(1));
    return g;
}

// pairs first, center next, abelian tail last: [e_{2i-1}, e_{2i}] = e_{2m+1}
inline LieAlgebra canonical_heisenberg_plus_abelian(std::size_t m, std::size_t k) {
    if (m < 1) throw PreconditionError("needs at least one pair");
    LieAlgebra g(2 * m + 1 + k);
    for (std::size_t i = 0; i < m; ++i) g.add_to_bracket(2 * i, 2 * i + 1, 2 * m, Rational(1));
    return g;
}

namespace detail {

// first standard basis index whose row is not a pivot row of the echelon
// basis; the corresponding basis vector complements the spanned subspace
inline std::size_t first_complement_index(const RatMatrix& echelon) {
    std::vector<bool> pivot(echelon.rows(), false);
    for (std::size_t c = 0; c < echelon.cols(); ++c)
        for (std::size_t r = 0; r < echelon.rows(); ++r)
            if (!is_zero(echelon(r, c))) {
                pivot[r] = true;
                break;
            }
    for (std::size_t r = 0; r < echelon.rows(); ++r)
        if (!pivot[r]) return r;
    throw PreconditionError("subspace has no complementary standard basis vector");
}

inline std::vector<Rational> unit_vector(std::size_t n, std::size_t i) {
    std::vector<Rational> v(n, Rational(0));
    v[i] = Rational(1);
    return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// algebras with a 1-dimensional derived ideal

inline ClassificationResult classify_dim1_derived(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    RatMatrix derived = g.derived_ideal();
    if (derived.cols() != 1) throw PreconditionError("derived ideal is not 1-dimensional");

    // move the derived generator to the last basis position
    std::vector<Rational> z = derived.column(0);
    std::size_t p = 0;
    while (is_zero(z[p])) ++p;
    RatMatrix m0(n, n);
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j)
        if (j != p) m0.set_column(col++, detail::unit_vector(n, j));
    m0.set_column(n - 1, z);
    LieAlgebra cur = g.apply_basis_change(m0);
    RatMatrix witness = m0;

    auto a_vector = [&cur, n]() {
        std::vector<Rational> a(n - 1, Rational(0));
        for (std::size_t i = 0; i + 1 < n; ++i) a[i] = cur.bracket_basis(i, n - 1)[n - 1];
        return a;
    };

    std::vector<Rational> a = a_vector();
    bool a_nonzero = false;
    std::size_t j0 = 0;
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!is_zero(a[i])) {
            a_nonzero = true;
            j0 = i;  // keep the last nonzero index
        }

    ClassificationResult out;
    if (a_nonzero) {
        if (j0 != n - 2) {
            RatMatrix m1 = RatMatrix::identity(n);
            m1.swap_cols(j0, n - 2);
            cur = cur.apply_basis_change(m1);
            witness = witness * m1;
            a = a_vector();
        }
        // kill the action of every other basis vector on the derived line and
        // normalize the surviving bracket to [e_{n-1}, e_n] = e_n
        RatMatrix m2 = RatMatrix::identity(n);
        for (std::size_t i = 0; i + 2 < n; ++i) m2(n - 2, i) = -a[i] / a[n - 2];
        m2(n - 2, n - 2) = Rational(1) / a[n - 2];
        cur = cur.apply_basis_change(m2);
        witness = witness * m2;
        // absorb the remaining brackets against e_{n-1} into the last coordinate
        RatMatrix m3 = RatMatrix::identity(n);
        for (std::size_t i = 0; i + 2 < n; ++i) m3(n - 1, i) = cur.bracket_basis(i, n - 2)[n - 1];
        cur = cur.apply_basis_change(m3);
        witness = witness * m3;

        out.label.tag = ClassTag::AffPlusAbelian;
        out.label.n = n;
        out.witness = witness;
        out.checked = cur.same_constants(canonical_aff_plus_abelian(n));
        return out;
    }

    // central derived generator: the algebra is determined by the skew
    // structure matrix on the first n-1 coordinates
    RatMatrix structure(n - 1, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) structure(i, j) = cur.bracket_basis(i, j)[n - 1];
    SkewNormalForm nf = skew_congruence_normal_form(structure);
    if (nf.rank == 0) throw PreconditionError("derived ideal is not 1-dimensional");
    const std::size_t m = nf.rank / 2;
    const std::size_t k = n - 2 * m - 1;

    RatMatrix mc(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) mc(i, j) = nf.witness(i, j);
    mc(n - 1, n - 1) = Rational(1);
    cur = cur.apply_basis_change(mc);
    witness = witness * mc;

    // reorder to (pairs, center, abelian tail)
    RatMatrix m4(n, n);
    for (std::size_t i = 0; i < 2 * m; ++i) m4.set_column(i, detail::unit_vector(n, i));
    m4.set_column(2 * m, detail::unit_vector(n, n - 1));
    for (std::size_t t = 0; t < k; ++t) m4.set_column(2 * m + 1 + t, detail::unit_vector(n, 2 * m + t));
    cur = cur.apply_basis_change(m4);
    witness = witness * m4;

    out.label.tag = ClassTag::HeisenbergPlusAbelian;
    out.label.m = m;
    out.label.k = k;
    out.witness = witness;
    out.checked = cur.same_constants(canonical_heisenberg_plus_abelian(m, k));
    return out;
}

// decomposability for the central-generator case: splits off a direct
// summand exactly when the center is bigger than the derived line
inline bool decomposability_dim1_case(const LieAlgebra& g) {
    RatMatrix derived = g.derived_ideal();
    if (derived.cols() != 1) throw PreconditionError("derived ideal is not 1-dimensional");
    std::vector<Rational> z = derived.column(0);
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (const Rational& c : g.bracket(detail::unit_vector(g.dim(), i), z))
            if (!is_zero(c)) throw PreconditionError("derived generator is not central");
    return g.center().cols() > 1;
}

// ---------------------------------------------------------------------------
// codimension-1 commutative derived ideal

// brackets [X_n, X_j] = sum_i a(i,j) X_i on the first n-1 coordinates
inline LieAlgebra construct_from_matrix(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw SizeMismatch("structure matrix must be square");
    if (is_zero(bareiss_det(a))) throw SingularMatrix("structure matrix must be invertible");
    const std::size_t n = a.rows() + 1;
    LieAlgebra g(n);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        std::vector<Rational> coeffs(n, Rational(0));
        for (std::size_t i = 0; i + 1 < n; ++i) coeffs[i] = a(i, j);
        g.set_bracket(n - 1, j, coeffs);
    }
    return g;
}

namespace detail {

// the adjoint matrix of the complement generator on the derived ideal, for
// algebras with commutative derived ideal of codimension 1
inline RatMatrix codim1_ad_matrix(const LieAlgebra& g, const char* who) {
    const std::size_t n = g.dim();
    RatMatrix derived = g.derived_ideal();
    if (derived.cols() + 1 != n)
        throw PreconditionError(std::string(who) + ": derived ideal is not 1-codimensional");
    if (!g.spans_commute(derived))
        throw PreconditionError(std::string(who) + ": derived ideal is not commutative");
    std::size_t t = first_complement_index(derived);
    RatMatrix ad = g.adjoint_matrix(unit_vector(n, t), derived);
    if (is_zero(bareiss_det(ad)))
        throw PreconditionError(std::string(who) + ": adjoint action on the derived ideal is singular");
    return ad;
}

}  // namespace detail

inline ScaledSimilarity iso_codim1(const LieAlgebra& g1, const LieAlgebra& g2) {
    RatMatrix a = detail::codim1_ad_matrix(g1, "iso_codim1 first argument");
    RatMatrix b = detail::codim1_ad_matrix(g2, "iso_codim1 second argument");
    if (a.rows() != b.rows()) {
        ScaledSimilarity out;  // different dimensions are never isomorphic
        return out;
    }
    return proportional_similarity(a, b);
}

// ---------------------------------------------------------------------------
// family matching helpers

namespace detail {

struct FactorShape {
    std::vector<std::pair<Rational, int>> rational_eigs;  // value, multiplicity
    std::vector<std::pair<RatPoly, int>> real_quads;      // irreducible, positive discriminant
    std::vector<std::pair<RatPoly, int>> complex_quads;   // negative discriminant
    bool high_degree = false;                             // an irreducible factor of degree >= 3
};

inline FactorShape factor_shape(const RatPoly& char_poly) {
    FactorShape shape;
    for (const RatPoly& f : factor_over_q(char_poly)) {
        if (f.degree() == 1) {
            Rational root = -f.coeff(0) / f.coeff(1);
            bool merged = false;
            for (auto& [v, m] : shape.rational_eigs)
                if (v == root) {
                    ++m;
                    merged = true;
                    break;
                }
            if (!merged) shape.rational_eigs.emplace_back(root, 1);
        } else if (f.degree() == 2) {
            const Rational disc = f.coeff(1) * f.coeff(1) - Rational(4) * f.coeff(2) * f.coeff(0);
            auto& bucket = disc.sign() < 0 ? shape.complex_quads : shape.real_quads;
            bool merged = false;
            for (auto& [q, m] : bucket)
                if (q == f) {
                    ++m;
                    merged = true;
                    break;
                }
            if (!merged) bucket.emplace_back(f, 1);
        } else {
            shape.high_degree = true;
        }
    }
    return shape;
}

// multiplicity of the root e in each invariant factor; nonzero entries are
// the Jordan block sizes for that eigenvalue, ascending
inline std::vector<int> jordan_blocks(const std::vector<RatPoly>& invariants, const Rational& e) {
    RatPoly lin(std::vector<Rational>{-e, Rational(1)});
    std::vector<int> blocks;
    for (const RatPoly& d : invariants) {
        int count = 0;
        RatPoly rest = d;
        for (;;) {
            RatPoly q, r;
            poly_divmod(rest, lin, q, r);
            if (!r.is_zero_poly()) break;
            ++count;
            rest = q;
        }
        if (count > 0) blocks.push_back(count);
    }
    return blocks;
}

// monic p(cx)/c^deg: the polynomial whose roots are the roots of p divided by c
inline RatPoly roots_scaled_by(const RatPoly& p, const Rational& c) {
    std::vector<Rational> v;
    Rational pw(1);
    for (long i = 0; i <= p.degree(); ++i) {
        v.push_back(p.coeff(static_cast<std::size_t>(i)) * pw);
        pw *= c;
    }
    return RatPoly(v).monic();
}

// e / sqrt(q0) for q0 > 0, exact
inline AlgebraicScalar ratio_over_sqrt(const Rational& e, const Rational& q0) {
    if (is_zero(e)) return AlgebraicScalar(Rational(0));
    Rational s;
    if (is_perfect_square(q0, s)) return AlgebraicScalar(e / s);
    RatPoly p(std::vector<Rational>{-e * e, Rational(0), q0});
    std::vector<AlgebraicScalar> roots = real_roots(p);
    return e.sign() > 0 ? roots.back() : roots.front();
}

// sqrt(r) for r > 0, exact
inline AlgebraicScalar sqrt_scalar(const Rational& r) {
    Rational s;
    if (is_perfect_square(r, s)) return AlgebraicScalar(s);
    RatPoly p(std::vector<Rational>{-r, Rational(0), Rational(1)});
    return real_roots(p).back();
}

inline ParamValue to_param(const AlgebraicScalar& a) {
    if (a.is_rational()) return ParamValue(a.rational_value());
    return ParamValue(a);
}

struct RotationData {
    Rational p;       // eigenvalue pair sum
    Rational q0;      // eigenvalue pair product, > 0; the modulus is sqrt(q0)
    AlgebraicScalar cos_phi;
    AlgebraicScalar sin_phi;
    bool modulus_rational = false;
    Rational modulus;  // set when modulus_rational
};

inline RotationData rotation_data(const RatPoly& quad) {
    RotationData d;
    RatPoly m = quad.monic();
    d.p = -m.coeff(1);
    d.q0 = m.coeff(0);
    d.modulus_rational = is_perfect_square(d.q0, d.modulus);
    // cos = p / (2 sqrt(q0)) carries the sign of p; sin is the positive mate
    if (is_zero(d.p)) {
        d.cos_phi = AlgebraicScalar(Rational(0));
    } else if (d.modulus_rational) {
        d.cos_phi = AlgebraicScalar(d.p / (Rational(2) * d.modulus));
    } else {
        RatPoly cp(std::vector<Rational>{-d.p * d.p, Rational(0), Rational(4) * d.q0});
        std::vector<AlgebraicScalar> roots = real_roots(cp);
        d.cos_phi = d.p.sign() > 0 ? roots.back() : roots.front();
    }
    const Rational sin2_num = Rational(4) * d.q0 - d.p * d.p;  // > 0 for a complex pair
    Rational s;
    if (is_perfect_square(sin2_num, s) && d.modulus_rational) {
        d.sin_phi = AlgebraicScalar(s / (Rational(2) * d.modulus));
    } else {
        RatPoly sp(std::vector<Rational>{-sin2_num, Rational(0), Rational(4) * d.q0});
        d.sin_phi = real_roots(sp).back();
    }
    return d;
}

inline ClassLabel unclassified(std::string note) {
    ClassLabel l;
    l.tag = ClassTag::Unclassified;
    l.note = std::move(note);
    return l;
}

// smallest-|value| rational eigenvalue; positive on a tie
inline Rational preferred_scale(std::vector<Rational> values) {
    Rational best = values.front();
    for (const Rational& v : values) {
        const Rational av = rat_abs(v), ab = rat_abs(best);
        if (av < ab || (av == ab && v.sign() > 0)) best = v;
    }
    return best;
}

inline void sort_ascending(std::vector<AlgebraicScalar>& v) {
    std::sort(v.begin(), v.end(),
              [](const AlgebraicScalar& a, const AlgebraicScalar& b) { return a < b; });
}

}  // namespace detail

// ---------------------------------------------------------------------------
// dimension-4 matcher

inline ClassLabel match_family_n4(const LieAlgebra& g) {
    if (g.dim() != 4) throw PreconditionError("match_family_n4 needs dimension 4");
    RatMatrix derived = g.derived_ideal();
    if (derived.cols() != 3) throw PreconditionError("match_family_n4 needs a 3-dimensional derived ideal");

    if (!g.spans_commute(derived)) {
        // derived ideal must be the 3-dimensional Heisenberg algebra
        RatMatrix second = g.derived_of_span(derived);
        if (second.cols() != 1)
            return detail::unclassified("non-commutative derived ideal is not h_3");
        std::vector<Rational> z = second.column(0);
        for (std::size_t c = 0; c < derived.cols(); ++c)
            for (const Rational& x : g.bracket(z, derived.column(c)))
                if (!is_zero(x)) return detail::unclassified("non-commutative derived ideal is not h_3");

        // induced action of the complement generator on derived/second-derived
        std::size_t t = detail::first_complement_index(derived);
        RatMatrix frame(4, 3);
        std::size_t picked = 0;
        for (std::size_t c = 0; c < 3 && picked < 2; ++c) {
            frame.set_column(picked, derived.column(c));
            frame.set_column(2, z);
            RatMatrix probe(4, static_cast<std::size_t>(picked + 2));
            for (std::size_t i = 0; i <= picked; ++i) probe.set_column(i, frame.column(i));
            probe.set_column(picked + 1, z);
            if (bareiss_rank(probe) == picked + 2) ++picked;
        }
        frame.set_column(2, z);
        RatMatrix action = g.adjoint_matrix(detail::unit_vector(4, t), frame);
        const Rational trace = action(0, 0) + action(1, 1);
        const Rational det = action(0, 0) * action(1, 1) - action(0, 1) * action(1, 0);
        ClassLabel label;
        label.tag = ClassTag::MD44Family;
        if (is_zero(trace) && det.sign() > 0) {
            label.family = "2.1";
            return label;
        }
        if (is_zero(trace) && det.sign() < 0) {
            label.family = "2.2";
            return label;
        }
        return detail::unclassified("induced quotient action matches no listed family");
    }

    RatMatrix ad = detail::codim1_ad_matrix(g, "match_family_n4");
    const RatPoly p = char_poly(ad);
    detail::FactorShape shape = detail::factor_shape(p);
    if (shape.high_degree)
        return detail::unclassified("eigenvalue data exceeds rational or quadratic degree");

    ClassLabel label;
    label.tag = ClassTag::MD43Family;

    if (!shape.complex_quads.empty()) {
        // rotation block plus a real eigenvalue; the complement generator is
        // free up to sign, so the orientation with lambda > 0 is reported
        RatPoly quad = shape.complex_quads.front().first;
        Rational e = shape.rational_eigs.front().first;
        if (e.sign() < 0) {
            e = -e;
            quad = detail::roots_scaled_by(quad, Rational(-1));
        }
        detail::RotationData rot = detail::rotation_data(quad);
        label.family = "1.4";
        label.params.emplace_back("lambda", detail::to_param(detail::ratio_over_sqrt(e, rot.q0)));
        label.params.emplace_back("cos", detail::to_param(rot.cos_phi));
        label.params.emplace_back("sin", detail::to_param(rot.sin_phi));
        return label;
    }

    if (!shape.real_quads.empty()) {
        // one rational and two conjugate quadratic eigenvalues, all simple
        const Rational c = shape.rational_eigs.front().first;
        std::vector<AlgebraicScalar> lambdas =
            real_roots(detail::roots_scaled_by(shape.real_quads.front().first, c));
        detail::sort_ascending(lambdas);
        label.family = "1.1";
        label.params.emplace_back("lambda1", detail::to_param(lambdas[0]));
        label.params.emplace_back("lambda2", detail::to_param(lambdas[1]));
        return label;
    }

    // all eigenvalues rational
    std::vector<RatPoly> invariants = invariant_factors(ad);
    std::vector<Rational> values;
    for (const auto& [v, m] : shape.rational_eigs) values.push_back(v);

    bool diagonalizable = true;
    for (const auto& [v, m] : shape.rational_eigs) {
        std::vector<int> blocks = detail::jordan_blocks(invariants, v);
        for (int b : blocks)
            if (b > 1) diagonalizable = false;
    }

    if (diagonalizable) {
        const Rational c = detail::preferred_scale(values);
        std::vector<Rational> lambdas;
        for (const auto& [v, m] : shape.rational_eigs) {
            int copies = m;
            if (v == c) --copies;  // one copy is normalized to 1
            for (int i = 0; i < copies; ++i) lambdas.push_back(v / c);
        }
        std::sort(lambdas.begin(), lambdas.end());
        label.family = "1.1";
        label.params.emplace_back("lambda1", ParamValue(lambdas[0]));
        label.params.emplace_back("lambda2", ParamValue(lambdas[1]));
        return label;
    }

    // a single eigenvalue with a 3-block, or a 2-block plus a simple eigenvalue
    for (const auto& [v, m] : shape.rational_eigs) {
        std::vector<int> blocks = detail::jordan_blocks(invariants, v);
        if (blocks == std::vector<int>{3}) {
            label.family = "1.3";
            return label;
        }
    }
    // locate the 2-block eigenvalue and the remaining simple eigenvalue
    Rational jordan_eig, simple_eig;
    for (const auto& [v, m] : shape.rational_eigs) {
        std::vector<int> blocks = detail::jordan_blocks(invariants, v);
        if (!blocks.empty() && blocks.back() == 2) jordan_eig = v;
    }
    if (shape.rational_eigs.size() == 1) {
        simple_eig = jordan_eig;  // eigenvalue triple with blocks {2,1}
    } else {
        for (const auto& [v, m] : shape.rational_eigs)
            if (v != jordan_eig) simple_eig = v;
    }
    label.family = "1.2";
    label.params.emplace_back("lambda", ParamValue(jordan_eig / simple_eig));
    return label;
}

// ---------------------------------------------------------------------------
// dimension-5 matcher

namespace detail {

inline ClassLabel md54(const char* family) {
    ClassLabel l;
    l.tag = ClassTag::MD54Family;
    l.family = family;
    return l;
}

inline ClassLabel match_n5_rotation(const RatMatrix& ad, const FactorShape& shape) {
    const std::vector<std::pair<RatPoly, int>>& cq = shape.complex_quads;

    if (cq.size() == 1 && cq.front().second == 2) {
        // two copies of one complex pair
        std::vector<RatPoly> invariants = invariant_factors(ad);
        const RatPoly min_poly = invariants.back();
        if (min_poly.degree() != 2)
            return unclassified("repeated complex pair with a nontrivial block matches no listed family");
        RatPoly quad = cq.front().first;
        // generator sign is free; keep the orientation with cos >= 0
        if (quad.monic().coeff(1).sign() > 0) quad = roots_scaled_by(quad, Rational(-1));
        RotationData rot = rotation_data(quad);
        ClassLabel label = md54("4.14");
        label.params.emplace_back("lambda", to_param(rot.cos_phi));
        label.params.emplace_back("mu", to_param(rot.sin_phi));
        label.params.emplace_back("cos", to_param(rot.cos_phi));
        label.params.emplace_back("sin", to_param(rot.sin_phi));
        return label;
    }

    if (cq.size() == 2) {
        // two distinct complex pairs: either may carry the unit modulus, and
        // the generator sign is free; of the four readings the one with the
        // lexicographically largest (lambda, mu, cos) is reported
        struct Candidate {
            AlgebraicScalar cos, sin, lambda, mu;
        };
        auto build = [](const RatPoly& base, const RatPoly& other) {
            RotationData rot = rotation_data(base);
            RatPoly om = other.monic();
            const Rational pb = -om.coeff(1), qb = om.coeff(0);
            Candidate c;
            c.cos = rot.cos_phi;
            c.sin = rot.sin_phi;
            c.lambda = ratio_over_sqrt(pb / Rational(2), rot.q0);
            const Rational mu2_num = Rational(4) * qb - pb * pb;  // > 0
            Rational s;
            if (rot.modulus_rational && is_perfect_square(mu2_num, s)) {
                c.mu = AlgebraicScalar(s / (Rational(2) * rot.modulus));
            } else {
                RatPoly mp(std::vector<Rational>{-mu2_num, Rational(0), Rational(4) * rot.q0});
                c.mu = real_roots(mp).back();
            }
            return c;
        };
        const RatPoly r0 = roots_scaled_by(cq[0].first, Rational(-1));
        const RatPoly r1 = roots_scaled_by(cq[1].first, Rational(-1));
        const Candidate cands[4] = {build(cq[0].first, cq[1].first), build(cq[1].first, cq[0].first),
                                    build(r0, r1), build(r1, r0)};
        const Candidate* pick = &cands[0];
        for (int i = 1; i < 4; ++i) {
            int cmp = AlgebraicScalar::compare(cands[i].lambda, pick->lambda);
            if (cmp == 0) cmp = AlgebraicScalar::compare(cands[i].mu, pick->mu);
            if (cmp == 0) cmp = AlgebraicScalar::compare(cands[i].cos, pick->cos);
            if (cmp > 0) pick = &cands[i];
        }
        ClassLabel label = md54("4.14");
        label.params.emplace_back("lambda", to_param(pick->lambda));
        label.params.emplace_back("mu", to_param(pick->mu));
        label.params.emplace_back("cos", to_param(pick->cos));
        label.params.emplace_back("sin", to_param(pick->sin));
        return label;
    }

    // one simple complex pair plus real data; the generator sign is free, so
    // each branch flips to the orientation with the lex-larger parameters
    RatPoly quad = cq.front().first;

    if (!shape.real_quads.empty()) {
        RatPoly rq = shape.real_quads.front().first;
        const Rational sum = -rq.monic().coeff(1);
        if (sum.sign() < 0 || (is_zero(sum) && quad.monic().coeff(1).sign() > 0)) {
            rq = roots_scaled_by(rq, Rational(-1));
            quad = roots_scaled_by(quad, Rational(-1));
        }
        RotationData rot = rotation_data(quad);
        if (!rot.modulus_rational)
            return unclassified("eigenvalue data exceeds rational or quadratic degree");
        std::vector<AlgebraicScalar> lambdas = real_roots(roots_scaled_by(rq, rot.modulus));
        sort_ascending(lambdas);
        ClassLabel label = md54("4.11");
        label.params.emplace_back("lambda1", to_param(lambdas[0]));
        label.params.emplace_back("lambda2", to_param(lambdas[1]));
        label.params.emplace_back("cos", to_param(rot.cos_phi));
        label.params.emplace_back("sin", to_param(rot.sin_phi));
        return label;
    }

    if (shape.rational_eigs.size() == 2) {
        // two distinct simple real eigenvalues
        Rational e1 = shape.rational_eigs[0].first, e2 = shape.rational_eigs[1].first;
        const Rational sum = e1 + e2;
        if (sum.sign() < 0 || (is_zero(sum) && quad.monic().coeff(1).sign() > 0)) {
            e1 = -e1;
            e2 = -e2;
            quad = roots_scaled_by(quad, Rational(-1));
        }
        RotationData rot = rotation_data(quad);
        std::vector<AlgebraicScalar> lambdas = {ratio_over_sqrt(e1, rot.q0),
                                                ratio_over_sqrt(e2, rot.q0)};
        sort_ascending(lambdas);
        ClassLabel label = md54("4.11");
        label.params.emplace_back("lambda1", to_param(lambdas[0]));
        label.params.emplace_back("lambda2", to_param(lambdas[1]));
        label.params.emplace_back("cos", to_param(rot.cos_phi));
        label.params.emplace_back("sin", to_param(rot.sin_phi));
        return label;
    }

    // one rational eigenvalue of multiplicity two
    Rational e = shape.rational_eigs.front().first;
    std::vector<RatPoly> invariants = invariant_factors(ad);
    std::vector<int> blocks = jordan_blocks(invariants, e);  // before any reorientation
    if (e.sign() < 0) {
        e = -e;
        quad = roots_scaled_by(quad, Rational(-1));
    }
    RotationData rot = rotation_data(quad);
    ClassLabel label = blocks == std::vector<int>{1, 1} ? md54("4.12") : md54("4.13");
    label.params.emplace_back("lambda", to_param(ratio_over_sqrt(e, rot.q0)));
    label.params.emplace_back("cos", to_param(rot.cos_phi));
    label.params.emplace_back("sin", to_param(rot.sin_phi));
    return label;
}

inline ClassLabel match_n5_real(const RatMatrix& ad, const FactorShape& shape) {
    std::vector<RatPoly> invariants = invariant_factors(ad);

    if (static_cast<int>(shape.real_quads.size()) == 2 ||
        (shape.real_quads.size() == 1 && shape.real_quads.front().second == 1 &&
         shape.rational_eigs.empty()))
        return unclassified("eigenvalue data exceeds rational or quadratic degree");

    if (shape.real_quads.size() == 1 && shape.real_quads.front().second == 2) {
        // conjugate quadratic pair, each eigenvalue double; the parameter is
        // the ratio of the two conjugates, a quadratic unit
        const RatPoly q = shape.real_quads.front().first.monic();
        const Rational p = -q.coeff(1), q0 = q.coeff(0);
        RatPoly ratio_poly(std::vector<Rational>{q0, Rational(2) * q0 - p * p, q0});
        std::vector<AlgebraicScalar> roots = real_roots(ratio_poly);
        ClassLabel label = invariants.back().degree() == 4 ? md54("4.8") : md54("4.3");
        label.params.emplace_back("lambda", to_param(roots.front()));
        return label;
    }

    if (shape.real_quads.size() == 1) {
        const RatPoly& quad = shape.real_quads.front().first;
        if (shape.rational_eigs.size() == 2) {
            // two rational simples plus a quadratic pair: four distinct values
            const Rational c = preferred_scale({shape.rational_eigs[0].first, shape.rational_eigs[1].first});
            std::vector<AlgebraicScalar> lambdas = real_roots(roots_scaled_by(quad, c));
            for (const auto& [v, m] : shape.rational_eigs)
                if (v != c) lambdas.push_back(AlgebraicScalar(v / c));
            sort_ascending(lambdas);
            ClassLabel label = md54("4.1");
            label.params.emplace_back("lambda1", to_param(lambdas[0]));
            label.params.emplace_back("lambda2", to_param(lambdas[1]));
            label.params.emplace_back("lambda3", to_param(lambdas[2]));
            return label;
        }
        // one rational double plus a quadratic pair
        const Rational d = shape.rational_eigs.front().first;
        std::vector<int> blocks = jordan_blocks(invariants, d);
        std::vector<AlgebraicScalar> lambdas = real_roots(roots_scaled_by(quad, d));
        sort_ascending(lambdas);
        ClassLabel label = blocks == std::vector<int>{1, 1} ? md54("4.2") : md54("4.6");
        label.params.emplace_back("lambda1", to_param(lambdas[0]));
        label.params.emplace_back("lambda2", to_param(lambdas[1]));
        return label;
    }

    // all eigenvalues rational; dispatch on the multiplicity pattern
    std::vector<std::pair<Rational, int>> eigs = shape.rational_eigs;
    std::sort(eigs.begin(), eigs.end(),
              [](const auto& a, const auto& b) { return a.second > b.second; });

    if (eigs.size() == 4) {
        std::vector<Rational> values;
        for (const auto& [v, m] : eigs) values.push_back(v);
        const Rational c = preferred_scale(values);
        std::vector<Rational> lambdas;
        for (const Rational& v : values)
            if (v != c) lambdas.push_back(v / c);
        std::sort(lambdas.begin(), lambdas.end());
        ClassLabel label = md54("4.1");
        label.params.emplace_back("lambda1", ParamValue(lambdas[0]));
        label.params.emplace_back("lambda2", ParamValue(lambdas[1]));
        label.params.emplace_back("lambda3", ParamValue(lambdas[2]));
        return label;
    }

    if (eigs.size() == 3) {
        // multiplicities {2, 1, 1}
        const Rational d = eigs[0].first;
        std::vector<int> blocks = jordan_blocks(invariants, d);
        std::vector<Rational> lambdas = {eigs[1].first / d, eigs[2].first / d};
        std::sort(lambdas.begin(), lambdas.end());
        ClassLabel label = blocks == std::vector<int>{1, 1} ? md54("4.2") : md54("4.6");
        label.params.emplace_back("lambda1", ParamValue(lambdas[0]));
        label.params.emplace_back("lambda2", ParamValue(lambdas[1]));
        return label;
    }

    if (eigs.size() == 2 && eigs[0].second == 2 && eigs[1].second == 2) {
        const Rational a = eigs[0].first, b = eigs[1].first;
        std::vector<int> blocks_a = jordan_blocks(invariants, a);
        std::vector<int> blocks_b = jordan_blocks(invariants, b);
        const bool j2_a = blocks_a.back() == 2, j2_b = blocks_b.back() == 2;
        ClassLabel label;
        if (j2_a && j2_b) {
            label = md54("4.8");
            label.params.emplace_back("lambda", ParamValue(std::min(a / b, b / a)));
        } else if (!j2_a && !j2_b) {
            label = md54("4.3");
            label.params.emplace_back("lambda", ParamValue(std::min(a / b, b / a)));
        } else {
            // the block eigenvalue is normalized to 1
            const Rational jordan = j2_a ? a : b, plain = j2_a ? b : a;
            label = md54("4.7");
            label.params.emplace_back("lambda", ParamValue(plain / jordan));
        }
        return label;
    }

    if (eigs.size() == 2) {
        // multiplicities {3, 1}
        const Rational t = eigs[0].first, s = eigs[1].first;
        std::vector<int> blocks = jordan_blocks(invariants, t);
        if (blocks == std::vector<int>{1, 1, 1}) {
            ClassLabel label = md54("4.4");
            label.params.emplace_back("lambda", ParamValue(s / t));
            return label;
        }
        if (blocks == std::vector<int>{3}) {
            ClassLabel label = md54("4.9");
            label.params.emplace_back("lambda", ParamValue(s / t));
            return label;
        }
        return unclassified("block structure fits family 4.6 only with a unit parameter, outside its range");
    }

    // a single eigenvalue of multiplicity 4
    const Rational t = eigs.front().first;
    std::vector<int> blocks = jordan_blocks(invariants, t);
    if (blocks == std::vector<int>{1, 1, 1, 1}) return md54("4.5");
    if (blocks == std::vector<int>{4}) return md54("4.10");
    return unclassified("block structure fits families 4.7-4.9 only with a unit parameter, outside their range");
}

}  // namespace detail

inline ClassLabel match_family_n5(const LieAlgebra& g) {
    if (g.dim() != 5) throw PreconditionError("match_family_n5 needs dimension 5");
    RatMatrix ad = detail::codim1_ad_matrix(g, "match_family_n5");
    detail::FactorShape shape = detail::factor_shape(char_poly(ad));
    if (shape.high_degree)
        return detail::unclassified("eigenvalue data exceeds rational or quadratic degree");
    if (shape.complex_quads.empty()) return detail::match_n5_real(ad, shape);
    return detail::match_n5_rotation(ad, shape);
}

// ---------------------------------------------------------------------------
// top-level dispatch

struct ClassifyOutcome {
    ClassLabel label;
    std::optional<RatMatrix> witness;
    bool checked = false;
};

inline ClassifyOutcome classify(const LieAlgebra& g) {
    ClassifyOutcome out;
    const std::size_t n = g.dim();
    RatMatrix derived = g.derived_ideal();
    if (derived.cols() == 0) {
        out.label.tag = ClassTag::Abelian;
        out.label.n = n;
        out.witness = RatMatrix::identity(n);
        out.checked = true;
        return out;
    }
    if (derived.cols() == 1) {
        ClassificationResult r = classify_dim1_derived(g);
        out.label = r.label;
        out.witness = r.witness;
        out.checked = r.checked;
        return out;
    }
    if (n == 4 && derived.cols() == 3) {
        out.label = match_family_n4(g);
        return out;
    }
    if (n == 5 && derived.cols() == 4 && g.spans_commute(derived)) {
        out.label = match_family_n5(g);
        return out;
    }
    out.label = detail::unclassified("outside the classified ranges");
    return out;
}

}  // namespace mdlie
