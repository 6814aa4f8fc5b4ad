#pragma once

/*
 * The skew pairing attached to a linear functional f on a Lie algebra:
 * entry (i, j) is f([e_i, e_j]). Its rank is the dimension of the orbit of
 * f under the coadjoint action, always even.
 *
 * The generic rank treats the functional's coordinates as indeterminates;
 * since a rank-r symbolic matrix has a nonvanishing r x r minor, the generic
 * rank is exactly the maximum orbit dimension over all functionals.
 *
 * md_falsify hunts for a functional whose orbit dimension is strictly
 * between 0 and the generic value. Finding one refutes the property that
 * all orbits have dimension 0 or the common maximum; exhausting the budget
 * without one is evidence, not proof.
 */

#include <cstdint>
#include <vector>

#include "lie_algebra.hpp"
#include "multivariate.hpp"
#include "rng.hpp"

namespace mdlie {

inline RatMatrix kirillov_matrix(const LieAlgebra& g, const std::vector<Rational>& f) {
    const std::size_t n = g.dim();
    if (f.size() != n) throw SizeMismatch("functional length must match dimension");
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational s(0);
            const std::vector<Rational>& c = g.bracket_basis(i, j);
            for (std::size_t l = 0; l < n; ++l) s += c[l] * f[l];
            m(i, j) = s;
            m(j, i) = -s;
        }
    return m;
}

inline std::size_t orbit_dimension(const LieAlgebra& g, const std::vector<Rational>& f) {
    return bareiss_rank(kirillov_matrix(g, f));
}

inline Matrix<MPoly> kirillov_symbolic(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    Matrix<MPoly> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            MPoly s;
            const std::vector<Rational>& c = g.bracket_basis(i, j);
            for (std::size_t l = 0; l < n; ++l)
                if (!is_zero(c[l])) s = s + MPoly(c[l]) * MPoly::variable(l, n);
            m(i, j) = s;
            m(j, i) = MPoly(0) - s;
        }
    return m;
}

inline std::size_t generic_orbit_dimension(const LieAlgebra& g) {
    return symbolic_rank(kirillov_symbolic(g), g.dim());
}

// largest rank seen over random rational functionals; a lower bound only
inline std::size_t sampled_generic_dimension(const LieAlgebra& g, std::size_t samples,
                                             std::uint64_t seed) {
    Rng rng(seed);
    std::size_t best = 0;
    const std::size_t cap = g.dim();
    for (std::size_t s = 0; s < samples && best < cap; ++s) {
        std::vector<Rational> f(g.dim());
        for (auto& v : f) v = rng.rational(50, 20);
        std::size_t r = orbit_dimension(g, f);
        if (r > best) best = r;
    }
    return best;
}

struct FalsifyResult {
    bool found = false;
    std::vector<Rational> witness;   // functional with exceptional orbit dimension
    std::size_t witness_dim = 0;
    std::size_t generic_dim = 0;
    std::size_t evaluations = 0;     // rank computations spent searching
};

namespace detail {

// all functionals with at most `max_support` nonzero coordinates, drawing
// values from `values`; calls fn(f) until it returns false
template <typename Fn>
inline void sweep_supports(std::size_t n, std::size_t max_support,
                           const std::vector<Rational>& values, Fn&& fn) {
    std::vector<std::size_t> support;
    std::vector<std::size_t> pick;
    // iterative enumeration of supports by size, then lexicographically
    for (std::size_t size = 1; size <= max_support && size <= n; ++size) {
        support.assign(size, 0);
        for (std::size_t i = 0; i < size; ++i) support[i] = i;
        for (;;) {
            pick.assign(size, 0);
            for (;;) {
                std::vector<Rational> f(n, Rational(0));
                for (std::size_t i = 0; i < size; ++i) f[support[i]] = values[pick[i]];
                if (!fn(f)) return;
                std::size_t k = size;
                while (k > 0 && ++pick[k - 1] == values.size()) pick[--k] = 0;
                if (k == 0) break;
            }
            std::size_t i = size;
            while (i > 0 && support[i - 1] == n - size + i - 1) --i;
            if (i == 0) break;
            ++support[i - 1];
            for (std::size_t j = i; j < size; ++j) support[j] = support[j - 1] + 1;
        }
    }
}

inline bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

inline bool small_support_pm1(const std::vector<Rational>& f) {
    std::size_t nz = 0;
    for (const Rational& v : f)
        if (!is_zero(v)) {
            ++nz;
            if (v != Rational(1) && v != Rational(-1)) return false;
        }
    return nz <= 2;
}

}  // namespace detail

inline FalsifyResult md_falsify(const LieAlgebra& g, std::size_t budget = 5000,
                                std::uint64_t seed = 0) {
    const std::size_t n = g.dim();
    FalsifyResult res;
    res.generic_dim = generic_orbit_dimension(g);
    if (res.generic_dim == 0) return res;  // every orbit is a point

    auto exceptional = [&](const std::vector<Rational>& f, std::size_t& dim_out) {
        dim_out = orbit_dimension(g, f);
        return dim_out != 0 && dim_out != res.generic_dim;
    };

    std::vector<Rational> first_hit;
    std::size_t first_dim = 0;
    auto search = [&](const std::vector<Rational>& f) {
        if (res.evaluations >= budget) return false;
        ++res.evaluations;
        std::size_t d;
        if (exceptional(f, d)) {
            first_hit = f;
            first_dim = d;
            return false;
        }
        return true;
    };

    const std::vector<Rational> pm1{Rational(1), Rational(-1)};
    const std::vector<Rational> pm12{Rational(1), Rational(-1), Rational(2), Rational(-2)};

    detail::sweep_supports(n, 2, pm1, search);
    if (first_hit.empty())
        detail::sweep_supports(n, 3, pm12, [&](const std::vector<Rational>& f) {
            if (detail::small_support_pm1(f)) return true;  // already covered
            return search(f);
        });
    if (first_hit.empty()) {
        Rng rng(seed);
        while (res.evaluations < budget) {
            std::vector<Rational> f(n);
            for (auto& v : f) v = rng.rational(100, 100);
            ++res.evaluations;
            std::size_t d;
            if (exceptional(f, d)) {
                first_hit = f;
                first_dim = d;
                break;
            }
        }
    }
    if (first_hit.empty()) return res;

    // a witness exists, so spend whatever it takes to report the
    // lexicographically least one from the deterministic grids; fall back to
    // the random hit only if no grid point is exceptional
    res.found = true;
    res.witness = first_hit;
    res.witness_dim = first_dim;
    bool grid_witness = false;
    auto collect = [&](const std::vector<Rational>& f) {
        std::size_t d;
        if (exceptional(f, d) && (!grid_witness || detail::lex_less(f, res.witness))) {
            res.witness = f;
            res.witness_dim = d;
            grid_witness = true;
        }
        return true;
    };
    detail::sweep_supports(n, 2, pm1, collect);
    detail::sweep_supports(n, 3, pm12, [&](const std::vector<Rational>& f) {
        if (detail::small_support_pm1(f)) return true;
        return collect(f);
    });
    return res;
}

}  // namespace mdlie
