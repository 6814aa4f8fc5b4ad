#pragma once

/*
 * Real algebraic numbers as (integer minimal polynomial, isolating interval).
 *
 * An interval [lo, hi] isolates exactly one real root of min_poly; a rational
 * value is stored with lo == hi. All comparisons refine intervals until they
 * separate, and equality of two numbers sharing a defining polynomial is
 * decided by a Sturm count over the union interval, so every decision here
 * is exact.
 */

#include <optional>
#include <string>
#include <vector>

#include "factor.hpp"
#include "polynomial.hpp"

namespace mdlie {

class AlgebraicScalar {
  public:
    AlgebraicScalar() : AlgebraicScalar(Rational(0)) {}

    explicit AlgebraicScalar(const Rational& value)
        : min_poly_(primitive_integer_poly(
              RatPoly(std::vector<Rational>{-value, Rational(1)}))),
          lo_(value), hi_(value) {}

    // min_poly must have exactly one root in [lo, hi] and no rational roots
    // when its degree exceeds one; both are the caller's contract and are
    // rechecked cheaply here.
    AlgebraicScalar(const RatPoly& min_poly, const Rational& lo, const Rational& hi)
        : min_poly_(primitive_integer_poly(min_poly)), lo_(lo), hi_(hi) {
        if (min_poly_.degree() < 1) throw PreconditionError("algebraic scalar needs degree >= 1");
        if (min_poly_.degree() == 1) {
            Rational v = -min_poly_.coeff(0) / min_poly_.coeff(1);
            lo_ = hi_ = v;
            return;
        }
        if (lo_ > hi_) throw PreconditionError("empty isolating interval");
        chain_ = sturm_chain(min_poly_);
        if (count_real_roots_between(chain_, lo_, hi_) != 1)
            throw PreconditionError("interval does not isolate a single root");
    }

    const RatPoly& min_poly() const { return min_poly_; }
    const Rational& lower() const { return lo_; }
    const Rational& upper() const { return hi_; }

    bool is_rational() const { return lo_ == hi_; }
    Rational rational_value() const { return lo_; }

    long degree() const { return min_poly_.degree(); }

    // halve the interval, keeping the root inside
    void refine() const {
        if (is_rational()) return;
        Rational mid = (lo_ + hi_) / 2;
        // an irreducible min_poly of degree >= 2 cannot vanish at a rational
        if (count_real_roots_between(chain_, lo_, mid) == 1)
            hi_ = mid;
        else
            lo_ = mid;
    }

    void refine_below(const Rational& width) const {
        while (!is_rational() && hi_ - lo_ >= width) refine();
    }

    int sign() const {
        if (is_rational()) return lo_.sign();
        while (lo_.sign() != hi_.sign()) refine();
        return lo_.sign();
    }

    // total order on real algebraic values
    static int compare(const AlgebraicScalar& a, const AlgebraicScalar& b) {
        if (a.is_rational() && b.is_rational())
            return a.lo_ < b.lo_ ? -1 : (a.lo_ == b.lo_ ? 0 : 1);
        if (a.is_rational() != b.is_rational()) {
            const AlgebraicScalar& r = a.is_rational() ? a : b;
            const AlgebraicScalar& i = a.is_rational() ? b : a;
            if (is_zero(i.min_poly_.eval(r.lo_)) && r.lo_ >= i.lo_ && r.lo_ <= i.hi_) return 0;
            while (r.lo_ >= i.lo_ && r.lo_ <= i.hi_) i.refine();
            int cmp_ri = r.lo_ < i.lo_ ? -1 : 1;
            return &r == &a ? cmp_ri : -cmp_ri;
        }
        if (equal_roots(a, b)) return 0;
        // distinct reals: refine until the intervals separate
        for (;;) {
            if (a.hi_ < b.lo_) return -1;
            if (b.hi_ < a.lo_) return 1;
            a.refine();
            b.refine();
        }
    }

    bool operator==(const AlgebraicScalar& o) const { return compare(*this, o) == 0; }
    bool operator!=(const AlgebraicScalar& o) const { return compare(*this, o) != 0; }
    bool operator<(const AlgebraicScalar& o) const { return compare(*this, o) < 0; }

    // decimal rendering after refining the interval below 1e-12
    std::string approx_string() const {
        Rational target(1);
        target /= Rational(BigInt("1000000000000"));
        refine_below(target);
        return decimal_string((lo_ + hi_) / 2, 14);
    }

    std::string to_string() const {
        if (is_rational()) return format_rational(lo_);
        return "root of " + poly_to_string(min_poly_) + " in [" + format_rational(lo_) + ", " +
               format_rational(hi_) + "] ~ " + approx_string();
    }

  private:
    static bool equal_roots(const AlgebraicScalar& a, const AlgebraicScalar& b) {
        // roots of coprime polynomials are distinct; a shared factor is
        // checked by a Sturm count over the union interval
        RatPoly g = poly_gcd(a.min_poly_, b.min_poly_);
        if (g.degree() < 1) return false;
        if (!a.root_divides(g) || !b.root_divides(g)) return false;
        std::vector<RatPoly> chain = sturm_chain(g);
        Rational lo = a.lo_ < b.lo_ ? a.lo_ : b.lo_;
        Rational hi = a.hi_ > b.hi_ ? a.hi_ : b.hi_;
        while (is_zero(g.eval(lo)) || is_zero(g.eval(hi))) {
            // nudge endpoints off roots of g by refining both operands
            a.refine();
            b.refine();
            if (a.is_rational() && b.is_rational()) return a.lo_ == b.lo_;
            lo = a.lo_ < b.lo_ ? a.lo_ : b.lo_;
            hi = a.hi_ > b.hi_ ? a.hi_ : b.hi_;
        }
        return count_real_roots_between(chain, lo, hi) == 1;
    }

    // does this scalar's root satisfy g?
    bool root_divides(const RatPoly& g) const {
        if (is_rational()) return is_zero(g.eval(lo_));
        // the isolating interval holds exactly one root of min_poly; roots of
        // g inside it are also min_poly roots whenever g | min_poly
        std::vector<RatPoly> chain = sturm_chain(g);
        Rational lo = lo_, hi = hi_;
        while (is_zero(g.eval(lo)) || is_zero(g.eval(hi))) {
            refine();
            lo = lo_;
            hi = hi_;
        }
        return count_real_roots_between(chain, lo, hi) == 1;
    }

    RatPoly min_poly_;
    mutable Rational lo_, hi_;
    mutable std::vector<RatPoly> chain_;
};

// Isolating intervals for all real roots of a square-free polynomial with no
// rational roots. The intervals are pairwise disjoint and sorted.
inline std::vector<std::pair<Rational, Rational>> isolate_real_roots_irrational(const RatPoly& p) {
    std::vector<std::pair<Rational, Rational>> out;
    if (p.degree() < 1) return out;
    std::vector<RatPoly> chain = sturm_chain(p);
    Rational bound = cauchy_root_bound(p);
    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        int count = count_real_roots_between(chain, lo, hi);
        if (count == 0) continue;
        if (count == 1) {
            out.emplace_back(lo, hi);
            continue;
        }
        Rational mid = (lo + hi) / 2;  // never a root: p has no rational roots
        stack.emplace_back(lo, mid);
        stack.emplace_back(mid, hi);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All distinct real roots of p, as algebraic scalars sorted ascending.
// Factors p first (complete for degree <= 4 and for binomials); rational
// roots come back with degree-one minimal polynomials.
inline std::vector<AlgebraicScalar> real_roots(const RatPoly& p) {
    std::vector<AlgebraicScalar> out;
    if (p.degree() < 1) return out;
    RatPoly sf = square_free_part(p);
    std::vector<RatPoly> factors = factor_over_q(sf);
    std::vector<RatPoly> seen;
    for (const RatPoly& f : factors) {
        bool dup = false;
        for (const RatPoly& s : seen) dup = dup || s == f;
        if (dup) continue;
        seen.push_back(f);
        if (f.degree() == 1) {
            out.emplace_back(Rational(-f.coeff(0) / f.coeff(1)));
            continue;
        }
        for (const auto& [lo, hi] : isolate_real_roots_irrational(f))
            out.emplace_back(f, lo, hi);
    }
    std::sort(out.begin(), out.end(),
              [](const AlgebraicScalar& a, const AlgebraicScalar& b) { return a < b; });
    return out;
}

// the positive real root when there is one, else the largest real root
inline std::optional<AlgebraicScalar> preferred_real_root(const RatPoly& p) {
    std::vector<AlgebraicScalar> roots = real_roots(p);
    if (roots.empty()) return std::nullopt;
    for (const AlgebraicScalar& r : roots)
        if (r.sign() > 0) return r;
    return roots.back();
}

}  // namespace mdlie
