#pragma once

/*
 * Limited exact factorization over Q, sized for what the classifier needs:
 *
 *  - rational roots of integer polynomials (divisor candidates, so the
 *    constant and leading coefficients get factored over Z),
 *  - complete splitting of polynomials of degree <= 4 (quartics via the
 *    resolvent cubic),
 *  - complete splitting of binomials t^k - r through the classical
 *    criteria: e-th power extraction, cyclotomic pieces, the p-th power
 *    test and the -4*(fourth power) exception.
 *
 * This is deliberately not a general factorization engine.
 */

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <map>
#include <vector>

#include "polynomial.hpp"

namespace mdlie {

/* ---- integer factorization (trial division + Pollard rho) ---- */

namespace detail {

inline void factor_integer_rec(BigInt n, std::map<BigInt, long>& out) {
    if (n <= 1) return;
    if (mp::miller_rabin_test(n, 32)) {
        ++out[n];
        return;
    }
    // Pollard rho with Brent cycle detection
    BigInt d = n;
    for (BigInt c = 1; d == n; ++c) {
        BigInt x = 2, y = 2, g = 1;
        while (g == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            BigInt diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            g = gcd(diff, n);
        }
        if (g != 1 && g != n) d = g;
    }
    factor_integer_rec(d, out);
    factor_integer_rec(n / d, out);
}

}  // namespace detail

// prime -> exponent map of |n|, n != 0
inline std::map<BigInt, long> factor_integer(BigInt n) {
    std::map<BigInt, long> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    for (BigInt p : {BigInt(2), BigInt(3), BigInt(5), BigInt(7), BigInt(11), BigInt(13)}) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    for (BigInt p = 17; p * p <= n && p < 100000; p += 2) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    detail::factor_integer_rec(n, out);
    return out;
}

inline std::vector<BigInt> divisors_of(const BigInt& n) {
    std::vector<BigInt> divs{1};
    for (const auto& [p, e] : factor_integer(n)) {
        std::size_t sz = divs.size();
        BigInt pk = 1;
        for (long i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t k = 0; k < sz; ++k) divs.push_back(divs[k] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

inline bool is_perfect_square(const Rational& x, Rational& root) {
    if (x < 0) return false;
    BigInt p = numerator(x), q = denominator(x);
    BigInt sp = sqrt(p), sq = sqrt(q);
    if (sp * sp != p || sq * sq != q) return false;
    root = Rational(sp) / Rational(sq);
    return true;
}

// x = root^n with root chosen positive when n is even
inline bool is_perfect_nth_power(const Rational& x, long n, Rational& root) {
    if (n == 1) {
        root = x;
        return true;
    }
    if (is_zero(x)) return false;
    if (x < 0 && n % 2 == 0) return false;
    Rational ax = rat_abs(x);
    auto nth_root_int = [&](const BigInt& v, BigInt& r) {
        if (v == 1) {
            r = 1;
            return true;
        }
        // binary search
        BigInt lo = 1, hi = v;
        while (lo <= hi) {
            BigInt mid = (lo + hi) / 2;
            BigInt pw = 1;
            bool over = false;
            for (long i = 0; i < n; ++i) {
                pw *= mid;
                if (pw > v) {
                    over = true;
                    break;
                }
            }
            if (!over && pw == v) {
                r = mid;
                return true;
            }
            if (over || pw > v)
                hi = mid - 1;
            else
                lo = mid + 1;
        }
        return false;
    };
    BigInt rp, rq;
    if (!nth_root_int(numerator(ax), rp) || !nth_root_int(denominator(ax), rq)) return false;
    root = Rational(rp) / Rational(rq);
    if (x < 0) root = -root;
    return true;
}

/* ---- rational roots ---- */

// all distinct rational roots (input need not be square-free)
inline std::vector<Rational> rational_roots(const RatPoly& p_in) {
    std::vector<Rational> roots;
    RatPoly p = primitive_integer_poly(p_in);
    if (p.degree() <= 0) return roots;
    // strip x^k
    std::size_t low = 0;
    while (low < p.coeffs().size() && is_zero(p.coeff(low))) ++low;
    if (low > 0) {
        roots.push_back(Rational(0));
        std::vector<Rational> v(p.coeffs().begin() + low, p.coeffs().end());
        p = RatPoly(std::move(v));
    }
    if (p.degree() < 1) return roots;
    if (p.degree() == 1) {
        roots.push_back(-p.coeff(0) / p.coeff(1));
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    BigInt a0 = numerator(p.coeff(0)), an = numerator(p.leading());
    for (const BigInt& num : divisors_of(a0))
        for (const BigInt& den : divisors_of(an)) {
            if (gcd(num, den) != 1) continue;
            Rational cand = Rational(num) / Rational(den);
            if (is_zero(p.eval(cand))) roots.push_back(cand);
            cand = -cand;
            if (is_zero(p.eval(cand))) roots.push_back(cand);
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

/* ---- complete factorization for degree <= 4 ---- */

namespace detail {

// monic quartic into two monic rational quadratics, if possible
inline bool split_quartic(const RatPoly& p, RatPoly& f1, RatPoly& f2) {
    Rational a = p.coeff(3), b = p.coeff(2), c = p.coeff(1), d = p.coeff(0);
    // resolvent cubic in y = u + v for (x^2+px+u)(x^2+qx+v)
    RatPoly res(std::vector<Rational>{-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b,
                                      Rational(1)});
    for (const Rational& y : rational_roots(res)) {
        Rational disc = a * a - 4 * (b - y), sq;
        if (!is_perfect_square(disc, sq)) continue;
        Rational pp = (a + sq) / 2, qq = (a - sq) / 2;
        Rational u, v;
        if (pp != qq) {
            u = (c - pp * y) / (qq - pp);
            v = y - u;
        } else {
            if (pp * y != c) continue;
            Rational disc2 = y * y - 4 * d, sq2;
            if (!is_perfect_square(disc2, sq2)) continue;
            u = (y + sq2) / 2;
            v = (y - sq2) / 2;
        }
        if (u * v != d) continue;
        f1 = RatPoly(std::vector<Rational>{u, pp, Rational(1)});
        f2 = RatPoly(std::vector<Rational>{v, qq, Rational(1)});
        return true;
    }
    return false;
}

}  // namespace detail

// Irreducible factors with multiplicity, as primitive integer polynomials.
// Complete for degree <= 4. For degree >= 5 the rational roots split off and
// the cofactor is returned whole (callers that need certified irreducibility
// at higher degree go through binomial_factor instead).
inline std::vector<RatPoly> factor_over_q(const RatPoly& p_in) {
    std::vector<RatPoly> out;
    RatPoly rest = primitive_integer_poly(p_in);
    if (rest.degree() < 1) return out;
    for (const Rational& r : rational_roots(rest)) {
        RatPoly lin = primitive_integer_poly(RatPoly(std::vector<Rational>{-r, Rational(1)}));
        for (;;) {
            RatPoly q, rem;
            poly_divmod(rest, lin, q, rem);
            if (!rem.is_zero_poly()) break;
            out.push_back(lin);
            rest = q;
            if (rest.degree() < 1) break;
        }
    }
    if (rest.degree() >= 1) {
        if (rest.degree() <= 3) {
            out.push_back(primitive_integer_poly(rest));  // no rational roots left
        } else if (rest.degree() == 4) {
            RatPoly f1, f2;
            if (detail::split_quartic(rest.monic(), f1, f2)) {
                // each quadratic has no rational root here, hence irreducible
                out.push_back(primitive_integer_poly(f1));
                out.push_back(primitive_integer_poly(f2));
            } else {
                out.push_back(primitive_integer_poly(rest));
            }
        } else {
            out.push_back(primitive_integer_poly(rest));
        }
    }
    std::sort(out.begin(), out.end(), [](const RatPoly& x, const RatPoly& y) {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        for (long d = x.degree(); d >= 0; --d) {
            const Rational &a = x.coeff(static_cast<std::size_t>(d)),
                           &b = y.coeff(static_cast<std::size_t>(d));
            if (a != b) return a < b;
        }
        return false;
    });
    return out;
}

// true when irreducibility is decidable at this degree (<= 4) and holds
inline bool is_irreducible_deg_le4(const RatPoly& p) {
    if (p.degree() < 1 || p.degree() > 4) return false;
    std::vector<RatPoly> f = factor_over_q(p);
    return f.size() == 1;
}

/* ---- cyclotomic polynomials ---- */

inline const RatPoly& cyclotomic(long d) {
    static std::map<long, RatPoly> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    RatPoly xn_1 = RatPoly::monomial(static_cast<std::size_t>(d), Rational(1)) - RatPoly(1);
    RatPoly acc(1);
    for (long e = 1; e < d; ++e)
        if (d % e == 0) acc = acc * cyclotomic(e);
    return cache.emplace(d, poly_div_exact(xn_1, acc)).first->second;
}

/* ---- binomial factorization: t^k - r ---- */

struct BinomialFactor {
    RatPoly factor;  // primitive integer coefficients
    bool has_real_root;
};

namespace detail {

inline bool poly_has_real_root(const RatPoly& p) { return count_real_roots(p) > 0; }

inline void push_factor(std::vector<BinomialFactor>& out, const RatPoly& f) {
    out.push_back({primitive_integer_poly(f), poly_has_real_root(f)});
}

inline void binomial_factor_rec(long k, const Rational& r, std::vector<BinomialFactor>& out);

// x^q - s where s is certified not a p-th power for any prime p | q;
// only the -4*(fourth power) escape can still split it
inline void reduced_binomial(long q, const Rational& s, std::vector<BinomialFactor>& out) {
    Rational w;
    if (q % 4 == 0 && s < 0 && is_perfect_nth_power(-s / 4, 4, w)) {
        // x^q + 4 w^4 = (x^{q/2} + 2w x^{q/4} + 2w^2)(x^{q/2} - 2w x^{q/4} + 2w^2)
        if (w < 0) w = -w;
        for (int sign : {+1, -1}) {
            RatPoly f = RatPoly::monomial(static_cast<std::size_t>(q / 2), Rational(1)) +
                        RatPoly::monomial(static_cast<std::size_t>(q / 4), Rational(2 * sign) * w) +
                        RatPoly(Rational(2) * w * w);
            push_factor(out, f);
        }
        return;
    }
    RatPoly f = RatPoly::monomial(static_cast<std::size_t>(q), Rational(1)) - RatPoly(s);
    push_factor(out, f);
}

inline void binomial_factor_rec(long k, const Rational& r, std::vector<BinomialFactor>& out) {
    if (k == 1) {
        push_factor(out, RatPoly::x() - RatPoly(r));
        return;
    }
    if (r == 1 || r == -1) {
        // pure cyclotomic products
        if (r == 1) {
            for (long d = 1; d <= k; ++d)
                if (k % d == 0) push_factor(out, cyclotomic(d));
        } else {
            for (long d = 1; d <= 2 * k; ++d)
                if ((2 * k) % d == 0 && k % d != 0) push_factor(out, cyclotomic(d));
        }
        return;
    }
    // largest e | k with r an e-th power (odd e when r < 0)
    long g0 = 0;
    for (const auto& [p, e] : factor_integer(numerator(r))) g0 = std::gcd(g0, e);
    for (const auto& [p, e] : factor_integer(denominator(r))) g0 = std::gcd(g0, e);
    long e = std::gcd(g0, k);
    if (r < 0)
        while (e % 2 == 0) e /= 2;
    Rational s;
    is_perfect_nth_power(r, e, s);
    long q = k / e;
    for (long d = 1; d <= e; ++d) {
        if (e % d != 0) continue;
        if (d == 1) {
            reduced_binomial(q, s, out);
        } else if ((d & (d - 1)) == 0) {
            // d a power of two: piece is x^{q*d/2} + s^{d/2}, itself a binomial
            long half = d / 2;
            Rational sh = 1;
            for (long i = 0; i < half; ++i) sh *= s;
            binomial_factor_rec(q * half, -sh, out);
        } else if (d == 3 || d == 6) {
            // piece x^{2q} -+ s x^q + s^2; splits iff -+s = 3 b^2 with q even
            Rational sd = d == 3 ? s : -s;  // piece = x^{2q} + sd x^q + sd^2
            Rational b2 = -sd / 3, b;
            if (q % 2 == 0 && is_perfect_square(b2, b)) {
                for (int sign : {+1, -1}) {
                    RatPoly f =
                        RatPoly::monomial(static_cast<std::size_t>(q), Rational(1)) +
                        RatPoly::monomial(static_cast<std::size_t>(q / 2), Rational(3 * sign) * b) +
                        RatPoly(Rational(3) * b * b);
                    push_factor(out, f);
                }
            } else {
                RatPoly f = RatPoly::monomial(static_cast<std::size_t>(2 * q), Rational(1)) +
                            RatPoly::monomial(static_cast<std::size_t>(q), sd) + RatPoly(sd * sd);
                push_factor(out, f);
            }
        } else {
            // s^{phi(d)} * Phi_d(x^q / s); no real roots for d >= 3
            const RatPoly& phi = cyclotomic(d);
            long deg = phi.degree();
            std::vector<Rational> v(static_cast<std::size_t>(q * deg) + 1, Rational(0));
            std::vector<Rational> spows(static_cast<std::size_t>(deg) + 1, Rational(1));
            for (long j = 1; j <= deg; ++j)
                spows[static_cast<std::size_t>(j)] = spows[static_cast<std::size_t>(j - 1)] * s;
            for (long j = 0; j <= deg; ++j) {
                Rational cj = phi.coeff(static_cast<std::size_t>(j));
                if (is_zero(cj)) continue;
                v[static_cast<std::size_t>(q * j)] = cj * spows[static_cast<std::size_t>(deg - j)];
            }
            push_factor(out, RatPoly(std::move(v)));
        }
    }
}

}  // namespace detail

// Irreducible rational factors of t^k - r, each flagged for real roots.
// k >= 1, r != 0. Factors are primitive integer polynomials whose product is
// a rational multiple of t^k - r.
inline std::vector<BinomialFactor> binomial_factor(long k, const Rational& r) {
    if (k < 1) throw PreconditionError("binomial_factor: exponent must be >= 1");
    if (is_zero(r)) throw PreconditionError("binomial_factor: r must be nonzero");
    std::vector<BinomialFactor> out;
    detail::binomial_factor_rec(k, r, out);
    std::sort(out.begin(), out.end(), [](const BinomialFactor& x, const BinomialFactor& y) {
        if (x.factor.degree() != y.factor.degree()) return x.factor.degree() < y.factor.degree();
        for (long d = x.factor.degree(); d >= 0; --d) {
            Rational a = x.factor.coeff(static_cast<std::size_t>(d)),
                     b = y.factor.coeff(static_cast<std::size_t>(d));
            if (a != b) return a < b;
        }
        return false;
    });
    return out;
}

}  // namespace mdlie
