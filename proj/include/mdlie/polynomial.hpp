#pragma once

/*
 * Univariate polynomials over an exact field, dense representation,
 * coefficients in ascending degree order with no trailing zeros.
 */

#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace mdlie {

template <typename K>
class Poly {
  public:
    Poly() {}
    Poly(const K& c) { coeffs_.push_back(c); prune(); }
    Poly(int c) : Poly(K(c)) {}
    explicit Poly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { prune(); }

    static Poly x() { return Poly(std::vector<K>{K(0), K(1)}); }

    static Poly monomial(std::size_t deg, const K& c) {
        std::vector<K> v(deg + 1, K(0));
        v[deg] = c;
        return Poly(std::move(v));
    }

    const std::vector<K>& coeffs() const { return coeffs_; }

    bool is_zero_poly() const { return coeffs_.empty(); }

    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    K coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : K(0); }

    K leading() const {
        if (coeffs_.empty()) return K(0);
        return coeffs_.back();
    }

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const {
        std::vector<K> v(std::max(coeffs_.size(), o.coeffs_.size()), K(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
        return Poly(std::move(v));
    }

    Poly operator-(const Poly& o) const {
        std::vector<K> v(std::max(coeffs_.size(), o.coeffs_.size()), K(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
        return Poly(std::move(v));
    }

    Poly operator-() const { return Poly() - *this; }

    Poly operator*(const Poly& o) const {
        if (is_zero_poly() || o.is_zero_poly()) return Poly();
        std::vector<K> v(coeffs_.size() + o.coeffs_.size() - 1, K(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (is_zero(coeffs_[i])) continue;
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                v[i + j] = v[i + j] + coeffs_[i] * o.coeffs_[j];
        }
        return Poly(std::move(v));
    }

    Poly scaled(const K& c) const {
        Poly r = *this;
        for (auto& v : r.coeffs_) v = v * c;
        r.prune();
        return r;
    }

    K eval(const K& x) const {
        K acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<K> v(coeffs_.size() - 1, K(0));
        for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * K(static_cast<int>(i));
        return Poly(std::move(v));
    }

    // substitute x -> x^k
    Poly inflate(std::size_t k) const {
        if (is_zero_poly()) return Poly();
        std::vector<K> v(coeffs_.size() * k - k + 1, K(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
        return Poly(std::move(v));
    }

    Poly monic() const {
        if (is_zero_poly()) return *this;
        Poly r = *this;
        K lead = coeffs_.back();
        for (auto& v : r.coeffs_) v = v / lead;
        return r;
    }

  private:
    void prune() {
        while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<K> coeffs_;
};

template <typename K>
inline bool is_zero(const Poly<K>& p) {
    return p.is_zero_poly();
}

template <typename K>
void poly_divmod(const Poly<K>& a, const Poly<K>& b, Poly<K>& q, Poly<K>& r) {
    if (b.is_zero_poly()) throw std::domain_error("polynomial division by zero");
    std::vector<K> rem(a.coeffs());
    long db = b.degree();
    K lead = b.leading();
    std::vector<K> quot;
    long da = a.degree();
    if (da >= db) quot.assign(da - db + 1, K(0));
    for (long d = da; d >= db; --d) {
        K c = rem[d] / lead;
        if (!is_zero(c)) {
            quot[d - db] = c;
            for (long j = 0; j <= db; ++j) rem[d - db + j] = rem[d - db + j] - c * b.coeff(j);
        }
        rem.pop_back();
    }
    q = Poly<K>(std::move(quot));
    r = Poly<K>(std::move(rem));
}

template <typename K>
Poly<K> poly_div_exact(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> q, r;
    poly_divmod(a, b, q, r);
    if (!r.is_zero_poly()) throw std::domain_error("inexact polynomial division");
    return q;
}

// lets fraction-free elimination run over matrices of polynomials
template <typename K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) {
    return poly_div_exact(a, b);
}

template <typename K>
Poly<K> poly_mod(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> q, r;
    poly_divmod(a, b, q, r);
    return r;
}

// monic gcd
template <typename K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero_poly()) {
        Poly<K> r = poly_mod(a, b);
        a = b;
        b = r;
    }
    if (a.is_zero_poly()) return a;
    return a.monic();
}

// extended gcd: g = s*a + t*b with g monic
template <typename K>
Poly<K> poly_ext_gcd(const Poly<K>& a, const Poly<K>& b, Poly<K>& s, Poly<K>& t) {
    Poly<K> r0 = a, r1 = b;
    Poly<K> s0(std::vector<K>{K(1)}), s1;
    Poly<K> t0, t1(std::vector<K>{K(1)});
    while (!r1.is_zero_poly()) {
        Poly<K> q, r;
        poly_divmod(r0, r1, q, r);
        r0 = r1; r1 = r;
        Poly<K> s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
        Poly<K> t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    if (r0.is_zero_poly()) { s = s0; t = t0; return r0; }
    K lead = r0.leading();
    s = s0.scaled(K(1) / lead);
    t = t0.scaled(K(1) / lead);
    return r0.monic();
}

template <typename K>
Poly<K> square_free_part(const Poly<K>& p) {
    if (p.degree() <= 0) return p.monic();
    Poly<K> g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p.monic();
    return poly_div_exact(p, g).monic();
}

using RatPoly = Poly<Rational>;

// clear denominators, divide by integer content, make leading coeff positive
inline RatPoly primitive_integer_poly(const RatPoly& p) {
    if (p.is_zero_poly()) return p;
    BigInt lcm_den = 1;
    for (const auto& c : p.coeffs()) {
        BigInt d = denominator(c);
        lcm_den = lcm_den / gcd(lcm_den, d) * d;
    }
    BigInt content = 0;
    std::vector<Rational> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        Rational scaled = c * Rational(lcm_den);
        v.push_back(scaled);
        content = gcd(content, numerator(scaled));
    }
    if (content == 0) content = 1;
    if (v.back() < 0) content = -content;
    for (auto& c : v) c /= Rational(content);
    return RatPoly(std::move(v));
}

inline std::string poly_to_string(const RatPoly& p, const std::string& var = "t") {
    if (p.is_zero_poly()) return "0";
    std::string out;
    for (long d = p.degree(); d >= 0; --d) {
        Rational c = p.coeff(static_cast<std::size_t>(d));
        if (is_zero(c)) continue;
        std::string term;
        Rational a = rat_abs(c);
        if (d == 0) {
            term = format_rational(a);
        } else {
            if (a != 1) term = format_rational(a) + "*";
            term += var;
            if (d > 1) term += "^" + std::to_string(d);
        }
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
}

/* ---- Sturm sequences and real root counting over Q ---- */

inline int sign_at(const RatPoly& p, const Rational& x) { return p.eval(x).sign(); }

// sign of p at +inf (dir=+1) or -inf (dir=-1)
inline int sign_at_infinity(const RatPoly& p, int dir) {
    if (p.is_zero_poly()) return 0;
    int lead = p.leading().sign();
    if (dir > 0) return lead;
    return p.degree() % 2 == 0 ? lead : -lead;
}

inline std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain;
    if (p.is_zero_poly()) return chain;
    chain.push_back(p);
    RatPoly d = p.derivative();
    if (d.is_zero_poly()) return chain;
    chain.push_back(d);
    for (;;) {
        RatPoly r = poly_mod(chain[chain.size() - 2], chain.back());
        if (r.is_zero_poly()) break;
        chain.push_back(-r);
    }
    return chain;
}

namespace detail {
inline int sign_variations(const std::vector<int>& signs) {
    int var = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}
}  // namespace detail

inline int sturm_variations_at(const std::vector<RatPoly>& chain, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.push_back(sign_at(q, x));
    return detail::sign_variations(signs);
}

inline int sturm_variations_at_infinity(const std::vector<RatPoly>& chain, int dir) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.push_back(sign_at_infinity(q, dir));
    return detail::sign_variations(signs);
}

// number of distinct real roots in (lo, hi); endpoints must not be roots
inline int count_real_roots_between(const std::vector<RatPoly>& chain, const Rational& lo,
                                    const Rational& hi) {
    return sturm_variations_at(chain, lo) - sturm_variations_at(chain, hi);
}

inline int count_real_roots(const RatPoly& p) {
    if (p.degree() <= 0) return 0;
    RatPoly sf = square_free_part(p);
    std::vector<RatPoly> chain = sturm_chain(sf);
    return sturm_variations_at_infinity(chain, -1) - sturm_variations_at_infinity(chain, +1);
}

// all real roots lie strictly inside [-bound, bound]
inline Rational cauchy_root_bound(const RatPoly& p) {
    Rational lead = rat_abs(p.leading());
    Rational best(0);
    for (long d = 0; d < p.degree(); ++d) {
        Rational c = rat_abs(p.coeff(static_cast<std::size_t>(d))) / lead;
        if (c > best) best = c;
    }
    return best + 1;
}

}  // namespace mdlie
