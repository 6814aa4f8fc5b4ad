#pragma once

/*
 * Exact rational scalars.
 *
 * Everything downstream (matrices, polynomials, structure constants) is
 * computed over Q with arbitrary precision, so ranks and normal forms are
 * exact, never floating point. Expression templates are switched off to keep
 * the type a plain regular value in generic code.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "errors.hpp"

namespace mdlie {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::cpp_rational_backend, mp::et_off>;

inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline int sign_of(const Rational& x) { return x.sign(); }

inline Rational rat_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// Parses "p" or "p/q" with q > 0. Leading '-' on p only.
inline Rational parse_rational(const std::string& text) {
    auto bad = [&]() { throw std::invalid_argument("malformed rational '" + text + "'"); };
    if (text.empty()) bad();
    std::size_t slash = text.find('/');
    std::string num = text.substr(0, slash == std::string::npos ? text.size() : slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto digits_ok = [](const std::string& s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t k = 0;
        if (allow_sign && (s[0] == '-')) k = 1;
        if (k == s.size()) return false;
        for (; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') return false;
        return true;
    };
    if (!digits_ok(num, true) || !digits_ok(den, false)) bad();
    BigInt p(num), q(den);
    if (q <= 0) bad();
    Rational r(p);
    r /= Rational(q);
    return r;
}

inline std::string format_rational(const Rational& x) {
    BigInt p = numerator(x), q = denominator(x);
    if (q == 1) return p.str();
    return p.str() + "/" + q.str();
}

// Decimal rendering of p/q to `digits` places after the point, truncated
// toward zero. Used only for display of interval endpoints.
inline std::string decimal_string(const Rational& x, unsigned digits) {
    BigInt p = numerator(x), q = denominator(x);
    bool neg = p < 0;
    if (neg) p = -p;
    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    BigInt scaled = p * scale / q;
    BigInt whole = scaled / scale, frac = scaled % scale;
    std::string f = frac.str();
    f.insert(f.begin(), digits - f.size(), '0');
    std::string out = (neg && (whole != 0 || frac != 0) ? "-" : "") + whole.str();
    if (digits > 0) out += "." + f;
    return out;
}

}  // namespace mdlie
