#pragma once

/*
 * Sparse multivariate polynomials over the rationals, just enough for
 * fraction-free elimination on matrices whose entries are linear forms.
 * Terms live in a lex-ordered map from exponent vectors to coefficients.
 *
 * Integer- or rational-initialized values start variable-free and adopt the
 * other operand's variable count on first contact, so Matrix<MPoly> code can
 * say T(0) and T(1) like it does over a plain field.
 */

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"
#include "rng.hpp"

namespace mdlie {

class MPoly {
  public:
    using Key = std::vector<unsigned>;

    MPoly() : nvars_(0) {}
    MPoly(int c) : nvars_(0) {
        if (c != 0) terms_[Key{}] = Rational(c);
    }
    explicit MPoly(const Rational& c) : nvars_(0) {
        if (!is_zero(c)) terms_[Key{}] = c;
    }

    static MPoly variable(std::size_t i, std::size_t nvars) {
        if (i >= nvars) throw IndexOutOfRange("variable index out of range");
        MPoly p;
        p.nvars_ = nvars;
        Key k(nvars, 0);
        k[i] = 1;
        p.terms_[k] = Rational(1);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero_poly() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key(nvars_, 0)); }
    std::size_t term_count() const { return terms_.size(); }

    Rational constant_value() const {
        if (!is_constant()) throw PreconditionError("not a constant polynomial");
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly x = a, y = b;
        match(x, y);
        for (const auto& [k, c] : y.terms_) x.add_term(k, c);
        return x;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        MPoly x = a, y = b;
        match(x, y);
        for (const auto& [k, c] : y.terms_) x.add_term(k, -c);
        return x;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly x = a, y = b;
        match(x, y);
        MPoly out;
        out.nvars_ = x.nvars_;
        for (const auto& [ka, ca] : x.terms_)
            for (const auto& [kb, cb] : y.terms_) {
                Key k(out.nvars_, 0);
                for (std::size_t i = 0; i < out.nvars_; ++i) k[i] = ka[i] + kb[i];
                out.add_term(k, ca * cb);
            }
        return out;
    }

    bool operator==(const MPoly& o) const {
        MPoly x = *this, y = o;
        match(x, y);
        return x.terms_ == y.terms_;
    }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    Rational eval(const std::vector<Rational>& point) const {
        if (point.size() < nvars_) throw SizeMismatch("evaluation point too short");
        Rational total(0);
        for (const auto& [k, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (unsigned e = 0; e < k[i]; ++e) t *= point[i];
            total += t;
        }
        return total;
    }

    std::string to_string(const std::string& stem = "f") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rational& c = it->second;
            if (!first) os << (sign_of(c) < 0 ? " - " : " + ");
            else if (sign_of(c) < 0) os << "-";
            first = false;
            Rational ac = rat_abs(c);
            bool has_var = false;
            for (std::size_t i = 0; i < nvars_; ++i)
                if (it->first[i]) has_var = true;
            if (ac != Rational(1) || !has_var) os << format_rational(ac) << (has_var ? "*" : "");
            bool star = false;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (!it->first[i]) continue;
                if (star) os << "*";
                star = true;
                os << stem << (i + 1);
                if (it->first[i] > 1) os << "^" << it->first[i];
            }
        }
        return os.str();
    }

    // exact division (throws if the quotient is not a polynomial); only ever
    // exercised with exact inputs, as fraction-free elimination guarantees
    friend MPoly exact_div_mpoly(const MPoly& a, const MPoly& b) {
        if (b.is_zero_poly()) throw std::domain_error("division by zero polynomial");
        MPoly rem = a, div = b;
        match(rem, div);
        MPoly quot;
        quot.nvars_ = rem.nvars_;
        const auto& [kd, cd] = *div.terms_.rbegin();
        while (!rem.terms_.empty()) {
            const auto& [kr, cr] = *rem.terms_.rbegin();
            Key k(rem.nvars_, 0);
            for (std::size_t i = 0; i < rem.nvars_; ++i) {
                if (kr[i] < kd[i]) throw std::domain_error("inexact polynomial division");
                k[i] = kr[i] - kd[i];
            }
            MPoly t;
            t.nvars_ = rem.nvars_;
            t.terms_[k] = cr / cd;
            quot = quot + t;
            rem = rem - t * div;
        }
        return quot;
    }

  private:
    static void match(MPoly& a, MPoly& b) {
        if (a.nvars_ == b.nvars_) return;
        MPoly& low = a.nvars_ < b.nvars_ ? a : b;
        MPoly& high = a.nvars_ < b.nvars_ ? b : a;
        if (!low.is_constant()) throw SizeMismatch("mixing polynomials in different variable sets");
        std::map<Key, Rational> rekeyed;
        if (!low.terms_.empty()) rekeyed[Key(high.nvars_, 0)] = low.terms_.begin()->second;
        low.terms_ = std::move(rekeyed);
        low.nvars_ = high.nvars_;
    }

    void add_term(const Key& k, const Rational& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!is_zero(c)) terms_.emplace(k, c);
        } else {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    std::size_t nvars_;
    std::map<Key, Rational> terms_;  // lex order on exponent vectors
};

inline bool is_zero(const MPoly& p) { return p.is_zero_poly(); }
inline MPoly exact_div(const MPoly& a, const MPoly& b) { return exact_div_mpoly(a, b); }

// Rank of a polynomial matrix over the rational function field. Random
// rational evaluations only ever drop the rank, so a sampled matrix of full
// expected size settles the answer cheaply; otherwise fall back to exact
// fraction-free elimination on the symbolic entries.
inline std::size_t symbolic_rank(const Matrix<MPoly>& m, std::size_t nvars,
                                 std::uint64_t seed = 0x5EEDu) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const std::size_t cap = std::min(m.rows(), m.cols());
    Rng rng(seed);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<Rational> point(nvars);
        for (auto& v : point) v = rng.rational(50, 20);
        RatMatrix e(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).eval(point);
        if (bareiss_rank(e) == cap) return cap;
    }
    return bareiss_rank(m);
}

}  // namespace mdlie
