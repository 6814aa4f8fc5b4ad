#pragma once

/*
 * Arithmetic in K = Q[t]/(m) for an irreducible modulus m. Elements carry a
 * shared context; a default-constructed or integer-initialized element is a
 * plain rational constant that adopts the other operand's context on first
 * contact, so the type fits generic code expecting T(0) and T(1).
 *
 * Inverses come from the extended Euclidean algorithm. If the modulus ever
 * turns out reducible, some nonzero element has a nontrivial gcd with it and
 * division throws, so a bad field cannot produce silent wrong answers.
 */

#include <memory>
#include <string>

#include "factor.hpp"
#include "polynomial.hpp"

namespace mdlie {

struct QuotientCtx {
    RatPoly modulus;  // monic

    explicit QuotientCtx(const RatPoly& m) : modulus(m.monic()) {
        if (m.degree() < 1)
            throw PreconditionError("quotient modulus must have degree >= 1");
        if (!rational_roots(m).empty() && m.degree() > 1)
            throw PreconditionError("quotient modulus is reducible (rational root)");
        if (m.degree() >= 2 && m.degree() <= 4 && !is_irreducible_deg_le4(primitive_integer_poly(m)))
            throw PreconditionError("quotient modulus is reducible");
    }
};

class QElem {
  public:
    QElem() {}
    QElem(int c) : rep_(Rational(c)) {}
    explicit QElem(const Rational& c) : rep_(c) {}
    QElem(std::shared_ptr<const QuotientCtx> ctx, const RatPoly& rep)
        : ctx_(std::move(ctx)), rep_(rep) {
        reduce();
    }

    static QElem generator(std::shared_ptr<const QuotientCtx> ctx) {
        return QElem(std::move(ctx), RatPoly::x());
    }

    const RatPoly& rep() const { return rep_; }
    const std::shared_ptr<const QuotientCtx>& ctx() const { return ctx_; }

    bool is_zero_elem() const { return rep_.is_zero_poly(); }

    friend QElem operator+(const QElem& a, const QElem& b) {
        return QElem(unify(a, b), a.rep_ + b.rep_);
    }
    friend QElem operator-(const QElem& a, const QElem& b) {
        return QElem(unify(a, b), a.rep_ - b.rep_);
    }
    friend QElem operator*(const QElem& a, const QElem& b) {
        return QElem(unify(a, b), a.rep_ * b.rep_);
    }
    friend QElem operator/(const QElem& a, const QElem& b) { return a * b.inverse(); }

    QElem inverse() const {
        if (rep_.is_zero_poly()) throw std::domain_error("division by zero in quotient field");
        if (rep_.degree() == 0 || !ctx_) {
            QElem r(*this);
            r.rep_ = RatPoly(Rational(1) / rep_.coeff(0));
            return r;
        }
        RatPoly s, t;
        RatPoly g = poly_ext_gcd(rep_, ctx_->modulus, s, t);
        if (g.degree() != 0)
            throw std::domain_error("zero divisor: quotient modulus is reducible");
        return QElem(ctx_, s);
    }

    friend bool operator==(const QElem& a, const QElem& b) { return a.rep_ == b.rep_; }
    friend bool operator!=(const QElem& a, const QElem& b) { return a.rep_ != b.rep_; }

    std::string to_string() const { return poly_to_string(rep_); }

  private:
    static std::shared_ptr<const QuotientCtx> unify(const QElem& a, const QElem& b) {
        if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_ && a.ctx_->modulus != b.ctx_->modulus)
            throw SizeMismatch("mixing elements of different quotient fields");
        return a.ctx_ ? a.ctx_ : b.ctx_;
    }

    void reduce() {
        if (ctx_ && rep_.degree() >= ctx_->modulus.degree()) rep_ = poly_mod(rep_, ctx_->modulus);
    }

    std::shared_ptr<const QuotientCtx> ctx_;
    RatPoly rep_;
};

inline bool is_zero(const QElem& x) { return x.is_zero_elem(); }

}  // namespace mdlie
