#pragma once

#include <cstdint>
#include <random>

#include "rational.hpp"

namespace mdlie {

// Deterministic random source. mt19937_64's raw word stream is fixed by the
// standard, and all range reduction is done here by hand, so a given seed
// yields the same draws on every platform and standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t word() { return eng_(); }

    std::uint64_t below(std::uint64_t n) {
        // rejection sampling to stay unbiased
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t w;
        do {
            w = eng_();
        } while (w >= limit);
        return w % n;
    }

    // uniform on [lo, hi], inclusive
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (eng_() & 1u) != 0; }

    // numerator uniform in [-max_num, max_num], denominator in [1, max_den]
    Rational rational(long long max_num, long long max_den) {
        Rational num(range(-max_num, max_num));
        Rational den(range(1, max_den));
        return num / den;
    }

    Rational nonzero_rational(long long max_num, long long max_den) {
        for (;;) {
            Rational r = rational(max_num, max_den);
            if (!is_zero(r)) return r;
        }
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace mdlie
