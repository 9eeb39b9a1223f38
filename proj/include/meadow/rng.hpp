#ifndef MEADOW_RNG_HPP
#define MEADOW_RNG_HPP

#include <cstdint>
#include <random>

#include "meadow/prime_field.hpp"
#include "meadow/rational.hpp"

namespace meadow {

// Deterministic sampler. mt19937_64 output is pinned by the standard, and the
// bounded draw below is rejection-based, so a seed fixes every sample exactly
// regardless of platform or standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    std::uint64_t raw() { return g_(); }

    std::uint64_t below(std::uint64_t n) { // uniform in [0, n)
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = g_();
        } while (v >= limit);
        return v % n;
    }

    long range(long lo, long hi) { // uniform in [lo, hi]
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // numerator uniform in [-bound, bound], denominator in [-bound, bound] \ {0}
    Rational rational(long bound) {
        long num = range(-bound, bound);
        long den = 0;
        while (den == 0) den = range(-bound, bound);
        return Rational(num, den);
    }

    Rational nonzero_rational(long bound) {
        Rational q(0);
        while (q.is_zero()) q = rational(bound);
        return q;
    }

    Zp zp(std::uint64_t p) { return Zp(below(p), p); }

private:
    std::mt19937_64 g_;
};

} // namespace meadow

#endif
