#ifndef MEADOW_RATIONAL_HPP
#define MEADOW_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace meadow {

// Exact rational scalar of the zero-totalized field of rationals.
// Invariants: denominator > 0, gcd(|num|, den) == 1, zero is 0/1.
// Equality is structural; the invariants make it coincide with numeric equality.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit by design, mirrors integer literals
    Rational(const mpz_class& num, const mpz_class& den);

    static Rational from_mpq(mpq_class q);

    // Accepts an optional leading '-', an integer, optionally '/' and an integer.
    static std::optional<Rational> parse(std::string_view text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return from_mpq(-v_); }
    Rational operator+(const Rational& o) const { return from_mpq(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return from_mpq(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return from_mpq(v_ * o.v_); }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    std::string to_string() const; // "num/den", or "num" when den == 1

private:
    mpq_class v_; // canonical at all times
};

// Zero-totalized inverse: inv(0) = 0.
Rational inv(const Rational& a);

// sign(a) in {-1, 0, 1}, as a Rational.
Rational sign(const Rational& a);

// floor/ceil to integers (returned as integral Rationals); ceil(a) == -floor(-a).
Rational floor(const Rational& a);
Rational ceil(const Rational& a);

Rational abs(const Rational& a);

} // namespace meadow

#endif
