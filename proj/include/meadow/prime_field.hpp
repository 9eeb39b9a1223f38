#ifndef MEADOW_PRIME_FIELD_HPP
#define MEADOW_PRIME_FIELD_HPP

#include <cstdint>
#include <string>

namespace meadow {

bool is_prime(std::uint64_t n); // trial division; desk-scale moduli

// Element of the prime field Z_p with zero-totalized inverse.
// Residue is kept canonical in [0, p). p must be prime (checked by Model/make).
class Zp {
public:
    Zp(std::uint64_t value, std::uint64_t p);

    std::uint64_t value() const { return r_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return r_ == 0; }

    Zp operator+(const Zp& o) const;
    Zp operator-(const Zp& o) const;
    Zp operator*(const Zp& o) const;
    Zp operator-() const;

    bool operator==(const Zp& o) const { return p_ == o.p_ && r_ == o.r_; }
    bool operator!=(const Zp& o) const { return !(*this == o); }

    std::string to_string() const; // "k mod p"

private:
    std::uint64_t r_;
    std::uint64_t p_;
};

// Zero-totalized inverse: inv(0) = 0; otherwise the unique multiplicative inverse,
// via the extended Euclidean algorithm.
Zp inv(const Zp& a);

} // namespace meadow

#endif
