#include "meadow/prime_field.hpp"

#include <cassert>

namespace meadow {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

} // namespace

Zp::Zp(std::uint64_t value, std::uint64_t p) : r_(value % p), p_(p) {
    assert(p >= 2);
}

Zp Zp::operator+(const Zp& o) const {
    assert(p_ == o.p_);
    std::uint64_t s = r_ + o.r_;
    if (s >= p_) s -= p_;
    return Zp(s, p_);
}

Zp Zp::operator-() const {
    return Zp(r_ == 0 ? 0 : p_ - r_, p_);
}

Zp Zp::operator-(const Zp& o) const {
    return *this + (-o);
}

Zp Zp::operator*(const Zp& o) const {
    assert(p_ == o.p_);
    return Zp(mulmod(r_, o.r_, p_), p_);
}

std::string Zp::to_string() const {
    return std::to_string(r_) + " mod " + std::to_string(p_);
}

Zp inv(const Zp& a) {
    if (a.is_zero()) return a;
    // extended Euclid on (r, p); p prime and r != 0 give gcd 1
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(a.modulus());
    std::int64_t new_r = static_cast<std::int64_t>(a.value());
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    assert(r == 1);
    if (t < 0) t += static_cast<std::int64_t>(a.modulus());
    return Zp(static_cast<std::uint64_t>(t), a.modulus());
}

} // namespace meadow
