#include "meadow/rational.hpp"

#include <cassert>
#include <cctype>

namespace meadow {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    assert(den != 0 && "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_mpq(mpq_class q) {
    // mpq arithmetic on canonical operands stays canonical.
    Rational r;
    r.v_ = std::move(q);
    return r;
}

std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '-') {
        neg = true;
        ++i;
    }
    auto read_int = [&](mpz_class& out) -> bool {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) return false;
        out = mpz_class(std::string(text.substr(start, i - start)), 10);
        return true;
    };
    mpz_class num, den = 1;
    if (!read_int(num)) return std::nullopt;
    if (i < text.size() && text[i] == '/') {
        ++i;
        if (!read_int(den) || den == 0) return std::nullopt;
    }
    if (i != text.size()) return std::nullopt;
    if (neg) num = -num;
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

Rational inv(const Rational& a) {
    if (a.is_zero()) return Rational(0);
    return Rational(a.den(), a.num());
}

Rational sign(const Rational& a) {
    int s = sgn(a.num());
    return Rational(s);
}

Rational floor(const Rational& a) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.num().get_mpz_t(), a.den().get_mpz_t());
    return Rational(q, 1);
}

Rational ceil(const Rational& a) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), a.num().get_mpz_t(), a.den().get_mpz_t());
    return Rational(q, 1);
}

Rational abs(const Rational& a) {
    return a < Rational(0) ? -a : a;
}

} // namespace meadow
