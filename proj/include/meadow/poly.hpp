#ifndef MEADOW_POLY_HPP
#define MEADOW_POLY_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "meadow/rational.hpp"
#include "meadow/term.hpp"

namespace meadow {

// Exponent map, no zero exponents stored; {} is the unit monomial.
using Monomial = std::map<std::string, int>;

int total_degree(const Monomial& m);

// Graded lexicographic: first by total degree, ties by lex on the
// alphabetically ordered variables (missing exponent reads as 0).
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Canonical sparse multivariate polynomial over Q: monomial -> nonzero coefficient.
// Structural equality of the representation coincides with polynomial identity.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, GradedLexLess>;

    Polynomial() = default;
    static Polynomial constant(const Rational& c);
    static Polynomial variable(const std::string& name);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int degree() const; // total degree; -1 for the zero polynomial

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::set<std::string> vars() const;

    Rational eval(const std::map<std::string, Rational>& env) const; // total on vars()

    // Dense coefficients of a (<= 1)-variable polynomial, ascending degree.
    std::vector<Rational> univariate_coeffs(const std::string& var) const;

    std::string to_string() const; // graded-lex descending

private:
    void add_term(const Monomial& m, const Rational& c);
    Terms terms_;
};

// Inverse-free, sign-free term to polynomial; throws NotAPolynomial with the
// offending node's path on Inv/Sign/Floor/Ceil.
Polynomial poly_from_term(const Term& t);

// All rational roots via candidate enumeration over divisors of the trailing
// and leading coefficients of the primitive integer form, after factoring out
// the largest power of the variable; each candidate is verified by evaluation.
// Throws ZeroPolynomial if p == 0 and Multivariate if p has > 1 variable.
std::set<Rational> rational_roots(const Polynomial& p);

} // namespace meadow

#endif
