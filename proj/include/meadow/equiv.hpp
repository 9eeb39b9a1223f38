#ifndef MEADOW_EQUIV_HPP
#define MEADOW_EQUIV_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "meadow/rational.hpp"
#include "meadow/smf.hpp"
#include "meadow/term.hpp"

namespace meadow {

struct SampleConfig {
    std::size_t count = 200;
    long bound = 100; // numerators and denominators drawn from [-bound, bound]
    std::uint64_t seed = 0;
};

struct Counterexample {
    std::map<std::string, Rational> assignment;
    Rational lhs;
    Rational rhs;
};

struct RandomVerdict {
    std::optional<Counterexample> counterexample; // empty: all samples agreed
    std::size_t samples = 0;
};

// Sampling refuter: evaluates both sides at random rational points. A
// counterexample is a proof of inequivalence; agreement on all samples is
// only evidence.
RandomVerdict equiv_random(const Term& lhs, const Term& rhs, const SampleConfig& cfg);

// Zero set of a univariate standard meadow form, which is always either a
// finite set of rationals or the complement of one.
struct ZeroSet {
    bool cofinite = false;
    std::set<Rational> points; // the zeros, or the non-zeros when cofinite
};

ZeroSet zero_set(const Smf& f); // throws Multivariate beyond one variable

struct ExactVerdict {
    bool agree_almost_everywhere = false;
    // Exceptions when agreeing almost everywhere; agreement points otherwise.
    std::set<Rational> points;
};

// Exact decision for terms over 0, 1, variables, +, *, -, ^-1 with at most
// one variable: normalizes the difference, computes its zero set, and
// re-verifies every listed point by direct evaluation so the reported sets
// are tight.
ExactVerdict equiv_univariate_exact(const Term& lhs, const Term& rhs,
                                    std::size_t cap = kDefaultSmfCap);

std::string to_string(const ZeroSet& z);

} // namespace meadow

#endif
