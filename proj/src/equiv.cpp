#include "meadow/equiv.hpp"

#include <algorithm>

#include "meadow/errors.hpp"
#include "meadow/rng.hpp"

namespace meadow {

RandomVerdict equiv_random(const Term& lhs, const Term& rhs, const SampleConfig& cfg) {
    std::set<std::string> names = vars(lhs);
    for (const auto& v : vars(rhs)) names.insert(v);

    Rng rng(cfg.seed);
    RandomVerdict verdict;
    for (std::size_t i = 0; i < cfg.count; ++i) {
        std::map<std::string, Rational> env;
        for (const auto& v : names) env[v] = rng.rational(cfg.bound);
        Rational a = eval_q0(lhs, env);
        Rational b = eval_q0(rhs, env);
        ++verdict.samples;
        if (a != b) {
            verdict.counterexample = Counterexample{env, a, b};
            return verdict;
        }
    }
    return verdict;
}

namespace {

std::set<Rational> set_minus(const std::set<Rational>& a, const std::set<Rational>& b) {
    std::set<Rational> out;
    for (const auto& x : a)
        if (!b.count(x)) out.insert(x);
    return out;
}

std::set<Rational> set_inter(const std::set<Rational>& a, const std::set<Rational>& b) {
    std::set<Rational> out;
    for (const auto& x : a)
        if (b.count(x)) out.insert(x);
    return out;
}

std::set<Rational> set_union(std::set<Rational> a, const std::set<Rational>& b) {
    a.insert(b.begin(), b.end());
    return a;
}

// roots() below is total on nonzero univariate polynomials; constants have
// no roots and the zero polynomial never reaches it.
std::set<Rational> roots(const Polynomial& p) { return rational_roots(p); }

} // namespace

ZeroSet zero_set(const Smf& f) {
    if (smf_vars(f).size() > 1) throw Multivariate("zero set of " + render(f));

    if (f.is_ratio()) {
        // s/t vanishes where s does, where t does (inverse of zero is zero),
        // and everywhere if either side is the zero polynomial.
        if (f.num().is_zero() || f.den().is_zero()) return ZeroSet{true, {}};
        return ZeroSet{false, set_union(roots(f.num()), roots(f.den()))};
    }

    if (f.guard().is_zero()) return zero_set(f.on_zero());

    const std::set<Rational> at_zero = roots(f.guard());
    ZeroSet zp = zero_set(f.on_zero());
    ZeroSet zq = zero_set(f.on_unit());

    // Where the guard vanishes the zero branch decides; elsewhere the unit
    // branch does. The guard's root set is finite, so the union below keeps
    // the finite/cofinite shape.
    std::set<Rational> from_zero_branch =
        zp.cofinite ? set_minus(at_zero, zp.points) : set_inter(zp.points, at_zero);

    if (zq.cofinite)
        return ZeroSet{true, set_minus(set_union(zq.points, at_zero), from_zero_branch)};
    return ZeroSet{false, set_union(set_minus(zq.points, at_zero), from_zero_branch)};
}

ExactVerdict equiv_univariate_exact(const Term& lhs, const Term& rhs, std::size_t cap) {
    std::set<std::string> names = vars(lhs);
    for (const auto& v : vars(rhs)) names.insert(v);
    if (names.size() > 1) {
        std::string joined;
        for (const auto& v : names) joined += (joined.empty() ? "" : ", ") + v;
        throw Multivariate("variables " + joined);
    }

    const Smf diff = normalize(Term::add(lhs, Term::neg(rhs)), cap);
    const ZeroSet zs = zero_set(diff);

    const std::string var = names.empty() ? "x" : *names.begin();
    auto differ_at = [&](const Rational& q) {
        std::map<std::string, Rational> env{{var, q}};
        return eval_q0(lhs, env) != eval_q0(rhs, env);
    };

    ExactVerdict verdict;
    verdict.agree_almost_everywhere = zs.cofinite;
    for (const auto& q : zs.points)
        if (differ_at(q) == zs.cofinite) verdict.points.insert(q);
    return verdict;
}

std::string to_string(const ZeroSet& z) {
    std::string body;
    for (const auto& q : z.points) body += (body.empty() ? "" : ", ") + q.to_string();
    return (z.cofinite ? "all but {" : "{") + body + "}";
}

} // namespace meadow
