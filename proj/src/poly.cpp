#include "meadow/poly.hpp"

#include <cassert>

namespace meadow {

int total_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // lex on alphabetical variables; higher exponent earlier wins
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first != ib->first) {
            // the earlier variable has positive exponent on one side only
            return ia->first > ib->first; // a lacks the earlier variable -> a is less
        }
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return ia == a.end() && ib != b.end();
}

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.emplace(Monomial{}, c);
    return p;
}

Polynomial Polynomial::variable(const std::string& name) {
    Polynomial p;
    p.terms_.emplace(Monomial{{name, 1}}, Rational(1));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first);
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (const auto& [v, e] : mb) {
                int& slot = m[v];
                slot += e;
                if (slot == 0) m.erase(v);
            }
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

std::set<std::string> Polynomial::vars() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) out.insert(v);
    return out;
}

Rational Polynomial::eval(const std::map<std::string, Rational>& env) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [v, e] : m) {
            auto it = env.find(v);
            if (it == env.end()) throw UnboundVariable(v);
            const Rational& base = it->second;
            mpz_class num, den;
            mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), e);
            mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), e);
            t = t * Rational(num, den);
        }
        acc = acc + t;
    }
    return acc;
}

std::vector<Rational> Polynomial::univariate_coeffs(const std::string& var) const {
    std::vector<Rational> out(static_cast<std::size_t>(degree() < 0 ? 0 : degree() + 1),
                              Rational(0));
    for (const auto& [m, c] : terms_) {
        assert(m.size() <= 1);
        int e = m.empty() ? 0 : m.begin()->second;
        if (!m.empty()) assert(m.begin()->first == var);
        out[static_cast<std::size_t>(e)] = c;
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // descending graded-lex
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < Rational(0)) {
                out += '-';
                a = -a;
            }
        } else {
            out += a < Rational(0) ? " - " : " + ";
            if (a < Rational(0)) a = -a;
        }
        first = false;
        std::string mono;
        for (const auto& [v, e] : m) {
            if (!mono.empty()) mono += '*';
            mono += v;
            if (e != 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += a.to_string();
        } else if (a == Rational(1)) {
            out += mono;
        } else {
            out += a.to_string() + "*" + mono;
        }
    }
    return out;
}

namespace {

Polynomial from_term_rec(const Term& t, Path& path) {
    switch (t.op()) {
    case Op::Zero: return Polynomial();
    case Op::One: return Polynomial::constant(Rational(1));
    case Op::Var: return Polynomial::variable(t.var_name());
    case Op::Add: {
        path.push_back(0);
        Polynomial a = from_term_rec(t.child(0), path);
        path.back() = 1;
        Polynomial b = from_term_rec(t.child(1), path);
        path.pop_back();
        return a + b;
    }
    case Op::Mul: {
        path.push_back(0);
        Polynomial a = from_term_rec(t.child(0), path);
        path.back() = 1;
        Polynomial b = from_term_rec(t.child(1), path);
        path.pop_back();
        return a * b;
    }
    case Op::Neg: {
        path.push_back(0);
        Polynomial a = from_term_rec(t.child(0), path);
        path.pop_back();
        return -a;
    }
    default:
        throw NotAPolynomial(op_name(t.op()), path);
    }
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
    assert(n > 0);
    std::vector<mpz_class> divs;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            mpz_class q = n / d;
            if (q != d) divs.push_back(q);
        }
    }
    return divs;
}

} // namespace

Polynomial poly_from_term(const Term& t) {
    Path path;
    return from_term_rec(t, path);
}

std::set<Rational> rational_roots(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    auto vs = p.vars();
    if (vs.size() > 1) throw Multivariate("rational_roots on " + p.to_string());
    std::set<Rational> roots;
    if (vs.empty()) return roots; // nonzero constant
    const std::string var = *vs.begin();
    std::vector<Rational> coeffs = p.univariate_coeffs(var);

    // clear denominators to an integer polynomial
    mpz_class lcm_den = 1;
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        mpz_class g;
        mpz_lcm(g.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
        lcm_den = g;
    }
    std::vector<mpz_class> ic(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        ic[i] = coeffs[i].num() * (lcm_den / coeffs[i].den());

    // factor out the largest power of the variable
    std::size_t k = 0;
    while (k < ic.size() && ic[k] == 0) ++k;
    if (k > 0) roots.insert(Rational(0));
    assert(k < ic.size());

    mpz_class a0 = ::abs(ic[k]);
    mpz_class an = ::abs(ic.back());
    if (ic.size() - 1 == k) return roots; // only the x^k factor remained

    std::map<std::string, Rational> env;
    for (const mpz_class& pn : positive_divisors(a0)) {
        for (const mpz_class& qn : positive_divisors(an)) {
            for (int s : {1, -1}) {
                Rational cand(s * pn, qn);
                if (roots.count(cand)) continue;
                env[var] = cand;
                if (p.eval(env).is_zero()) roots.insert(cand);
            }
        }
    }
    return roots;
}

} // namespace meadow
