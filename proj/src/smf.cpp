#include "meadow/smf.hpp"

#include <cassert>

#include "meadow/errors.hpp"

namespace meadow {

Smf Smf::ratio(Polynomial num, Polynomial den) {
    auto n = std::make_shared<Node>();
    n->ratio = true;
    n->a = std::move(num);
    n->b = std::move(den);
    n->level = 0;
    n->count = 1;
    return Smf(std::move(n));
}

Smf Smf::split(Polynomial guard, Smf on_zero, Smf on_unit) {
    auto n = std::make_shared<Node>();
    n->ratio = false;
    n->a = std::move(guard);
    n->level = 1 + std::max(on_zero.level(), on_unit.level());
    n->count = 1 + on_zero.node_count() + on_unit.node_count();
    n->zero = std::move(on_zero.node_);
    n->unit = std::move(on_unit.node_);
    return Smf(std::move(n));
}

const Polynomial& Smf::num() const {
    assert(is_ratio());
    return node_->a;
}

const Polynomial& Smf::den() const {
    assert(is_ratio());
    return node_->b;
}

const Polynomial& Smf::guard() const {
    assert(is_split());
    return node_->a;
}

Smf Smf::on_zero() const {
    assert(is_split());
    return Smf(node_->zero);
}

Smf Smf::on_unit() const {
    assert(is_split());
    return Smf(node_->unit);
}

namespace {

Smf checked_split(Polynomial g, Smf z, Smf u, std::size_t cap) {
    const std::size_t count = 1 + z.node_count() + u.node_count();
    if (count > cap) throw SizeBudgetExceeded(cap, count);
    return Smf::split(std::move(g), std::move(z), std::move(u));
}

Smf add(const Smf& a, const Smf& b, std::size_t cap);

Smf add_ratio(const Smf& a, const Smf& b, std::size_t cap) {
    const Polynomial& s = a.num();
    const Polynomial& t = a.den();
    const Polynomial& u = b.num();
    const Polynomial& v = b.den();
    Smf joined = Smf::ratio(s * v + t * u, t * v);
    return checked_split(t, b, checked_split(v, a, std::move(joined), cap), cap);
}

Smf add(const Smf& a, const Smf& b, std::size_t cap) {
    if (a.is_split())
        return checked_split(a.guard(), add(a.on_zero(), b, cap), add(a.on_unit(), b, cap),
                             cap);
    if (b.is_split())
        return checked_split(b.guard(), add(a, b.on_zero(), cap), add(a, b.on_unit(), cap),
                             cap);
    return add_ratio(a, b, cap);
}

Smf mul(const Smf& a, const Smf& b, std::size_t cap) {
    if (a.is_split())
        return checked_split(a.guard(), mul(a.on_zero(), b, cap), mul(a.on_unit(), b, cap),
                             cap);
    if (b.is_split())
        return checked_split(b.guard(), mul(a, b.on_zero(), cap), mul(a, b.on_unit(), cap),
                             cap);
    return Smf::ratio(a.num() * b.num(), a.den() * b.den());
}

Smf neg(const Smf& a, std::size_t cap) {
    if (a.is_split())
        return checked_split(a.guard(), neg(a.on_zero(), cap), neg(a.on_unit(), cap), cap);
    return Smf::ratio(-a.num(), a.den());
}

Smf inv(const Smf& a, std::size_t cap) {
    if (a.is_split())
        return checked_split(a.guard(), inv(a.on_zero(), cap), inv(a.on_unit(), cap), cap);
    return Smf::ratio(a.den(), a.num());
}

Smf norm(const Term& t, std::size_t cap, Path& where) {
    switch (t.op()) {
    case Op::Zero:
        return Smf::ratio(Polynomial(), Polynomial::constant(Rational(1)));
    case Op::One:
        return Smf::ratio(Polynomial::constant(Rational(1)), Polynomial::constant(Rational(1)));
    case Op::Var:
        return Smf::ratio(Polynomial::variable(t.var_name()),
                          Polynomial::constant(Rational(1)));
    case Op::Add:
    case Op::Mul: {
        where.push_back(0);
        Smf lhs = norm(t.child(0), cap, where);
        where.back() = 1;
        Smf rhs = norm(t.child(1), cap, where);
        where.pop_back();
        return t.op() == Op::Add ? add(lhs, rhs, cap) : mul(lhs, rhs, cap);
    }
    case Op::Neg:
    case Op::Inv: {
        where.push_back(0);
        Smf inner = norm(t.child(0), cap, where);
        where.pop_back();
        return t.op() == Op::Neg ? neg(inner, cap) : inv(inner, cap);
    }
    case Op::Sign:
    case Op::Floor:
    case Op::Ceil:
        throw NotSigmaM(op_name(t.op()), where);
    }
    throw Error("unreachable");
}

} // namespace

Smf smf_add(const Smf& a, const Smf& b, std::size_t cap) { return add(a, b, cap); }
Smf smf_mul(const Smf& a, const Smf& b, std::size_t cap) { return mul(a, b, cap); }
Smf smf_neg(const Smf& a, std::size_t cap) { return neg(a, cap); }
Smf smf_inv(const Smf& a, std::size_t cap) { return inv(a, cap); }

Smf normalize(const Term& t, std::size_t cap) {
    Path where;
    return norm(t, cap, where);
}

Rational smf_eval(const Smf& f, const std::map<std::string, Rational>& env) {
    if (f.is_split()) {
        const bool guard_zero = f.guard().eval(env).is_zero();
        return smf_eval(guard_zero ? f.on_zero() : f.on_unit(), env);
    }
    return f.num().eval(env) * inv(f.den().eval(env));
}

std::set<std::string> smf_vars(const Smf& f) {
    std::set<std::string> out;
    if (f.is_split()) {
        for (const auto& v : f.guard().vars()) out.insert(v);
        for (const auto& v : smf_vars(f.on_zero())) out.insert(v);
        for (const auto& v : smf_vars(f.on_unit())) out.insert(v);
    } else {
        for (const auto& v : f.num().vars()) out.insert(v);
        for (const auto& v : f.den().vars()) out.insert(v);
    }
    return out;
}

std::string render(const Smf& f) {
    if (f.is_split())
        return "[" + f.guard().to_string() + " == 0 ? " + render(f.on_zero()) + " : " +
               render(f.on_unit()) + "]";
    return "(" + f.num().to_string() + ")/(" + f.den().to_string() + ")";
}

} // namespace meadow
